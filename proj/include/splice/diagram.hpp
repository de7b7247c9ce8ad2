#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "splice/field.hpp"
#include "splice/gamma.hpp"
#include "splice/sparse.hpp"

namespace splice {

/// The scalars lambda_i, stored on a finite index window. Lookups outside the
/// stored indices throw MissingLambda; there is no default extension.
class LambdaSpec {
public:
    LambdaSpec() = default;
    /// Throws InvalidParams if any stored value is zero.
    explicit LambdaSpec(std::map<int, Elem> values);

    Elem at(int i) const;
    bool has(int i) const noexcept { return values_.count(i) != 0; }
    const std::map<int, Elem>& values() const noexcept { return values_; }
    int min_index() const { return values_.begin()->first; }
    int max_index() const { return values_.rbegin()->first; }

    /// Every index of [-radius, radius] is stored.
    bool covers(int radius) const noexcept;

    static LambdaSpec constant(Elem value, int radius);
    /// lambda_i = generator^i
    static LambdaSpec geometric(const GaloisField& field, int radius);
    /// Uniform random lambda conditioned so that lambda_{i-1} lambda_i differs
    /// from lambda_{-1} lambda_0 for every stored i != 0.
    static LambdaSpec random_product_generic(const GaloisField& field, int radius, std::mt19937_64& rng);
    /// Uniform random nonzero lambda, no conditions.
    static LambdaSpec random(const GaloisField& field, int radius, std::mt19937_64& rng);

    /// Lines "i c_0,c_1,..." (F_p coordinates in the power basis); '#' starts a comment.
    static LambdaSpec parse(const std::string& text, const GaloisField& field);

private:
    std::map<int, Elem> values_;
};

enum class Side { S, Q };

struct PiMove {
    Label label;
    Side side;
    int index;
    Elem scalar;

    bool operator==(const PiMove&) const = default;
};

/// Pi on the basis vector of D_1(infinity) for (label, side) in copy i. Pi
/// maps S-characters to Q-characters with the index shift of the loop
/// characters and lambda_i on sigma; the Q -> S move is its inverse.
PiMove pi_action(const Label& label, Side side, int i, const LambdaSpec& lambda, const GaloisField& field);

/// Coefficient vector c at `from` produces c' at `to` with
/// c'_{i + shift} = (lambda_diagonal ? lambda_i : 1) * c_i.
struct TransferRule {
    Label from;
    Label to;
    int shift = 0;
    bool lambda_diagonal = false;

    bool operator==(const TransferRule&) const = default;
};

/// One rule per (socle label, socle weight of the summand its Pi-image
/// generates), in sweep order: sigma first, then the chain, then the primed chain.
std::vector<TransferRule> transfer_rules(const SplicedModule& d);

/// Throws MissingLambda if a needed lambda is not stored.
SparseVec apply_rule(const TransferRule& rule, const SparseVec& v, const LambdaSpec& lambda, const GaloisField& field);

/// Composite of a rule word as c'_{i + shift} = prod_{o in offsets} lambda_{i + o} * c_i.
struct SymbolicOp {
    int shift = 0;
    std::vector<int> lambda_offsets;

    bool operator==(const SymbolicOp&) const = default;
};

SymbolicOp compose_rules(const std::vector<TransferRule>& word);
/// The rules of the sigma -> ... -> sigma loop through the chain (or primed chain).
std::vector<TransferRule> loop_word(const std::vector<TransferRule>& rules, bool primed);

enum class Verdict { Full, Proper, Inconclusive };
std::string to_string(Verdict v);

/// Invariant functional family: phi_L vanishes on every span, each rule maps
/// ker phi_from into ker phi_to, and phi_sigma(e_0) = 1.
struct Certificate {
    Elem loop_eigenvalue = 0;
    std::map<Label, std::map<int, Elem>> functionals;
    Label witness_label;
    int witness_index = 0;
};

struct Derivation {
    Label label;
    int parent = -1;  ///< index into the derivation log, -1 for the start vector
    int rule = -1;    ///< index into the rule list
    SparseVec vec;
};

struct ClosureState {
    std::vector<Label> labels;
    std::vector<EchelonSpan> spans;  ///< parallel to labels
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Certificate> certificate;
    int rounds = 0;
    bool stabilized = false;
    int inner_window = 0;
    int outer_window = 0;
    std::vector<TransferRule> rules;
    std::vector<Derivation> log;

    const EchelonSpan& span(const Label& label) const;
};

struct SaturateOptions {
    int inner_window = 8;
    int max_rounds = 40;
};

/// Span saturation of the coefficient vectors reachable from start_vec at
/// start_label. Vectors leaving [-(N + R), N + R] are dropped, so Full is
/// sound and Proper is only reported with a verified Certificate.
/// Throws ZeroStartVector, RangeError (start outside [-N, N]) or MissingLambda.
ClosureState saturate(const SplicedModule& d, const LambdaSpec& lambda, const GaloisField& field,
                      const Label& start_label, const SparseVec& start_vec, const SaturateOptions& opts);

/// Full iff every span contains e_i for |i| <= inner_window.
bool spans_full(const ClosureState& state);

/// Searches for an invariant-functional certificate for the given start.
std::optional<Certificate> find_certificate(const std::vector<TransferRule>& rules, const std::vector<Label>& labels,
                                            const std::vector<EchelonSpan>& spans, const LambdaSpec& lambda,
                                            const GaloisField& field, const Label& start_label,
                                            const SparseVec& start_vec, int outer_window);

enum class LambdaMode { Paper, ProductGeneric };

/// Paper: lambda_i != +-lambda_0 for all stored i != 0.
/// ProductGeneric: lambda_{i-1} lambda_i != lambda_{-1} lambda_0 for all i != 0
/// with both factors stored.
bool lambda_condition_check(const LambdaSpec& lambda, LambdaMode mode, const GaloisField& field);

/// The Pi pairing S^chi <-> Q^{chi^s} is a well-defined involution on D_1.
bool verify_pi_pairing(const D1Basis& basis);

/// Parses "e0-e1", "2e3+e(-2)", ... into a vector with F_p coefficients.
SparseVec parse_sparse_vec(const std::string& text, const GaloisField& field);

}  // namespace splice
