#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splice/mu.hpp"
#include "splice/params.hpp"

namespace splice {

/// Names a socle weight of the spliced module: sigma, sigma_k or sigma'_k
/// (1 <= k <= l - 1). The same label names the matching cosocle weight
/// (its [s]-partner) and the pair of D_1 characters.
struct Label {
    enum class Kind : std::uint8_t { Sigma, Chain, Prime };

    Kind kind = Kind::Sigma;
    int k = 0;

    static Label sigma() { return {Kind::Sigma, 0}; }
    static Label chain(int k) { return {Kind::Chain, k}; }
    static Label prime(int k) { return {Kind::Prime, k}; }

    bool operator==(const Label&) const = default;
    auto operator<=>(const Label&) const = default;
};

std::string to_string(const Label& label);
/// Parses "sigma", "sigma_K", "sigmaPrime_K". Throws ParseError.
Label parse_label(const std::string& text, int l);

/// All 2l - 1 socle labels in canonical order: sigma, sigma_1.., sigmaPrime_1..
std::vector<Label> socle_labels(int l);

/// The non-split extension E(socle, cosocle).
struct ExtEdge {
    Weight socle;
    Weight cosocle;

    bool operator==(const ExtEdge&) const = default;
};

enum class SummandKind { Ext, MSoc, MCosoc };
std::string to_string(SummandKind kind);

/// One indecomposable summand of D_0 with its two Loewy layers.
struct IndecSummand {
    SummandKind kind = SummandKind::Ext;
    std::vector<Weight> socles;
    std::vector<Weight> cosocles;
    std::vector<Label> socle_labels;
    /// Label of the socle weight whose [s]-twist each cosocle weight is.
    std::vector<Label> cosocle_partners;
    int length = 2;
};

struct SplicedModule {
    Params ctx;
    std::vector<int> r;
    std::vector<IndecSummand> summands;
    Weight sigma;
    Weight sigma_s;
    std::vector<Weight> sigmas;        ///< sigma_0..sigma_l
    std::vector<Weight> sigma_primes;  ///< sigma'_0..sigma'_l

    int length() const;
    std::vector<Weight> socle_weights() const;
    std::vector<Weight> cosocle_weights() const;
    /// Jordan-Hoelder multiset (socles and cosocles of every summand).
    std::vector<Weight> jh_factors() const;
    const Weight& weight_of(const Label& label) const;
};

/// Weights of gr^1 of the cosocle filtration of Ind_B chi(w)^s, i = 0..f-1.
/// Throws NonGenericWeight, or RangeError when an image digit leaves [0, p-1].
std::vector<Weight> gr1_cosoc(const Weight& w, const MuTable& table);
std::vector<Weight> gr1_cosoc(const Weight& w, const Params& ctx);

/// Whether E(socle, base^[s]) exists, decided by membership in gr1_cosoc(base).
/// Images of base that leave [0, p-1] are skipped rather than raising.
bool ext_exists(const Weight& socle, const Weight& base, const MuTable& table);
bool ext_exists(const Weight& socle, const Weight& base, const Params& ctx);

/// The l edges E(sigma_k, sigma_{k-1}^[s]) of C (or C' when primed). Throws
/// CyclicityViolation if an edge is missing or the sequence does not close.
std::vector<ExtEdge> build_cyclic(const MuTable& table, const std::vector<int>& r, bool primed);
std::vector<ExtEdge> build_cyclic(const Params& ctx, const std::vector<int>& r, bool primed);

/// Splices C and C' along sigma and sigma^[s]. Throws MultiplicityViolation if
/// the socle or cosocle of the result is not multiplicity-free.
SplicedModule build_spliced(const MuTable& table, const std::vector<int>& r);
SplicedModule build_spliced(const Params& ctx, const std::vector<int>& r);

struct LabeledChar {
    Label label;
    BChar chr;

    bool operator==(const LabeledChar&) const = default;
};

/// D_1 = S_1 + Q_1 as labelled characters; q_chars[i] = s_conj(s_chars[i]).
struct D1Basis {
    std::vector<LabeledChar> s_chars;
    std::vector<LabeledChar> q_chars;

    std::size_t dimension() const noexcept { return s_chars.size() + q_chars.size(); }
};

/// Throws PairingViolation unless S-characters (and Q-characters) are pairwise distinct.
D1Basis d1_basis(const SplicedModule& d);

/// The summand whose socle contains w. Throws NotASocleWeight.
const IndecSummand& summand_of_socle(const SplicedModule& d, const Weight& w);

/// For f = 2: (p-2-r_0, r_1+1) (x) det^(r_0 + p(p-1)), the weight that appears
/// both in socle(C) and in cosocle(C').
Weight repeated_weight_f2(const Params& ctx, const std::vector<int>& r);

}  // namespace splice
