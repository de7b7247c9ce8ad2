#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "splice/params.hpp"

namespace splice {

/// sign * x + c with sign in {+1, -1}.
struct LinPoly {
    int sign = 1;
    std::int64_t c = 0;

    std::int64_t operator()(std::int64_t x) const noexcept { return sign * x + c; }
    bool operator==(const LinPoly&) const = default;
    auto operator<=>(const LinPoly&) const = default;
};

/// An f-tuple of signed linear polynomials, acting entry-wise.
struct MuTuple {
    std::vector<LinPoly> entries;

    std::size_t size() const noexcept { return entries.size(); }
    const LinPoly& operator[](std::size_t j) const { return entries[j]; }
    bool operator==(const MuTuple&) const = default;
    auto operator<=>(const MuTuple&) const = default;
};

/// bit_j = 0 iff entry j has sign +1.
struct SignVector {
    std::vector<std::uint8_t> bits;

    bool operator==(const SignVector&) const = default;
    auto operator<=>(const SignVector&) const = default;
};

MuTuple identity_tuple(int f);

/// (x - 1, p - 2 - x, p - 1 - x, ..., p - 1 - x).
MuTuple mu_base(const Params& ctx);

/// Cyclic action of g^k: entry j of the result is entry (j + k) mod f of t.
/// Any integer k is accepted.
MuTuple g_act(const MuTuple& t, int k);
SignVector g_act(const SignVector& s, int k);

/// Entry-wise substitution (a o b)_j(x) = a_j(b_j(x)). Throws LengthMismatch.
MuTuple compose(const MuTuple& a, const MuTuple& b);

/// mu^(k) = g^(k-1)mu o ... o g mu o mu, mu^(0) = identity. Throws RangeError
/// unless 0 <= k <= l.
MuTuple mu_power(const Params& ctx, int k);

/// One step of the closed-form recurrence taking mu^(k-1) to mu^(k).
MuTuple mu_recurrence_step(const MuTuple& prev, int k, const Params& ctx);

/// All of mu^(0), ..., mu^(l) for one context.
class MuTable {
public:
    explicit MuTable(const Params& ctx);

    const Params& ctx() const noexcept { return ctx_; }
    const MuTuple& power(int k) const;
    /// g^k mu
    const MuTuple& shifted_mu(int k) const;

private:
    Params ctx_;
    std::vector<MuTuple> powers_;
    std::vector<MuTuple> shifted_;
};

SignVector sign_vector(const MuTuple& t);

/// Entry-wise evaluation t(x).
std::vector<std::int64_t> evaluate(const MuTuple& t, std::span<const std::int64_t> x);
std::vector<std::int64_t> evaluate(const MuTuple& t, std::span<const int> x);

/// The det-exponent polynomial e(t) evaluated at x, unreduced. The halving
/// throws ParityError on an odd numerator.
std::int64_t eval_e(const MuTuple& t, std::span<const std::int64_t> x, const Params& ctx);

/// Checks 1 <= r_j <= p - 3 (GenericityError) and length f (LengthMismatch).
void require_admissible(const Params& ctx, std::span<const int> r);

/// Unreduced det exponents e_0..e_l (primed = false) or e'_0..e'_l (primed = true).
std::vector<std::int64_t> e_sequence(const MuTable& table, std::span<const int> r, bool primed);

/// sigma_0..sigma_l with sigma_k = mu^(k)(r) (x) det^(e_k(r)).
std::vector<Weight> sigma_sequence(const MuTable& table, std::span<const int> r);
/// sigma'_0..sigma'_l with sigma'_k = (g mu^(k))(r) (x) det^(e'_k(r)).
std::vector<Weight> sigma_prime_sequence(const MuTable& table, std::span<const int> r);

std::vector<Weight> sigma_sequence(const Params& ctx, std::span<const int> r);
std::vector<Weight> sigma_prime_sequence(const Params& ctx, std::span<const int> r);

std::string to_string(const LinPoly& poly);
std::string to_string(const SignVector& s);

}  // namespace splice
