#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "splice/errors.hpp"

namespace splice {

/// Arithmetic context: residue characteristic p, residue degree f, q = p^f,
/// the loop length l (f for odd f, 2f for even f) and the det modulus q - 1.
class Params {
public:
    /// Throws InvalidParams unless p is a prime > 3, f >= 2 and q fits
    /// comfortably in 64-bit arithmetic (q < 2^48).
    Params(int p, int f);

    int p() const noexcept { return p_; }
    int f() const noexcept { return f_; }
    int l() const noexcept { return l_; }
    std::int64_t q() const noexcept { return q_; }
    std::int64_t det_mod() const noexcept { return q_ - 1; }

    /// p^j for 0 <= j <= f.
    std::int64_t pow_p(int j) const { return pow_p_.at(static_cast<std::size_t>(j)); }

    /// Reduces x into [0, q - 2].
    std::int64_t reduce(std::int64_t x) const noexcept {
        const std::int64_t m = det_mod();
        const std::int64_t r = x % m;
        return r < 0 ? r + m : r;
    }

    bool operator==(const Params& other) const noexcept { return p_ == other.p_ && f_ == other.f_; }

private:
    int p_;
    int f_;
    int l_;
    std::int64_t q_;
    std::vector<std::int64_t> pow_p_;
};

bool is_prime(std::int64_t n);

/// A weight r (x) det^m of GL_2(F_q): f Frobenius digits r_j in [0, p-1] and a
/// det exponent reduced mod q - 1.
struct Weight {
    std::vector<int> r;
    std::int64_t m = 0;

    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;
};

/// Validates digits and reduces m. Throws InvalidWeight on out-of-range digits
/// or a tuple of the wrong length.
Weight make_weight(const Params& ctx, std::vector<int> r, std::int64_t m);

/// The integer sum_j r_j p^j.
std::int64_t digit_value(const Params& ctx, std::span<const int> r);

/// Character (a b; 0 d) -> a^u d^v of the upper-triangular Borel.
struct BChar {
    std::int64_t u = 0;
    std::int64_t v = 0;

    bool operator==(const BChar&) const = default;
    auto operator<=>(const BChar&) const = default;
};

BChar chi(const Weight& w, const Params& ctx);

/// Conjugation by s = (0 1; 1 0): swaps the two exponents.
constexpr BChar s_conj(const BChar& c) noexcept { return {c.v, c.u}; }

bool is_generic(const Weight& w, const Params& ctx);

/// sigma -> sigma^[s] = (p-1-r_j)_j (x) det^(m + r). Throws NonGenericWeight.
Weight s_involution(const Weight& w, const Params& ctx);

std::string to_string(const Weight& w);

}  // namespace splice
