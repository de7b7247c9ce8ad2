#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace splice {

/// Dense polynomial over F_p, coefficients low degree first.
using FpPoly = std::vector<int>;

/// Rabin's test for a monic polynomial of degree >= 1.
bool is_irreducible(const FpPoly& monic, int p);

/// Lexicographically least monic irreducible polynomial of degree f over F_p,
/// coefficients compared constant term first. Returns all f + 1 coefficients.
FpPoly canonical_modulus(int p, int f);

/// F_{p^f} realised as F_p[t]/(canonical_modulus(p, f)).
///
/// Elements are encoded as integers sum_j c_j p^j over the power basis
/// 1, t, ..., t^(f-1). Multiplication goes through discrete log tables, so the
/// field size is capped at 2^22.
class GaloisField {
public:
    using Elem = std::uint32_t;

    GaloisField(int p, int f);

    int p() const noexcept { return p_; }
    int f() const noexcept { return f_; }
    std::uint32_t size() const noexcept { return q_; }
    const FpPoly& modulus() const noexcept { return modulus_; }

    static constexpr Elem zero() noexcept { return 0; }
    static constexpr Elem one() noexcept { return 1; }
    /// Least primitive element in code order.
    Elem generator() const noexcept { return generator_; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    /// Throws std::domain_error on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::int64_t e) const;
    /// Discrete log base generator(); a must be nonzero.
    std::uint32_t log(Elem a) const { return log_.at(a); }
    Elem exp(std::int64_t e) const;

    Elem from_int(std::int64_t n) const noexcept;
    Elem from_coords(std::span<const int> coords) const;
    std::vector<int> coords(Elem a) const;
    std::string to_string(Elem a) const;

private:
    Elem poly_mul(Elem a, Elem b) const;

    int p_;
    int f_;
    std::uint32_t q_;
    FpPoly modulus_;
    std::vector<std::uint32_t> pow_p_;
    Elem generator_ = 1;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
};

}  // namespace splice
