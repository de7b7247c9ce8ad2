#include "splice/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "splice/errors.hpp"

namespace splice {

namespace {

int mod_p(std::int64_t x, int p) {
    const auto r = static_cast<int>(x % p);
    return r < 0 ? r + p : r;
}

int inv_p(int a, int p) {
    // Fermat; p is small.
    int result = 1, base = a, e = p - 2;
    while (e > 0) {
        if (e & 1) result = static_cast<int>(static_cast<std::int64_t>(result) * base % p);
        base = static_cast<int>(static_cast<std::int64_t>(base) * base % p);
        e >>= 1;
    }
    return result;
}

void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly poly_mod(FpPoly a, const FpPoly& m, int p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const int lead_inv = inv_p(m.back(), p);
    while (a.size() >= m.size()) {
        const std::size_t shift = a.size() - m.size();
        const int factor = static_cast<int>(static_cast<std::int64_t>(a.back()) * lead_inv % p);
        for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = mod_p(a[shift + j] - static_cast<std::int64_t>(factor) * m[j], p);
        trim(a);
    }
    return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, int p) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = mod_p(out[i + j] + static_cast<std::int64_t>(a[i]) * b[j], p);
    return poly_mod(std::move(out), m, p);
}

FpPoly poly_gcd(FpPoly a, FpPoly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// x^(p^k) mod m
FpPoly frobenius_power(const FpPoly& m, int p, int k) {
    FpPoly h = poly_mod({0, 1}, m, p);
    for (int step = 0; step < k; ++step) {
        FpPoly acc{1};
        FpPoly base = h;
        for (int e = p; e > 0; e >>= 1) {
            if (e & 1) acc = poly_mulmod(acc, base, m, p);
            base = poly_mulmod(base, base, m, p);
        }
        h = std::move(acc);
    }
    return h;
}

std::vector<int> prime_divisors(std::int64_t n) {
    std::vector<int> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(static_cast<int>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(static_cast<int>(n));
    return out;
}

}  // namespace

bool is_irreducible(const FpPoly& monic, int p) {
    FpPoly g = monic;
    trim(g);
    const int f = static_cast<int>(g.size()) - 1;
    if (f < 1) return false;
    if (f == 1) return true;
    auto minus_x = [&](FpPoly h) {
        if (h.size() < 2) h.resize(2, 0);
        h[1] = mod_p(h[1] - 1, p);
        trim(h);
        return h;
    };
    if (!minus_x(frobenius_power(g, p, f)).empty()) return false;
    for (int d : prime_divisors(f)) {
        const FpPoly common = poly_gcd(g, minus_x(frobenius_power(g, p, f / d)), p);
        if (common.size() != 1) return false;
    }
    return true;
}

FpPoly canonical_modulus(int p, int f) {
    std::int64_t count = 1;
    for (int j = 0; j < f; ++j) count *= p;
    // t enumerates (c_0, ..., c_{f-1}) lexicographically, c_0 most significant.
    for (std::int64_t t = 0; t < count; ++t) {
        FpPoly g(static_cast<std::size_t>(f) + 1, 0);
        std::int64_t rest = t;
        for (int j = f - 1; j >= 0; --j) {
            g[static_cast<std::size_t>(j)] = static_cast<int>(rest % p);
            rest /= p;
        }
        g[static_cast<std::size_t>(f)] = 1;
        if (g[0] == 0) continue;
        if (is_irreducible(g, p)) return g;
    }
    throw Error(ErrorCode::Infeasible, "no irreducible polynomial found");
}

GaloisField::GaloisField(int p, int f) : p_(p), f_(f) {
    std::int64_t q = 1;
    for (int j = 0; j < f; ++j) {
        pow_p_.push_back(static_cast<std::uint32_t>(q));
        q *= p;
        if (q > (std::int64_t{1} << 22)) throw Error(ErrorCode::InvalidParams, "field too large for log tables");
    }
    q_ = static_cast<std::uint32_t>(q);
    modulus_ = canonical_modulus(p, f);

    const auto factors = prime_divisors(q_ - 1);
    auto slow_pow = [&](Elem a, std::int64_t e) {
        Elem acc = 1;
        while (e > 0) {
            if (e & 1) acc = poly_mul(acc, a);
            a = poly_mul(a, a);
            e >>= 1;
        }
        return acc;
    };
    for (Elem g = 2; g < q_; ++g) {
        const bool primitive = std::all_of(factors.begin(), factors.end(),
                                           [&](int l) { return slow_pow(g, (q_ - 1) / l) != 1; });
        if (primitive) {
            generator_ = g;
            break;
        }
    }
    if (q_ == 2) generator_ = 1;

    exp_.assign(2 * static_cast<std::size_t>(q_), 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t e = 0; e < q_ - 1; ++e) {
        exp_[e] = x;
        log_[x] = e;
        x = poly_mul(x, generator_);
    }
    for (std::uint32_t e = q_ - 1; e < exp_.size(); ++e) exp_[e] = exp_[e - (q_ - 1)];
}

GaloisField::Elem GaloisField::poly_mul(Elem a, Elem b) const {
    std::vector<int> ca = coords(a), cb = coords(b);
    FpPoly prod = poly_mulmod(ca, cb, modulus_, p_);
    prod.resize(static_cast<std::size_t>(f_), 0);
    return from_coords(prod);
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const noexcept {
    Elem out = 0;
    for (int j = 0; j < f_; ++j) {
        const std::uint32_t w = pow_p_[static_cast<std::size_t>(j)];
        const std::uint32_t s = (a / w % p_ + b / w % p_) % p_;
        out += s * w;
    }
    return out;
}

GaloisField::Elem GaloisField::neg(Elem a) const noexcept {
    Elem out = 0;
    for (int j = 0; j < f_; ++j) {
        const std::uint32_t w = pow_p_[static_cast<std::size_t>(j)];
        out += ((p_ - a / w % p_) % p_) * w;
    }
    return out;
}

GaloisField::Elem GaloisField::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

GaloisField::Elem GaloisField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_q");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GaloisField::Elem GaloisField::exp(std::int64_t e) const {
    const std::int64_t order = q_ - 1;
    const std::int64_t r = ((e % order) + order) % order;
    return exp_[static_cast<std::size_t>(r)];
}

GaloisField::Elem GaloisField::pow(Elem a, std::int64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp(static_cast<std::int64_t>(log_[a]) * e);
}

GaloisField::Elem GaloisField::from_int(std::int64_t n) const noexcept { return static_cast<Elem>(mod_p(n, p_)); }

GaloisField::Elem GaloisField::from_coords(std::span<const int> c) const {
    if (static_cast<int>(c.size()) > f_) throw Error(ErrorCode::ParseError, "too many coordinates for F_q element");
    Elem out = 0;
    for (std::size_t j = 0; j < c.size(); ++j) out += static_cast<Elem>(mod_p(c[j], p_)) * pow_p_[j];
    return out;
}

std::vector<int> GaloisField::coords(Elem a) const {
    std::vector<int> out(static_cast<std::size_t>(f_));
    for (int j = 0; j < f_; ++j) {
        out[static_cast<std::size_t>(j)] = static_cast<int>(a % p_);
        a /= p_;
    }
    return out;
}

std::string GaloisField::to_string(Elem a) const {
    std::string out;
    const auto c = coords(a);
    for (std::size_t j = 0; j < c.size(); ++j) out += (j ? "," : "") + std::to_string(c[j]);
    return out;
}

}  // namespace splice
