#include "splice/mu.hpp"

#include <sstream>

namespace splice {

namespace {

int wrap(std::int64_t j, int f) {
    const auto r = static_cast<int>(j % f);
    return r < 0 ? r + f : r;
}

Weight to_weight(const Params& ctx, const std::vector<std::int64_t>& values, std::int64_t e) {
    std::vector<int> r;
    r.reserve(values.size());
    for (auto v : values) {
        if (v < 0 || v > ctx.p() - 1)
            throw Error(ErrorCode::RangeError, "tuple entry " + std::to_string(v) + " outside [0, p-1]");
        r.push_back(static_cast<int>(v));
    }
    return Weight{std::move(r), ctx.reduce(e)};
}

}  // namespace

MuTuple identity_tuple(int f) { return MuTuple{std::vector<LinPoly>(static_cast<std::size_t>(f), LinPoly{1, 0})}; }

MuTuple mu_base(const Params& ctx) {
    MuTuple t = MuTuple{std::vector<LinPoly>(static_cast<std::size_t>(ctx.f()), LinPoly{-1, ctx.p() - 1})};
    t.entries[0] = LinPoly{1, -1};
    t.entries[1] = LinPoly{-1, ctx.p() - 2};
    return t;
}

MuTuple g_act(const MuTuple& t, int k) {
    const int f = static_cast<int>(t.size());
    MuTuple out = t;
    for (int j = 0; j < f; ++j) out.entries[j] = t.entries[wrap(j + k, f)];
    return out;
}

SignVector g_act(const SignVector& s, int k) {
    const int f = static_cast<int>(s.bits.size());
    SignVector out = s;
    for (int j = 0; j < f; ++j) out.bits[j] = s.bits[wrap(j + k, f)];
    return out;
}

MuTuple compose(const MuTuple& a, const MuTuple& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::LengthMismatch,
                    "compose of lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    MuTuple out = a;
    for (std::size_t j = 0; j < a.size(); ++j)
        out.entries[j] = LinPoly{a[j].sign * b[j].sign, a[j].sign * b[j].c + a[j].c};
    return out;
}

MuTuple mu_power(const Params& ctx, int k) {
    if (k < 0 || k > ctx.l())
        throw Error(ErrorCode::RangeError, "mu power k = " + std::to_string(k) + " outside [0, l]");
    const MuTuple mu = mu_base(ctx);
    MuTuple acc = identity_tuple(ctx.f());
    for (int i = 0; i < k; ++i) acc = compose(g_act(mu, i), acc);
    return acc;
}

MuTuple mu_recurrence_step(const MuTuple& prev, int k, const Params& ctx) {
    if (k < 1 || k > ctx.l())
        throw Error(ErrorCode::RangeError, "recurrence step k = " + std::to_string(k) + " outside [1, l]");
    const int f = ctx.f();
    MuTuple out = prev;
    for (int j = 0; j < f; ++j) {
        const LinPoly& q = prev[static_cast<std::size_t>(j)];
        if (j == wrap(1 - k, f))
            out.entries[j] = LinPoly{q.sign, q.c - 1};
        else if (j == wrap(2 - k, f))
            out.entries[j] = LinPoly{-q.sign, ctx.p() - 2 - q.c};
        else
            out.entries[j] = LinPoly{-q.sign, ctx.p() - 1 - q.c};
    }
    return out;
}

MuTable::MuTable(const Params& ctx) : ctx_(ctx) {
    const MuTuple mu = mu_base(ctx);
    for (int k = 0; k < ctx.f(); ++k) shifted_.push_back(g_act(mu, k));
    powers_.push_back(identity_tuple(ctx.f()));
    for (int k = 1; k <= ctx.l(); ++k) powers_.push_back(compose(shifted_mu(k - 1), powers_.back()));
}

const MuTuple& MuTable::power(int k) const {
    if (k < 0 || k > ctx_.l())
        throw Error(ErrorCode::RangeError, "mu power k = " + std::to_string(k) + " outside [0, l]");
    return powers_[static_cast<std::size_t>(k)];
}

const MuTuple& MuTable::shifted_mu(int k) const { return shifted_[static_cast<std::size_t>(wrap(k, ctx_.f()))]; }

SignVector sign_vector(const MuTuple& t) {
    SignVector s;
    s.bits.reserve(t.size());
    for (const auto& e : t.entries) s.bits.push_back(e.sign == 1 ? 0 : 1);
    return s;
}

std::vector<std::int64_t> evaluate(const MuTuple& t, std::span<const std::int64_t> x) {
    if (x.size() != t.size()) throw Error(ErrorCode::LengthMismatch, "evaluation point length");
    std::vector<std::int64_t> out(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) out[j] = t[j](x[j]);
    return out;
}

std::vector<std::int64_t> evaluate(const MuTuple& t, std::span<const int> x) {
    const std::vector<std::int64_t> wide(x.begin(), x.end());
    return evaluate(t, wide);
}

std::int64_t eval_e(const MuTuple& t, std::span<const std::int64_t> x, const Params& ctx) {
    const int f = ctx.f();
    if (static_cast<int>(t.size()) != f || static_cast<int>(x.size()) != f)
        throw Error(ErrorCode::LengthMismatch, "e(t) needs f-tuples");
    std::int64_t sum = 0;
    for (int j = 0; j < f; ++j) sum += ctx.pow_p(j) * (x[j] - t[j](x[j]));
    // Case 1 only when the last entry is literally x or x - 1.
    const LinPoly& last = t[static_cast<std::size_t>(f - 1)];
    const bool case_one = last.sign == 1 && (last.c == 0 || last.c == -1);
    if (!case_one) sum += ctx.q() - 1;
    if (sum % 2 != 0) throw Error(ErrorCode::ParityError, "odd numerator " + std::to_string(sum));
    return sum / 2;
}

void require_admissible(const Params& ctx, std::span<const int> r) {
    if (static_cast<int>(r.size()) != ctx.f())
        throw Error(ErrorCode::LengthMismatch, "r has length " + std::to_string(r.size()));
    for (int x : r)
        if (x < 1 || x > ctx.p() - 3)
            throw Error(ErrorCode::GenericityError, "r_j = " + std::to_string(x) + " outside [1, p-3]");
}

std::vector<std::int64_t> e_sequence(const MuTable& table, std::span<const int> r, bool primed) {
    const Params& ctx = table.ctx();
    require_admissible(ctx, r);
    const int shift = primed ? 1 : 0;
    std::vector<std::int64_t> e{0};
    for (int k = 1; k <= ctx.l(); ++k) {
        const MuTuple inner = g_act(table.power(k - 1), shift);
        const auto point = evaluate(inner, r);
        e.push_back(e.back() + eval_e(table.shifted_mu(k - 1 + shift), point, ctx));
    }
    return e;
}

namespace {

std::vector<Weight> weight_sequence(const MuTable& table, std::span<const int> r, bool primed) {
    const auto e = e_sequence(table, r, primed);
    std::vector<Weight> out;
    for (int k = 0; k <= table.ctx().l(); ++k) {
        const MuTuple t = g_act(table.power(k), primed ? 1 : 0);
        out.push_back(to_weight(table.ctx(), evaluate(t, r), e[static_cast<std::size_t>(k)]));
    }
    return out;
}

}  // namespace

std::vector<Weight> sigma_sequence(const MuTable& table, std::span<const int> r) {
    return weight_sequence(table, r, false);
}

std::vector<Weight> sigma_prime_sequence(const MuTable& table, std::span<const int> r) {
    return weight_sequence(table, r, true);
}

std::vector<Weight> sigma_sequence(const Params& ctx, std::span<const int> r) {
    return sigma_sequence(MuTable(ctx), r);
}

std::vector<Weight> sigma_prime_sequence(const Params& ctx, std::span<const int> r) {
    return sigma_prime_sequence(MuTable(ctx), r);
}

std::string to_string(const LinPoly& poly) {
    std::ostringstream os;
    os << (poly.sign == 1 ? "+x" : "-x");
    if (poly.c > 0) os << '+' << poly.c;
    else if (poly.c < 0) os << poly.c;
    return os.str();
}

std::string to_string(const SignVector& s) {
    std::string out;
    for (auto b : s.bits) out.push_back(b ? '1' : '0');
    return out;
}

}  // namespace splice
