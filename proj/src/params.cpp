#include "splice/params.hpp"

#include <algorithm>
#include <sstream>

namespace splice {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::InvalidWeight: return "InvalidWeight";
        case ErrorCode::NonGenericWeight: return "NonGenericWeight";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::RangeError: return "RangeError";
        case ErrorCode::ParityError: return "ParityError";
        case ErrorCode::GenericityError: return "GenericityError";
        case ErrorCode::CyclicityViolation: return "CyclicityViolation";
        case ErrorCode::MultiplicityViolation: return "MultiplicityViolation";
        case ErrorCode::PairingViolation: return "PairingViolation";
        case ErrorCode::NotASocleWeight: return "NotASocleWeight";
        case ErrorCode::MissingLambda: return "MissingLambda";
        case ErrorCode::ZeroStartVector: return "ZeroStartVector";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Params::Params(int p, int f) : p_(p), f_(f) {
    if (!is_prime(p) || p <= 3)
        throw Error(ErrorCode::InvalidParams, "p must be a prime > 3, got " + std::to_string(p));
    if (f < 2)
        throw Error(ErrorCode::InvalidParams, "f must be >= 2, got " + std::to_string(f));
    pow_p_.push_back(1);
    for (int j = 1; j <= f; ++j) {
        if (pow_p_.back() > (std::int64_t{1} << 48) / p)
            throw Error(ErrorCode::InvalidParams, "q = p^f too large");
        pow_p_.push_back(pow_p_.back() * p);
    }
    q_ = pow_p_.back();
    l_ = (f % 2 == 1) ? f : 2 * f;
}

Weight make_weight(const Params& ctx, std::vector<int> r, std::int64_t m) {
    if (static_cast<int>(r.size()) != ctx.f())
        throw Error(ErrorCode::InvalidWeight, "tuple length " + std::to_string(r.size()) +
                                                  " != f = " + std::to_string(ctx.f()));
    for (int x : r)
        if (x < 0 || x > ctx.p() - 1)
            throw Error(ErrorCode::InvalidWeight, "digit " + std::to_string(x) + " outside [0, p-1]");
    return Weight{std::move(r), ctx.reduce(m)};
}

std::int64_t digit_value(const Params& ctx, std::span<const int> r) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < r.size(); ++j) s += r[j] * ctx.pow_p(static_cast<int>(j));
    return s;
}

BChar chi(const Weight& w, const Params& ctx) {
    return {ctx.reduce(digit_value(ctx, w.r) + w.m), ctx.reduce(w.m)};
}

bool is_generic(const Weight& w, const Params& ctx) {
    const bool all_zero = std::all_of(w.r.begin(), w.r.end(), [](int x) { return x == 0; });
    const bool all_top = std::all_of(w.r.begin(), w.r.end(), [&](int x) { return x == ctx.p() - 1; });
    return !all_zero && !all_top;
}

Weight s_involution(const Weight& w, const Params& ctx) {
    if (!is_generic(w, ctx)) throw Error(ErrorCode::NonGenericWeight, to_string(w));
    std::vector<int> r(w.r.size());
    std::transform(w.r.begin(), w.r.end(), r.begin(), [&](int x) { return ctx.p() - 1 - x; });
    return Weight{std::move(r), ctx.reduce(w.m + digit_value(ctx, w.r))};
}

std::string to_string(const Weight& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < w.r.size(); ++j) os << (j ? "," : "") << w.r[j];
    os << ")(x)det^" << w.m;
    return os.str();
}

}  // namespace splice
