#include "splice/gln.hpp"

#include <algorithm>
#include <functional>

namespace splice {

GlnWeight make_gln_weight(const Params& ctx, std::vector<std::int64_t> a) {
    if (a.size() < 3) throw Error(ErrorCode::InvalidWeight, "GL_n weight needs n >= 3");
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        const std::int64_t gap = a[i] - a[i + 1];
        if (gap < 0 || gap > ctx.det_mod())
            throw Error(ErrorCode::InvalidWeight, "gap a_" + std::to_string(i + 1) + " - a_" + std::to_string(i + 2) +
                                                      " = " + std::to_string(gap) + " outside [0, q-1]");
    }
    return GlnWeight{std::move(a)};
}

bool is_m_regular(const GlnWeight& w) {
    std::vector<std::int64_t> tail(w.a.begin() + 1, w.a.end());
    std::sort(tail.begin(), tail.end());
    return std::adjacent_find(tail.begin(), tail.end()) == tail.end();
}

std::vector<std::int64_t> alternating_pattern(std::int64_t a_val, std::int64_t b_val, int n) {
    std::vector<std::int64_t> out;
    for (int i = 0; i < n - 2; ++i) out.push_back(i % 2 == 0 ? a_val : b_val);
    return out;
}

ChiChoice with_pattern(ChiChoice choice, int n) {
    choice.pattern = alternating_pattern(choice.a_val, choice.b_val, n);
    return choice;
}

ChiChoice choose_ab(const std::set<std::int64_t>& socle_dets, const Params& ctx) {
    const std::int64_t bound = 4 * static_cast<std::int64_t>(ctx.f()) - 1;
    if (ctx.det_mod() <= bound) throw Error(ErrorCode::Infeasible, "q - 1 <= 4f - 1");
    if (static_cast<std::int64_t>(socle_dets.size()) > bound)
        throw Error(ErrorCode::Infeasible, "more than 4f - 1 socle determinant powers");
    ChiChoice c;
    while (socle_dets.count(c.a_val)) ++c.a_val;
    c.b_val = c.a_val == 0 ? 1 : 0;
    return c;
}

std::set<std::int64_t> socle_det_powers(const SplicedModule& d) {
    std::set<std::int64_t> out;
    for (const auto& w : d.socle_weights()) out.insert(w.m);
    return out;
}

InducedCheck verify_all_induced_m_regular(const ChiChoice& choice, const std::set<std::int64_t>& socle_dets, int n,
                                          const Params& ctx) {
    if (n < 3 || static_cast<int>(choice.pattern.size()) != n - 2)
        throw Error(ErrorCode::InvalidWeight, "pattern length must be n - 2 with n >= 3");
    const std::int64_t mod = ctx.det_mod();
    InducedCheck result;
    std::vector<std::int64_t> a(static_cast<std::size_t>(n));

    // Candidate values for a_i above a fixed a_{i+1} with the given residue:
    // gap = residue - a_{i+1} mod (q - 1), plus q - 1 when that gap is 0.
    auto gaps_to = [&](std::int64_t below, std::int64_t residue) {
        const std::int64_t g = ctx.reduce(residue - below);
        std::vector<std::int64_t> out{g};
        if (g == 0) out.push_back(mod);
        return out;
    };

    std::function<void(int)> fill = [&](int i) {
        if (result.counterexample) return;
        if (i == 0) {
            for (std::int64_t gap = 0; gap <= mod; ++gap) {
                a[0] = a[1] + gap;
                ++result.enumerated;
                const GlnWeight w{a};
                if (!is_m_regular(w)) {
                    result.all_regular = false;
                    result.counterexample = w;
                    return;
                }
            }
            return;
        }
        const std::size_t idx = static_cast<std::size_t>(i);
        if (i == 1) {
            for (std::int64_t d : socle_dets)
                for (std::int64_t gap : gaps_to(a[2], d)) {
                    a[1] = a[2] + gap;
                    fill(0);
                }
            return;
        }
        for (std::int64_t gap : gaps_to(a[idx + 1], choice.pattern[idx - 2])) {
            a[idx] = a[idx + 1] + gap;
            fill(i - 1);
        }
    };

    a[static_cast<std::size_t>(n - 1)] = ctx.reduce(choice.pattern.back());
    fill(n - 2);
    return result;
}

DistinctnessOutcome distinctness_implication(std::span<const std::int64_t> seq, std::int64_t modulus) {
    DistinctnessOutcome out;
    out.hypotheses = true;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const std::int64_t gap = seq[i] - seq[i + 1];
        const std::int64_t diff = ((seq[i] - seq[i + 1]) % modulus + modulus) % modulus;
        if (gap < 0 || gap > modulus || diff == 0) {
            out.hypotheses = false;
            break;
        }
    }
    std::vector<std::int64_t> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    out.conclusion = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    return out;
}

}  // namespace splice
