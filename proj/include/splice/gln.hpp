#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "splice/gamma.hpp"
#include "splice/params.hpp"

namespace splice {

/// F(a_1, ..., a_n): weakly decreasing with consecutive gaps in [0, q - 1].
struct GlnWeight {
    std::vector<std::int64_t> a;

    int n() const noexcept { return static_cast<int>(a.size()); }
    bool operator==(const GlnWeight&) const = default;
};

/// Throws InvalidWeight unless n >= 3 and the gap condition holds.
GlnWeight make_gln_weight(const Params& ctx, std::vector<std::int64_t> a);

/// M-regular for the Levi GL_2 x GL_1^(n-2): a_2, ..., a_n pairwise distinct.
bool is_m_regular(const GlnWeight& w);

struct ChiChoice {
    std::int64_t a_val = 0;
    std::int64_t b_val = 0;
    /// Residues required of a_3, ..., a_n: a, b, a, ...
    std::vector<std::int64_t> pattern;
};

/// Least residue outside socle_dets, then the least residue different from it.
/// Throws Infeasible when |socle_dets| > 4f - 1 or q - 1 <= 4f - 1.
ChiChoice choose_ab(const std::set<std::int64_t>& socle_dets, const Params& ctx);

/// Alternating pattern of length n - 2 starting with a_val.
std::vector<std::int64_t> alternating_pattern(std::int64_t a_val, std::int64_t b_val, int n);
ChiChoice with_pattern(ChiChoice choice, int n);

/// det exponents of the socle weights of D_0.
std::set<std::int64_t> socle_det_powers(const SplicedModule& d);

struct InducedCheck {
    bool all_regular = true;
    std::uint64_t enumerated = 0;
    std::optional<GlnWeight> counterexample;
};

/// Enumerates every GlnWeight with a_n in [0, q - 2], a_2 mod (q - 1) in
/// socle_dets and a_i = pattern[i - 3] mod (q - 1) for i >= 3, and checks
/// M-regularity of each. Stops at the first counterexample.
InducedCheck verify_all_induced_m_regular(const ChiChoice& choice, const std::set<std::int64_t>& socle_dets, int n,
                                          const Params& ctx);

/// Consecutive terms non-congruent mod `modulus` plus weak decrease with gaps
/// at most `modulus` forces strict decrease. Returns whether the hypotheses
/// hold and, if so, whether the conclusion (pairwise distinct) holds.
struct DistinctnessOutcome {
    bool hypotheses = false;
    bool conclusion = false;
};
DistinctnessOutcome distinctness_implication(std::span<const std::int64_t> seq, std::int64_t modulus);

}  // namespace splice
