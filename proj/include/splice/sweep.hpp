#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "splice/gamma.hpp"
#include "splice/mu.hpp"

namespace splice {

/// mu-level checks that do not depend on r. Each returns an empty string on
/// success and a description of the first failure otherwise.
namespace checks {
std::string recurrence_consistency(const MuTable& table);
std::string sign_identity(const MuTable& table);       ///< m^(k) = g^k m^(l-k)
std::string sign_aperiodicity(const MuTable& table);   ///< no nontrivial cyclic symmetry, k != l/2
std::string sign_cyclic_classes(const MuTable& table); ///< cyclic permutations iff k2 = l - k1
std::string zero_count_pattern(const MuTable& table);
std::string tuple_distinctness(const MuTable& table);  ///< the 2l - 1 tuples are distinct
std::string proof_inequalities(const MuTable& table);
}  // namespace checks

struct GridPoint {
    int p = 0;
    int f = 0;
    std::vector<int> r;

    bool operator==(const GridPoint&) const = default;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;

    bool operator==(const CheckResult&) const = default;
};

struct PointReport {
    GridPoint point;
    std::vector<CheckResult> checks;
    bool pass = true;
    Weight sigma1;
    std::int64_t e1 = 0;

    bool operator==(const PointReport&) const = default;
};

/// Runs every structural check at one grid point. Never throws; failures and
/// exceptions are recorded as failing checks.
PointReport verify_point(const GridPoint& point);

struct GridSpec {
    std::vector<int> primes;
    std::vector<int> degrees;
    /// r-grids with at most this many points are enumerated exhaustively.
    std::uint64_t exhaustive_limit = 10000;
    /// Sample size for larger r-grids.
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
};

/// Validates (throws InvalidParams) and expands the grid in (p, f, r) order.
/// r ranges over [1, p - 3]^f; sampled grids are sorted and duplicate-free.
std::vector<GridPoint> expand_grid(const GridSpec& spec);

/// Reference kernel: one point after another.
std::vector<PointReport> verify_points_serial(const std::vector<GridPoint>& points);
/// OpenMP kernel; results are stored by grid position so output order and
/// content match the serial kernel exactly.
std::vector<PointReport> verify_points_parallel(const std::vector<GridPoint>& points, int jobs);

struct SweepReport {
    GridSpec grid;
    std::vector<PointReport> points;
    bool pass = true;
    double seconds = 0.0;
};

SweepReport run_verify_lemmas(const GridSpec& spec, int jobs);

}  // namespace splice
