#include "splice/sweep.hpp"

#include "splice/diagram.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

namespace splice {

namespace checks {

namespace {

int zeros(const SignVector& s) { return static_cast<int>(std::count(s.bits.begin(), s.bits.end(), 0)); }

std::string at_k(const char* what, int k) { return std::string(what) + " fails at k = " + std::to_string(k); }

bool is_cyclic_permutation(const SignVector& a, const SignVector& b) {
    const int f = static_cast<int>(a.bits.size());
    for (int s = 0; s < f; ++s)
        if (g_act(a, s) == b) return true;
    return false;
}

}  // namespace

std::string recurrence_consistency(const MuTable& table) {
    const Params& ctx = table.ctx();
    if (table.power(ctx.l()) != identity_tuple(ctx.f())) return "mu^(l) is not the identity tuple";
    MuTuple iterated = identity_tuple(ctx.f());
    for (int k = 1; k <= ctx.l(); ++k) {
        iterated = mu_recurrence_step(iterated, k, ctx);
        if (iterated != table.power(k)) return at_k("recurrence vs composition", k);
        if (mu_recurrence_step(table.power(k - 1), k, ctx) != mu_power(ctx, k)) return at_k("single step", k);
    }
    return {};
}

std::string sign_identity(const MuTable& table) {
    const int l = table.ctx().l();
    for (int k = 1; k <= l; ++k)
        if (sign_vector(table.power(k)) != g_act(sign_vector(table.power(l - k)), k)) return at_k("m^(k) = g^k m^(l-k)", k);
    return {};
}

std::string sign_aperiodicity(const MuTable& table) {
    const Params& ctx = table.ctx();
    const int l = ctx.l(), f = ctx.f();
    for (int k = 1; k <= l - 1; ++k) {
        if (f % 2 == 0 && 2 * k == l) continue;
        const SignVector m = sign_vector(table.power(k));
        for (int s = 1; s < f; ++s)
            if (g_act(m, s) == m) return at_k("aperiodicity", k);
    }
    return {};
}

std::string sign_cyclic_classes(const MuTable& table) {
    const int l = table.ctx().l();
    for (int k1 = 1; k1 <= l - 1; ++k1)
        for (int k2 = 1; k2 <= l - 1; ++k2) {
            if (k1 == k2) continue;
            const bool related = is_cyclic_permutation(sign_vector(table.power(k1)), sign_vector(table.power(k2)));
            if (related != (k2 == l - k1))
                return "cyclic classes fail at (" + std::to_string(k1) + ", " + std::to_string(k2) + ")";
        }
    return {};
}

std::string zero_count_pattern(const MuTable& table) {
    const int f = table.ctx().f(), l = table.ctx().l();
    for (int k = 1; k <= l - 1; ++k) {
        int expected = 0;
        if (f % 2 == 1) {
            expected = (k % 2 == 1) ? k : l - k;
        } else if (k % 2 == 1) {
            expected = (2 * k <= l) ? k : l - k;
        } else {
            expected = (2 * k <= l) ? l / 2 - k : k - l / 2;
        }
        if (zeros(sign_vector(table.power(k))) != expected) return at_k("zero count", k);
    }
    return {};
}

std::string tuple_distinctness(const MuTable& table) {
    const int l = table.ctx().l();
    std::set<MuTuple> seen;
    for (int k = 1; k <= l; ++k)
        if (!seen.insert(table.power(k)).second) return at_k("mu^(k) repeats", k);
    for (int k = 1; k <= l - 1; ++k)
        if (!seen.insert(g_act(table.power(k), 1)).second) return at_k("g mu^(k) repeats", k);
    return {};
}

std::string proof_inequalities(const MuTable& table) {
    const Params& ctx = table.ctx();
    const int l = ctx.l(), p = ctx.p();
    if (table.power(1)[0] != LinPoly{1, -1}) return "mu^(1)_0 != x - 1";
    if (table.power(l - 1)[1] != LinPoly{1, 1}) return "mu^(l-1)_1 != x + 1";
    if (ctx.f() % 2 == 0) {
        const int h = l / 2;
        if (table.power(h)[0] != LinPoly{-1, p - 1}) return "mu^(l/2)_0 != p - 1 - x";
        if (table.power(h)[1] != LinPoly{-1, p - 3}) return "mu^(l/2)_1 != p - 3 - x";
        if (table.power(h + 1)[1] != LinPoly{1, 1}) return "mu^(l/2+1)_1 != x + 1";
        if (table.power(h - 1)[2 % ctx.f()] != LinPoly{1, -1}) return "mu^(l/2-1)_2 != x - 1";
    }
    return {};
}

}  // namespace checks

namespace {

void record(PointReport& report, std::string name, const std::string& failure) {
    report.checks.push_back({std::move(name), failure.empty(), failure});
}

template <typename Fn>
void guarded(PointReport& report, const std::string& name, Fn&& fn) {
    try {
        record(report, name, fn());
    } catch (const std::exception& e) {
        record(report, name, std::string("exception: ") + e.what());
    }
}

}  // namespace

PointReport verify_point(const GridPoint& point) {
    PointReport report;
    report.point = point;
    try {
        const Params ctx(point.p, point.f);
        const MuTable table(ctx);
        const int l = ctx.l();

        guarded(report, "mu.recurrence", [&] { return checks::recurrence_consistency(table); });
        guarded(report, "signs.identity", [&] { return checks::sign_identity(table); });
        guarded(report, "signs.cyclic_classes", [&] { return checks::sign_cyclic_classes(table); });
        guarded(report, "signs.aperiodic", [&] { return checks::sign_aperiodicity(table); });
        guarded(report, "signs.zero_count", [&] { return checks::zero_count_pattern(table); });
        guarded(report, "tuples.distinct", [&] { return checks::tuple_distinctness(table); });
        guarded(report, "tuples.inequalities", [&] { return checks::proof_inequalities(table); });
        guarded(report, "cyclic.closing", [&]() -> std::string {
            const auto e = e_sequence(table, point.r, false);
            const auto ep = e_sequence(table, point.r, true);
            report.e1 = e[1];
            report.sigma1 = sigma_sequence(table, point.r)[1];
            if (ctx.reduce(e.back()) != 0) return "e_l = " + std::to_string(e.back()) + " not 0 mod q-1";
            if (ctx.reduce(ep.back()) != 0) return "e'_l = " + std::to_string(ep.back()) + " not 0 mod q-1";
            return {};
        });
        guarded(report, "cyclic.C", [&]() -> std::string {
            return build_cyclic(table, point.r, false).size() == static_cast<std::size_t>(l) ? "" : "wrong edge count";
        });
        guarded(report, "cyclic.Cprime", [&]() -> std::string {
            return build_cyclic(table, point.r, true).size() == static_cast<std::size_t>(l) ? "" : "wrong edge count";
        });
        guarded(report, "gr1.shape", [&]() -> std::string {
            // Intermediate sigma_k may carry digits 0 or p-1, where the closed form leaves range.
            auto layer = gr1_cosoc(make_weight(ctx, point.r, 0), table);
            std::sort(layer.begin(), layer.end());
            if (layer.size() != static_cast<std::size_t>(ctx.f())) return "gr1 has wrong size";
            if (std::adjacent_find(layer.begin(), layer.end()) != layer.end()) return "gr1 repeats a weight";
            return {};
        });

        std::optional<SplicedModule> spliced;
        guarded(report, "spliced.invariants", [&]() -> std::string {
            spliced = build_spliced(table, point.r);
            if (spliced->length() != 4 * l - 2) return "length " + std::to_string(spliced->length()) + " != 4l-2";
            if (spliced->summands.size() != static_cast<std::size_t>(2 * (l - 2) + 2)) return "wrong summand count";
            if (spliced->socle_weights().size() != static_cast<std::size_t>(2 * l - 1)) return "socle size != 2l-1";
            if (spliced->cosocle_weights().size() != static_cast<std::size_t>(2 * l - 1)) return "cosocle size != 2l-1";
            return {};
        });
        guarded(report, "d1.pairing", [&]() -> std::string {
            if (!spliced) return "no spliced module";
            const D1Basis basis = d1_basis(*spliced);
            if (basis.dimension() != static_cast<std::size_t>(4 * l - 2)) return "dim D_1 != 4l-2";
            return verify_pi_pairing(basis) ? "" : "pairing is not an involution";
        });
        if (ctx.f() == 2) {
            guarded(report, "spliced.f2_duplication", [&]() -> std::string {
                if (!spliced) return "no spliced module";
                const Weight w = repeated_weight_f2(ctx, point.r);
                const auto c = build_cyclic(table, point.r, false);
                const auto cp = build_cyclic(table, point.r, true);
                const bool in_soc_c = std::any_of(c.begin(), c.end(), [&](const ExtEdge& e) { return e.socle == w; });
                const bool in_cosoc_cp =
                    std::any_of(cp.begin(), cp.end(), [&](const ExtEdge& e) { return e.cosocle == w; });
                if (!in_soc_c || !in_cosoc_cp) return "weight " + to_string(w) + " missing";
                const auto jh = spliced->jh_factors();
                if (std::count(jh.begin(), jh.end(), w) != 2) return "weight " + to_string(w) + " not doubled in D_0";
                return {};
            });
        }
    } catch (const std::exception& e) {
        record(report, "params", e.what());
    }
    report.pass = std::all_of(report.checks.begin(), report.checks.end(), [](const CheckResult& c) { return c.pass; });
    return report;
}

std::vector<GridPoint> expand_grid(const GridSpec& spec) {
    if (spec.primes.empty() || spec.degrees.empty()) throw Error(ErrorCode::InvalidParams, "empty grid");
    std::vector<GridPoint> out;
    for (int p : spec.primes) {
        for (int f : spec.degrees) {
            const Params ctx(p, f);
            const int width = p - 3;
            std::uint64_t total = 1;
            bool huge = false;
            for (int j = 0; j < f; ++j) {
                total *= static_cast<std::uint64_t>(width);
                if (total > spec.exhaustive_limit) huge = true;
            }
            auto decode = [&](std::uint64_t code) {
                std::vector<int> r(static_cast<std::size_t>(f));
                for (int j = 0; j < f; ++j) {
                    r[static_cast<std::size_t>(j)] = 1 + static_cast<int>(code % static_cast<std::uint64_t>(width));
                    code /= static_cast<std::uint64_t>(width);
                }
                return r;
            };
            if (!huge) {
                for (std::uint64_t code = 0; code < total; ++code) out.push_back({p, f, decode(code)});
                continue;
            }
            std::mt19937_64 rng(spec.seed ^ (static_cast<std::uint64_t>(p) << 32) ^ static_cast<std::uint64_t>(f));
            std::set<std::vector<int>> picked;
            while (picked.size() < spec.samples) {
                std::vector<int> r(static_cast<std::size_t>(f));
                for (auto& x : r) x = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(width));
                picked.insert(std::move(r));
            }
            for (const auto& r : picked) out.push_back({p, f, r});
        }
    }
    return out;
}

std::vector<PointReport> verify_points_serial(const std::vector<GridPoint>& points) {
    std::vector<PointReport> out;
    out.reserve(points.size());
    for (const auto& pt : points) out.push_back(verify_point(pt));
    return out;
}

std::vector<PointReport> verify_points_parallel(const std::vector<GridPoint>& points, int jobs) {
    std::vector<PointReport> out(points.size());
    const auto n = static_cast<std::int64_t>(points.size());
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = verify_point(points[static_cast<std::size_t>(i)]);
    return out;
}

SweepReport run_verify_lemmas(const GridSpec& spec, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.grid = spec;
    const auto points = expand_grid(spec);
    report.points = jobs == 1 ? verify_points_serial(points) : verify_points_parallel(points, jobs);
    report.pass = std::all_of(report.points.begin(), report.points.end(), [](const PointReport& p) { return p.pass; });
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace splice
