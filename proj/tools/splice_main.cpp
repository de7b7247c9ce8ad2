// Command-line front end: mu-table, verify-lemmas, build-spliced, closure, gln-chi.
//
// Exit codes: 0 success, 1 finding or violated expectation, 2 usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "splice/diagram.hpp"
#include "splice/gamma.hpp"
#include "splice/gln.hpp"
#include "splice/json_io.hpp"
#include "splice/mu.hpp"
#include "splice/sweep.hpp"

namespace {

using namespace splice;

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;

struct Globals {
    std::string emit = "json";
    int jobs = 1;
    std::uint64_t seed = 0;
};

bool is_usage_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::CyclicityViolation:
        case ErrorCode::MultiplicityViolation:
        case ErrorCode::PairingViolation:
            return false;
        default:
            return true;
    }
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_mu_table(const Globals& g, int p, int f, const std::vector<int>& r) {
    const Params ctx(p, f);
    const MuTable table(ctx);
    std::vector<std::int64_t> e;
    std::vector<Weight> sigmas;
    if (!r.empty()) {
        e = e_sequence(table, r, false);
        sigmas = sigma_sequence(table, r);
    }
    if (g.emit == "tsv") {
        std::cout << "k";
        for (int j = 0; j < f; ++j) std::cout << "\tmu_" << j;
        std::cout << "\tm";
        if (!r.empty()) std::cout << "\te_k\tsigma_k";
        std::cout << '\n';
        for (int k = 0; k <= ctx.l(); ++k) {
            std::cout << k;
            for (const auto& poly : table.power(k).entries) std::cout << '\t' << to_string(poly);
            std::cout << '\t' << to_string(sign_vector(table.power(k)));
            if (!r.empty()) std::cout << '\t' << e[static_cast<std::size_t>(k)] << '\t' << to_string(sigmas[static_cast<std::size_t>(k)]);
            std::cout << '\n';
        }
        return kExitOk;
    }
    Json rows = Json::array();
    for (int k = 0; k <= ctx.l(); ++k) {
        Json entries = Json::array();
        for (const auto& poly : table.power(k).entries) entries.push_back(to_string(poly));
        Json row{{"k", k}, {"mu", entries}, {"m", to_string(sign_vector(table.power(k)))}};
        if (!r.empty()) {
            row["e"] = e[static_cast<std::size_t>(k)];
            row["sigma"] = to_json(sigmas[static_cast<std::size_t>(k)]);
        }
        rows.push_back(row);
    }
    print_json(Json{{"p", p}, {"f", f}, {"l", ctx.l()}, {"rows", rows}});
    return kExitOk;
}

int cmd_verify(const Globals& g, const std::vector<int>& ps, const std::vector<int>& fs, const std::vector<int>& r,
               std::uint64_t samples, std::uint64_t limit, bool timing) {
    GridSpec spec{ps, fs, limit, samples, g.seed};
    SweepReport report;
    if (!r.empty()) {
        if (ps.size() != 1 || fs.size() != 1) throw Error(ErrorCode::InvalidParams, "--r needs a single p and f");
        const Params ctx(ps[0], fs[0]);
        require_admissible(ctx, r);
        report.grid = spec;
        report.points = {verify_point(GridPoint{ps[0], fs[0], r})};
        report.pass = report.points[0].pass;
    } else {
        expand_grid(spec);  // validates before the sweep starts
        report = run_verify_lemmas(spec, g.jobs);
    }
    if (timing) std::cerr << "verify-lemmas: " << report.points.size() << " points in " << report.seconds << " s\n";
    if (g.emit == "tsv") {
        std::cout << "p\tf\tr\tcheck\tpass\tdetail\n";
        for (const auto& pt : report.points) {
            std::ostringstream rs;
            for (std::size_t j = 0; j < pt.point.r.size(); ++j) rs << (j ? "," : "") << pt.point.r[j];
            for (const auto& c : pt.checks)
                std::cout << pt.point.p << '\t' << pt.point.f << '\t' << rs.str() << '\t' << c.name << '\t'
                          << (c.pass ? "pass" : "FAIL") << '\t' << c.detail << '\n';
        }
    } else {
        print_json(to_json(report, timing));
    }
    return report.pass ? kExitOk : kExitFinding;
}

int cmd_build_spliced(int p, int f, const std::vector<int>& r, const std::string& format) {
    const Params ctx(p, f);
    const SplicedModule d = build_spliced(ctx, r);
    if (format == "dot") {
        std::cout << to_dot(d);
        return kExitOk;
    }
    Json j = to_json(d);
    j["d1"] = to_json(d1_basis(d));
    print_json(j);
    return kExitOk;
}

LambdaSpec load_lambda(const std::string& spec, const GaloisField& field, int radius, std::uint64_t seed) {
    if (spec == "const1") return LambdaSpec::constant(GaloisField::one(), radius);
    if (spec == "geometric") return LambdaSpec::geometric(field, radius);
    std::mt19937_64 rng(seed);
    if (spec == "random") return LambdaSpec::random_product_generic(field, radius, rng);
    if (spec == "random-any") return LambdaSpec::random(field, radius, rng);
    if (!std::filesystem::exists(spec))
        throw Error(ErrorCode::ParseError, "'" + spec + "' is neither a lambda file nor a preset");
    std::ifstream in(spec);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return LambdaSpec::parse(buffer.str(), field);
}

int cmd_closure(const Globals& g, int p, int f, const std::vector<int>& r, const std::string& lambda_spec,
                const std::string& start, int window, int rounds, const std::string& expect) {
    const Params ctx(p, f);
    const SplicedModule d = build_spliced(ctx, r);
    const GaloisField field(p, f);
    const auto colon = start.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "--start must be LABEL:SPARSEVEC");
    const Label label = parse_label(start.substr(0, colon), ctx.l());
    const SparseVec vec = parse_sparse_vec(start.substr(colon + 1), field);
    const LambdaSpec lambda = load_lambda(lambda_spec, field, window + rounds, g.seed);

    const ClosureState state = saturate(d, lambda, field, label, vec, {window, rounds});
    Json j = to_json(state, field);
    j["lambdaCondition"] = Json{{"paper", lambda_condition_check(lambda, LambdaMode::Paper, field)},
                                {"productGeneric", lambda_condition_check(lambda, LambdaMode::ProductGeneric, field)}};
    j["field"] = Json{{"p", p}, {"f", f}, {"modulus", field.modulus()}};
    j["seed"] = g.seed;
    j["start"] = start;
    print_json(j);
    if (expect.empty()) return kExitOk;
    return to_string(state.verdict) == expect ? kExitOk : kExitFinding;
}

int cmd_gln_chi(int p, int f, const std::vector<int>& r, int n) {
    const Params ctx(p, f);
    if (n < 3) throw Error(ErrorCode::InvalidParams, "--n must be >= 3");
    const SplicedModule d = build_spliced(ctx, r);
    const auto dets = socle_det_powers(d);
    const ChiChoice choice = with_pattern(choose_ab(dets, ctx), n);
    const InducedCheck check = verify_all_induced_m_regular(choice, dets, n, ctx);
    Json j{{"p", p},
           {"f", f},
           {"n", n},
           {"r", r},
           {"socleDets", dets},
           {"a", choice.a_val},
           {"b", choice.b_val},
           {"pattern", choice.pattern},
           {"bound", {{"qMinus1", ctx.det_mod()}, {"fourFMinus1", 4 * f - 1}}},
           {"enumerated", check.enumerated},
           {"verdict", check.all_regular ? "all-m-regular" : "counterexample"}};
    if (check.counterexample) j["counterexample"] = check.counterexample->a;
    print_json(j);
    return check.all_regular ? kExitOk : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spliced-module combinatorics for mod p representations of GL_2"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals globals;
    app.add_option("--emit", globals.emit, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--jobs", globals.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--seed", globals.seed, "Seed for sampled grids and random lambda");

    int p = 0, f = 0, n = 3, window = 8, rounds = 40;
    std::vector<int> r, ps, fs;
    std::uint64_t samples = 1000, limit = 10000;
    bool timing = false;
    std::string format = "json", lambda = "const1", start = "sigma:e0", expect;

    auto* mu = app.add_subcommand("mu-table", "Tabulate mu^(k), sign vectors and e_k");
    mu->add_option("--p", p)->required();
    mu->add_option("--f", f)->required();
    mu->add_option("--r", r)->delimiter(',');

    auto* verify = app.add_subcommand("verify-lemmas", "Sweep the structural checks over a grid");
    verify->add_option("--p", ps)->required()->delimiter(',');
    verify->add_option("--f", fs)->required()->delimiter(',');
    verify->add_option("--r", r, "Single point instead of the full r-grid")->delimiter(',');
    verify->add_option("--samples", samples, "Samples per (p, f) when the r-grid is too large");
    verify->add_option("--exhaustive-limit", limit, "Largest r-grid enumerated exhaustively");
    verify->add_flag("--timing", timing, "Include wall-clock time in the report");

    auto* spliced = app.add_subcommand("build-spliced", "Build D_0 and print it");
    spliced->add_option("--p", p)->required();
    spliced->add_option("--f", f)->required();
    spliced->add_option("--r", r)->required()->delimiter(',');
    spliced->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

    auto* closure = app.add_subcommand("closure", "Saturate a start vector under the Pi-derived rules");
    closure->add_option("--p", p)->required();
    closure->add_option("--f", f)->required();
    closure->add_option("--r", r)->required()->delimiter(',');
    closure->add_option("--lambda", lambda, "Lambda file or preset (const1, geometric, random, random-any)");
    closure->add_option("--start", start, "LABEL:SPARSEVEC, e.g. sigma:e0-e1");
    closure->add_option("--window", window)->check(CLI::PositiveNumber);
    closure->add_option("--max-rounds", rounds)->check(CLI::NonNegativeNumber);
    closure->add_option("--expect", expect)->check(CLI::IsMember({"full", "proper", "inconclusive"}));

    auto* gln = app.add_subcommand("gln-chi", "Choose (a, b) and check M-regularity of induced weights");
    gln->add_option("--p", p)->required();
    gln->add_option("--f", f)->required();
    gln->add_option("--r", r)->required()->delimiter(',');
    gln->add_option("--n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*mu) return cmd_mu_table(globals, p, f, r);
        if (*verify) return cmd_verify(globals, ps, fs, r, samples, limit, timing);
        if (*spliced) return cmd_build_spliced(p, f, r, format);
        if (*closure) return cmd_closure(globals, p, f, r, lambda, start, window, rounds, expect);
        if (*gln) return cmd_gln_chi(p, f, r, n);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_usage_error(e.code()) ? kExitUsage : kExitFinding;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
