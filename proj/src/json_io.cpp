#include "splice/json_io.hpp"

#include <sstream>

namespace splice {

Json to_json(const Weight& w) { return Json{{"r", w.r}, {"m", w.m}}; }

Json to_json(const BChar& c) { return Json{{"u", c.u}, {"v", c.v}}; }

Json to_json(const ExtEdge& e) { return Json{{"socle", to_json(e.socle)}, {"cosocle", to_json(e.cosocle)}}; }

Json to_json(const IndecSummand& s) {
    Json socles = Json::array(), cosocles = Json::array(), labels = Json::array(), partners = Json::array();
    for (const auto& w : s.socles) socles.push_back(to_json(w));
    for (const auto& w : s.cosocles) cosocles.push_back(to_json(w));
    for (const auto& l : s.socle_labels) labels.push_back(to_string(l));
    for (const auto& l : s.cosocle_partners) partners.push_back(to_string(l));
    return Json{{"kind", to_string(s.kind)},   {"socles", socles},           {"cosocles", cosocles},
                {"socle_labels", labels},      {"cosocle_partners", partners}, {"length", s.length}};
}

Json to_json(const SplicedModule& d) {
    Json summands = Json::array(), sigmas = Json::array(), primes = Json::array();
    for (const auto& s : d.summands) summands.push_back(to_json(s));
    for (const auto& w : d.sigmas) sigmas.push_back(to_json(w));
    for (const auto& w : d.sigma_primes) primes.push_back(to_json(w));
    return Json{{"p", d.ctx.p()},
                {"f", d.ctx.f()},
                {"l", d.ctx.l()},
                {"r", d.r},
                {"sigma", to_json(d.sigma)},
                {"sigmaS", to_json(d.sigma_s)},
                {"sigmas", sigmas},
                {"sigmaPrimes", primes},
                {"summands", summands},
                {"length", d.length()}};
}

Json to_json(const D1Basis& b) {
    auto side = [](const std::vector<LabeledChar>& cs) {
        Json out = Json::array();
        for (const auto& c : cs) out.push_back(Json{{"label", to_string(c.label)}, {"chi", to_json(c.chr)}});
        return out;
    };
    return Json{{"S", side(b.s_chars)}, {"Q", side(b.q_chars)}, {"dimension", b.dimension()}};
}

Json to_json(const SparseVec& v, const GaloisField& field) {
    Json out = Json::array();
    for (const auto& [i, c] : v.entries()) out.push_back(Json{{"i", i}, {"c", field.coords(c)}});
    return out;
}

Json to_json(const ClosureState& s, const GaloisField& field) {
    Json spans = Json::object();
    for (std::size_t k = 0; k < s.labels.size(); ++k) {
        Json basis = Json::array();
        for (const auto& row : s.spans[k].basis()) basis.push_back(to_json(row, field));
        spans[to_string(s.labels[k])] = Json{{"rank", s.spans[k].rank()}, {"basis", basis}};
    }
    Json rules = Json::array();
    for (const auto& r : s.rules)
        rules.push_back(Json{{"from", to_string(r.from)},
                             {"to", to_string(r.to)},
                             {"shift", r.shift},
                             {"scale", r.lambda_diagonal ? "lambda" : "1"}});
    Json out{{"verdict", to_string(s.verdict)},
             {"rounds", s.rounds},
             {"stabilized", s.stabilized},
             {"innerWindow", s.inner_window},
             {"outerWindow", s.outer_window},
             {"rules", rules},
             {"spans", spans},
             {"derivations", s.log.size()}};
    if (s.certificate) {
        Json functionals = Json::object();
        for (const auto& [label, phi] : s.certificate->functionals) {
            Json entries = Json::array();
            for (const auto& [i, w] : phi) entries.push_back(Json{{"i", i}, {"c", field.coords(w)}});
            functionals[to_string(label)] = entries;
        }
        out["certificate"] = Json{{"loopEigenvalue", field.coords(s.certificate->loop_eigenvalue)},
                                  {"witnessLabel", to_string(s.certificate->witness_label)},
                                  {"witnessIndex", s.certificate->witness_index},
                                  {"functionals", functionals}};
    }
    return out;
}

Json to_json(const PointReport& r) {
    Json checks = Json::object();
    for (const auto& c : r.checks) {
        Json entry{{"pass", c.pass}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks[c.name] = entry;
    }
    return Json{{"p", r.point.p},
                {"f", r.point.f},
                {"r", r.point.r},
                {"pass", r.pass},
                {"checks", checks},
                {"detail", Json{{"sigma1", to_json(r.sigma1)}, {"e1", r.e1}}}};
}

Json to_json(const SweepReport& r, bool include_timing) {
    Json points = Json::array();
    std::size_t failed = 0;
    for (const auto& p : r.points) {
        points.push_back(to_json(p));
        if (!p.pass) ++failed;
    }
    Json out{{"grid",
              {{"p", r.grid.primes},
               {"f", r.grid.degrees},
               {"r", "[1, p-3]^f"},
               {"exhaustiveLimit", r.grid.exhaustive_limit},
               {"samples", r.grid.samples},
               {"seed", r.grid.seed}}},
             {"points", points},
             {"pointCount", r.points.size()},
             {"failedCount", failed},
             {"pass", r.pass}};
    if (include_timing) out["seconds"] = r.seconds;
    return out;
}

Weight weight_from_json(const Json& j, const Params& ctx) {
    if (!j.is_object() || !j.contains("r") || !j.contains("m") || !j["r"].is_array() || !j["m"].is_number_integer())
        throw Error(ErrorCode::ParseError, "weight must be {\"r\": [..], \"m\": int}");
    return make_weight(ctx, j["r"].get<std::vector<int>>(), j["m"].get<std::int64_t>());
}

BChar bchar_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("u") || !j.contains("v") || !j["u"].is_number_integer() ||
        !j["v"].is_number_integer())
        throw Error(ErrorCode::ParseError, "character must be {\"u\": int, \"v\": int}");
    return BChar{j["u"].get<std::int64_t>(), j["v"].get<std::int64_t>()};
}

std::string to_dot(const SplicedModule& d) {
    std::ostringstream os;
    os << "graph D0 {\n  node [shape=box];\n";
    int node = 0;
    for (std::size_t s = 0; s < d.summands.size(); ++s) {
        const auto& summand = d.summands[s];
        os << "  subgraph cluster_" << s << " {\n    label=\"" << to_string(summand.kind) << "\";\n";
        std::vector<int> bottom, top;
        for (std::size_t i = 0; i < summand.socles.size(); ++i) {
            bottom.push_back(node);
            os << "    n" << node++ << " [label=\"" << to_string(summand.socle_labels[i]) << "\\n"
               << to_string(summand.socles[i]) << "\"];\n";
        }
        for (std::size_t i = 0; i < summand.cosocles.size(); ++i) {
            top.push_back(node);
            os << "    n" << node++ << " [label=\"" << to_string(summand.cosocle_partners[i]) << "^[s]\\n"
               << to_string(summand.cosocles[i]) << "\"];\n";
        }
        os << "    { rank=min; ";
        for (int t : top) os << "n" << t << "; ";
        os << "}\n    { rank=max; ";
        for (int b : bottom) os << "n" << b << "; ";
        os << "}\n";
        for (int t : top)
            for (int b : bottom) os << "    n" << t << " -- n" << b << ";\n";
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace splice
