#include "splice/gamma.hpp"

#include <algorithm>
#include <set>

namespace splice {

std::string to_string(const Label& label) {
    switch (label.kind) {
        case Label::Kind::Sigma: return "sigma";
        case Label::Kind::Chain: return "sigma_" + std::to_string(label.k);
        case Label::Kind::Prime: return "sigmaPrime_" + std::to_string(label.k);
    }
    return "?";
}

Label parse_label(const std::string& text, int l) {
    if (text == "sigma") return Label::sigma();
    auto parse_index = [&](std::size_t prefix) {
        const std::string digits = text.substr(prefix);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw Error(ErrorCode::ParseError, "bad label '" + text + "'");
        const int k = std::stoi(digits);
        if (k < 1 || k > l - 1) throw Error(ErrorCode::ParseError, "label index out of range in '" + text + "'");
        return k;
    };
    if (text.rfind("sigmaPrime_", 0) == 0) return Label::prime(parse_index(11));
    if (text.rfind("sigma_", 0) == 0) return Label::chain(parse_index(6));
    throw Error(ErrorCode::ParseError, "bad label '" + text + "'");
}

std::vector<Label> socle_labels(int l) {
    std::vector<Label> out{Label::sigma()};
    for (int k = 1; k < l; ++k) out.push_back(Label::chain(k));
    for (int k = 1; k < l; ++k) out.push_back(Label::prime(k));
    return out;
}

std::string to_string(SummandKind kind) {
    switch (kind) {
        case SummandKind::Ext: return "Ext";
        case SummandKind::MSoc: return "MSoc";
        case SummandKind::MCosoc: return "MCosoc";
    }
    return "?";
}

int SplicedModule::length() const {
    int n = 0;
    for (const auto& s : summands) n += s.length;
    return n;
}

std::vector<Weight> SplicedModule::socle_weights() const {
    std::vector<Weight> out;
    for (const auto& s : summands) out.insert(out.end(), s.socles.begin(), s.socles.end());
    return out;
}

std::vector<Weight> SplicedModule::cosocle_weights() const {
    std::vector<Weight> out;
    for (const auto& s : summands) out.insert(out.end(), s.cosocles.begin(), s.cosocles.end());
    return out;
}

std::vector<Weight> SplicedModule::jh_factors() const {
    auto out = socle_weights();
    const auto top = cosocle_weights();
    out.insert(out.end(), top.begin(), top.end());
    return out;
}

const Weight& SplicedModule::weight_of(const Label& label) const {
    switch (label.kind) {
        case Label::Kind::Sigma: return sigma;
        case Label::Kind::Chain: return sigmas.at(static_cast<std::size_t>(label.k));
        case Label::Kind::Prime: return sigma_primes.at(static_cast<std::size_t>(label.k));
    }
    return sigma;
}

namespace {

// Images whose digits leave [0, p-1] are dropped when `strict` is false.
std::vector<Weight> gr1_images(const Weight& w, const MuTable& table, bool strict) {
    const Params& ctx = table.ctx();
    if (!is_generic(w, ctx)) throw Error(ErrorCode::NonGenericWeight, to_string(w));
    const std::vector<std::int64_t> point(w.r.begin(), w.r.end());
    std::vector<Weight> out;
    for (int i = 0; i < ctx.f(); ++i) {
        const MuTuple& t = table.shifted_mu(i);
        const auto image = evaluate(t, point);
        std::vector<int> digits;
        for (auto v : image) {
            if (v < 0 || v > ctx.p() - 1) break;
            digits.push_back(static_cast<int>(v));
        }
        if (digits.size() != image.size()) {
            if (strict) throw Error(ErrorCode::RangeError, "gr1 image of " + to_string(w) + " leaves [0, p-1]");
            continue;
        }
        out.push_back(Weight{std::move(digits), ctx.reduce(eval_e(t, point, ctx) + w.m)});
    }
    return out;
}

}  // namespace

std::vector<Weight> gr1_cosoc(const Weight& w, const MuTable& table) { return gr1_images(w, table, true); }

std::vector<Weight> gr1_cosoc(const Weight& w, const Params& ctx) { return gr1_cosoc(w, MuTable(ctx)); }

bool ext_exists(const Weight& socle, const Weight& base, const MuTable& table) {
    if (!is_generic(socle, table.ctx())) throw Error(ErrorCode::NonGenericWeight, to_string(socle));
    const auto layer = gr1_images(base, table, false);
    return std::find(layer.begin(), layer.end(), socle) != layer.end();
}

bool ext_exists(const Weight& socle, const Weight& base, const Params& ctx) {
    return ext_exists(socle, base, MuTable(ctx));
}

std::vector<ExtEdge> build_cyclic(const MuTable& table, const std::vector<int>& r, bool primed) {
    const Params& ctx = table.ctx();
    const auto seq = primed ? sigma_prime_sequence(table, r) : sigma_sequence(table, r);
    const auto name = primed ? std::string("C'") : std::string("C");
    if (seq.back() != seq.front())
        throw Error(ErrorCode::CyclicityViolation, name + " does not close: " + to_string(seq.back()));
    std::vector<ExtEdge> edges;
    for (int k = 1; k <= ctx.l(); ++k) {
        const Weight& socle = seq[static_cast<std::size_t>(k)];
        const Weight& base = seq[static_cast<std::size_t>(k - 1)];
        if (!ext_exists(socle, base, table))
            throw Error(ErrorCode::CyclicityViolation, name + " edge " + std::to_string(k) + " missing");
        edges.push_back(ExtEdge{socle, s_involution(base, ctx)});
    }
    return edges;
}

std::vector<ExtEdge> build_cyclic(const Params& ctx, const std::vector<int>& r, bool primed) {
    return build_cyclic(MuTable(ctx), r, primed);
}

SplicedModule build_spliced(const MuTable& table, const std::vector<int>& r) {
    const Params& ctx = table.ctx();
    const int l = ctx.l();
    // Both calls validate existence and closure of every edge.
    build_cyclic(table, r, false);
    build_cyclic(table, r, true);

    SplicedModule d{ctx, r, {}, {}, {}, sigma_sequence(table, r), sigma_prime_sequence(table, r)};
    d.sigma = d.sigmas.back();
    d.sigma_s = s_involution(d.sigma, ctx);

    auto ext = [&](const std::vector<Weight>& seq, int k, Label socle, Label partner) {
        return IndecSummand{SummandKind::Ext,
                            {seq[static_cast<std::size_t>(k)]},
                            {s_involution(seq[static_cast<std::size_t>(k - 1)], ctx)},
                            {socle},
                            {partner},
                            2};
    };
    for (int k = 2; k <= l - 1; ++k) d.summands.push_back(ext(d.sigmas, k, Label::chain(k), Label::chain(k - 1)));
    d.summands.push_back(IndecSummand{SummandKind::MSoc,
                                      {d.sigma},
                                      {s_involution(d.sigmas[static_cast<std::size_t>(l - 1)], ctx),
                                       s_involution(d.sigma_primes[static_cast<std::size_t>(l - 1)], ctx)},
                                      {Label::sigma()},
                                      {Label::chain(l - 1), Label::prime(l - 1)},
                                      3});
    d.summands.push_back(IndecSummand{SummandKind::MCosoc,
                                      {d.sigmas[1], d.sigma_primes[1]},
                                      {d.sigma_s},
                                      {Label::chain(1), Label::prime(1)},
                                      {Label::sigma()},
                                      3});
    for (int k = 2; k <= l - 1; ++k)
        d.summands.push_back(ext(d.sigma_primes, k, Label::prime(k), Label::prime(k - 1)));

    auto require_distinct = [](const std::vector<Weight>& ws, const char* what) {
        std::set<Weight> seen;
        for (const auto& w : ws)
            if (!seen.insert(w).second)
                throw Error(ErrorCode::MultiplicityViolation, std::string(what) + " repeats " + to_string(w));
    };
    require_distinct(d.socle_weights(), "socle");
    require_distinct(d.cosocle_weights(), "cosocle");
    return d;
}

SplicedModule build_spliced(const Params& ctx, const std::vector<int>& r) { return build_spliced(MuTable(ctx), r); }

D1Basis d1_basis(const SplicedModule& d) {
    D1Basis basis;
    for (const auto& label : socle_labels(d.ctx.l())) {
        const BChar c = chi(d.weight_of(label), d.ctx);
        basis.s_chars.push_back({label, c});
        basis.q_chars.push_back({label, s_conj(c)});
    }
    auto require_distinct = [](const std::vector<LabeledChar>& cs, const char* side) {
        std::set<BChar> seen;
        for (const auto& c : cs)
            if (!seen.insert(c.chr).second)
                throw Error(ErrorCode::PairingViolation, std::string(side) + " character repeats at " + to_string(c.label));
    };
    require_distinct(basis.s_chars, "S");
    require_distinct(basis.q_chars, "Q");
    return basis;
}

const IndecSummand& summand_of_socle(const SplicedModule& d, const Weight& w) {
    for (const auto& s : d.summands)
        if (std::find(s.socles.begin(), s.socles.end(), w) != s.socles.end()) return s;
    throw Error(ErrorCode::NotASocleWeight, to_string(w));
}

Weight repeated_weight_f2(const Params& ctx, const std::vector<int>& r) {
    if (ctx.f() != 2) throw Error(ErrorCode::InvalidParams, "repeated weight is stated for f = 2");
    return make_weight(ctx, {ctx.p() - 2 - r.at(0), r.at(1) + 1}, r.at(0) + ctx.p() * (ctx.p() - 1));
}

}  // namespace splice
