#include "splice/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace splice {

namespace {

int pi_shift(const Label& label) {
    if (label.kind == Label::Kind::Chain && label.k == 1) return -1;
    if (label.kind == Label::Kind::Prime && label.k == 1) return 1;
    return 0;
}

Elem random_nonzero(const GaloisField& field, std::mt19937_64& rng) {
    return static_cast<Elem>(1 + rng() % (field.size() - 1));
}

/// Uniform over nonzero elements other than `avoid` (itself nonzero).
Elem random_nonzero_except(const GaloisField& field, std::mt19937_64& rng, Elem avoid) {
    Elem x = static_cast<Elem>(1 + rng() % (field.size() - 2));
    return x >= avoid ? x + 1 : x;
}

std::size_t label_slot(const Label& label, int l) {
    switch (label.kind) {
        case Label::Kind::Sigma: return 0;
        case Label::Kind::Chain: return static_cast<std::size_t>(label.k);
        case Label::Kind::Prime: return static_cast<std::size_t>(l - 1 + label.k);
    }
    return 0;
}

bool inside(const SparseVec& v, int radius) {
    return v.empty() || (v.min_index() >= -radius && v.max_index() <= radius);
}

}  // namespace

LambdaSpec::LambdaSpec(std::map<int, Elem> values) : values_(std::move(values)) {
    for (const auto& [i, v] : values_)
        if (v == 0) throw Error(ErrorCode::InvalidParams, "lambda_" + std::to_string(i) + " is zero");
}

Elem LambdaSpec::at(int i) const {
    auto it = values_.find(i);
    if (it == values_.end()) throw Error(ErrorCode::MissingLambda, "lambda_" + std::to_string(i) + " not stored");
    return it->second;
}

bool LambdaSpec::covers(int radius) const noexcept {
    for (int i = -radius; i <= radius; ++i)
        if (!has(i)) return false;
    return true;
}

LambdaSpec LambdaSpec::constant(Elem value, int radius) {
    std::map<int, Elem> values;
    for (int i = -radius; i <= radius; ++i) values[i] = value;
    return LambdaSpec(std::move(values));
}

LambdaSpec LambdaSpec::geometric(const GaloisField& field, int radius) {
    std::map<int, Elem> values;
    for (int i = -radius; i <= radius; ++i) values[i] = field.exp(static_cast<std::int64_t>(field.log(field.generator())) * i);
    return LambdaSpec(std::move(values));
}

LambdaSpec LambdaSpec::random_product_generic(const GaloisField& field, int radius, std::mt19937_64& rng) {
    if (field.size() < 3) throw Error(ErrorCode::Infeasible, "field too small for a product-generic lambda");
    std::map<int, Elem> values;
    values[0] = random_nonzero(field, rng);
    values[-1] = random_nonzero(field, rng);
    const Elem target = field.mul(values[-1], values[0]);
    for (int i = 1; i <= radius; ++i)
        values[i] = random_nonzero_except(field, rng, field.div(target, values[i - 1]));
    for (int i = -1; i - 1 >= -radius; --i)
        values[i - 1] = random_nonzero_except(field, rng, field.div(target, values[i]));
    return LambdaSpec(std::move(values));
}

LambdaSpec LambdaSpec::random(const GaloisField& field, int radius, std::mt19937_64& rng) {
    std::map<int, Elem> values;
    for (int i = -radius; i <= radius; ++i) values[i] = random_nonzero(field, rng);
    return LambdaSpec(std::move(values));
}

LambdaSpec LambdaSpec::parse(const std::string& text, const GaloisField& field) {
    std::map<int, Elem> values;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string index_text, coords_text, extra;
        if (!(fields >> index_text)) continue;
        auto fail = [&](const std::string& why) {
            throw Error(ErrorCode::ParseError, "lambda line " + std::to_string(line_no) + ": " + why);
        };
        if (!(fields >> coords_text) || (fields >> extra)) fail("expected 'i c_0,c_1,...'");
        int index = 0;
        std::vector<int> coords;
        try {
            std::size_t used = 0;
            index = std::stoi(index_text, &used);
            if (used != index_text.size()) fail("bad index");
            std::istringstream cs(coords_text);
            std::string part;
            while (std::getline(cs, part, ',')) {
                coords.push_back(std::stoi(part, &used));
                if (used != part.size()) fail("bad coordinate");
            }
        } catch (const std::logic_error&) {
            fail("not an integer");
        }
        if (coords.empty() || static_cast<int>(coords.size()) > field.f()) fail("expected 1..f coordinates");
        const Elem value = field.from_coords(coords);
        if (value == 0) fail("lambda must be nonzero");
        if (!values.emplace(index, value).second) fail("duplicate index");
    }
    if (values.empty()) throw Error(ErrorCode::ParseError, "empty lambda file");
    return LambdaSpec(std::move(values));
}

PiMove pi_action(const Label& label, Side side, int i, const LambdaSpec& lambda, const GaloisField& field) {
    const bool is_sigma = label.kind == Label::Kind::Sigma;
    if (side == Side::S) {
        const Elem scalar = is_sigma ? lambda.at(i) : GaloisField::one();
        return {label, Side::Q, i + pi_shift(label), scalar};
    }
    const int j = i - pi_shift(label);
    const Elem scalar = is_sigma ? field.inv(lambda.at(j)) : GaloisField::one();
    return {label, Side::S, j, scalar};
}

std::vector<TransferRule> transfer_rules(const SplicedModule& d) {
    std::vector<TransferRule> rules;
    for (const Label& from : socle_labels(d.ctx.l())) {
        // Pi sends the socle vector of `from` to the Q-vector over its [s]-twist;
        // the summand carrying that cosocle weight is generated by it.
        const auto owner = std::find_if(d.summands.begin(), d.summands.end(), [&](const IndecSummand& s) {
            return std::find(s.cosocle_partners.begin(), s.cosocle_partners.end(), from) != s.cosocle_partners.end();
        });
        if (owner == d.summands.end())
            throw Error(ErrorCode::PairingViolation, "no cosocle partner for " + to_string(from));
        for (const Label& to : owner->socle_labels)
            rules.push_back({from, to, pi_shift(from), from.kind == Label::Kind::Sigma});
    }
    return rules;
}

SparseVec apply_rule(const TransferRule& rule, const SparseVec& v, const LambdaSpec& lambda, const GaloisField& field) {
    std::vector<SparseVec::Entry> out;
    out.reserve(v.support_size());
    for (const auto& [i, c] : v.entries())
        out.emplace_back(i + rule.shift, rule.lambda_diagonal ? field.mul(lambda.at(i), c) : c);
    return SparseVec(std::move(out));
}

SymbolicOp compose_rules(const std::vector<TransferRule>& word) {
    SymbolicOp op;
    for (const auto& rule : word) {
        if (rule.lambda_diagonal) op.lambda_offsets.push_back(op.shift);
        op.shift += rule.shift;
    }
    std::sort(op.lambda_offsets.begin(), op.lambda_offsets.end());
    return op;
}

std::vector<TransferRule> loop_word(const std::vector<TransferRule>& rules, bool primed) {
    const auto chain_kind = primed ? Label::Kind::Prime : Label::Kind::Chain;
    std::vector<TransferRule> word;
    Label at = Label::sigma();
    do {
        const auto next = std::find_if(rules.begin(), rules.end(), [&](const TransferRule& r) {
            return r.from == at && (r.to.kind == chain_kind || r.to.kind == Label::Kind::Sigma);
        });
        if (next == rules.end() || word.size() > rules.size()) throw Error(ErrorCode::CyclicityViolation, "loop is not closed");
        word.push_back(*next);
        at = next->to;
    } while (at.kind != Label::Kind::Sigma);
    return word;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Full: return "full";
        case Verdict::Proper: return "proper";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

const EchelonSpan& ClosureState::span(const Label& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return spans[i];
    throw Error(ErrorCode::NotASocleWeight, to_string(label));
}

bool spans_full(const ClosureState& state) {
    const int n = state.inner_window;
    for (const auto& span : state.spans) {
        if (span.rank() < static_cast<std::size_t>(2 * n + 1)) return false;
        for (int i = -n; i <= n; ++i)
            if (!span.contains(SparseVec::unit(i))) return false;
    }
    return true;
}

std::optional<Certificate> find_certificate(const std::vector<TransferRule>& rules, const std::vector<Label>& labels,
                                            const std::vector<EchelonSpan>& spans, const LambdaSpec& lambda,
                                            const GaloisField& field, const Label& start_label,
                                            const SparseVec& start_vec, int outer_window) {
    const int radius = outer_window;
    // Two loops with opposite shifts only admit a common eigenfunctional when
    // lambda_i lambda_{i+1} is constant.
    const Elem product = field.mul(lambda.at(-radius), lambda.at(-radius + 1));
    for (int i = -radius; i < radius; ++i)
        if (field.mul(lambda.at(i), lambda.at(i + 1)) != product) return std::nullopt;

    using Functional = std::map<int, Elem>;
    auto evaluate = [&](const Functional& phi, const SparseVec& v, bool& defined) {
        Elem acc = 0;
        for (const auto& [i, c] : v.entries()) {
            auto it = phi.find(i);
            if (it == phi.end()) {
                defined = false;
                return Elem{0};
            }
            acc = field.add(acc, field.mul(c, it->second));
        }
        return acc;
    };

    for (Elem kappa = 1; kappa < field.size(); ++kappa) {
        std::map<Label, Functional> phi;
        Functional& base = phi[Label::sigma()];
        base[0] = GaloisField::one();
        for (int i = 1; i <= radius; ++i) base[i] = field.div(field.mul(base[i - 1], lambda.at(i)), kappa);
        for (int i = 0; i - 1 >= -radius; --i) base[i - 1] = field.div(field.mul(base[i], kappa), lambda.at(i));

        bool ok = true;
        for (const auto& rule : rules) {
            if (rule.to.kind == Label::Kind::Sigma) continue;
            const Functional& src = phi.at(rule.from);
            Functional& dst = phi[rule.to];
            for (const auto& [i, w] : src) {
                const int j = i + rule.shift;
                if (j < -radius || j > radius) continue;
                dst[j] = rule.lambda_diagonal ? field.div(w, lambda.at(i)) : w;
            }
        }
        for (const auto& rule : rules) {
            if (rule.to.kind != Label::Kind::Sigma) continue;
            const Functional& src = phi.at(rule.from);
            std::optional<Elem> ratio;
            for (const auto& [i, w] : src) {
                const int j = i + rule.shift;
                auto it = base.find(j);
                if (it == base.end()) continue;
                const Elem lhs = rule.lambda_diagonal ? field.mul(it->second, lambda.at(i)) : it->second;
                const Elem r = field.div(lhs, w);
                if (!ratio) ratio = r;
                else if (*ratio != r) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (!ok) continue;

        bool defined = true;
        if (evaluate(phi.at(start_label), start_vec, defined) != 0 || !defined) continue;
        for (std::size_t s = 0; s < labels.size() && ok; ++s) {
            const Functional& f = phi.at(labels[s]);
            for (const auto& row : spans[s].basis()) {
                if (evaluate(f, row, defined) != 0 || !defined) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        return Certificate{kappa, std::move(phi), Label::sigma(), 0};
    }
    return std::nullopt;
}

ClosureState saturate(const SplicedModule& d, const LambdaSpec& lambda, const GaloisField& field,
                      const Label& start_label, const SparseVec& start_vec, const SaturateOptions& opts) {
    if (start_vec.empty()) throw Error(ErrorCode::ZeroStartVector, "start vector is zero");
    const int n = opts.inner_window;
    if (n < 1 || opts.max_rounds < 0) throw Error(ErrorCode::RangeError, "window must be >= 1 and rounds >= 0");
    if (!inside(start_vec, n)) throw Error(ErrorCode::RangeError, "start vector support outside [-N, N]");
    const int outer = n + opts.max_rounds;
    for (int i = -outer; i <= outer; ++i) lambda.at(i);

    const int l = d.ctx.l();
    ClosureState state;
    state.labels = socle_labels(l);
    state.spans.assign(state.labels.size(), EchelonSpan(&field));
    state.rules = transfer_rules(d);
    state.inner_window = n;
    state.outer_window = outer;
    if (std::find(state.labels.begin(), state.labels.end(), start_label) == state.labels.end())
        throw Error(ErrorCode::NotASocleWeight, to_string(start_label));

    std::vector<std::vector<int>> raw(state.labels.size());
    std::vector<std::size_t> cursor(state.rules.size(), 0);

    state.spans[label_slot(start_label, l)].insert(start_vec);
    state.log.push_back({start_label, -1, -1, start_vec});
    raw[label_slot(start_label, l)].push_back(0);

    bool full = spans_full(state);
    while (!full && state.rounds < opts.max_rounds) {
        ++state.rounds;
        bool changed = false;
        for (std::size_t r = 0; r < state.rules.size(); ++r) {
            const TransferRule& rule = state.rules[r];
            const auto& from = raw[label_slot(rule.from, l)];
            const std::size_t to = label_slot(rule.to, l);
            while (cursor[r] < from.size()) {
                const int parent = from[cursor[r]++];
                SparseVec image = apply_rule(rule, state.log[static_cast<std::size_t>(parent)].vec, lambda, field);
                if (!inside(image, outer)) continue;
                if (state.spans[to].insert(image)) {
                    raw[to].push_back(static_cast<int>(state.log.size()));
                    state.log.push_back({rule.to, parent, static_cast<int>(r), std::move(image)});
                    changed = true;
                }
            }
        }
        full = spans_full(state);
        if (!changed) {
            state.stabilized = true;
            break;
        }
    }

    if (full) {
        state.verdict = Verdict::Full;
    } else {
        state.certificate = find_certificate(state.rules, state.labels, state.spans, lambda, field, start_label,
                                             start_vec, outer);
        state.verdict = state.certificate ? Verdict::Proper : Verdict::Inconclusive;
    }
    return state;
}

bool lambda_condition_check(const LambdaSpec& lambda, LambdaMode mode, const GaloisField& field) {
    if (mode == LambdaMode::Paper) {
        const Elem base = lambda.at(0);
        const Elem minus = field.neg(base);
        for (const auto& [i, v] : lambda.values())
            if (i != 0 && (v == base || v == minus)) return false;
        return true;
    }
    const Elem base = field.mul(lambda.at(-1), lambda.at(0));
    for (const auto& [i, v] : lambda.values()) {
        if (i == 0 || !lambda.has(i - 1)) continue;
        if (field.mul(lambda.at(i - 1), v) == base) return false;
    }
    return true;
}

bool verify_pi_pairing(const D1Basis& basis) {
    if (basis.s_chars.size() != basis.q_chars.size()) return false;
    std::set<BChar> s_seen, q_seen;
    std::set<Label> labels;
    for (std::size_t i = 0; i < basis.s_chars.size(); ++i) {
        const auto& s = basis.s_chars[i];
        const auto& q = basis.q_chars[i];
        if (s.label != q.label || q.chr != s_conj(s.chr)) return false;
        if (!s_seen.insert(s.chr).second || !q_seen.insert(q.chr).second) return false;
        if (!labels.insert(s.label).second) return false;
    }
    return true;
}

SparseVec parse_sparse_vec(const std::string& text, const GaloisField& field) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto fail = [&]() -> SparseVec { throw Error(ErrorCode::ParseError, "bad sparse vector '" + text + "'"); };
    if (s.empty()) return fail();

    std::map<int, Elem> acc;
    std::size_t pos = 0;
    auto read_int = [&](bool allow_sign) {
        std::size_t begin = pos;
        if (allow_sign && pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == begin || (s[begin] == '-' && pos == begin + 1)) fail();
        return std::stoll(s.substr(begin, pos - begin));
    };
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            fail();
        }
        std::int64_t coeff = 1;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = read_int(false);
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        if (pos >= s.size() || s[pos] != 'e') fail();
        ++pos;
        std::int64_t index = 0;
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            index = read_int(true);
            if (pos >= s.size() || s[pos] != ')') fail();
            ++pos;
        } else {
            index = read_int(false);
        }
        Elem& slot = acc[static_cast<int>(index)];
        slot = field.add(slot, field.from_int(sign * coeff));
    }
    std::vector<SparseVec::Entry> entries(acc.begin(), acc.end());
    return SparseVec(std::move(entries));
}

}  // namespace splice
