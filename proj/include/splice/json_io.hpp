#pragma once

#include <json.hpp>

#include "splice/diagram.hpp"
#include "splice/gamma.hpp"
#include "splice/gln.hpp"
#include "splice/params.hpp"
#include "splice/sweep.hpp"

namespace splice {

using Json = nlohmann::json;

Json to_json(const Weight& w);
Json to_json(const BChar& c);
Json to_json(const ExtEdge& e);
Json to_json(const IndecSummand& s);
Json to_json(const SplicedModule& d);
Json to_json(const D1Basis& b);
Json to_json(const SparseVec& v, const GaloisField& field);
Json to_json(const ClosureState& s, const GaloisField& field);
Json to_json(const PointReport& r);
/// Omits wall-clock time unless include_timing is set.
Json to_json(const SweepReport& r, bool include_timing);

/// {"r": [...], "m": int}; validates against ctx. Throws ParseError / InvalidWeight.
Weight weight_from_json(const Json& j, const Params& ctx);
BChar bchar_from_json(const Json& j);

/// Graphviz rendering: one cluster per summand, cosocle above socle.
std::string to_dot(const SplicedModule& d);

}  // namespace splice
