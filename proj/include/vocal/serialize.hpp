#pragma once

#include "vocal/algebra.hpp"
#include "vocal/linalg.hpp"
#include "vocal/poly.hpp"
#include "vocal/state.hpp"
#include "vocal/weyl.hpp"

#include <json.hpp>

namespace vocal {

using Json = nlohmann::json;

/// Scalars serialize as {"rat": "p/q", "irr": "p/q"} with "irr" omitted when 0.
Json toJson(const Scalar& s);
Scalar scalarFromJson(const Json& j);

/// {"bg_pairs": n, "bc_pairs": p, "heisenberg_levels": ["1", "-1", ...]}
Json toJson(const FreeAlgebraSpec& alg);
FreeAlgebraSpec algebraFromJson(const Json& j);

/// {"terms": [{"monomial": [{"gen": "beta1", "deriv": 0, "mult": 2}, ...], "coeff": {...}}]}
Json toJson(const State& s);
State stateFromJson(const Json& j, const FreeAlgebraSpec& alg);

/// {"terms": [{"x": [k...], "d": [l...], "coeff": {...}}]}
Json toJson(const WeylElement& w);
WeylElement weylFromJson(const Json& j);

/// {"terms": [{"x": [...], "xp": [...], "coeff": {...}}]}
Json polyToJson(const MultiPoly& p);

/// {"rows": [["1", "-1"], ...]} with entries as scalar literals.
Json toJson(const ActionMatrix& a);
ActionMatrix actionFromJson(const Json& j);

Json toJson(const LatticeBasis& b);

FreeAlgebraSpec loadAlgebraFile(const std::string& path);
ActionMatrix loadActionFile(const std::string& path);

}  // namespace vocal
