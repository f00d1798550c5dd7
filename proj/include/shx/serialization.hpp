#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "shx/hyperbolic.hpp"
#include "shx/realization.hpp"
#include "shx/regular.hpp"

namespace shx {

using Json = nlohmann::json;

// Wire formats:
//   Hypercomplex        {"t": real, "x": [x1, x2, x3, x4]}
//   Realization         [[re, im], ...] row-major, 4 entries
//   HyperbolicNumber    {"t": real, "x": real, "u": real}
//   Polar               {"r", "theta", "sign", "residual", "arg"}
//   Polynomial spec     {"t": real, "terms": [{"exp": [e1..e4], "coef": [c1..c4]}]}
//                       meaning sum x^exp * (c1 + c2 i + c3 j + c4 k), the
//                       coefficient multiplying from the right
//   Region              {"kind": "box"|"ball", "center": [..4], "radius": real}
//   Verdict             {"pass": bool, "worst_point": [..4], "residual": real}
//   RegularSeries       {"t", "constant": [c1..c4],
//                        "coefficients": [{"n": [n1,n2,n3], "coef": [c1..c4]}]}
//                       in graded lexicographic order

Json to_json(const Hypercomplex& h);
Hypercomplex hypercomplex_from_json(const Json& j);

Json to_json(const Realization& m);
Realization realization_from_json(const Json& j);

Json to_json(const HyperbolicNumber& d);
HyperbolicNumber hyperbolic_from_json(const Json& j);

Json to_json(const PolarDecomposition& p);

Json to_json(const RegionSpec& r);
RegionSpec region_from_json(const Json& j);

Json to_json(const Verdict& v);

Json to_json(const RegularSeries& s);
RegularSeries series_from_json(const Json& j);

/// Polynomial spec -> evaluable function. Rejects anything non-polynomial
/// (negative or non-integer exponents) with ParseError.
HFunction polynomial_from_json(const Json& j);
Json polynomial_spec_json(Scale scale,
                          const std::vector<std::pair<Exponent, Hypercomplex>>& terms);

}  // namespace shx
