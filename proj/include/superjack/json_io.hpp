#pragma once

#include "json.hpp"

#include "superjack/gauge.hpp"
#include "superjack/jack.hpp"
#include "superjack/ratk.hpp"
#include "superjack/sparse_poly.hpp"
#include "superjack/superjack.hpp"
#include "superjack/symfunc.hpp"

namespace superjack::json_io {

using nlohmann::json;

/// {"num": ["c0", "c1", ...], "den": [...]}, ascending degree, decimal strings. Zero is {"num":["0"],"den":["1"]}.
json to_json(const RatK& c);
RatK ratk_from_json(const json& j);

/// {"n":N, "m":M, "terms":[{"exp":[...], "coeff":RatK}...]} in graded-lex descending order.
json to_json(const SparsePoly& p);
SparsePoly poly_from_json(const json& j);

/// {"lambda":"2", "chi":{"2":RatK, "1,1":RatK}}
json to_json(const ChiTable& t);
ChiTable chi_from_json(const json& j);

/// {"lambda":"2", "basis":"monomial"|"powersum", "coeffs":{...}}
json to_json(const SymFuncVec& v, const Partition& lambda);

/// {"lambda":..., "n":..., "m":..., "poly":..., "eigenvalue":...}
json to_json(const SuperJack& s, const RatK& eigenvalue);

json to_json(const GaugeReport& r);
json to_json(const FirstOrderReport& r);

/// A float rounded to 15 significant digits.
json residual(double x);

/// Compact canonical text: sorted keys, no insignificant whitespace.
std::string canonical(const json& j);

}  // namespace superjack::json_io
