#include "superjack/json_io.hpp"

#include <cstdio>
#include <cstdlib>

#include "superjack/errors.hpp"

namespace superjack::json_io {

namespace {

json int_poly(const IntPoly& p) {
  json arr = json::array();
  if (p.is_zero()) arr.push_back("0");
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

IntPoly int_poly_from(const json& arr) {
  if (!arr.is_array()) throw InvalidArgument("coefficient list must be an array");
  std::vector<Integer> coeffs;
  for (const auto& c : arr) {
    Integer v;
    std::string text = c.is_string() ? c.get<std::string>() : c.dump();
    if (v.set_str(text, 10) != 0) throw InvalidArgument("malformed integer '" + text + "'");
    coeffs.push_back(std::move(v));
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace

json to_json(const RatK& c) { return json{{"num", int_poly(c.num())}, {"den", int_poly(c.den())}}; }

RatK ratk_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw InvalidArgument("RatK needs num and den");
  return RatK(int_poly_from(j.at("num")), int_poly_from(j.at("den")));
}

json to_json(const SparsePoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json{{"exp", e}, {"coeff", to_json(c)}});
  return json{{"n", p.n()}, {"m", p.m()}, {"terms", std::move(terms)}};
}

SparsePoly poly_from_json(const json& j) {
  try {
    SparsePoly p(j.at("n").get<int>(), j.at("m").get<int>());
    for (const auto& t : j.at("terms")) {
      auto e = t.at("exp").get<Exponent>();
      if (e.size() != static_cast<std::size_t>(p.num_vars())) throw InvalidArgument("exponent vector has wrong length");
      for (int x : e)
        if (x < 0) throw InvalidArgument("negative exponent");
      p.add_term(e, ratk_from_json(t.at("coeff")));
    }
    return p;
  } catch (const json::exception& ex) {
    throw InvalidArgument(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

json to_json(const ChiTable& t) {
  json chi = json::object();
  for (const auto& [mu, c] : t.chi) chi[mu.to_string()] = to_json(c);
  return json{{"lambda", t.lambda.to_string()}, {"chi", std::move(chi)}};
}

ChiTable chi_from_json(const json& j) {
  try {
    ChiTable t{Partition::parse(j.at("lambda").get<std::string>()), {}};
    for (const auto& [key, value] : j.at("chi").items()) t.chi.emplace(Partition::parse(key), ratk_from_json(value));
    return t;
  } catch (const json::exception& ex) {
    throw InvalidArgument(std::string("malformed chi table JSON: ") + ex.what());
  }
}

json to_json(const SymFuncVec& v, const Partition& lambda) {
  json coeffs = json::object();
  for (const auto& [mu, c] : v.coeffs()) coeffs[mu.to_string()] = to_json(c);
  return json{{"lambda", lambda.to_string()},
              {"basis", v.basis() == Basis::monomial ? "monomial" : "powersum"},
              {"coeffs", std::move(coeffs)}};
}

json to_json(const SuperJack& s, const RatK& eigenvalue) {
  return json{{"lambda", s.lambda.to_string()},
              {"n", s.n},
              {"m", s.m},
              {"poly", to_json(s.poly)},
              {"eigenvalue", to_json(eigenvalue)}};
}

json residual(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return json(std::strtod(buf, nullptr));
}

json to_json(const GaugeReport& r) {
  json points = json::array();
  json residuals = json::array();
  for (const auto& p : r.points) {
    json t = json::array();
    for (double x : p.t) t.push_back(residual(x));
    points.push_back(std::move(t));
    residuals.push_back(residual(p.residual));
  }
  json delta = {
      {"r22_roots", r.m * (r.m - 1) / 2},
      {"r22_coefficient_applied",
       r.convention == PotentialConvention::literal ? "+(1/k)(1/k-1)" : "-(1/k)(1/k-1)"},
      {"r22_coefficient_literal", "+(1/k)(1/k-1)"},
      {"literal_max_residual", residual(r.literal_max_residual)},
  };
  return json{{"lambda", r.lambda.to_string()},
              {"n", r.n},
              {"m", r.m},
              {"k0", rational_to_string(r.k0)},
              {"seed", std::to_string(r.seed)},
              {"tolerance", residual(r.tolerance)},
              {"eigenvalue", to_json(r.eigenvalue)},
              {"points", std::move(points)},
              {"residuals", std::move(residuals)},
              {"max_residual", residual(r.max_residual)},
              {"resampled", r.resampled},
              {"convention_delta", std::move(delta)},
              {"verdict", r.pass ? "pass" : "fail"}};
}

json to_json(const FirstOrderReport& r) {
  json t = json::array(), q = json::array();
  for (double x : r.t) t.push_back(residual(x));
  for (double x : r.quotients) q.push_back(residual(x));
  return json{{"point", std::move(t)},
              {"quotients", std::move(q)},
              {"potential", residual(r.potential)},
              {"spread", residual(r.spread)}};
}

std::string canonical(const json& j) { return j.dump(); }

}  // namespace superjack::json_io
