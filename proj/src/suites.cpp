#include "superjack/suites.hpp"

#include <atomic>
#include <exception>
#include <thread>

#include "superjack/json_io.hpp"
#include "superjack/oracles.hpp"
#include "superjack/superjack.hpp"
#include "superjack/symfunc.hpp"

namespace superjack::suites {

using nlohmann::json;

ChiProvider direct_chi() {
  return [](const Partition& lambda) { return chi_table(lambda); };
}

std::vector<json> parallel_map(std::size_t count, int jobs, const std::function<json(std::size_t)>& fn) {
  std::vector<json> out(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  for (int t = 0; t < std::min<int>(jobs, static_cast<int>(count)); ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

namespace {

using Block = std::pair<int, int>;

std::vector<Block> block_grid(const Options& o, std::vector<Block> defaults) {
  if (o.n || o.m) return {{o.n.value_or(0), o.m.value_or(0)}};
  return defaults;
}

std::string k_label(const Options& o) { return o.k ? rational_to_string(*o.k) : "generic"; }

json grid_json(const std::vector<Block>& grid) {
  json g = json::array();
  for (auto [n, m] : grid) g.push_back(json::array({n, m}));
  return g;
}

bool all_pass(const json& cases) {
  if (cases.empty()) return false;
  for (const auto& c : cases) {
    const auto& s = c.at("status");
    if (s != "pass" && s != "skipped") return false;
  }
  return true;
}

json summarize(const std::string& suite, json parameters, json cases, bool pass) {
  std::size_t failed = 0;
  for (const auto& c : cases)
    if (c.at("status") == "fail") ++failed;
  json summary{{"cases", cases.size()}, {"failed", failed}};
  return json{{"suite", suite},
              {"parameters", std::move(parameters)},
              {"cases", std::move(cases)},
              {"summary", std::move(summary)},
              {"verdict", pass ? "pass" : "fail"}};
}

json error_case(json c, const std::exception& e) {
  c["status"] = "fail";
  c["error"] = e.what();
  return c;
}

struct Case {
  Partition lambda;
  int n;
  int m;
};

}  // namespace

Result theorem1(const Options& o) {
  const int w = o.max_weight.value_or(6);
  const auto grid = block_grid(o, {{2, 1}, {1, 2}, {2, 2}, {3, 2}});
  if (o.k) require_nonzero_k(*o.k);
  std::vector<Case> cases;
  for (auto [n, m] : grid)
    for (const auto& lambda : partitions_up_to(w))
      if (in_hook(lambda, n, m)) cases.push_back({lambda, n, m});

  auto results = parallel_map(cases.size(), o.jobs, [&](std::size_t i) {
    const auto& [lambda, n, m] = cases[i];
    json c{{"lambda", lambda.to_string()}, {"n", n}, {"m", m}};
    try {
      SparsePoly p = super_jack(o.chi(lambda), n, m).poly;
      RatK k = RatK::k();
      RatK formula = eigenvalue(lambda, n, m);
      if (o.k) {
        p = p.specialize(*o.k);
        k = RatK(*o.k);
        formula = RatK(formula.specialize(*o.k));
      }
      if (p.is_zero()) {
        c["status"] = "fail";
        c["error"] = "P_lambda vanishes inside the hook";
        return c;
      }
      RatK e = extract_eigenvalue(p, k, o.mixed);
      bool match = e == formula;
      c["eigenvalue"] = json_io::to_json(e);
      c["formula_match"] = match;
      c["terms"] = p.size();
      c["status"] = match ? "pass" : "fail";
    } catch (const TheoremViolation& e) {
      c = error_case(c, e);
      c["residual_terms"] = e.residual().size();
    } catch (const Error& e) {
      c = error_case(c, e);
    }
    return c;
  });
  json cases_json(results);
  bool pass = all_pass(cases_json);
  json params{{"grid", grid_json(grid)},
              {"max_weight", w},
              {"k", k_label(o)},
              {"mixed_term", o.mixed == MixedTerm::literal ? "literal" : "quasi_invariant"}};
  return {summarize("theorem1", std::move(params), std::move(cases_json), pass), pass};
}

Result schur(const Options& o) {
  const int w = o.max_weight.value_or(5);
  const auto grid = block_grid(o, {{2, 2}});
  if (o.k && *o.k != 1) throw InvalidArgument("the schur suite runs at k = 1");
  std::vector<Case> cases;
  for (auto [n, m] : grid)
    for (const auto& lambda : partitions_up_to(w))
      if (in_hook(lambda, n, m)) cases.push_back({lambda, n, m});

  auto results = parallel_map(cases.size(), o.jobs, [&](std::size_t i) {
    const auto& [lambda, n, m] = cases[i];
    json c{{"lambda", lambda.to_string()}, {"n", n}, {"m", m}};
    try {
      SparsePoly at_one = super_jack(o.chi(lambda), n, m).poly.specialize(1);
      SparsePoly tableau = oracles::hook_schur_twisted(lambda, n, m);
      bool match = at_one == tableau;
      c["tableaux"] = oracles::count_supertableaux(lambda, n, m);
      c["match"] = match;
      c["status"] = match && !tableau.is_zero() ? "pass" : "fail";
    } catch (const Error& e) {
      c = error_case(c, e);
    }
    return c;
  });
  json cases_json(results);
  bool pass = all_pass(cases_json);
  json params{{"grid", grid_json(grid)}, {"max_weight", w}, {"k", "1"}};
  return {summarize("schur", std::move(params), std::move(cases_json), pass), pass};
}

Result hooks(const Options& o) {
  const int w = o.max_weight.value_or(6);
  const auto grid = block_grid(o, {{1, 1}, {2, 1}, {1, 2}, {2, 2}});
  std::vector<Case> cases;
  for (auto [n, m] : grid)
    for (const auto& lambda : partitions_up_to(w)) cases.push_back({lambda, n, m});

  auto results = parallel_map(cases.size(), o.jobs, [&](std::size_t i) {
    const auto& [lambda, n, m] = cases[i];
    const bool inside = in_hook(lambda, n, m);
    json c{{"lambda", lambda.to_string()}, {"n", n}, {"m", m}, {"in_hook", inside}};
    try {
      SparsePoly p = super_jack(o.chi(lambda), n, m).poly;
      bool schur_zero = oracles::hook_schur_twisted(lambda, n, m).is_zero();
      bool ok = p.is_zero() == !inside && schur_zero == !inside;
      c["vanishes"] = p.is_zero();
      c["schur_vanishes"] = schur_zero;
      if (!p.is_zero()) {
        bool quasi = is_quasi_invariant(p);
        bool sym = is_doubly_symmetric(p);
        c["quasi_invariant"] = quasi;
        c["doubly_symmetric"] = sym;
        ok = ok && quasi && sym;
      }
      c["status"] = ok ? "pass" : "fail";
    } catch (const Error& e) {
      c = error_case(c, e);
    }
    return c;
  });
  json cases_json(results);
  bool pass = all_pass(cases_json);
  json params{{"grid", grid_json(grid)}, {"max_weight", w}, {"k", "generic"}};
  return {summarize("hooks", std::move(params), std::move(cases_json), pass), pass};
}

Result classical(const Options& o) {
  const int w = o.max_weight.value_or(6);
  if (o.m && *o.m != 0) throw InvalidArgument("the classical suite runs with m = 0");
  std::vector<int> ns = o.n ? std::vector<int>{*o.n} : std::vector<int>{2, 3};
  std::vector<Case> cases;
  for (int n : ns)
    for (const auto& lambda : partitions_up_to(w)) cases.push_back({lambda, n, 0});

  auto results = parallel_map(cases.size(), o.jobs, [&](std::size_t i) {
    const auto& [lambda, n, m] = cases[i];
    json c{{"lambda", lambda.to_string()}, {"n", n}, {"m", 0}};
    try {
      SparsePoly p = super_jack(o.chi(lambda), n, 0).poly;
      bool reduction = p == realize(jack_in_monomial(lambda), n);
      c["reduces_to_jack"] = reduction;
      bool ok = reduction;
      if (!p.is_zero()) {
        RatK e = extract_eigenvalue(p);
        RatK expected = oracles::classical_eigenvalue(lambda, n);
        bool spectrum = e == expected && eigenvalue(lambda, n, 0) == expected;
        c["eigenvalue"] = json_io::to_json(e);
        c["classical_spectrum"] = spectrum;
        ok = ok && spectrum;
      } else {
        c["vanishes"] = true;
      }
      c["status"] = ok ? "pass" : "fail";
    } catch (const Error& e) {
      c = error_case(c, e);
    }
    return c;
  });

  const auto lambdas = partitions_up_to(w);
  auto oracle_results = parallel_map(lambdas.size(), o.jobs, [&](std::size_t i) {
    const auto& lambda = lambdas[i];
    json c{{"lambda", lambda.to_string()}};
    try {
      bool agree = oracles::jack_eigenvector_oracle(lambda) == jack_in_monomial(lambda);
      bool integral = true;
      for (const auto& [mu, chi] : o.chi(lambda).chi) {
        Rational v = chi.specialize(1) * Rational(z_factor(mu));
        integral = integral && v.get_den() == 1;
      }
      c["oracle_agrees"] = agree;
      c["k1_characters_integral"] = integral;
      c["status"] = agree && integral ? "pass" : "fail";
    } catch (const Error& e) {
      c = error_case(c, e);
    }
    return c;
  });

  json cases_json(results), oracle_json(oracle_results);
  bool pass = all_pass(cases_json) && all_pass(oracle_json);
  json params{{"n", ns}, {"m", 0}, {"max_weight", w}, {"k", "generic"}};
  json report = summarize("classical", std::move(params), std::move(cases_json), pass);
  report["oracle_cases"] = std::move(oracle_json);
  return {std::move(report), pass};
}

Result gauge(const Options& o) {
  std::vector<Partition> lambdas =
      o.lambda ? std::vector<Partition>{*o.lambda} : std::vector<Partition>{{}, {1}, {2}, {1, 1}, {2, 1}};
  const auto grid = block_grid(o, {{2, 0}, {1, 1}, {2, 1}, {2, 2}});
  std::vector<Rational> ks = o.k ? std::vector<Rational>{*o.k}
                                 : std::vector<Rational>{Rational(1, 2), Rational(1), Rational(3, 2), Rational(7, 3)};
  for (const auto& k0 : ks) require_nonzero_k(k0);

  struct GaugeCase {
    Partition lambda;
    Block block;
    Rational k0;
  };
  std::vector<GaugeCase> cases;
  for (const auto& lambda : lambdas)
    for (auto block : grid)
      for (const auto& k0 : ks) cases.push_back({lambda, block, k0});

  GaugeOptions go;
  go.num_points = o.points;
  go.seed = o.seed;
  go.tolerance = o.tol;
  go.convention = o.convention;

  auto results = parallel_map(cases.size(), o.jobs, [&](std::size_t i) {
    const auto& [lambda, block, k0] = cases[i];
    auto [n, m] = block;
    json c{{"lambda", lambda.to_string()}, {"n", n}, {"m", m}, {"k0", rational_to_string(k0)}};
    try {
      SuperJack pj = super_jack(o.chi(lambda), n, m);
      if (pj.poly.is_zero()) {
        c["status"] = "skipped";
        c["reason"] = "P_lambda vanishes outside the hook";
        return c;
      }
      json r = json_io::to_json(conjugation_check(pj, k0, go));
      r["status"] = r.at("verdict") == "pass" ? "pass" : "fail";
      return r;
    } catch (const Error& e) {
      return error_case(c, e);
    }
  });

  constexpr double kFirstOrderTol = 1e-7;
  constexpr int kFirstOrderPoints = 5;
  std::vector<std::pair<Block, Rational>> fo_cases;
  for (auto block : grid)
    for (const auto& k0 : ks) fo_cases.emplace_back(block, k0);
  auto fo_results = parallel_map(fo_cases.size(), o.jobs, [&](std::size_t i) {
    auto [block, k0] = fo_cases[i];
    auto [n, m] = block;
    json c{{"n", n}, {"m", m}, {"k0", rational_to_string(k0)}};
    try {
      json pts = json::array();
      double worst = 0;
      for (const auto& t : sample_points(n + m, kFirstOrderPoints, o.seed)) {
        auto r = first_order_freeness(t, n, m, k0);
        worst = std::max(worst, r.spread);
        pts.push_back(json_io::to_json(r));
      }
      c["points"] = std::move(pts);
      c["max_spread"] = json_io::residual(worst);
      c["status"] = worst <= kFirstOrderTol ? "pass" : "fail";
    } catch (const Error& e) {
      c = error_case(c, e);
    }
    return c;
  });

  json cases_json(results), fo_json(fo_results);
  bool pass = all_pass(cases_json) && all_pass(fo_json);
  json klist = json::array();
  for (const auto& k0 : ks) klist.push_back(rational_to_string(k0));
  json params{{"grid", grid_json(grid)},
              {"k", klist},
              {"points", o.points},
              {"seed", std::to_string(o.seed)},
              {"tolerance", json_io::residual(o.tol)},
              {"first_order_tolerance", json_io::residual(kFirstOrderTol)},
              {"potential", o.convention == PotentialConvention::literal ? "literal" : "gauge_consistent"}};
  json report = summarize("gauge", std::move(params), std::move(cases_json), pass);
  report["first_order_cases"] = std::move(fo_json);
  return {std::move(report), pass};
}

Result run(const std::string& suite, const Options& options) {
  if (suite == "theorem1") return theorem1(options);
  if (suite == "schur") return schur(options);
  if (suite == "gauge") return gauge(options);
  if (suite == "classical") return classical(options);
  if (suite == "hooks") return hooks(options);
  throw InvalidArgument("unknown suite '" + suite + "'");
}

}  // namespace superjack::suites
