// Command-line front end: super-Jack construction, operator application, verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "superjack/chi_cache.hpp"
#include "superjack/cmsop.hpp"
#include "superjack/jack.hpp"
#include "superjack/json_io.hpp"
#include "superjack/suites.hpp"
#include "superjack/superjack.hpp"

namespace {

using namespace superjack;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<Rational> parse_k(const std::string& text) {
  if (text.empty() || text == "generic") return std::nullopt;
  Rational k0 = parse_rational(text);
  require_nonzero_k(k0);
  return k0;
}

struct Context {
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  int jobs = 1;
  std::unique_ptr<ChiCache> cache;

  bool text() const { return format == "text"; }

  suites::ChiProvider chi() {
    if (no_cache) return suites::direct_chi();
    if (!cache) cache = std::make_unique<ChiCache>(cache_dir.empty() ? ChiCache::default_dir() : std::filesystem::path(cache_dir));
    return [this](const Partition& lambda) { return cache->get(lambda); };
  }

  void persist() {
    if (!cache || !cache->dirty()) return;
    try {
      cache->save();
    } catch (const std::exception& e) {
      std::cerr << "warning: could not write cache: " << e.what() << "\n";
    }
  }
};

void emit(const Context& ctx, const json& j, const std::string& text) {
  if (ctx.text())
    std::cout << text << "\n";
  else
    std::cout << json_io::canonical(j) << "\n";
}

std::string symfunc_text(const SymFuncVec& v) {
  std::string out;
  const char* tag = v.basis() == Basis::monomial ? "m" : "p";
  for (const auto& [mu, c] : v.coeffs()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + tag + "[" + mu.to_string() + "]";
  }
  return out.empty() ? "0" : out;
}

std::string suite_text(const json& report) {
  std::string out;
  auto line = [&](const json& c) {
    std::string status = c.at("status").get<std::string>();
    for (auto& ch : status) ch = static_cast<char>(std::toupper(ch));
    out += status;
    for (const char* key : {"lambda", "n", "m", "k0"}) {
      if (!c.contains(key)) continue;
      const auto& v = c.at(key);
      out += std::string(" ") + key + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    if (c.contains("eigenvalue") && c.at("eigenvalue").is_object())
      out += " eigenvalue=" + json_io::ratk_from_json(c.at("eigenvalue")).to_string();
    if (c.contains("max_residual")) out += " max_residual=" + c.at("max_residual").dump();
    if (c.contains("max_spread")) out += " max_spread=" + c.at("max_spread").dump();
    if (c.contains("error")) out += " error=\"" + c.at("error").get<std::string>() + "\"";
    out += "\n";
  };
  for (const char* section : {"cases", "oracle_cases", "first_order_cases"}) {
    if (!report.contains(section)) continue;
    for (const auto& c : report.at(section)) line(c);
  }
  out += "suite " + report.at("suite").get<std::string>() + ": " + report.at("verdict").get<std::string>();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Super-Jack polynomials and the deformed Calogero-Moser-Sutherland operator"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cache-dir", ctx.cache_dir, "Chi-table cache directory (default: $SUPERJACK_CACHE or ~/.cache/superjack)");
  app.add_flag("--no-cache", ctx.no_cache, "Recompute chi tables instead of using the cache");
  app.add_option("--jobs", ctx.jobs, "Worker threads for suites")->check(CLI::PositiveNumber);

  std::string lambda_text, k_text = "generic", basis = "p", method = "extract", input_path;
  int n = 0, m = 0;
  bool literal_eq10 = false;

  auto* jack_cmd = app.add_subcommand("jack", "Jack polynomial P_lambda in the power-sum or monomial basis");
  jack_cmd->add_option("--lambda", lambda_text, "Partition, e.g. 3,1")->required();
  jack_cmd->add_option("--basis", basis, "p (chi table) or m (monomial)")->check(CLI::IsMember({"m", "p"}));

  auto* sj_cmd = app.add_subcommand("superjack", "Super-Jack polynomial P_lambda(x,y;k)");
  sj_cmd->add_option("--lambda", lambda_text, "Partition")->required();
  sj_cmd->add_option("-n", n, "Size of the x-block")->required()->check(CLI::NonNegativeNumber);
  sj_cmd->add_option("-m", m, "Size of the y-block")->required()->check(CLI::NonNegativeNumber);
  sj_cmd->add_option("--k", k_text, "generic or a nonzero rational");

  auto* am_cmd = app.add_subcommand("apply-m", "Apply the deformed operator to a polynomial (SparsePoly JSON)");
  am_cmd->add_option("--input", input_path, "Polynomial JSON file ('-' for stdin)")->required();
  am_cmd->add_option("--k", k_text, "generic or a nonzero rational");
  am_cmd->add_flag("--literal-mixed-term,--literal-eq10", literal_eq10, "Use the mixed term (x_i d_x_i - y_j d_y_j); reports the division failure");

  auto* eig_cmd = app.add_subcommand("eigen", "Eigenvalue of P_lambda(x,y;k)");
  eig_cmd->add_option("--lambda", lambda_text, "Partition")->required();
  eig_cmd->add_option("-n", n, "Size of the x-block")->required()->check(CLI::NonNegativeNumber);
  eig_cmd->add_option("-m", m, "Size of the y-block")->required()->check(CLI::NonNegativeNumber);
  eig_cmd->add_option("--method", method, "formula or extract")->check(CLI::IsMember({"formula", "extract"}));
  eig_cmd->add_option("--k", k_text, "generic or a nonzero rational");
  eig_cmd->add_flag("--literal-mixed-term,--literal-eq10", literal_eq10, "Use the mixed term (x_i d_x_i - y_j d_y_j)");

  std::string suite;
  std::optional<int> v_weight, v_n, v_m, v_points;
  std::optional<std::uint64_t> v_seed;
  std::optional<double> v_tol;
  std::string v_lambda;
  bool literal_eq6 = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite; exit 0 on pass, 1 on failure");
  verify_cmd->add_option("suite", suite, "theorem1 | schur | gauge | classical | hooks")
      ->required()
      ->check(CLI::IsMember({"theorem1", "schur", "gauge", "classical", "hooks"}));
  verify_cmd->add_option("--max-weight", v_weight, "Largest |lambda|")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("-n", v_n, "Size of the x-block")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("-m", v_m, "Size of the y-block")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--k", k_text, "generic or a nonzero rational");
  verify_cmd->add_option("--seed", v_seed, "Sampling seed (gauge)");
  verify_cmd->add_option("--tol", v_tol, "Residual tolerance (gauge, default 1e-8)");
  verify_cmd->add_option("--lambda", v_lambda, "Single partition (gauge)");
  verify_cmd->add_option("--points", v_points, "Sample points per case (gauge)")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--literal-mixed-term,--literal-eq10", literal_eq10, "Use the mixed term (x_i d_x_i - y_j d_y_j) in the operator");
  verify_cmd->add_flag("--literal-potential,--literal-eq6", literal_eq6, "Use +(1/k)(1/k-1) as the R22 potential coefficient");

  std::string cache_action;
  int cache_weight = 6;
  auto* cache_cmd = app.add_subcommand("cache", "Inspect or rebuild the chi-table cache");
  cache_cmd->add_option("action", cache_action, "info | clear | rebuild")
      ->required()
      ->check(CLI::IsMember({"info", "clear", "rebuild"}));
  cache_cmd->add_option("--max-weight", cache_weight, "Largest weight for rebuild")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const MixedTerm mixed = literal_eq10 ? MixedTerm::literal : MixedTerm::quasi_invariant;
    int code = kExitOk;

    if (*jack_cmd) {
      Partition lambda = Partition::parse(lambda_text);
      ChiTable table = ctx.chi()(lambda);
      if (basis == "p") {
        emit(ctx, json_io::to_json(table), "P_" + lambda.to_string() + " = " + symfunc_text(to_symfunc(table)));
      } else {
        SymFuncVec mono = to_basis(to_symfunc(table), Basis::monomial);
        emit(ctx, json_io::to_json(mono, lambda), "P_" + lambda.to_string() + " = " + symfunc_text(mono));
      }
    } else if (*sj_cmd) {
      Partition lambda = Partition::parse(lambda_text);
      auto k0 = parse_k(k_text);
      SuperJack sj = super_jack(ctx.chi()(lambda), n, m);
      json eig = nullptr;
      std::string eig_text = "undefined (P vanishes)";
      if (!sj.poly.is_zero()) {
        RatK e = extract_eigenvalue(sj.poly);
        if (k0) e = RatK(e.specialize(*k0));
        eig = json_io::to_json(e);
        eig_text = e.to_string();
      }
      if (k0) sj.poly = sj.poly.specialize(*k0);
      json j = json_io::to_json(sj, RatK());
      j["eigenvalue"] = eig;
      emit(ctx, j, "P_" + lambda.to_string() + " = " + sj.poly.to_string() + "\neigenvalue = " + eig_text);
    } else if (*am_cmd) {
      json input;
      try {
        if (input_path == "-") {
          input = json::parse(std::cin);
        } else {
          std::ifstream in(input_path);
          if (!in) throw Usage("cannot open " + input_path);
          input = json::parse(in);
        }
      } catch (const json::exception& e) {
        throw Usage(std::string("malformed JSON input: ") + e.what());
      }
      SparsePoly f = json_io::poly_from_json(input);
      auto k0 = parse_k(k_text);
      RatK k = RatK::k();
      if (k0) {
        f = f.specialize(*k0);
        k = RatK(*k0);
      }
      SparsePoly out = apply_M(f, k, mixed);
      json j = json_io::to_json(out);
      j["remainder_checks"] = "ok";
      emit(ctx, j, out.to_string());
    } else if (*eig_cmd) {
      Partition lambda = Partition::parse(lambda_text);
      auto k0 = parse_k(k_text);
      RatK e;
      if (method == "formula") {
        e = eigenvalue(lambda, n, m);
      } else {
        SparsePoly p = super_jack(ctx.chi()(lambda), n, m).poly;
        if (p.is_zero()) throw Usage("P_" + lambda.to_string() + " vanishes for this (n,m); no eigenvalue to extract");
        e = extract_eigenvalue(p, RatK::k(), mixed);
      }
      if (k0) e = RatK(e.specialize(*k0));
      emit(ctx, json{{"eigenvalue", json_io::to_json(e)}}, e.to_string());
    } else if (*verify_cmd) {
      suites::Options o;
      o.max_weight = v_weight;
      o.n = v_n;
      o.m = v_m;
      o.k = parse_k(k_text);
      if (!v_lambda.empty()) o.lambda = Partition::parse(v_lambda);
      if (v_seed) o.seed = *v_seed;
      if (v_tol) o.tol = *v_tol;
      if (v_points) o.points = *v_points;
      o.jobs = ctx.jobs;
      o.mixed = mixed;
      o.convention = literal_eq6 ? PotentialConvention::literal : PotentialConvention::gauge_consistent;
      o.chi = ctx.chi();
      auto result = suites::run(suite, o);
      emit(ctx, result.report, suite_text(result.report));
      code = result.pass ? kExitOk : kExitFailure;
    } else if (*cache_cmd) {
      if (ctx.no_cache) throw Usage("--no-cache cannot be combined with the cache command");
      ctx.chi();
      ChiCache& cache = *ctx.cache;
      if (cache_action == "clear") {
        cache.clear();
      } else if (cache_action == "rebuild") {
        cache.clear();
        for (const auto& lambda : partitions_up_to(cache_weight)) cache.get(lambda);
        cache.save();
      }
      json info{{"path", cache.file().string()},
                {"records", cache.size()},
                {"discarded_on_load", cache.discarded_on_load()},
                {"format_version", ChiCache::kFormatVersion}};
      emit(ctx, info,
           "cache " + cache.file().string() + ": " + std::to_string(cache.size()) + " records, " +
               std::to_string(cache.discarded_on_load()) + " discarded on load");
    }
    ctx.persist();
    return code;
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ZeroKError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PoleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotInAlgebra& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
