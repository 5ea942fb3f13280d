// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "superjack/chi_cache.hpp"
#include "superjack/cmsop.hpp"
#include "superjack/json_io.hpp"
#include "superjack/suites.hpp"
#include "superjack/superjack.hpp"

using namespace superjack;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::size_t count_status(const json& cases, const char* status) {
  std::size_t n = 0;
  for (const auto& c : cases)
    if (c.at("status") == status) ++n;
  return n;
}

std::string case_summary(const json& cases) {
  return std::to_string(cases.size()) + " cases, " + std::to_string(count_status(cases, "fail")) + " failed";
}

bool cases_pass(const json& cases) { return !cases.empty() && count_status(cases, "fail") == 0; }

Outcome theorem1() {
  auto start = std::chrono::steady_clock::now();
  suites::Options o;
  o.jobs = 1;
  auto r = suites::theorem1(o);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto& cases = r.report.at("cases");
  bool exact = true;
  for (const auto& c : cases) exact = exact && c.at("status") == "pass" && c.contains("eigenvalue");
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.1f s single-threaded", secs);
  return {r.pass && exact && secs < 600, case_summary(cases) + buf};
}

Outcome closed_form() {
  suites::Options o;
  auto r = suites::theorem1(o);
  bool all = r.pass;
  std::size_t matched = 0;
  for (const auto& c : r.report.at("cases")) {
    bool m = c.value("formula_match", false);
    if (m) ++matched;
    all = all && m;
  }
  const RatK k = RatK::k();
  struct Hand {
    Partition lambda;
    RatK value;
  };
  const Hand hand[] = {{{1}, RatK(0)}, {{2}, RatK(2)}, {{1, 1}, RatK(-2) * k}};
  int hand_ok = 0;
  for (const auto& h : hand) {
    bool ok = eigenvalue(h.lambda, 1, 1) == h.value && extract_eigenvalue(h.lambda, 1, 1) == h.value;
    if (ok) ++hand_ok;
    all = all && ok;
  }
  return {all, std::to_string(matched) + "/" + std::to_string(r.report.at("cases").size()) +
                   " formula matches, " + std::to_string(hand_ok) + "/3 hand values"};
}

Outcome classical_reduction() {
  auto r = suites::classical({});
  const auto& cases = r.report.at("cases");
  return {cases_pass(cases), case_summary(cases)};
}

Outcome schur_at_one() {
  auto r = suites::schur({});
  return {r.pass, case_summary(r.report.at("cases"))};
}

Outcome hook_vanishing() {
  auto r = suites::hooks({});
  const auto& cases = r.report.at("cases");
  std::size_t vanishing = 0;
  for (const auto& c : cases)
    if (!c.at("in_hook").get<bool>()) ++vanishing;
  return {r.pass, case_summary(cases) + ", " + std::to_string(vanishing) + " outside the hook"};
}

Outcome gauge_relation() {
  auto r = suites::gauge({});
  const auto& cases = r.report.at("cases");
  double worst = 0;
  for (const auto& c : cases)
    if (c.contains("max_residual")) worst = std::max(worst, c.at("max_residual").get<double>());
  double spread = 0;
  for (const auto& c : r.report.at("first_order_cases"))
    if (c.contains("max_spread")) spread = std::max(spread, c.at("max_spread").get<double>());
  char buf[128];
  std::snprintf(buf, sizeof buf, ", max residual %.2e, first-order spread %.2e", worst, spread);
  return {r.pass, case_summary(cases) + " + " + std::to_string(r.report.at("first_order_cases").size()) +
                      " first-order cases" + buf};
}

Outcome oracle_agreement() {
  auto r = suites::classical({});
  const auto& cases = r.report.at("oracle_cases");
  return {cases_pass(cases), case_summary(cases)};
}

Outcome determinism() {
  const std::vector<std::string> names{"theorem1", "schur", "gauge", "classical", "hooks"};
  auto dir = std::filesystem::temp_directory_path() / ("superjack-acceptance-" + std::to_string(std::random_device{}()));
  std::vector<std::string> mismatches;
  for (const auto& name : names) {
    suites::Options plain;
    plain.jobs = 1;
    std::string reference = json_io::canonical(suites::run(name, plain).report);
    if (json_io::canonical(suites::run(name, plain).report) != reference) mismatches.push_back(name + " rerun");
    suites::Options parallel = plain;
    parallel.jobs = 4;
    if (json_io::canonical(suites::run(name, parallel).report) != reference) mismatches.push_back(name + " jobs=4");
    // cold cache, then a fresh process-equivalent reload of the saved file
    for (int round = 0; round < 2; ++round) {
      ChiCache cache(dir);
      suites::Options cached = plain;
      cached.chi = [&cache](const Partition& l) { return cache.get(l); };
      if (json_io::canonical(suites::run(name, cached).report) != reference)
        mismatches.push_back(name + (round ? " warm cache" : " cold cache"));
      cache.save();
    }
  }
  std::error_code ec;
  std::filesystem::remove_all(dir, ec);
  std::string detail = "5 suites x (rerun, jobs=4, cold cache, warm cache)";
  for (const auto& m : mismatches) detail += "; differs: " + m;
  return {mismatches.empty(), detail};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"eigenfunctions: M(P) = e P exactly in Q(k)", theorem1},
      {"closed-form eigenvalue equals extraction", closed_form},
      {"classical reduction at m = 0", classical_reduction},
      {"k = 1 equals twisted hook Schur", schur_at_one},
      {"hook vanishing", hook_vanishing},
      {"gauge relation (numeric, tol 1e-8)", gauge_relation},
      {"classical Jack oracle agreement", oracle_agreement},
      {"determinism and cache persistence", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("error: ") + e.what()};
    }
    if (!out.pass) ++failed;
    std::printf("%s  criterion %zu: %s (%s)\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
