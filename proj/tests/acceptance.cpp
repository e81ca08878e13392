// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance suite. Each test case prints one PASS/FAIL line so
// the run reads as a checklist; doctest assertions carry the verdict.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "analytic.hpp"
#include "burgers.hpp"
#include "error.hpp"
#include "generator.hpp"
#include "kernels.hpp"
#include "mc.hpp"
#include "pathstats.hpp"
#include "powerlaw.hpp"
#include "verify.hpp"

using ifbm::GenPlan;
using ifbm::HurstParams;
namespace k = ifbm::kernels;
namespace pl = ifbm::powerlaw;

namespace {

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[criterion %d] %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

std::vector<pl::PowerLawFit> window_fits(const std::vector<double>& samples,
                                         std::size_t t_steps) {
  std::vector<pl::PowerLawFit> fits;
  for (const auto& w : pl::default_windows()) {
    const auto g = pl::guarded_window(w, t_steps);
    try {
      fits.push_back(pl::mle_theta(samples, g.first, g.second));
    } catch (const ifbm::Error&) {
      // Window starved of samples; skipped.
    }
  }
  return fits;
}

double median_theta(const std::vector<pl::PowerLawFit>& fits) {
  std::vector<double> thetas;
  for (const auto& f : fits)
    if (f.converged) thetas.push_back(f.theta);
  REQUIRE(!thetas.empty());
  std::sort(thetas.begin(), thetas.end());
  return thetas[thetas.size() / 2];
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("criterion 1: noise-to-path map reproduces the covariance kernel") {
  double worst = 0.0;
  for (double h : {0.2, 0.5, 0.8}) {
    const HurstParams p(h);
    worst = std::max(worst, ifbm::verify::map_exactness_error(GenPlan::unilateral(p, 32)));
    worst = std::max(worst, ifbm::verify::map_exactness_error(GenPlan::bilateral(p, 32, 16)));
  }
  const bool pass = worst <= 1e-8;
  report(1, pass, "max |MM^T - Gamma| = " + std::to_string(worst) + " (limit 1e-8)");
  CHECK(worst <= 1e-8);
}

TEST_CASE("criterion 2: closed-form spot values at H = 1/2") {
  const HurstParams p(0.5);
  const double mu0 = k::mu(p, 0);
  const double mu1 = k::mu(p, 1);
  const double m2 = k::m_vec(p, 8)[1];
  const GenPlan plan = GenPlan::unilateral(p, 2);
  const double sigma2 = plan.sigma() * plan.sigma();
  const bool pass = std::abs(mu0 - 2.0 / 3.0) <= 1e-12 && std::abs(mu1 - 1.0 / 6.0) <= 1e-12 &&
                    std::abs(m2) <= 1e-12 && std::abs(sigma2 - 7.0 / 24.0) <= 1e-12;
  char buf[160];
  std::snprintf(buf, sizeof buf, "mu0=%.15f mu1=%.15f m2=%.2e sigma2=%.15f", mu0, mu1, m2,
                sigma2);
  report(2, pass, buf);
  CHECK(std::abs(mu0 - 2.0 / 3.0) <= 1e-12);
  CHECK(std::abs(mu1 - 1.0 / 6.0) <= 1e-12);
  CHECK(std::abs(m2) <= 1e-12);
  CHECK(std::abs(sigma2 - 7.0 / 24.0) <= 1e-12);
}

TEST_CASE("criterion 3: unilateral argmax exponent at H = 1/2") {
  const std::size_t t = 2048, n = 20000;
  const GenPlan plan = GenPlan::unilateral(HurstParams(0.5), t);
  const auto stats = ifbm::mc::run_campaign(plan, n, 20260501, 2);
  std::vector<double> g(stats.size());
  for (std::size_t i = 0; i < stats.size(); ++i) g[i] = stats[i].argmax_pos;

  const auto fits = window_fits(g, t);
  int in_band = 0;
  std::string detail = "theta per window:";
  for (const auto& f : fits) {
    if (f.converged && f.theta >= 0.18 && f.theta <= 0.30) ++in_band;
    char buf[48];
    std::snprintf(buf, sizeof buf, " %.3f(n=%zu)", f.theta, f.n_window);
    detail += buf;
  }
  const bool pass = in_band >= 3;
  report(3, pass, detail + "  in [0.18,0.30]: " + std::to_string(in_band) + "/5 (need 3)");
  CHECK(in_band >= 3);
}

TEST_CASE("criterion 4: bilateral exponent matches 1 - H") {
  for (double h : {0.3, 0.5}) {
    const std::size_t t = 2048, n = 20000;
    const GenPlan plan = GenPlan::bilateral(HurstParams(h), t, 1024);
    const auto stats = ifbm::mc::run_campaign(plan, n, 20260502, 2);
    std::vector<double> absg(stats.size());
    for (std::size_t i = 0; i < stats.size(); ++i) absg[i] = std::abs(stats[i].argmax_pos);

    const auto fits = window_fits(absg, t);
    const double theta = median_theta(fits);
    const double dev = std::abs(theta - (1.0 - h));
    const bool pass = dev <= 0.06;
    char buf[120];
    std::snprintf(buf, sizeof buf, "H=%.1f median theta=%.3f target %.1f dev=%.3f (limit 0.06)",
                  h, theta, 1.0 - h, dev);
    report(4, pass, buf);
    CHECK(dev <= 0.06);
  }
}

TEST_CASE("criterion 5: paper-scale reproduction (opt-in)") {
  if (std::getenv("IFBM_PAPER_SCALE") == nullptr) {
    report(5, true, "SKIPPED (set IFBM_PAPER_SCALE=1 to run the hours-long campaign)");
    return;
  }
  const std::size_t t = 8192, n = 50000;
  {
    const GenPlan plan = GenPlan::unilateral(HurstParams(0.5), t);
    const auto stats = ifbm::mc::run_campaign(plan, n, 20260503, 2);
    std::vector<double> g(stats.size());
    for (std::size_t i = 0; i < stats.size(); ++i) g[i] = stats[i].argmax_pos;
    const auto w = pl::guarded_window({1e-3, 1e-2}, t);
    const auto fit = pl::mle_theta(g, w.first, w.second);
    const bool pass = std::abs(fit.theta - 0.23) <= 0.02;
    char buf[96];
    std::snprintf(buf, sizeof buf, "unilateral theta=%.4f target 0.23 +- 0.02", fit.theta);
    report(5, pass, buf);
    CHECK(std::abs(fit.theta - 0.23) <= 0.02);
  }
  {
    const GenPlan plan = GenPlan::bilateral(HurstParams(0.5), t, 4096);
    const auto stats = ifbm::mc::run_campaign(plan, n, 20260504, 2);
    std::vector<double> absg(stats.size());
    for (std::size_t i = 0; i < stats.size(); ++i) absg[i] = std::abs(stats[i].argmax_pos);
    const auto fits = window_fits(absg, t);
    const double theta = median_theta(fits);
    const bool pass = std::abs(theta - 0.5) <= 0.03;
    char buf[96];
    std::snprintf(buf, sizeof buf, "bilateral theta=%.4f target 0.5 +- 0.03", theta);
    report(5, pass, buf);
    CHECK(std::abs(theta - 0.5) <= 0.03);
  }
}

TEST_CASE("criterion 6: Lagrangian point dimension by box counting") {
  struct Row {
    double h, lo, hi;
  };
  for (const Row& row : {Row{0.5, 0.40, 0.60}, Row{0.7, 0.55, 0.85}}) {
    const auto deltas = ifbm::burgers::default_scales(4096);
    const auto res =
        ifbm::burgers::dim_experiment(HurstParams(row.h), 4096, 200, 20260506, 2, deltas);
    const bool pass = res.dim >= row.lo && res.dim <= row.hi;
    char buf[120];
    std::snprintf(buf, sizeof buf, "H=%.1f dim_hat=%.3f (spread %.3f), band [%.2f, %.2f]",
                  row.h, res.dim, res.spread, row.lo, row.hi);
    report(6, pass, buf);
    CHECK(res.dim >= row.lo);
    CHECK(res.dim <= row.hi);
  }
}

TEST_CASE("criterion 7: appendix numerics") {
  bool pass = true;
  std::string detail;
  for (auto [h0, h] : std::vector<std::pair<double, double>>{{0.6, 0.7}, {0.55, 0.9}}) {
    const ifbm::analytic::TimeChangePair pair(h0, h);
    const double gap = ifbm::analytic::slepian_gap(pair, 100);
    pass = pass && gap >= -1e-12;
    CHECK(gap >= -1e-12);

    double min_r1 = 1e300, min_r2 = 1e300;
    for (int i = 1; i < 1000; ++i) {
      const auto rt = ifbm::analytic::r_terms(pair, i / 1000.0);
      min_r1 = std::min(min_r1, rt.r1);
      min_r2 = std::min(min_r2, rt.r2);
    }
    pass = pass && min_r1 >= -1e-10 && min_r2 >= -1e-10;
    CHECK(min_r1 >= -1e-10);
    CHECK(min_r2 >= -1e-10);

    const double y_small = std::pow(1e-3, pair.theta);
    const double lead = y_small * y_small * (pair.q0 - 1.0) / 2.0;
    const double rel_small =
        std::abs(ifbm::analytic::r_terms(pair, 1e-3).r1 / lead - 1.0);
    const double ybar = 1.0 - std::pow(1.0 - 1e-3, pair.theta);
    const double rel_one =
        std::abs(ifbm::analytic::r_terms(pair, 1.0 - 1e-3).r1 / ybar - 1.0);
    pass = pass && rel_small <= 0.05 && rel_one <= 0.05;
    CHECK(rel_small <= 0.05);
    CHECK(rel_one <= 0.05);

    char buf[160];
    std::snprintf(buf, sizeof buf, " (%.2f,%.2f): gap=%.1e r1min=%.1e r2min=%.1e asym=%.3f/%.3f",
                  h0, h, gap, min_r1, min_r2, rel_small, rel_one);
    detail += buf;
  }
  report(7, pass, detail);
}

TEST_CASE("criterion 8: argmax density inequality harness") {
  const auto g = ifbm::analytic::fbm_argmax_samples(HurstParams(0.5), 1024, 50000, 20260508, 2);
  const double worst = ifbm::analytic::psi_inequality_worst_z(g, 40);
  const bool pass = worst >= -5.0;
  char buf[96];
  std::snprintf(buf, sizeof buf, "worst pairwise z = %.2f (limit -5)", worst);
  report(8, pass, buf);
  CHECK(worst >= -5.0);
}

TEST_CASE("cli config files round-trip exactly") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "ifbm_acceptance_cfg";
  fs::create_directories(dir);
  const std::string cli = IFBM_CLI_BIN;
  const fs::path c1 = dir / "a.json";
  const fs::path c2 = dir / "b.json";
  const int rc1 = std::system(
      (cli + " mc --hurst 0.35 --len 128 --samples 5 --seed 11 --out x --dump-config " +
       c1.string())
          .c_str());
  const int rc2 = std::system(
      (cli + " mc --config " + c1.string() + " --out x --dump-config " + c2.string()).c_str());
  REQUIRE(rc1 == 0);
  REQUIRE(rc2 == 0);
  const std::string a = read_file(c1);
  const std::string b = read_file(c2);
  CHECK(!a.empty());
  CHECK(a == b);
  fs::remove_all(dir);
}

TEST_CASE("criterion 9: campaign output is byte-identical across worker counts") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "ifbm_acceptance_c9";
  fs::create_directories(dir);
  const std::string cli = IFBM_CLI_BIN;
  const std::string base = " mc --hurst 0.5 --len 64 --samples 100 --seed 7 --out ";
  const fs::path out1 = dir / "w1";
  const fs::path out4 = dir / "w4";
  const int rc1 = std::system((cli + base + out1.string() + " --workers 1").c_str());
  const int rc4 = std::system((cli + base + out4.string() + " --workers 4").c_str());
  REQUIRE(rc1 == 0);
  REQUIRE(rc4 == 0);
  const std::string csv1 = read_file(out1.string() + ".csv");
  const std::string csv4 = read_file(out4.string() + ".csv");
  const std::string json1 = read_file(out1.string() + ".json");
  const std::string json4 = read_file(out4.string() + ".json");
  const bool pass = !csv1.empty() && csv1 == csv4 && !json1.empty() && json1 == json4;
  report(9, pass, "stats CSV " + std::to_string(csv1.size()) + " bytes, workers {1,4} identical");
  CHECK(!csv1.empty());
  CHECK(csv1 == csv4);
  CHECK(json1 == json4);
  fs::remove_all(dir);
}
