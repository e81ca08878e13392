// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0
//
// Batch experiment driver over the libifbm C API: path generation, Monte
// Carlo campaigns, exponent fits, Burgers dimension experiments, and the
// verification suites. Bulk output is CSV; summaries are JSON.
//
// Exit codes: 0 success, 1 validation error, 2 verification failure,
// 3 I/O error.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <ifbm/ifbm.h>

using ordered_json = nlohmann::ordered_json;

namespace {

struct Fail {
  int code;
  std::string msg;
};

int map_status(ifbm_status st) { return st == IFBM_ERR_IO ? 3 : 1; }

void check(ifbm_status st, const std::string& where) {
  if (st == IFBM_OK) return;
  throw Fail{map_status(st),
             where + ": " + ifbm_status_string(st) + " (" + ifbm_last_error() + ")"};
}

std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Experiment configuration, shared by mc and reusable via --config files.

struct ExperimentConfig {
  double hurst = 0.5;
  std::int64_t len = 2048;
  std::int64_t samples = 20000;
  std::string interval = "unilateral";
  std::int64_t pivot = 0;  // 0: default ceil(len/2) for bilateral runs
  std::uint64_t master_seed = 0;
  std::vector<std::pair<double, double>> windows;
  std::vector<std::string> stats = {"M", "G", "A", "Z"};
  int workers = 1;
};

std::vector<std::pair<double, double>> default_windows() {
  std::vector<std::pair<double, double>> w;
  for (int i = 1; i <= 5; ++i) w.emplace_back(1e-3 * i, 1e-2 * i);
  return w;
}

ordered_json config_to_json(const ExperimentConfig& c) {
  ordered_json j;
  j["hurst"] = c.hurst;
  j["len"] = c.len;
  j["samples"] = c.samples;
  j["interval"] = c.interval;
  j["pivot"] = c.pivot;
  j["master_seed"] = c.master_seed;
  ordered_json jw = ordered_json::array();
  for (const auto& w : c.windows) jw.push_back({w.first, w.second});
  j["windows"] = jw;
  j["stats"] = c.stats;
  j["workers"] = c.workers;
  return j;
}

ExperimentConfig config_from_json(const ordered_json& j) {
  ExperimentConfig c;
  c.hurst = j.at("hurst").get<double>();
  c.len = j.at("len").get<std::int64_t>();
  c.samples = j.at("samples").get<std::int64_t>();
  c.interval = j.at("interval").get<std::string>();
  c.pivot = j.at("pivot").get<std::int64_t>();
  c.master_seed = j.at("master_seed").get<std::uint64_t>();
  c.windows.clear();
  for (const auto& w : j.at("windows")) c.windows.emplace_back(w.at(0), w.at(1));
  c.stats = j.at("stats").get<std::vector<std::string>>();
  c.workers = j.at("workers").get<int>();
  return c;
}

std::vector<std::pair<double, double>> parse_windows(const std::string& text) {
  std::vector<std::pair<double, double>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Fail{1, "window must look like lo:hi, got " + item};
    const double lo = std::stod(item.substr(0, colon));
    const double hi = std::stod(item.substr(colon + 1));
    if (!(lo > 0.0 && lo < hi)) throw Fail{1, "window needs 0 < lo < hi, got " + item};
    out.emplace_back(lo, hi);
  }
  if (out.empty()) throw Fail{1, "no windows parsed from " + text};
  return out;
}

void validate_config(const ExperimentConfig& c, bool allow_big_grid) {
  if (c.len < 2) throw Fail{1, "--len must be at least 2"};
  if (c.samples < 1) throw Fail{1, "--samples must be at least 1"};
  if (c.workers < 1) throw Fail{1, "--workers must be at least 1"};
  if (c.interval != "unilateral" && c.interval != "bilateral")
    throw Fail{1, "--interval must be unilateral or bilateral"};
  if (c.interval == "unilateral" && c.pivot != 0)
    throw Fail{1, "--pivot only applies to bilateral runs"};
  for (const auto& s : c.stats) {
    if (s != "M" && s != "G" && s != "A" && s != "Z")
      throw Fail{1, "--stats entries must be among M,G,A,Z"};
    if (s == "Z" && c.interval == "bilateral")
      throw Fail{1, "statistic Z is only defined for unilateral runs"};
  }
  if (c.len > (std::int64_t{1} << 14) && !allow_big_grid)
    throw Fail{1, "len > 16384 needs --allow-big-grid (predictor storage grows as len^2)"};
}

struct PlanHandle {
  ifbm_plan* p = nullptr;
  PlanHandle() = default;
  PlanHandle(const PlanHandle&) = delete;
  PlanHandle& operator=(const PlanHandle&) = delete;
  ~PlanHandle() { ifbm_plan_free(p); }
};

void make_plan(const ExperimentConfig& c, PlanHandle& plan) {
  if (c.interval == "bilateral") {
    const std::int64_t pivot = c.pivot == 0 ? (c.len + 1) / 2 : c.pivot;
    check(ifbm_plan_bilateral(c.hurst, c.len, pivot, &plan.p), "plan");
  } else {
    check(ifbm_plan_unilateral(c.hurst, c.len, &plan.p), "plan");
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Fail{3, "cannot open " + path + " for writing"};
  return out;
}

void write_or_die(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw Fail{3, "write failed on " + path};
}

double quantile(const std::vector<double>& sorted, double p) {
  const std::size_t n = sorted.size();
  const std::size_t idx = static_cast<std::size_t>(std::ceil(p * static_cast<double>(n)));
  return sorted[std::min(idx == 0 ? 0 : idx - 1, n - 1)];
}

// ---------------------------------------------------------------------------
// gen

int cmd_gen(const ExperimentConfig& cfg, const std::string& out_path) {
  PlanHandle plan;
  make_plan(cfg, plan);
  std::vector<double> values(static_cast<std::size_t>(ifbm_plan_points(plan.p)));
  check(ifbm_generate(plan.p, cfg.master_seed, 0, values.data()), "generate");

  std::ostringstream body;
  const std::int64_t origin = ifbm_plan_origin(plan.p);
  body << "# ifbm path hurst=" << fmt(cfg.hurst) << " steps=" << cfg.len
       << " interval=" << cfg.interval << " pivot=" << -origin
       << " master_seed=" << cfg.master_seed << " sample_index=0\n";
  body << "index,value\n";
  for (std::size_t i = 0; i < values.size(); ++i)
    body << origin + static_cast<std::int64_t>(i) << "," << fmt(values[i]) << "\n";

  if (out_path == "-") {
    std::cout << body.str();
  } else {
    auto out = open_out(out_path);
    out << body.str();
    write_or_die(out, out_path);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// mc

int cmd_mc(const ExperimentConfig& cfg, const std::string& out_prefix) {
  PlanHandle plan;
  make_plan(cfg, plan);
  std::vector<ifbm_stats> stats(static_cast<std::size_t>(cfg.samples));
  check(ifbm_mc_run(plan.p, cfg.samples, cfg.master_seed, cfg.workers, stats.data()), "mc");

  const std::string csv_path = out_prefix + ".csv";
  {
    auto out = open_out(csv_path);
    out << "# ifbm stats hurst=" << fmt(cfg.hurst) << " steps=" << cfg.len
        << " interval=" << cfg.interval << " pivot=" << -ifbm_plan_origin(plan.p)
        << " master_seed=" << cfg.master_seed << " samples=" << cfg.samples << "\n";
    out << "sample_index,M,G,A_plus,Z,atom\n";
    for (std::size_t i = 0; i < stats.size(); ++i) {
      out << i << "," << fmt(stats[i].max_value) << "," << fmt(stats[i].argmax_pos) << ","
          << fmt(stats[i].occupation) << "," << fmt(stats[i].last_zero) << ","
          << stats[i].atom << "\n";
    }
    write_or_die(out, csv_path);
  }

  std::size_t atoms = 0;
  for (const auto& s : stats)
    if (s.atom) ++atoms;

  ordered_json summary;
  // Echo the experiment identity; the worker count is runtime context and
  // must not perturb output bytes.
  summary["config"] = config_to_json(cfg);
  summary["config"].erase("workers");
  summary["n"] = cfg.samples;
  summary["atom_mass"] = static_cast<double>(atoms) / static_cast<double>(cfg.samples);

  const std::vector<double> probs = {0.01, 0.05, 0.25, 0.5, 0.75, 0.95, 0.99};
  ordered_json per_stat;
  for (const auto& name : cfg.stats) {
    std::vector<double> col(stats.size());
    for (std::size_t i = 0; i < stats.size(); ++i) {
      col[i] = name == "M"   ? stats[i].max_value
               : name == "G" ? stats[i].argmax_pos
               : name == "A" ? stats[i].occupation
                             : stats[i].last_zero;
    }
    std::sort(col.begin(), col.end());
    double mean = 0.0;
    for (double v : col) mean += v;
    mean /= static_cast<double>(col.size());
    ordered_json q;
    for (double p : probs) q[fmt(p)] = quantile(col, p);
    per_stat[name] = {{"mean", mean}, {"quantiles", q}};
  }
  summary["stats"] = per_stat;

  ifbm_persistence pp;
  check(ifbm_persistence_probs(plan.p, stats.data(), cfg.samples,
                               static_cast<double>(cfg.len), &pp),
        "persistence");
  summary["persistence"] = {{"t_eval", cfg.len},
                            {"p_max", pp.p_max},
                            {"p_max_is_lower_bound", pp.p_max_is_lower_bound != 0},
                            {"p_argmax", pp.p_argmax},
                            {"p_occupation", pp.p_occupation}};

  const std::string json_path = out_prefix + ".json";
  auto out = open_out(json_path);
  out << summary.dump(2) << "\n";
  write_or_die(out, json_path);
  return 0;
}

// ---------------------------------------------------------------------------
// theta

struct StatsFile {
  std::map<std::string, std::string> meta;
  std::vector<ifbm_stats> rows;
};

StatsFile read_stats_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Fail{3, "cannot open " + path};
  StatsFile f;
  std::string line;
  if (!std::getline(in, line)) throw Fail{3, "empty stats file " + path};
  if (line.rfind("# ifbm stats", 0) == 0) {
    std::stringstream ss(line.substr(2));
    std::string tok;
    while (ss >> tok) {
      const auto eq = tok.find('=');
      if (eq != std::string::npos) f.meta[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    if (!std::getline(in, line)) throw Fail{3, "missing header row in " + path};
  }
  if (line != "sample_index,M,G,A_plus,Z,atom")
    throw Fail{1, "unexpected stats header in " + path + ": " + line};
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ifbm_stats s{};
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 6) throw Fail{1, "bad stats row: " + line};
    s.max_value = std::stod(fields[1]);
    s.argmax_pos = std::stod(fields[2]);
    s.occupation = std::stod(fields[3]);
    s.last_zero = std::stod(fields[4]);
    s.atom = std::stoi(fields[5]);
    f.rows.push_back(s);
  }
  if (f.rows.empty()) throw Fail{1, "no samples in " + path};
  return f;
}

int cmd_theta(const std::string& stats_path, const std::string& stat,
              const std::vector<std::pair<double, double>>& windows, const std::string& method,
              const std::string& out_path) {
  const StatsFile file = read_stats_csv(stats_path);
  const std::string interval =
      file.meta.count("interval") ? file.meta.at("interval") : "unknown";
  const double hurst = file.meta.count("hurst") ? std::stod(file.meta.at("hurst")) : -1.0;
  const std::int64_t steps =
      file.meta.count("steps") ? std::stoll(file.meta.at("steps")) : 0;

  if (stat == "Z" && interval == "bilateral")
    throw Fail{1, "statistic Z is only defined for unilateral runs"};

  std::vector<double> col;
  std::vector<double> col_no_atom;
  std::size_t atoms = 0;
  col.reserve(file.rows.size());
  for (const auto& s : file.rows) {
    double v = 0.0;
    if (stat == "M")
      v = s.max_value;
    else if (stat == "G")
      v = s.argmax_pos;
    else if (stat == "absG")
      v = std::abs(s.argmax_pos);
    else if (stat == "A")
      v = s.occupation;
    else if (stat == "Z")
      v = s.last_zero;
    else
      throw Fail{1, "unknown stat " + stat};
    col.push_back(v);
    if (s.atom)
      ++atoms;
    else
      col_no_atom.push_back(v);
  }
  const double atom_mass = static_cast<double>(atoms) / static_cast<double>(col.size());

  ordered_json fits = ordered_json::array();
  std::vector<double> thetas;
  double max_err = 0.0;
  for (const auto& w : windows) {
    // Grid statistics bend below ten sampling intervals; clamp the window.
    const double lo =
        steps > 0 ? std::max(w.first, 10.0 / static_cast<double>(steps)) : w.first;
    ordered_json rec;
    rec["H"] = hurst;
    rec["interval_type"] = interval;
    rec["stat"] = stat;
    rec["window"] = {lo, w.second};
    if (method == "mle" || method == "both") {
      ifbm_fit fit;
      const ifbm_status st =
          ifbm_fit_mle(col.data(), static_cast<std::int64_t>(col.size()), lo, w.second, &fit);
      if (st == IFBM_OK) {
        rec["theta_hat"] = fit.theta;
        rec["stderr"] = fit.std_err;
        rec["n"] = fit.n_window;
        rec["converged"] = fit.converged != 0;
        if (fit.converged) {
          thetas.push_back(fit.theta);
          max_err = std::max(max_err, fit.std_err);
        }
      } else if (st == IFBM_ERR_TOO_FEW_SAMPLES) {
        rec["error"] = "too few samples in window";
      } else {
        check(st, "fit");
      }
    }
    if (method == "slope" || method == "both") {
      ifbm_fit fit;
      const ifbm_status st =
          ifbm_fit_slope(col_no_atom.data(), static_cast<std::int64_t>(col_no_atom.size()), lo,
                         w.second, 20, &fit);
      if (st == IFBM_OK)
        rec["slope_theta"] = fit.theta;
      else
        rec["slope_error"] = ifbm_status_string(st);
    }
    rec["atom_mass"] = atom_mass;
    fits.push_back(rec);
  }

  ordered_json report;
  report["fits"] = fits;
  if (thetas.size() >= 2) {
    const auto [lo_it, hi_it] = std::minmax_element(thetas.begin(), thetas.end());
    report["stable"] = (*hi_it - *lo_it) < 3.0 * max_err;
    report["theta_spread"] = *hi_it - *lo_it;
  } else {
    report["stable"] = false;
  }

  if (out_path == "-") {
    std::cout << report.dump(2) << "\n";
  } else {
    auto out = open_out(out_path);
    out << report.dump(2) << "\n";
    write_or_die(out, out_path);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// burgers

int cmd_burgers(const ExperimentConfig& cfg, const std::string& scales_arg,
                const std::string& out_prefix, const std::string& points_out) {
  int max_octave = 0;
  while ((std::int64_t{1} << (max_octave + 1)) <= cfg.len) ++max_octave;
  int j0 = 3, j1 = max_octave - 3;
  if (!scales_arg.empty()) {
    const auto colon = scales_arg.find(':');
    if (colon == std::string::npos) throw Fail{1, "--scales must look like j0:j1 (octaves)"};
    j0 = std::stoi(scales_arg.substr(0, colon));
    j1 = std::stoi(scales_arg.substr(colon + 1));
  }
  if (j0 < 1 || j1 > max_octave - 1 || j0 >= j1)
    throw Fail{1, "octave range must satisfy 1 <= j0 < j1 <= " +
                      std::to_string(max_octave - 1) + " for len " + std::to_string(cfg.len)};
  std::vector<double> deltas;
  for (int j = j0; j <= j1; ++j) deltas.push_back(std::ldexp(1.0, -j));

  std::vector<double> mean_logs(deltas.size());
  double dim = 0.0, spread = 0.0;
  check(ifbm_dim_experiment(cfg.hurst, cfg.len, cfg.samples, cfg.master_seed, cfg.workers,
                            deltas.data(), static_cast<std::int64_t>(deltas.size()),
                            mean_logs.data(), &dim, &spread),
        "dim experiment");

  const std::string csv_path = out_prefix + ".csv";
  {
    auto out = open_out(csv_path);
    out << "# ifbm boxcounts hurst=" << fmt(cfg.hurst) << " steps=" << cfg.len
        << " samples=" << cfg.samples << " master_seed=" << cfg.master_seed << "\n";
    out << "delta,n_boxes,n_paths\n";
    for (std::size_t i = 0; i < deltas.size(); ++i)
      out << fmt(deltas[i]) << "," << fmt(std::exp(mean_logs[i])) << "," << cfg.samples
          << "\n";
    write_or_die(out, csv_path);
  }

  ordered_json j;
  j["config"] = config_to_json(cfg);
  j["octaves"] = {j0, j1};
  j["dim_hat"] = dim;
  j["bootstrap_spread"] = spread;
  j["low_confidence"] = cfg.samples < 20;
  const std::string json_path = out_prefix + ".json";
  {
    auto out = open_out(json_path);
    out << j.dump(2) << "\n";
    write_or_die(out, json_path);
  }

  if (!points_out.empty()) {
    PlanHandle plan;
    make_plan(cfg, plan);
    std::vector<double> values(static_cast<std::size_t>(ifbm_plan_points(plan.p)));
    check(ifbm_generate(plan.p, cfg.master_seed, 0, values.data()), "generate");
    std::vector<double> coords(values.size());
    std::int64_t count = 0;
    check(ifbm_lagrangian_points(plan.p, values.data(), coords.data(), &count), "vertices");
    auto out = open_out(points_out);
    out << "x\n";
    for (std::int64_t i = 0; i < count; ++i) out << fmt(coords[i]) << "\n";
    write_or_die(out, points_out);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& suite, std::int64_t mc_samples, std::uint64_t seed,
               int workers, const std::string& out_path) {
  ordered_json checks = ordered_json::array();
  bool all_pass = true;
  auto add = [&](const std::string& name, const ordered_json& params, double worst, bool pass) {
    checks.push_back(
        {{"check", name}, {"parameters", params}, {"worst_value", worst}, {"pass", pass}});
    all_pass = all_pass && pass;
  };

  if (suite == "cov" || suite == "all") {
    for (double h : {0.2, 0.5, 0.8}) {
      for (int bilateral : {0, 1}) {
        PlanHandle plan;
        if (bilateral)
          check(ifbm_plan_bilateral(h, 32, 16, &plan.p), "plan");
        else
          check(ifbm_plan_unilateral(h, 32, &plan.p), "plan");
        double err = 0.0;
        check(ifbm_verify_map_exactness(plan.p, &err), "map exactness");
        add("map_exactness", {{"hurst", h}, {"steps", 32}, {"bilateral", bilateral != 0}}, err,
            err <= 1e-8);
        double z = 0.0;
        check(ifbm_verify_cov_mc(plan.p, mc_samples, seed, workers, &z), "covariance mc");
        add("covariance_mc",
            {{"hurst", h}, {"steps", 32}, {"bilateral", bilateral != 0}, {"n", mc_samples}}, z,
            z <= 4.0);
      }
    }
  }

  if (suite == "toeplitz" || suite == "all") {
    for (double h : {0.2, 0.5, 0.8}) {
      for (std::int64_t order : {64, 256}) {
        double factor_err = 0.0, resid = 0.0;
        check(ifbm_verify_toeplitz(h, order, &factor_err, &resid), "toeplitz");
        add("toeplitz_factor", {{"hurst", h}, {"order", order}}, factor_err,
            factor_err <= 1e-10);
        add("toeplitz_solve", {{"hurst", h}, {"order", order}}, resid, resid <= 1e-9);
      }
    }
  }

  if (suite == "analytic" || suite == "all") {
    const std::vector<std::pair<double, double>> pairs = {{0.6, 0.7}, {0.55, 0.9}};
    for (const auto& [h0, h] : pairs) {
      double gap = 0.0;
      check(ifbm_slepian_gap(h, h0, 100, &gap), "slepian");
      add("slepian_gap", {{"h0", h0}, {"h", h}, {"lattice", 100}}, gap, gap >= -1e-12);

      double min_r1 = 1e300, min_r2 = 1e300;
      for (int i = 1; i < 1000; ++i) {
        double r1 = 0.0, r2 = 0.0;
        check(ifbm_r_terms(h, h0, i / 1000.0, &r1, &r2), "r terms");
        min_r1 = std::min(min_r1, r1);
        min_r2 = std::min(min_r2, r2);
      }
      add("r1_grid_min", {{"h0", h0}, {"h", h}}, min_r1, min_r1 >= -1e-10);
      add("r2_grid_min", {{"h0", h0}, {"h", h}}, min_r2, min_r2 >= -1e-10);

      // Small-ratio and near-one closed-form branches of R1, matched to 5%.
      const double q0 = 2.0 * h0 + 2.0;
      const double theta = q0 / (2.0 * h + 2.0);
      double r1 = 0.0, r2 = 0.0;
      check(ifbm_r_terms(h, h0, 1e-3, &r1, &r2), "r terms");
      const double y = std::pow(1e-3, theta);
      const double rel_small = std::abs(r1 / (y * y * (q0 - 1.0) / 2.0) - 1.0);
      add("r1_small_rho_asymptote", {{"h0", h0}, {"h", h}, {"rho", 1e-3}}, rel_small,
          rel_small <= 0.05);
      check(ifbm_r_terms(h, h0, 1.0 - 1e-3, &r1, &r2), "r terms");
      const double ybar = 1.0 - std::pow(1.0 - 1e-3, theta);
      const double rel_one = std::abs(r1 / ybar - 1.0);
      add("r1_near_one_asymptote", {{"h0", h0}, {"h", h}, {"rho", 1.0 - 1e-3}}, rel_one,
          rel_one <= 0.05);

      // Closed form against the covariance kernel under the time change.
      double max_diff = 0.0;
      for (int i = 1; i <= 20; ++i) {
        for (int jj = 1; jj <= i; ++jj) {
          const double t = i / 20.0;
          const double s = jj / 20.0;
          double beta = 0.0;
          check(ifbm_beta_q(h, h0, t, s, &beta), "beta");
          const double q = 2.0 * h + 2.0;
          const double via_gamma =
              q * ifbm_gamma_cov(h, std::pow(t, theta), std::pow(s, theta));
          max_diff = std::max(max_diff, std::abs(beta - via_gamma));
        }
      }
      add("beta_vs_gamma", {{"h0", h0}, {"h", h}}, max_diff, max_diff <= 1e-10);
    }
  }

  if (suite == "psi" || suite == "all") {
    const std::int64_t n = std::max<std::int64_t>(mc_samples, 20000);
    std::vector<double> g(static_cast<std::size_t>(n));
    check(ifbm_fbm_argmax(0.5, 1024, n, seed, workers, g.data()), "fbm argmax");
    double worst = 0.0;
    check(ifbm_psi_worst_z(g.data(), n, 40, &worst), "psi");
    add("psi_inequality", {{"hurst", 0.5}, {"steps", 1024}, {"n", n}, {"bins", 40}}, worst,
        worst >= -5.0);
  }

  if (checks.empty()) throw Fail{1, "unknown suite " + suite};

  ordered_json report;
  report["suite"] = suite;
  report["pass"] = all_pass;
  report["checks"] = checks;
  if (out_path == "-") {
    std::cout << report.dump(2) << "\n";
  } else {
    auto out = open_out(out_path);
    out << report.dump(2) << "\n";
    write_or_die(out, out_path);
  }
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ifbm: exact simulation and small-value statistics of integrated fractional "
               "Brownian motion"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  cfg.windows = default_windows();
  std::string out_path = "-";
  std::string windows_arg, stats_arg, config_path, dump_config_path;
  bool allow_big_grid = false;

  auto add_common = [&](CLI::App* cmd, bool with_samples) {
    cmd->add_option("--hurst", cfg.hurst, "similarity parameter H in (0,1)");
    cmd->add_option("--len,-T", cfg.len, "grid steps T");
    if (with_samples) cmd->add_option("--samples,-N", cfg.samples, "number of paths");
    cmd->add_option("--seed", cfg.master_seed, "master seed");
    cmd->add_option("--workers", cfg.workers, "worker threads");
    cmd->add_option("--out", out_path, "output path (prefix for multi-file outputs)");
    cmd->add_flag("--allow-big-grid", allow_big_grid, "permit len > 16384");
  };

  auto* gen = app.add_subcommand("gen", "generate one path and write it as CSV");
  add_common(gen, false);
  gen->add_option("--interval", cfg.interval, "unilateral or bilateral");
  gen->add_option("--pivot", cfg.pivot, "bilateral pivot k0 (default ceil(T/2))");

  auto* mc = app.add_subcommand("mc", "Monte Carlo campaign: stats CSV plus JSON summary");
  add_common(mc, true);
  mc->add_option("--interval", cfg.interval, "unilateral or bilateral");
  mc->add_option("--pivot", cfg.pivot, "bilateral pivot k0 (default ceil(T/2))");
  mc->add_option("--stats", stats_arg, "comma-separated subset of M,G,A,Z to summarize");
  mc->add_option("--config", config_path, "load an experiment config JSON file");
  mc->add_option("--dump-config", dump_config_path, "write the effective config and exit");

  auto* theta = app.add_subcommand("theta", "fit the small-value exponent from a stats CSV");
  std::string stats_path, stat_name = "G", method = "mle";
  theta->add_option("file", stats_path, "stats CSV produced by mc")->required();
  theta->add_option("--stat", stat_name, "one of M, G, absG, A, Z");
  theta->add_option("--windows", windows_arg, "comma-separated lo:hi windows");
  theta->add_option("--method", method, "mle, slope, or both");
  theta->add_option("--out", out_path, "output JSON path (default stdout)");

  auto* burgers = app.add_subcommand("burgers", "box-counting dimension of Lagrangian points");
  add_common(burgers, true);
  std::string scales_arg, points_out;
  burgers->add_option("--scales", scales_arg, "octave range j0:j1 (delta = 2^-j)");
  burgers->add_option("--points-out", points_out, "also write the first path's vertex set");

  auto* verify = app.add_subcommand("verify", "run a verification suite, JSON report");
  std::string suite = "all";
  std::int64_t verify_samples = 100000;
  verify->add_option("--suite", suite, "cov, toeplitz, analytic, psi, or all");
  verify->add_option("--samples,-N", verify_samples, "Monte Carlo size for statistical checks");
  verify->add_option("--seed", cfg.master_seed, "master seed");
  verify->add_option("--workers", cfg.workers, "worker threads");
  verify->add_option("--out", out_path, "output JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      cfg.stats.clear();  // gen writes the raw path; stat selection is mc-only
      validate_config(cfg, allow_big_grid);
      return cmd_gen(cfg, out_path);
    }
    if (mc->parsed()) {
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw Fail{3, "cannot open config " + config_path};
        const ordered_json j = ordered_json::parse(in);
        const ExperimentConfig loaded = config_from_json(j);
        if (!mc->count("--hurst")) cfg.hurst = loaded.hurst;
        if (!mc->count("--len")) cfg.len = loaded.len;
        if (!mc->count("--samples")) cfg.samples = loaded.samples;
        if (!mc->count("--interval")) cfg.interval = loaded.interval;
        if (!mc->count("--pivot")) cfg.pivot = loaded.pivot;
        if (!mc->count("--seed")) cfg.master_seed = loaded.master_seed;
        if (!mc->count("--workers")) cfg.workers = loaded.workers;
        if (!mc->count("--stats")) cfg.stats = loaded.stats;
        cfg.windows = loaded.windows;
      }
      if (!stats_arg.empty()) {
        cfg.stats.clear();
        std::stringstream ss(stats_arg);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.stats.push_back(item);
      } else if (cfg.interval == "bilateral" && config_path.empty()) {
        cfg.stats = {"M", "G", "A"};
      }
      validate_config(cfg, allow_big_grid);
      if (!dump_config_path.empty()) {
        auto out = open_out(dump_config_path);
        out << config_to_json(cfg).dump(2) << "\n";
        write_or_die(out, dump_config_path);
        return 0;
      }
      if (out_path == "-") throw Fail{1, "mc requires --out PREFIX"};
      return cmd_mc(cfg, out_path);
    }
    if (theta->parsed()) {
      const auto windows = windows_arg.empty() ? default_windows() : parse_windows(windows_arg);
      if (method != "mle" && method != "slope" && method != "both")
        throw Fail{1, "--method must be mle, slope, or both"};
      return cmd_theta(stats_path, stat_name, windows, method, out_path);
    }
    if (burgers->parsed()) {
      cfg.interval = "bilateral";
      cfg.stats.clear();
      validate_config(cfg, allow_big_grid);
      if (out_path == "-") throw Fail{1, "burgers requires --out PREFIX"};
      return cmd_burgers(cfg, scales_arg, out_path, points_out);
    }
    if (verify->parsed()) {
      return cmd_verify(suite, verify_samples, cfg.master_seed, cfg.workers, out_path);
    }
  } catch (const Fail& f) {
    std::cerr << "error: " << f.msg << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
