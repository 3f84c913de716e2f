#include "experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>

#include "agelab/age_transform.hpp"
#include "agelab/cylinder.hpp"
#include "agelab/hardy_continuous.hpp"
#include "agelab/hardy_discrete.hpp"
#include "agelab/random_states.hpp"
#include "agelab/serialize.hpp"
#include "agelab/summation.hpp"
#include "agelab/version.hpp"

namespace agelab::cli {

namespace {

namespace fs = std::filesystem;

void ensure_out_dir(const std::string& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir + ": " + ec.message());
}

std::string artifact_path(const ExperimentConfig& cfg, const std::string& file) {
  return (fs::path(cfg.out_dir) / file).string();
}

CheckResult check_leq(const std::string& name, double value, double threshold) {
  return {name, value <= threshold, value, threshold};
}

CheckResult check_count(const std::string& name, long failures, long total) {
  // value records the failure count; threshold the number of cases exercised
  return {name, failures == 0, double(failures), double(total)};
}

std::string checks_csv(const std::vector<CheckResult>& checks) {
  std::string out = "check,value,threshold,pass\n";
  char buf[192];
  for (const CheckResult& c : checks) {
    std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%d\n", c.name.c_str(), c.value, c.threshold,
                  int(c.pass));
    out += buf;
  }
  return out;
}

// --- baker-verify -------------------------------------------------------------

/// Enumerates every cylinder over [coord_lo, coord_hi] with 1..depth
/// constraints (each coordinate unconstrained / cell 1 / cell 2) and checks
/// the exact product law mu = 2^-d.
CheckResult independence_check(const ExperimentConfig& cfg) {
  const int m = cfg.coord_hi - cfg.coord_lo + 1;
  long checked = 0;
  long failures = 0;
  std::vector<int> state(std::size_t(m), 0);  // 0 free, 1 -> cell 1, 2 -> cell 2
  while (true) {
    int d = 0;
    for (int s : state) d += (s != 0);
    if (d >= 1 && d <= cfg.depth) {
      std::map<int, int> constraints;
      for (int i = 0; i < m; ++i)
        if (state[std::size_t(i)] != 0) constraints[cfg.coord_lo + i] = state[std::size_t(i)];
      ++checked;
      if (!(measure_cylinder(CylinderSpec(std::move(constraints))) ==
            Rational::dyadic_unit(d)))
        ++failures;
    }
    int pos = 0;
    while (pos < m && state[std::size_t(pos)] == 2) {
      state[std::size_t(pos)] = 0;
      ++pos;
    }
    if (pos == m) break;
    ++state[std::size_t(pos)];
  }
  return check_count("independence_exact_d<=" + std::to_string(cfg.depth), failures, checked);
}

CheckResult duality_check(const ExperimentConfig& cfg, SplitMix64& rng) {
  long failures = 0;
  for (int trial = 0; trial < cfg.duality_trials; ++trial) {
    const WalshExpansion rho = random_expansion(rng, {.terms = 6, .lo = -12, .hi = 12});
    const BitTape tape = random_tape(rng, 24, 24);
    const int n = int(rng.next_int(-8, 8));
    if (evaluate(koopman_apply(rho, n), tape) != evaluate(rho, baker_power(tape, -n)))
      ++failures;
  }
  return check_count("koopman_duality_exact", failures, cfg.duality_trials);
}

CheckResult covariance_check(const ExperimentConfig& cfg, SplitMix64& rng) {
  long failures = 0;
  for (int trial = 0; trial < cfg.covariance_trials; ++trial) {
    const WalshExpansion rho = random_expansion(rng, {.terms = 64});
    const int n = int(rng.next_int(-8, 8));
    if (age_commutation_residual(rho, n) != 0.0) ++failures;
  }
  return check_count("age_covariance_exact", failures, cfg.covariance_trials);
}

CheckResult stability_check(const ExperimentConfig& cfg, SplitMix64& rng) {
  long failures = 0;
  for (int trial = 0; trial < cfg.stability_trials; ++trial) {
    if (!verify_forward_stability(random_expansion(rng, {.terms = 8, .plus_only = true})))
      ++failures;
  }
  return check_count("forward_stability", failures, cfg.stability_trials);
}

CheckResult absorption_check(const ExperimentConfig& cfg, SplitMix64& rng) {
  long failures = 0;
  for (int trial = 0; trial < cfg.absorption_trials; ++trial) {
    const WalshExpansion rho = random_expansion(rng, {.terms = 12});
    const int n_star = absorption_time(rho);
    bool ok = true;
    for (int n = 0; n <= 64; ++n) {
      const double m = minus_norm_after(rho, n);
      if (n >= n_star && m != 0.0) ok = false;
      if (n < n_star && n == n_star - 1 && m == 0.0) ok = false;
    }
    if (!ok) ++failures;
  }
  return check_count("absorption_closed_form", failures, cfg.absorption_trials);
}

CheckResult orthonormality_check(const ExperimentConfig& cfg, SplitMix64& rng) {
  const WalshIndexSet F = random_index_set(rng, -6, 6, 3);
  WalshIndexSet G = F;
  while (G == F) G = random_index_set(rng, -6, 6, 3);
  long cross = 0;
  for (long i = 0; i < cfg.mc_samples; ++i) {
    const BitTape tape = random_tape(rng, 8, 8);
    cross += walsh_eval(F, tape) * walsh_eval(G, tape);
  }
  const double mean = double(cross) / double(cfg.mc_samples);
  const double three_sigma = 3.0 / std::sqrt(double(cfg.mc_samples));
  return check_leq("walsh_orthogonality_mc", std::abs(mean), three_sigma);
}

CheckResult measure_mc_check(const ExperimentConfig& cfg, SplitMix64& rng) {
  const CylinderSpec spec({{-2, 2}, {0, 1}, {3, 2}});
  const double p = measure_cylinder(spec).to_double();
  long hits = 0;
  for (long i = 0; i < cfg.mc_samples; ++i)
    if (spec.contains(random_tape(rng, 4, 4))) ++hits;
  const double estimate = double(hits) / double(cfg.mc_samples);
  const double three_sigma = 3.0 * std::sqrt(p * (1.0 - p) / double(cfg.mc_samples));
  return check_leq("cylinder_measure_mc", std::abs(estimate - p), three_sigma);
}

RunSummary run_baker_verify(const ExperimentConfig& cfg) {
  SplitMix64 rng(cfg.seed);
  RunSummary summary;
  summary.checks.push_back(independence_check(cfg));
  summary.checks.push_back(duality_check(cfg, rng));
  summary.checks.push_back(covariance_check(cfg, rng));
  summary.checks.push_back(stability_check(cfg, rng));
  summary.checks.push_back(absorption_check(cfg, rng));
  summary.checks.push_back(orthonormality_check(cfg, rng));
  summary.checks.push_back(measure_mc_check(cfg, rng));
  write_text_file(artifact_path(cfg, "baker_verify_checks.csv"), checks_csv(summary.checks));
  return summary;
}

// --- baker-converge -----------------------------------------------------------

RunSummary run_baker_converge(const ExperimentConfig& cfg) {
  RunSummary summary;
  const std::vector<ConvergenceRow> rows = convergence_table(cfg.expansion, cfg.n_max);
  write_text_file(artifact_path(cfg, "baker_converge.csv"), convergence_csv(rows));

  bool monotone = true;
  for (std::size_t i = 1; i < rows.size(); ++i)
    monotone &= rows[i].minus_norm <= rows[i - 1].minus_norm;
  summary.checks.push_back({"minus_norm_nonincreasing", monotone, monotone ? 0.0 : 1.0, 0.0});

  if (cfg.expansion.mean_zero()) {
    const int n_star = absorption_time(cfg.expansion);
    bool absorbed = true;
    for (const ConvergenceRow& row : rows)
      if (row.n >= n_star && row.minus_norm != 0.0) absorbed = false;
    const bool in_range = n_star <= cfg.n_max;
    summary.checks.push_back({"absorbed_at_closed_form", absorbed && in_range, double(n_star),
                              double(cfg.n_max)});
  }
  return summary;
}

// --- packets-evolve -----------------------------------------------------------

RunSummary run_packets_evolve(const ExperimentConfig& cfg) {
  RunSummary summary;
  const DensityKernel kernel = build_kernel(cfg.components, cfg.nu_sigma_grid);
  const double norm_sq = kernel.norm_squared();
  if (norm_sq == 0.0) throw ZeroState("packets-evolve: zero kernel");
  const AgeRepresentation rep = to_age(kernel);

  const double parseval = std::abs(rep.total_mass() - norm_sq) / norm_sq;
  DensityKernel round_trip = from_age(rep);
  round_trip -= kernel;
  const double round_trip_rel = round_trip.norm() / std::sqrt(norm_sq);

  if (cfg.dump_state) {
    write_text_file(artifact_path(cfg, "kernel.csv"), kernel_to_csv(kernel));
    write_text_file(artifact_path(cfg, "age_representation.csv"), age_to_csv(rep));
  }

  std::string csv = "t,total_mass,two_route_residual\n";
  char buf[128];
  double worst_drift = 0.0;
  double worst_two_route = 0.0;
  for (double t : cfg.schedule) {
    const DensityKernel evolved = evolve_nu(kernel, t);
    const double mass = evolved.norm_squared();
    worst_drift = std::max(worst_drift, std::abs(mass - norm_sq) / norm_sq);

    AgeRepresentation via_age = evolve_age(rep, t);
    via_age -= to_age(evolved);
    const double two_route = std::sqrt(via_age.total_mass() / norm_sq);
    worst_two_route = std::max(worst_two_route, two_route);

    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", t, mass, two_route);
    csv += buf;
  }
  write_text_file(artifact_path(cfg, "packets_evolve.csv"), csv);

  summary.checks.push_back(check_leq("parseval_relative", parseval, 1e-10));
  summary.checks.push_back(check_leq("transport_round_trip", round_trip_rel, 1e-10));
  summary.checks.push_back(check_leq("mass_drift", worst_drift, 1e-12));
  summary.checks.push_back(check_leq("two_route_residual", worst_two_route, 1e-10));
  return summary;
}

// --- theorem --------------------------------------------------------------------

/// Tail mass of the initial age representation on (t, inf): the independent
/// route the sweep's plus_mass column is checked against (straight weighted
/// sum over the stored samples, no evolution or splitting machinery).
double initial_tail_mass(const AgeRepresentation& rep, double t) {
  const NuSigmaGrid& grid = rep.grid();
  CompensatedSum sum;
  for (const Eigen::MatrixXcd& b : rep.blocks())
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index k = 0; k < grid.n_nu; ++k)
        if (grid.age(k) > t) sum.add(std::norm(b(k, j)));
  return sum.value() * grid.delta_a() * grid.delta_sigma();
}

RunSummary run_theorem(const ExperimentConfig& cfg) {
  RunSummary summary;
  const DensityKernel kernel = build_kernel(cfg.components, cfg.nu_sigma_grid);
  const AgeRepresentation initial = to_age(kernel);
  const double total = initial.total_mass();
  if (total == 0.0) throw ZeroState("theorem: zero kernel");

  if (cfg.dump_state) {
    write_text_file(artifact_path(cfg, "kernel.csv"), kernel_to_csv(kernel));
    write_text_file(artifact_path(cfg, "age_representation.csv"), age_to_csv(initial));
  }

  const SweepTable table = theorem_sweep(kernel, cfg.schedule);
  write_text_file(artifact_path(cfg, "theorem_sweep.csv"), sweep_csv(table));

  double worst_oracle = 0.0;
  double worst_rise = 0.0;
  double worst_conservation = 0.0;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const SweepRow& row = table.rows[i];
    worst_oracle =
        std::max(worst_oracle, std::abs(row.plus_mass - initial_tail_mass(initial, row.t)) / total);
    worst_conservation =
        std::max(worst_conservation, std::abs(row.plus_mass + row.minus_mass - total) / total);
    if (i > 0) worst_rise = std::max(worst_rise, row.plus_mass - table.rows[i - 1].plus_mass);
  }
  const SweepRow& last = table.rows.back();
  const double final_fraction = last.plus_mass / total;

  summary.checks.push_back(check_leq("tail_oracle_match", worst_oracle, 1e-6));
  summary.checks.push_back(check_leq("plus_mass_monotone", worst_rise, 1e-12 * total));
  summary.checks.push_back(check_leq("mass_conservation", worst_conservation, 1e-10));
  summary.checks.push_back(check_leq("final_plus_fraction", final_fraction, cfg.certify_threshold));
  summary.checks.push_back(
      check_leq("final_hardy_residual", last.hardy_residual, cfg.certify_threshold));

  const bool certified = summary.checks[3].pass && summary.checks[4].pass;
  double t_star = last.t;
  for (const SweepRow& row : table.rows) {
    if (row.plus_mass / total <= cfg.certify_threshold) {
      t_star = row.t;
      break;
    }
  }
  Json certificate;
  certificate["certified"] = certified;
  certificate["t_star"] = t_star;
  certificate["threshold"] = cfg.certify_threshold;
  certificate["seed"] = cfg.seed;
  write_text_file(artifact_path(cfg, "theorem_certificate.json"), certificate.dump(2) + "\n");
  return summary;
}

}  // namespace

bool RunSummary::passed() const {
  bool all = true;
  for (const CheckResult& c : checks) all &= c.pass;
  return all;
}

Json summary_to_json(const RunSummary& summary) {
  Json doc;
  doc["experiment"] = summary.experiment;
  doc["status"] = summary.passed() ? "pass" : "fail";
  Json checks = Json::array();
  for (const CheckResult& c : summary.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["value"] = c.value;
    entry["threshold"] = c.threshold;
    checks.push_back(entry);
  }
  doc["checks"] = checks;
  doc["duration_s"] = summary.duration_s;
  doc["seed"] = summary.seed;
  doc["tool_version"] = summary.tool_version;
  return doc;
}

RunSummary run_experiment(const ExperimentConfig& cfg) {
  ensure_out_dir(cfg.out_dir);
  const auto start = std::chrono::steady_clock::now();
  RunSummary summary;
  switch (cfg.kind) {
    case ExperimentKind::baker_verify: summary = run_baker_verify(cfg); break;
    case ExperimentKind::baker_converge: summary = run_baker_converge(cfg); break;
    case ExperimentKind::packets_evolve: summary = run_packets_evolve(cfg); break;
    case ExperimentKind::theorem: summary = run_theorem(cfg); break;
  }
  summary.experiment = experiment_section(cfg.kind);
  summary.seed = cfg.seed;
  summary.tool_version = kVersion;
  summary.duration_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::string file = summary.experiment + "_summary.json";
  for (char& c : file)
    if (c == '-') c = '_';
  write_text_file(artifact_path(cfg, file), summary_to_json(summary).dump(2) + "\n");

  if (!cfg.quiet) {
    for (const CheckResult& c : summary.checks)
      std::printf("[%s] %s: value=%.6g threshold=%.6g\n", c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), c.value, c.threshold);
    std::printf("%s: %s (%.2fs, seed %llu)\n", summary.experiment.c_str(),
                summary.passed() ? "pass" : "fail", summary.duration_s,
                static_cast<unsigned long long>(summary.seed));
  }
  return summary;
}

Json emit_report(const std::vector<Json>& summaries) {
  Json report;
  report["tool"] = "agelab";
  report["version"] = kVersion;
  bool all_pass = true;
  std::map<std::string, int> seen;
  Json experiments = Json::array();
  for (const Json& s : summaries) {
    Json entry = s;
    const std::string base = entry.value("experiment", std::string("unknown"));
    const int run = ++seen[base];
    entry["experiment"] = run == 1 ? base : base + "." + std::to_string(run);
    all_pass &= entry.value("status", std::string("fail")) == "pass";
    experiments.push_back(entry);
  }
  report["overall"] = all_pass ? "pass" : "fail";
  report["experiment_count"] = experiments.size();
  report["experiments"] = experiments;
  return report;
}

}  // namespace agelab::cli
