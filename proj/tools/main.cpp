#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "agelab/errors.hpp"
#include "agelab/version.hpp"
#include "config.hpp"
#include "experiments.hpp"

namespace {

using namespace agelab;
using namespace agelab::cli;

struct CommonFlags {
  std::string config_path;
  std::string out_dir;
  std::int64_t seed = -1;
  bool quiet = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool needs_config) {
  auto* config = cmd->add_option("--config", flags.config_path, "experiment configuration file");
  if (needs_config) config->required();
  cmd->add_option("--out", flags.out_dir, "output directory (default: out)");
  cmd->add_option("--seed", flags.seed, "override the configured seed");
  cmd->add_flag("--quiet", flags.quiet, "suppress per-check output");
}

int run_kind(const CommonFlags& flags, ExperimentKind kind) {
  const ConfigFile file = ConfigFile::parse_file(flags.config_path);
  ExperimentConfig cfg = load_experiment(file, kind);
  if (!flags.out_dir.empty()) cfg.out_dir = flags.out_dir;
  if (flags.seed >= 0) cfg.seed = std::uint64_t(flags.seed);
  cfg.quiet = flags.quiet;
  return run_experiment(cfg).passed() ? 0 : 1;
}

int run_report(const CommonFlags& flags, const std::vector<std::string>& inputs) {
  std::vector<Json> summaries;
  for (const std::string& path : inputs) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open summary: " + path);
    Json parsed;
    try {
      in >> parsed;
    } catch (const std::exception& e) {
      throw IoError("cannot parse summary " + path + ": " + e.what());
    }
    summaries.push_back(std::move(parsed));
  }
  const Json report = emit_report(summaries);
  const std::string out_dir = flags.out_dir.empty() ? "out" : flags.out_dir;
  std::filesystem::create_directories(out_dir);
  const std::string out_path = (std::filesystem::path(out_dir) / "report.json").string();
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot write report: " + out_path);
  out << report.dump(2) << "\n";
  if (!flags.quiet)
    std::printf("report: %s (%s)\n", out_path.c_str(),
                report["overall"].get<std::string>().c_str());
  return report["overall"] == "pass" ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"agelab: exact Baker-map dynamics and Liouvillian wave-packet experiments"};
  app.set_version_flag("--version", std::string("agelab ") + kVersion);
  app.require_subcommand(1);

  CommonFlags flags;
  ExperimentKind kind = ExperimentKind::baker_verify;
  std::vector<std::string> report_inputs;
  bool is_report = false;

  auto* baker = app.add_subcommand("baker", "symbolic Baker-map experiments");
  baker->require_subcommand(1);
  auto* baker_verify = baker->add_subcommand("verify", "exact invariants of the symbolic dynamics");
  add_common_flags(baker_verify, flags, true);
  baker_verify->callback([&] { kind = ExperimentKind::baker_verify; });
  auto* baker_converge =
      baker->add_subcommand("converge", "Hardy-subspace absorption table for an expansion");
  add_common_flags(baker_converge, flags, true);
  baker_converge->callback([&] { kind = ExperimentKind::baker_converge; });

  auto* packets = app.add_subcommand("packets", "wave-packet kernel experiments");
  packets->require_subcommand(1);
  auto* packets_evolve =
      packets->add_subcommand("evolve", "evolution unitarity and transport consistency");
  add_common_flags(packets_evolve, flags, true);
  packets_evolve->callback([&] { kind = ExperimentKind::packets_evolve; });

  auto* theorem =
      app.add_subcommand("theorem", "convergence of evolved states to the age-negative subspace");
  add_common_flags(theorem, flags, true);
  theorem->callback([&] { kind = ExperimentKind::theorem; });

  auto* report = app.add_subcommand("report", "merge experiment summaries into one document");
  report->add_option("summaries", report_inputs, "summary JSON files")->required();
  add_common_flags(report, flags, false);
  report->callback([&] { is_report = true; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (is_report) return run_report(flags, report_inputs);
    return run_kind(flags, kind);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 3;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "unexpected error: %s\n", e.what());
    return 5;
  }
}
