#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agelab/energy.hpp"
#include "agelab/kernel.hpp"
#include "agelab/walsh.hpp"

namespace agelab::cli {

/// Raw INI-style configuration: "[section]" lines group "key = value" pairs.
/// Repeated keys are allowed (profiles); '#' and ';' start comments.
class ConfigFile {
 public:
  static ConfigFile parse_file(const std::string& path);
  static ConfigFile parse_text(const std::string& text, const std::string& origin = "<inline>");

  bool has_section(const std::string& section) const;

  /// Single-valued key; throws ConfigError("<section>.<key>: ...") when
  /// missing or repeated.
  std::string get(const std::string& section, const std::string& key) const;
  std::optional<std::string> get_optional(const std::string& section,
                                          const std::string& key) const;
  std::vector<std::string> get_all(const std::string& section, const std::string& key) const;

  double get_double(const std::string& section, const std::string& key) const;
  std::int64_t get_int(const std::string& section, const std::string& key) const;
  std::int64_t get_int_or(const std::string& section, const std::string& key,
                          std::int64_t fallback) const;
  double get_double_or(const std::string& section, const std::string& key,
                       double fallback) const;

  /// Integer that must be a power of two (grid sizes).
  std::int64_t get_pow2(const std::string& section, const std::string& key) const;

 private:
  using Entry = std::pair<std::string, std::string>;
  std::vector<std::pair<std::string, std::vector<Entry>>> sections_;

  const std::vector<Entry>* find_section(const std::string& section) const;
};

/// Experiment names understood by the driver.
enum class ExperimentKind { baker_verify, baker_converge, packets_evolve, theorem };

std::string experiment_section(ExperimentKind kind);

/// Everything a single experiment run needs, resolved and validated.
struct ExperimentConfig {
  ExperimentKind kind;
  std::uint64_t seed = 1;
  std::string out_dir = "out";
  bool quiet = false;

  // baker experiments
  int depth = 12;
  int coord_lo = -6;
  int coord_hi = 6;
  int duality_trials = 1000;
  int covariance_trials = 1000;
  int stability_trials = 1000;
  int absorption_trials = 1000;
  long mc_samples = 1000000;
  WalshExpansion expansion;  // baker-converge input state
  int n_max = 16;

  // continuous experiments
  EnergyGrid energy_grid;
  NuSigmaGrid nu_sigma_grid;
  std::vector<KernelComponent> components;
  std::vector<double> schedule;
  double certify_threshold = 1e-8;
  bool dump_state = false;  // also write kernel.csv / age_representation.csv
};

/// Reads the section for `kind` (plus [common]) out of the file. Flags given
/// on the command line override seed/out afterwards.
ExperimentConfig load_experiment(const ConfigFile& file, ExperimentKind kind);

/// "start:stop:step" or a comma list; must end up strictly increasing.
std::vector<double> parse_schedule(const std::string& text, const std::string& field);

}  // namespace agelab::cli
