#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "agelab/errors.hpp"

namespace agelab::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void bad_field(const std::string& section, const std::string& key,
                            const std::string& reason) {
  throw ConfigError(section + "." + key + ": " + reason);
}

double parse_double_or_throw(const std::string& section, const std::string& key,
                             const std::string& value) {
  try {
    std::size_t used = 0;
    const double parsed = std::stod(value, &used);
    if (used != value.size()) bad_field(section, key, "trailing characters in '" + value + "'");
    return parsed;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    bad_field(section, key, "not a number: '" + value + "'");
  }
}

std::int64_t parse_int_or_throw(const std::string& section, const std::string& key,
                                const std::string& value) {
  try {
    std::size_t used = 0;
    const long long parsed = std::stoll(value, &used);
    if (used != value.size()) bad_field(section, key, "trailing characters in '" + value + "'");
    return parsed;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    bad_field(section, key, "not an integer: '" + value + "'");
  }
}

/// profile entries look like: weight=1 power=0 center=8 width=0.4 channel=0
KernelComponent parse_profile(const std::string& section, const std::string& value,
                              const EnergyGrid& grid) {
  double weight = 1.0, power = 0.0, center = 0.0, width = 1.0;
  double amp_re = 1.0, amp_im = 0.0;
  int channel = 0;
  bool saw_center = false, saw_width = false;
  std::istringstream stream(value);
  std::string item;
  while (stream >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      bad_field(section, "profile", "expected key=value, got '" + item + "'");
    const std::string k = item.substr(0, eq);
    const std::string v = item.substr(eq + 1);
    if (k == "weight") weight = parse_double_or_throw(section, "profile.weight", v);
    else if (k == "power") power = parse_double_or_throw(section, "profile.power", v);
    else if (k == "center") { center = parse_double_or_throw(section, "profile.center", v); saw_center = true; }
    else if (k == "width") { width = parse_double_or_throw(section, "profile.width", v); saw_width = true; }
    else if (k == "amp_re") amp_re = parse_double_or_throw(section, "profile.amp_re", v);
    else if (k == "amp_im") amp_im = parse_double_or_throw(section, "profile.amp_im", v);
    else if (k == "channel") channel = int(parse_int_or_throw(section, "profile.channel", v));
    else bad_field(section, "profile", "unknown entry '" + k + "'");
  }
  if (!saw_center || !saw_width)
    bad_field(section, "profile", "center and width are required");
  const PacketProfile profile{{Complex(amp_re, amp_im), power, center, width}};
  KernelComponent component;
  component.weight = weight;
  component.f = make_packet(profile, grid, channel);
  return component;
}

}  // namespace

ConfigFile ConfigFile::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str(), path);
}

ConfigFile ConfigFile::parse_text(const std::string& text, const std::string& origin) {
  ConfigFile file;
  std::istringstream stream(text);
  std::string line;
  std::string current;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ConfigError(origin + ":" + std::to_string(line_no) + ": unterminated section");
      current = trim(t.substr(1, t.size() - 2));
      file.sections_.push_back({current, {}});
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": expected key = value");
    if (current.empty())
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": key outside any section");
    file.sections_.back().second.push_back({trim(t.substr(0, eq)), trim(t.substr(eq + 1))});
  }
  return file;
}

const std::vector<ConfigFile::Entry>* ConfigFile::find_section(const std::string& section) const {
  for (const auto& [name, entries] : sections_)
    if (name == section) return &entries;
  return nullptr;
}

bool ConfigFile::has_section(const std::string& section) const {
  return find_section(section) != nullptr;
}

std::vector<std::string> ConfigFile::get_all(const std::string& section,
                                             const std::string& key) const {
  std::vector<std::string> values;
  if (const auto* entries = find_section(section)) {
    for (const auto& [k, v] : *entries)
      if (k == key) values.push_back(v);
  }
  return values;
}

std::optional<std::string> ConfigFile::get_optional(const std::string& section,
                                                    const std::string& key) const {
  const auto values = get_all(section, key);
  if (values.empty()) return std::nullopt;
  if (values.size() > 1) bad_field(section, key, "given more than once");
  return values.front();
}

std::string ConfigFile::get(const std::string& section, const std::string& key) const {
  const auto value = get_optional(section, key);
  if (!value) bad_field(section, key, "missing");
  return *value;
}

double ConfigFile::get_double(const std::string& section, const std::string& key) const {
  return parse_double_or_throw(section, key, get(section, key));
}

std::int64_t ConfigFile::get_int(const std::string& section, const std::string& key) const {
  return parse_int_or_throw(section, key, get(section, key));
}

std::int64_t ConfigFile::get_int_or(const std::string& section, const std::string& key,
                                    std::int64_t fallback) const {
  const auto value = get_optional(section, key);
  return value ? parse_int_or_throw(section, key, *value) : fallback;
}

double ConfigFile::get_double_or(const std::string& section, const std::string& key,
                                 double fallback) const {
  const auto value = get_optional(section, key);
  return value ? parse_double_or_throw(section, key, *value) : fallback;
}

std::int64_t ConfigFile::get_pow2(const std::string& section, const std::string& key) const {
  const std::int64_t n = get_int(section, key);
  if (n <= 0 || (n & (n - 1)) != 0) bad_field(section, key, "must be a power of two");
  return n;
}

std::string experiment_section(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::baker_verify: return "baker-verify";
    case ExperimentKind::baker_converge: return "baker-converge";
    case ExperimentKind::packets_evolve: return "packets-evolve";
    case ExperimentKind::theorem: return "theorem";
  }
  throw ConfigError("unknown experiment kind");
}

std::vector<double> parse_schedule(const std::string& text, const std::string& field) {
  std::vector<double> schedule;
  if (text.find(':') != std::string::npos) {
    double start = 0, stop = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream stream(text);
    if (!(stream >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':')
      throw ConfigError(field + ": expected start:stop:step");
    if (!(step > 0.0)) throw ConfigError(field + ": step must be positive");
    for (double t = start; t <= stop + 0.5 * step; t += step) schedule.push_back(t);
  } else {
    std::istringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ','))
      schedule.push_back(parse_double_or_throw("schedule", field, trim(item)));
  }
  if (schedule.empty()) throw ConfigError(field + ": empty schedule");
  for (std::size_t i = 1; i < schedule.size(); ++i)
    if (!(schedule[i] > schedule[i - 1]))
      throw ConfigError(field + ": schedule must be strictly increasing");
  return schedule;
}

ExperimentConfig load_experiment(const ConfigFile& file, ExperimentKind kind) {
  const std::string section = experiment_section(kind);
  if (!file.has_section(section)) throw ConfigError(section + ": section missing");

  ExperimentConfig cfg;
  cfg.kind = kind;
  cfg.seed = std::uint64_t(file.get_int_or("common", "seed", 1));

  switch (kind) {
    case ExperimentKind::baker_verify: {
      cfg.depth = int(file.get_int_or(section, "depth", 12));
      if (cfg.depth < 1) throw ConfigError(section + ".depth: must be >= 1");
      cfg.coord_lo = int(file.get_int_or(section, "coord_lo", -6));
      cfg.coord_hi = int(file.get_int_or(section, "coord_hi", 6));
      if (cfg.coord_lo > cfg.coord_hi) throw ConfigError(section + ".coord_lo: exceeds coord_hi");
      cfg.duality_trials = int(file.get_int_or(section, "duality_trials", 1000));
      cfg.covariance_trials = int(file.get_int_or(section, "covariance_trials", 1000));
      cfg.stability_trials = int(file.get_int_or(section, "stability_trials", 1000));
      cfg.absorption_trials = int(file.get_int_or(section, "absorption_trials", 1000));
      cfg.mc_samples = file.get_int_or(section, "mc_samples", 1000000);
      break;
    }
    case ExperimentKind::baker_converge: {
      const auto inline_terms = file.get_optional(section, "expansion");
      const auto from_file = file.get_optional(section, "expansion_file");
      if (!inline_terms && !from_file)
        throw ConfigError(section + ".expansion: give inline terms or expansion_file");
      if (inline_terms && from_file)
        throw ConfigError(section + ".expansion: inline terms and expansion_file both given");
      std::string text;
      if (inline_terms) {
        text = *inline_terms;
        std::replace(text.begin(), text.end(), '|', '\n');
      } else {
        std::ifstream in(*from_file);
        if (!in) throw IoError("cannot open expansion file: " + *from_file);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
      }
      try {
        cfg.expansion = expansion_from_text(text);
      } catch (const IoError& e) {
        throw ConfigError(section + ".expansion: " + e.what());
      }
      if (cfg.expansion.is_zero()) throw ConfigError(section + ".expansion: zero expansion");
      cfg.n_max = int(file.get_int_or(section, "n_max", 16));
      if (cfg.n_max < 0) throw ConfigError(section + ".n_max: must be >= 0");
      break;
    }
    case ExperimentKind::packets_evolve:
    case ExperimentKind::theorem: {
      const double decay = file.get_double_or(section, "decay_threshold", 1e-12);
      const int channels = int(file.get_int_or(section, "channels", 1));
      try {
        cfg.energy_grid = EnergyGrid::make(file.get_double(section, "omega_max"),
                                           file.get_pow2(section, "n_omega"), channels, decay);
        cfg.nu_sigma_grid = NuSigmaGrid::make(
            file.get_double(section, "nu_max"), file.get_pow2(section, "n_nu"),
            file.get_double_or(section, "sigma_min", 0.0), file.get_double(section, "sigma_max"),
            file.get_pow2(section, "n_sigma"), channels, decay);
      } catch (const DomainError& e) {
        throw ConfigError(section + ": " + e.what());
      }
      const auto profiles = file.get_all(section, "profile");
      if (profiles.empty()) throw ConfigError(section + ".profile: at least one required");
      for (const std::string& p : profiles)
        cfg.components.push_back(parse_profile(section, p, cfg.energy_grid));
      cfg.schedule = parse_schedule(file.get(section, "schedule"), section + ".schedule");
      cfg.certify_threshold = file.get_double_or(section, "certify_threshold", 1e-8);
      if (!(cfg.certify_threshold > 0.0))
        throw ConfigError(section + ".certify_threshold: must be positive");
      cfg.dump_state = file.get_int_or(section, "dump_state", 0) != 0;
      break;
    }
  }
  return cfg;
}

}  // namespace agelab::cli
