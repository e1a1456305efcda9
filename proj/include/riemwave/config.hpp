#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "riemwave/boundary.hpp"
#include "riemwave/damping.hpp"
#include "riemwave/grid.hpp"
#include "riemwave/initial.hpp"

namespace riemwave {

enum class Splitting { Lie, Strang };

struct SimConfig {
  Grid grid{100};
  BoundarySpec boundary = BoundarySpec::dirichlet();
  DampingField damping;
  double t_final = 1.0;
  double p = 2.0;
  std::size_t record_every = 1;
  Splitting splitting = Splitting::Strang;
  /// Warn when sup|b| exceeds this perturbation threshold.
  double alpha = 0.05;
  InitialData initial;

  /// Unit CFL: dt = dx.
  double dt() const noexcept { return grid.dx(); }
  std::size_t step_count() const;
  /// Throws DomainError on out-of-range fields.
  void validate() const;
};

/// One `key = value` entry of a flat configuration document.
struct ConfigEntry {
  std::string value;
  std::size_t line = 0;
};

/// Flat key-value document: one `key = value` per line, `#` starts a comment.
class ConfigDocument {
 public:
  static ConfigDocument parse(std::istream& in);
  static ConfigDocument load(const std::filesystem::path& path);

  bool contains(const std::string& key) const { return entries_.count(key) != 0; }
  const ConfigEntry& at(const std::string& key) const;
  void set(const std::string& key, std::string value);
  const std::map<std::string, ConfigEntry>& entries() const noexcept { return entries_; }
  /// Directory of the source file, used to resolve relative table paths.
  const std::filesystem::path& base_dir() const noexcept { return base_dir_; }

 private:
  std::map<std::string, ConfigEntry> entries_;
  std::filesystem::path base_dir_;
};

/// Builds a SimConfig. Unknown keys, missing required keys (n_cells,
/// boundary.kind, t_final) and malformed values raise ConfigError.
SimConfig config_from_document(const ConfigDocument& doc);
SimConfig load_config(const std::filesystem::path& path);

/// Keys accepted by config_from_document.
const std::vector<std::string>& known_config_keys();

Splitting parse_splitting(const std::string& name);
const char* to_string(Splitting s) noexcept;

DampingTable load_damping_table(const std::filesystem::path& path);

}  // namespace riemwave
