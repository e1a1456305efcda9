#include "riemwave/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "riemwave/errors.hpp"

namespace riemwave {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(const ConfigDocument& doc, const std::string& key) {
  const auto& entry = doc.at(key);
  double value = 0.0;
  const char* begin = entry.value.data();
  const char* end = begin + entry.value.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError(key, entry.line, "expected a finite real number, got '" + entry.value + "'");
  }
  return value;
}

double real_or(const ConfigDocument& doc, const std::string& key, double fallback) {
  return doc.contains(key) ? parse_real(doc, key) : fallback;
}

long long parse_integer(const ConfigDocument& doc, const std::string& key) {
  const auto& entry = doc.at(key);
  long long value = 0;
  const char* begin = entry.value.data();
  const char* end = begin + entry.value.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(key, entry.line, "expected an integer, got '" + entry.value + "'");
  }
  return value;
}

void require(const ConfigDocument& doc, const std::string& key) {
  if (!doc.contains(key)) {
    throw ConfigError(key, 0, "required key is missing");
  }
}

[[noreturn]] void bad_value(const ConfigDocument& doc, const std::string& key, const std::string& why) {
  throw ConfigError(key, doc.at(key).line, why);
}

}  // namespace

std::size_t SimConfig::step_count() const {
  const double steps = std::round(t_final / dt());
  return steps > 0.0 ? static_cast<std::size_t>(steps) : 0;
}

void SimConfig::validate() const {
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw DomainError("SimConfig: t_final must be finite and non-negative");
  }
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError("SimConfig: p must lie in (1, inf)");
  }
  if (record_every == 0) {
    throw DomainError("SimConfig: record_every must be positive");
  }
}

ConfigDocument ConfigDocument::parse(std::istream& in) {
  ConfigDocument doc;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line, line_no, "expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("", line_no, "empty key");
    }
    if (value.empty()) {
      throw ConfigError(key, line_no, "empty value");
    }
    if (doc.entries_.count(key) != 0) {
      throw ConfigError(key, line_no, "duplicate key (first on line " +
                                          std::to_string(doc.entries_[key].line) + ")");
    }
    doc.entries_[key] = ConfigEntry{value, line_no};
  }
  return doc;
}

ConfigDocument ConfigDocument::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("<file>", 0, "cannot open config file " + path.string());
  }
  ConfigDocument doc = parse(in);
  doc.base_dir_ = path.parent_path();
  return doc;
}

const ConfigEntry& ConfigDocument::at(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    throw ConfigError(key, 0, "required key is missing");
  }
  return it->second;
}

void ConfigDocument::set(const std::string& key, std::string value) {
  auto& entry = entries_[key];
  entry.value = std::move(value);
}

const std::vector<std::string>& known_config_keys() {
  static const std::vector<std::string> keys = {
      "n_cells",          "boundary.kind",    "boundary.kappa",        "damping.preset",
      "damping.lambda",   "damping.x0",       "damping.eps0",          "damping.table",
      "perturbation.amplitude", "perturbation.alpha", "t_final",       "p",
      "record_every",     "splitting",        "initial.kind",          "initial.offset",
      "initial.amplitude", "initial.mode"};
  return keys;
}

SimConfig config_from_document(const ConfigDocument& doc) {
  const auto& known = known_config_keys();
  for (const auto& [key, entry] : doc.entries()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigError(key, entry.line, "unknown key");
    }
  }
  require(doc, "n_cells");
  require(doc, "boundary.kind");
  require(doc, "t_final");

  SimConfig cfg;
  const long long n = parse_integer(doc, "n_cells");
  if (n < 2) {
    bad_value(doc, "n_cells", "n_cells must be at least 2");
  }
  cfg.grid = Grid(static_cast<std::size_t>(n));

  const std::string kind = doc.at("boundary.kind").value;
  if (kind == "dirichlet") {
    cfg.boundary = BoundarySpec::dirichlet();
  } else if (kind == "neumann") {
    cfg.boundary = BoundarySpec::neumann();
  } else if (kind == "dynamic") {
    require(doc, "boundary.kappa");
    const double kappa = parse_real(doc, "boundary.kappa");
    if (!(kappa > 0.0)) {
      bad_value(doc, "boundary.kappa", "kappa must be positive");
    }
    cfg.boundary = make_boundary_dynamic(kappa);
  } else {
    bad_value(doc, "boundary.kind", "expected dirichlet, neumann or dynamic");
  }

  const double lambda = real_or(doc, "damping.lambda", 1.0);
  const double x0 = real_or(doc, "damping.x0", 0.5);
  const double eps0 = real_or(doc, "damping.eps0", 0.1);
  const std::string preset = doc.contains("damping.preset") ? doc.at("damping.preset").value : "zero";
  try {
    if (preset == "zero") {
      cfg.damping = DampingField::zero();
    } else if (preset == "constant") {
      cfg.damping = DampingField::constant(lambda);
    } else if (preset == "indicator") {
      cfg.damping = DampingField::indicator(lambda, x0, eps0);
    } else if (preset == "custom-table") {
      require(doc, "damping.table");
      std::filesystem::path table_path = doc.at("damping.table").value;
      if (table_path.is_relative()) {
        table_path = doc.base_dir() / table_path;
      }
      cfg.damping = DampingField::from_table(load_damping_table(table_path));
      if (lambda > 0.0 && doc.contains("damping.x0")) {
        cfg.damping.with_metadata(SupportMetadata{lambda, x0, eps0, std::nullopt});
      }
    } else {
      bad_value(doc, "damping.preset", "expected zero, constant, indicator or custom-table");
    }
  } catch (const DomainError& e) {
    throw ConfigError("damping.preset", doc.contains("damping.preset") ? doc.at("damping.preset").line : 0,
                      e.what());
  }

  const double amplitude = real_or(doc, "perturbation.amplitude", 0.0);
  if (amplitude != 0.0) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    cfg.damping.with_perturbation(
        [amplitude](double t, double x) { return amplitude * std::sin(two_pi * x) * std::sin(t); },
        std::abs(amplitude), true);
  }
  cfg.alpha = real_or(doc, "perturbation.alpha", 0.05);

  cfg.t_final = parse_real(doc, "t_final");
  if (!(cfg.t_final > 0.0)) {
    bad_value(doc, "t_final", "t_final must be positive");
  }
  cfg.p = real_or(doc, "p", 2.0);
  if (!(cfg.p > 1.0)) {
    bad_value(doc, "p", "p must lie in (1, inf)");
  }
  if (doc.contains("record_every")) {
    const long long every = parse_integer(doc, "record_every");
    if (every < 1) {
      bad_value(doc, "record_every", "record_every must be a positive integer");
    }
    cfg.record_every = static_cast<std::size_t>(every);
  }
  if (doc.contains("splitting")) {
    try {
      cfg.splitting = parse_splitting(doc.at("splitting").value);
    } catch (const DomainError& e) {
      bad_value(doc, "splitting", e.what());
    }
  }

  if (doc.contains("initial.kind")) {
    try {
      cfg.initial.kind = parse_initial_kind(doc.at("initial.kind").value);
    } catch (const DomainError& e) {
      bad_value(doc, "initial.kind", e.what());
    }
  }
  cfg.initial.offset = real_or(doc, "initial.offset", cfg.initial.offset);
  cfg.initial.amplitude = real_or(doc, "initial.amplitude", cfg.initial.amplitude);
  if (doc.contains("initial.mode")) {
    cfg.initial.mode = static_cast<int>(parse_integer(doc, "initial.mode"));
  }
  return cfg;
}

SimConfig load_config(const std::filesystem::path& path) {
  return config_from_document(ConfigDocument::load(path));
}

Splitting parse_splitting(const std::string& name) {
  if (name == "lie") return Splitting::Lie;
  if (name == "strang") return Splitting::Strang;
  throw DomainError("expected lie or strang, got '" + name + "'");
}

const char* to_string(Splitting s) noexcept {
  return s == Splitting::Lie ? "lie" : "strang";
}

DampingTable load_damping_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError("cannot open damping table " + path.string());
  }
  DampingTable table;
  std::string line;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.resize(hash);
    }
    if (trim(line).empty()) {
      continue;
    }
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> values;
    while (std::getline(ss, cell, ',')) {
      const std::string token = trim(cell);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw DomainError("damping table: malformed number '" + token + "'");
      }
      values.push_back(v);
    }
    if (values.size() < 2) {
      throw DomainError("damping table: each row needs a time and at least one value");
    }
    if (width == 0) {
      width = values.size();
    } else if (values.size() != width) {
      throw DomainError("damping table: rows have different lengths");
    }
    table.times.push_back(values.front());
    table.rows.emplace_back(values.begin() + 1, values.end());
  }
  return table;
}

}  // namespace riemwave
