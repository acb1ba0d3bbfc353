#pragma once

// Batch verification configuration.
//
// Flat key/value text with one [section] per identity:
//
//   tol = 1e-10            # global keys come before the first section
//   threshold = 1e-6
//   format = json
//
//   [theorem1]
//   alpha = 0.5, 1, 2      # comma list
//   mu = 0.25:1:0.25       # inclusive start:stop:step range
//   nu_offset = 0.5, 1.5   # nu = 3k/2 + offset (instead of nu)
//   k = 0.5, 1, 2
//   y = 1
//
//   [lavoie]
//   alpha = 0.6, 1
//   beta = 1.5
//
// `grid = default` in a section selects the built-in grid for that identity.
// Points are the cartesian product of the axes, the first axis varying slowest.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "identity.hpp"
#include "identity_report.hpp"
#include "report.hpp"

namespace kstruve {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultGridCap = 10000;

struct SectionConfig {
  std::string identity;  ///< lavoie, theorem1, theorem2, corollary1, corollary2
  bool default_grid = false;
  std::map<std::string, std::vector<double>, std::less<>> axes;
};

struct RunConfig {
  std::vector<SectionConfig> sections;
  VerifyOptions verify;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> out;
  std::size_t grid_cap = kDefaultGridCap;
};

[[nodiscard]] inline std::optional<Identity> parse_identity(std::string_view s) noexcept {
  if (s == "theorem1") return Identity::theorem1;
  if (s == "theorem2") return Identity::theorem2;
  if (s == "corollary1") return Identity::corollary1;
  if (s == "corollary2") return Identity::corollary2;
  return std::nullopt;
}

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline double parse_real(std::string_view text, std::string_view key) {
  const std::string s = trim(text);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v))
    throw ConfigError("invalid number '" + s + "' for key '" + std::string(key) + "'");
  return v;
}

inline bool parse_bool(std::string_view text, std::string_view key) {
  const std::string s = trim(text);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError("invalid boolean '" + s + "' for key '" + std::string(key) + "'");
}

}  // namespace detail

/// Parses "0.5, 1, 2" or "start:stop:step" (inclusive).
inline std::vector<double> parse_axis(std::string_view text, std::string_view key) {
  std::vector<double> values;
  const std::string s = detail::trim(text);
  if (s.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(detail::parse_real(item, key));
    if (parts.size() != 3 || !(parts[2] > 0) || parts[1] < parts[0])
      throw ConfigError("range for '" + std::string(key) + "' must be start:stop:step with step > 0");
    const double count = std::floor((parts[1] - parts[0]) / parts[2] + 1e-9);
    if (count > double(kDefaultGridCap)) throw ConfigError("range for '" + std::string(key) + "' is too long");
    for (long i = 0; i <= long(count); ++i) values.push_back(parts[0] + double(i) * parts[2]);
    return values;
  }
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) values.push_back(detail::parse_real(item, key));
  if (values.empty()) throw ConfigError("empty value list for '" + std::string(key) + "'");
  return values;
}

/// Applies a global (section-less) key; returns false when the key is unknown.
inline bool apply_global_key(RunConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "tol") cfg.verify.tol = detail::parse_real(value, key);
  else if (key == "series_tol") cfg.verify.series_tol = detail::parse_real(value, key);
  else if (key == "threshold") cfg.verify.threshold = detail::parse_real(value, key);
  else if (key == "relaxed") cfg.verify.strict = !detail::parse_bool(value, key);
  else if (key == "format") {
    try {
      cfg.format = parse_format(detail::trim(value));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "out") cfg.out = detail::trim(value);
  else if (key == "grid_cap") cfg.grid_cap = static_cast<std::size_t>(detail::parse_real(value, key));
  else if (key == "threads") cfg.verify.threads = static_cast<unsigned>(detail::parse_real(value, key));
  else return false;
  return true;
}

inline RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  SectionConfig* section = nullptr;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const auto hash = line.find('#');
    const std::string text = detail::trim(std::string_view(line).substr(0, hash));
    if (text.empty()) continue;
    const auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
    if (text.front() == '[') {
      if (text.back() != ']') throw ConfigError("malformed section header" + where());
      const std::string name = detail::trim(std::string_view(text).substr(1, text.size() - 2));
      if (name != "lavoie" && !parse_identity(name)) throw ConfigError("unknown identity '" + name + "'" + where());
      section = &cfg.sections.emplace_back(SectionConfig{name, false, {}});
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value" + where());
    const std::string key = detail::trim(std::string_view(text).substr(0, eq));
    const std::string value = detail::trim(std::string_view(text).substr(eq + 1));
    if (!section) {
      if (!apply_global_key(cfg, key, value)) throw ConfigError("unknown key '" + key + "'" + where());
      continue;
    }
    if (key == "grid") {
      if (value != "default") throw ConfigError("grid must be 'default'" + where());
      section->default_grid = true;
      continue;
    }
    static constexpr std::string_view kTheoremKeys[] = {"alpha", "mu", "nu", "nu_offset", "c", "k", "y"};
    const bool known = section->identity == "lavoie"
                           ? (key == "alpha" || key == "beta")
                           : std::find(std::begin(kTheoremKeys), std::end(kTheoremKeys), key) != std::end(kTheoremKeys);
    if (!known) throw ConfigError("unknown key '" + key + "' in [" + section->identity + "]" + where());
    section->axes[key] = parse_axis(value, key);
  }
  if (!(cfg.verify.tol > 0) || !(cfg.verify.series_tol > 0) || !(cfg.verify.threshold > 0))
    throw ConfigError("tolerances must be positive");
  return cfg;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

namespace detail {

inline const std::vector<double>& axis(const SectionConfig& s, std::string_view key,
                                       const std::vector<double>& fallback) {
  const auto it = s.axes.find(key);
  return it == s.axes.end() ? fallback : it->second;
}

inline const std::vector<double>& required_axis(const SectionConfig& s, std::string_view key) {
  const auto it = s.axes.find(key);
  if (it == s.axes.end()) throw ConfigError("[" + s.identity + "] is missing '" + std::string(key) + "'");
  return it->second;
}

inline void check_cap(std::size_t size, std::size_t cap) {
  if (size > cap)
    throw ConfigError("grid has " + std::to_string(size) + " points, above the cap of " + std::to_string(cap));
}

}  // namespace detail

inline std::vector<TheoremParams> expand_theorem_grid(const SectionConfig& s, std::size_t cap = kDefaultGridCap) {
  const auto id = parse_identity(s.identity);
  if (!id) throw ConfigError("[" + s.identity + "] is not a theorem or corollary");
  if (s.default_grid) return default_grid(*id);
  static const std::vector<double> one{1.0};
  const bool offset = s.axes.count("nu_offset") != 0;
  if (offset == (s.axes.count("nu") != 0))
    throw ConfigError("[" + s.identity + "] needs exactly one of 'nu' and 'nu_offset'");
  const auto& alphas = detail::required_axis(s, "alpha");
  const auto& mus = detail::required_axis(s, "mu");
  const auto& nus = detail::required_axis(s, offset ? "nu_offset" : "nu");
  const auto& cs = detail::axis(s, "c", one);
  const auto& ks = detail::axis(s, "k", one);
  const auto& ys = detail::required_axis(s, "y");
  detail::check_cap(alphas.size() * mus.size() * nus.size() * cs.size() * ks.size() * ys.size(), cap);
  std::vector<TheoremParams> grid;
  for (double alpha : alphas)
    for (double mu : mus)
      for (double k : ks)
        for (double nu : nus)
          for (double c : cs)
            for (double y : ys) grid.push_back({alpha, mu, offset ? 1.5 * k + nu : nu, c, k, y});
  return grid;
}

inline std::vector<LavoieParams> expand_lavoie_grid(const SectionConfig& s, std::size_t cap = kDefaultGridCap) {
  std::vector<LavoieParams> grid;
  if (s.default_grid) {
    for (double a : {0.6, 1.0, 1.5, 2.0, 3.25})
      for (double b : {0.6, 1.0, 1.5, 2.0, 3.25}) grid.push_back({a, b});
    return grid;
  }
  const auto& alphas = detail::required_axis(s, "alpha");
  const auto& betas = detail::required_axis(s, "beta");
  detail::check_cap(alphas.size() * betas.size(), cap);
  for (double a : alphas)
    for (double b : betas) grid.push_back({a, b});
  return grid;
}

}  // namespace kstruve
