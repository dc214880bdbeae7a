#pragma once

#include <algorithm>
#include <cctype>
#include <climits>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "f2ent/errors.hpp"
#include "f2ent/propagator.hpp"
#include "f2ent/spin_sector.hpp"
#include "f2ent/toy_model.hpp"

namespace f2ent {

namespace detail {

inline std::string trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace detail

/// Parsed INI text: [section] headers, key = value lines, full-line comments
/// starting with '#' or ';'. Duplicate keys and malformed lines are rejected.
struct IniFile {
  std::map<std::string, std::map<std::string, std::string>> sections;

  static IniFile parse(std::string_view text) {
    IniFile ini;
    std::string section;
    std::size_t lineno = 0;
    std::istringstream stream{std::string(text)};
    for (std::string raw; std::getline(stream, raw);) {
      ++lineno;
      const std::string line = detail::trim(raw);
      if (line.empty() || line.front() == '#' || line.front() == ';') continue;
      if (line.front() == '[') {
        if (line.back() != ']')
          throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header");
        section = detail::trim(line.substr(1, line.size() - 2));
        if (section.empty())
          throw ConfigError("line " + std::to_string(lineno) + ": empty section name");
        ini.sections[section];
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
      if (section.empty())
        throw ConfigError("line " + std::to_string(lineno) + ": key outside any section");
      const std::string key = detail::trim(line.substr(0, eq));
      const std::string value = detail::trim(line.substr(eq + 1));
      if (key.empty())
        throw ConfigError("line " + std::to_string(lineno) + ": empty key");
      auto [it, inserted] = ini.sections[section].emplace(key, value);
      (void)it;
      if (!inserted)
        throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
    return ini;
  }

  /// Rejects any section or key not named in the schema, so typos fail loudly
  /// instead of silently falling back to defaults.
  void enforce_schema(const std::map<std::string, std::set<std::string>>& schema) const {
    for (const auto& [section, keys] : sections) {
      const auto it = schema.find(section);
      if (it == schema.end()) throw ConfigError("unknown section [" + section + "]");
      for (const auto& [key, value] : keys) {
        (void)value;
        if (!it->second.count(key))
          throw ConfigError("unknown key '" + key + "' in section [" + section + "]");
      }
    }
  }

  bool has(const std::string& section, const std::string& key) const {
    const auto s = sections.find(section);
    return s != sections.end() && s->second.count(key) > 0;
  }

  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback = {}) const {
    const auto s = sections.find(section);
    if (s == sections.end()) return fallback;
    const auto k = s->second.find(key);
    return k == s->second.end() ? fallback : k->second;
  }

  std::string require_string(const std::string& section, const std::string& key) const {
    if (!has(section, key))
      throw ConfigError("missing required key '" + key + "' in section [" + section + "]");
    return sections.at(section).at(key);
  }

  double get_double(const std::string& section, const std::string& key,
                    double fallback) const {
    return has(section, key) ? parse_double(section, key) : fallback;
  }

  double require_double(const std::string& section, const std::string& key) const {
    require_string(section, key);
    return parse_double(section, key);
  }

  int get_int(const std::string& section, const std::string& key, int fallback) const {
    return has(section, key) ? parse_int(section, key) : fallback;
  }

  int require_int(const std::string& section, const std::string& key) const {
    require_string(section, key);
    return parse_int(section, key);
  }

  bool get_bool(const std::string& section, const std::string& key, bool fallback) const {
    if (!has(section, key)) return fallback;
    std::string v = sections.at(section).at(key);
    std::transform(v.begin(), v.end(), v.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
    if (v == "false" || v == "no" || v == "off" || v == "0") return false;
    throw ConfigError("key '" + key + "' in [" + section + "] is not a boolean: " + v);
  }

 private:
  double parse_double(const std::string& section, const std::string& key) const {
    const std::string& v = sections.at(section).at(key);
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v.size())
      throw ConfigError("key '" + key + "' in [" + section + "] is not a number: " + v);
    return x;
  }

  int parse_int(const std::string& section, const std::string& key) const {
    const std::string& v = sections.at(section).at(key);
    std::size_t used = 0;
    long x = 0;
    try {
      x = std::stol(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v.size() || x < INT_MIN || x > INT_MAX)
      throw ConfigError("key '" + key + "' in [" + section + "] is not an integer: " + v);
    return static_cast<int>(x);
  }
};

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Settings for the analytic pair-superposition sweep.
struct ToySweepSettings {
  int n_pairs = 2;
  int alpha_points = 101;

  void validate() const {
    if (n_pairs < 2) throw ConfigError("n_pairs must be at least 2");
    if (alpha_points < 2) throw ConfigError("alpha_points must be at least 2");
  }
};

inline ToySweepSettings parse_toy_config(std::string_view text) {
  const IniFile ini = IniFile::parse(text);
  ini.enforce_schema({{"toy", {"n_pairs", "alpha_points"}}});
  ToySweepSettings s;
  s.n_pairs = ini.require_int("toy", "n_pairs");
  s.alpha_points = ini.get_int("toy", "alpha_points", s.alpha_points);
  s.validate();
  return s;
}

/// Everything a scattering or measure-comparison run needs beyond the
/// physical simulation parameters.
struct ScatterRunSettings {
  ScatteringConfig sim;
  std::vector<SpinConfig> spins = {SpinConfig::same_spin};
  bool with_vne = true;
  int checkpoint_every = 0;       ///< write a WF2P checkpoint every k steps; 0 = off
  std::string resume_from;        ///< WF2P path to continue from
  std::string dump_omega = "none";  ///< "final" writes OMG1 per spin at the last snapshot

  void validate() const {
    sim.validate();
    if (spins.empty()) throw ConfigError("at least one spin configuration is required");
    if (checkpoint_every < 0) throw ConfigError("checkpoint_every must be non-negative");
    if (dump_omega != "none" && dump_omega != "final")
      throw ConfigError("dump_omega must be 'none' or 'final'");
  }
};

inline ScatterRunSettings parse_scatter_config(std::string_view text) {
  const IniFile ini = IniFile::parse(text);
  ini.enforce_schema({
      {"units", {"effective_mass", "dielectric_const"}},
      {"grid", {"nx", "ny", "dx", "dy"}},
      {"packet", {"cx", "cy", "sigma", "ek_mev", "dir_x", "dir_y"}},
      {"trap", {"hbar_omega", "cx", "cy"}},
      {"numerics", {"dt", "softening", "coulomb", "absorber", "absorber_margin"}},
      {"run",
       {"steps", "stride", "spins", "vne", "checkpoint_every", "resume_from",
        "dump_omega"}},
  });
  ScatterRunSettings s;
  UnitSystem& u = s.sim.units;
  u.effective_mass = ini.get_double("units", "effective_mass", u.effective_mass);
  u.dielectric_const = ini.get_double("units", "dielectric_const", u.dielectric_const);
  u.coulomb_scale = constants::coulomb_vacuum / u.dielectric_const;

  s.sim.grid.nx = ini.require_int("grid", "nx");
  s.sim.grid.ny = ini.require_int("grid", "ny");
  s.sim.grid.dx = ini.require_double("grid", "dx");
  s.sim.grid.dy = ini.require_double("grid", "dy");

  s.sim.packet.cx = ini.require_double("packet", "cx");
  s.sim.packet.cy = ini.require_double("packet", "cy");
  s.sim.packet.sigma = ini.require_double("packet", "sigma");
  s.sim.packet.ek_mev = ini.require_double("packet", "ek_mev");
  s.sim.packet.dir_x = ini.get_double("packet", "dir_x", 1.0);
  s.sim.packet.dir_y = ini.get_double("packet", "dir_y", 0.0);

  s.sim.trap.hbar_omega = ini.require_double("trap", "hbar_omega");
  s.sim.trap.cx = ini.require_double("trap", "cx");
  s.sim.trap.cy = ini.require_double("trap", "cy");

  s.sim.dt = ini.require_double("numerics", "dt");
  s.sim.softening = ini.get_double("numerics", "softening", 0.0);
  s.sim.coulomb_enabled = ini.get_bool("numerics", "coulomb", true);
  s.sim.absorber_enabled = ini.get_bool("numerics", "absorber", false);
  s.sim.absorber_margin = ini.get_int("numerics", "absorber_margin", 0);

  s.sim.n_steps = ini.require_int("run", "steps");
  s.sim.snapshot_stride = ini.require_int("run", "stride");
  if (ini.has("run", "spins")) {
    s.spins.clear();
    std::istringstream list(ini.get_string("run", "spins"));
    for (std::string item; std::getline(list, item, ',');) {
      const std::string name = detail::trim(item);
      if (!name.empty()) s.spins.push_back(spin_config_from(name));
    }
  }
  s.with_vne = ini.get_bool("run", "vne", true);
  s.checkpoint_every = ini.get_int("run", "checkpoint_every", 0);
  s.resume_from = ini.get_string("run", "resume_from");
  s.dump_omega = ini.get_string("run", "dump_omega", "none");
  s.validate();
  return s;
}

}  // namespace f2ent
