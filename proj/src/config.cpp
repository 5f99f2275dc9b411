#include "fieldlink/config.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "fieldlink/errors.hpp"

namespace fieldlink {

namespace {

struct RawValue {
  std::string text;
  int line = 0;
  mutable bool used = false;
};

using Section = std::map<std::string, RawValue>;

struct RawConfig {
  std::string source;
  std::map<std::string, Section> sections;

  bool has(const std::string& section) const { return sections.count(section) > 0; }

  const RawValue* find(const std::string& section, const std::string& key) const {
    auto s = sections.find(section);
    if (s == sections.end()) return nullptr;
    auto k = s->second.find(key);
    if (k == s->second.end()) return nullptr;
    k->second.used = true;
    return &k->second;
  }

  [[noreturn]] void fail(int line, const std::string& message) const {
    throw ParseError(source + ":" + std::to_string(line) + ": " + message);
  }
};

const std::array<const char*, 8> kKnownSections = {
    "field",          "scenario",       "object_a.right", "object_a.left",
    "object_b.right", "object_b.left",  "amplitudes",     "qgem"};

std::string trim(std::string_view sv) {
  std::size_t b = 0, e = sv.size();
  while (b < e && std::isspace(static_cast<unsigned char>(sv[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(sv[e - 1]))) --e;
  return std::string(sv.substr(b, e - b));
}

RawConfig tokenize(std::string_view text, const std::string& source) {
  RawConfig raw;
  raw.source = source;
  std::string current_section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line_view =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string line(line_view);
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') raw.fail(line_no, "unterminated section header");
      current_section = trim(line.substr(1, line.size() - 2));
      bool known = false;
      for (const char* s : kKnownSections) known = known || current_section == s;
      if (!known) raw.fail(line_no, "unknown section [" + current_section + "]");
      raw.sections[current_section];  // allow empty sections
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) raw.fail(line_no, "expected 'key = value', got '" + line + "'");
    if (current_section.empty()) raw.fail(line_no, "key outside any [section]");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) raw.fail(line_no, "empty key");
    auto [it, inserted] = raw.sections[current_section].emplace(key, RawValue{value, line_no});
    if (!inserted) raw.fail(line_no, "duplicate key '" + key + "' in [" + current_section + "]");
  }
  return raw;
}

double parse_double(const RawConfig& raw, const RawValue& v, const std::string& what) {
  const char* begin = v.text.c_str();
  char* end = nullptr;
  const double out = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    raw.fail(v.line, "invalid number for " + what + ": '" + v.text + "'");
  return out;
}

int parse_int(const RawConfig& raw, const RawValue& v, const std::string& what) {
  const double d = parse_double(raw, v, what);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d) raw.fail(v.line, what + " must be an integer");
  return i;
}

std::complex<double> parse_complex(const RawConfig& raw, const RawValue& v, const std::string& what) {
  const std::size_t comma = v.text.find(',');
  const char* begin = v.text.c_str();
  char* end = nullptr;
  const double re = std::strtod(begin, &end);
  if (end == begin) raw.fail(v.line, "invalid complex value for " + what + ": '" + v.text + "'");
  if (comma == std::string::npos) {
    if (*end != '\0') raw.fail(v.line, "invalid complex value for " + what + ": '" + v.text + "'");
    return {re, 0.0};
  }
  const char* ibegin = v.text.c_str() + comma + 1;
  char* iend = nullptr;
  const double im = std::strtod(ibegin, &iend);
  if (iend == ibegin || *iend != '\0')
    raw.fail(v.line, "invalid complex value for " + what + ": '" + v.text + "'");
  return {re, im};
}

// "(a,b,...);(a,b,...)" with exactly `arity` numbers per tuple.
std::vector<std::vector<double>> parse_tuples(const RawConfig& raw, const RawValue& v,
                                              const std::string& what, std::size_t arity) {
  std::vector<std::vector<double>> out;
  std::stringstream ss(v.text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    if (item.front() != '(' || item.back() != ')')
      raw.fail(v.line, what + ": expected '(...)' tuple, got '" + item + "'");
    std::vector<double> tuple;
    std::stringstream ts(item.substr(1, item.size() - 2));
    std::string num;
    while (std::getline(ts, num, ',')) {
      num = trim(num);
      const char* begin = num.c_str();
      char* end = nullptr;
      const double d = std::strtod(begin, &end);
      if (end == begin || *end != '\0')
        raw.fail(v.line, what + ": invalid number '" + num + "'");
      tuple.push_back(d);
    }
    if (tuple.size() != arity)
      raw.fail(v.line, what + ": expected " + std::to_string(arity) + " numbers per tuple");
    out.push_back(std::move(tuple));
  }
  if (out.empty()) raw.fail(v.line, what + ": empty tuple list");
  return out;
}

const RawValue& require(const RawConfig& raw, const std::string& section, const std::string& key) {
  const RawValue* v = raw.find(section, key);
  if (!v) throw ParseError(raw.source + ": missing key '" + key + "' in [" + section + "]");
  return *v;
}

Trajectory parse_trajectory(const RawConfig& raw, const std::string& section) {
  const RawValue& nodes_v = require(raw, section, "nodes");
  std::vector<TrajectoryNode> nodes;
  for (const auto& t : parse_tuples(raw, nodes_v, "[" + section + "] nodes", 2))
    nodes.push_back({t[0], t[1]});
  std::vector<WeightStep> weights = {{0.0, 1.0}};
  if (const RawValue* w = raw.find(section, "weight")) {
    weights.clear();
    for (const auto& t : parse_tuples(raw, *w, "[" + section + "] weight", 2))
      weights.push_back({t[0], t[1]});
  }
  try {
    return Trajectory(std::move(nodes), std::move(weights));
  } catch (const ConfigError& e) {
    throw ParseError(raw.source + ": [" + section + "]: " + e.what());
  }
}

Trajectory3 parse_trajectory3(const RawConfig& raw, const std::string& key) {
  const RawValue& v = require(raw, "qgem", key);
  std::vector<Node3> nodes;
  for (const auto& t : parse_tuples(raw, v, "[qgem] " + key, 4))
    nodes.push_back({t[0], Eigen::Vector3d(t[1], t[2], t[3])});
  try {
    return Trajectory3(std::move(nodes));
  } catch (const ConfigError& e) {
    throw ParseError(raw.source + ": [qgem] " + key + ": " + e.what());
  }
}

void check_all_keys_used(const RawConfig& raw) {
  for (const auto& [section, keys] : raw.sections)
    for (const auto& [key, value] : keys)
      if (!value.used)
        throw ParseError(raw.source + ":" + std::to_string(value.line) + ": unknown key '" + key +
                         "' in [" + section + "]");
}

}  // namespace

const Scenario& RunConfig::require_scenario() const {
  if (!scenario) throw ConfigError("config has no scenario sections");
  return *scenario;
}

const QgemConfig& RunConfig::require_qgem() const {
  if (!qgem) throw ConfigError("config has no [qgem] section");
  return *qgem;
}

double RunConfig::quad_step() const { return require_scenario().t_final / quad_steps; }

double RunConfig::qgem_quad_step() const { return require_qgem().t_final / quad_steps; }

RunConfig parse_config(std::string_view text, const std::string& source_name) {
  const RawConfig raw = tokenize(text, source_name);
  RunConfig config;

  if (raw.has("field")) {
    if (const RawValue* v = raw.find("field", "mass")) config.field.mass = parse_double(raw, *v, "field.mass");
    if (const RawValue* v = raw.find("field", "box_length"))
      config.field.box_length = parse_double(raw, *v, "field.box_length");
    if (const RawValue* v = raw.find("field", "mode_cutoff"))
      config.field.mode_cutoff = parse_int(raw, *v, "field.mode_cutoff");
    if (const RawValue* v = raw.find("field", "smear_width"))
      config.field.smear_width = parse_double(raw, *v, "field.smear_width");
    config.field.validate();
  }

  const bool any_scenario = raw.has("scenario") || raw.has("object_a.right") ||
                            raw.has("object_a.left") || raw.has("object_b.right") ||
                            raw.has("object_b.left");
  if (any_scenario) {
    for (const char* s : {"scenario", "object_a.right", "object_a.left", "object_b.right",
                          "object_b.left", "amplitudes"}) {
      if (!raw.has(s))
        throw ParseError(source_name + ": scenario configs need section [" + std::string(s) + "]");
    }
    Trajectory a_r = parse_trajectory(raw, "object_a.right");
    Trajectory a_l = parse_trajectory(raw, "object_a.left");
    Trajectory b_r = parse_trajectory(raw, "object_b.right");
    Trajectory b_l = parse_trajectory(raw, "object_b.left");
    double t_final = a_r.t_final();
    if (const RawValue* v = raw.find("scenario", "t_final"))
      t_final = parse_double(raw, *v, "scenario.t_final");
    Scenario s{std::move(a_r),
               std::move(a_l),
               std::move(b_r),
               std::move(b_l),
               {parse_complex(raw, require(raw, "amplitudes", "alpha_r"), "alpha_r"),
                parse_complex(raw, require(raw, "amplitudes", "alpha_l"), "alpha_l")},
               {parse_complex(raw, require(raw, "amplitudes", "beta_r"), "beta_r"),
                parse_complex(raw, require(raw, "amplitudes", "beta_l"), "beta_l")},
               parse_double(raw, require(raw, "scenario", "coupling_a"), "coupling_a"),
               parse_double(raw, require(raw, "scenario", "coupling_b"), "coupling_b"),
               t_final};
    try {
      s.validate();
    } catch (const ConfigError& e) {
      throw ParseError(source_name + ": " + e.what());
    }
    config.scenario = std::move(s);
    if (const RawValue* v = raw.find("scenario", "quad_steps"))
      config.quad_steps = parse_int(raw, *v, "scenario.quad_steps");
    if (const RawValue* v = raw.find("scenario", "margin"))
      config.margin = parse_double(raw, *v, "scenario.margin");
  }

  if (raw.has("qgem")) {
    QgemConfig q;
    q.mass_a = parse_double(raw, require(raw, "qgem", "mass_a"), "qgem.mass_a");
    q.mass_b = parse_double(raw, require(raw, "qgem", "mass_b"), "qgem.mass_b");
    q.newton_g = parse_double(raw, require(raw, "qgem", "newton_g"), "qgem.newton_g");
    if (const RawValue* v = raw.find("qgem", "d_min")) q.d_min = parse_double(raw, *v, "qgem.d_min");
    q.a_branches = {parse_trajectory3(raw, "a_right"), parse_trajectory3(raw, "a_left")};
    q.b_branches = {parse_trajectory3(raw, "b_right"), parse_trajectory3(raw, "b_left")};
    q.t_final = q.a_branches[0].t_final();
    if (const RawValue* v = raw.find("qgem", "t_final"))
      q.t_final = parse_double(raw, *v, "qgem.t_final");
    if (raw.has("amplitudes")) {
      q.alpha = {parse_complex(raw, require(raw, "amplitudes", "alpha_r"), "alpha_r"),
                 parse_complex(raw, require(raw, "amplitudes", "alpha_l"), "alpha_l")};
      q.beta = {parse_complex(raw, require(raw, "amplitudes", "beta_r"), "beta_r"),
                parse_complex(raw, require(raw, "amplitudes", "beta_l"), "beta_l")};
    }
    try {
      q.validate();
    } catch (const ConfigError& e) {
      throw ParseError(source_name + ": [qgem]: " + e.what());
    }
    config.qgem = std::move(q);
  }

  if (config.quad_steps < 16) throw ParseError(source_name + ": quad_steps must be >= 16");
  check_all_keys_used(raw);
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path);
}

void apply_override(RunConfig& config, const std::string& key, const std::string& value) {
  const RawValue v{value, 0};
  RawConfig dummy;
  dummy.source = "override '" + key + "'";
  try {
    if (key == "field.mass") {
      config.field.mass = parse_double(dummy, v, key);
    } else if (key == "field.box_length") {
      config.field.box_length = parse_double(dummy, v, key);
    } else if (key == "field.mode_cutoff") {
      config.field.mode_cutoff = parse_int(dummy, v, key);
    } else if (key == "field.smear_width") {
      config.field.smear_width = parse_double(dummy, v, key);
    } else if (key == "scenario.coupling_a") {
      config.require_scenario();
      config.scenario->coupling_a = parse_double(dummy, v, key);
    } else if (key == "scenario.coupling_b") {
      config.require_scenario();
      config.scenario->coupling_b = parse_double(dummy, v, key);
    } else if (key == "scenario.margin") {
      config.margin = parse_double(dummy, v, key);
    } else if (key == "quad_steps") {
      config.quad_steps = parse_int(dummy, v, key);
      if (config.quad_steps < 16) throw ConfigError("quad_steps must be >= 16");
    } else {
      throw ConfigError("unknown override key '" + key + "'");
    }
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  }
  config.field.validate();
  if (config.scenario) config.scenario->validate();
}

double read_parameter(const RunConfig& config, const std::string& key) {
  if (key == "field.mass") return config.field.mass;
  if (key == "field.box_length") return config.field.box_length;
  if (key == "field.mode_cutoff") return config.field.mode_cutoff;
  if (key == "field.smear_width") return config.field.smear_width;
  if (key == "scenario.coupling_a") return config.require_scenario().coupling_a;
  if (key == "scenario.coupling_b") return config.require_scenario().coupling_b;
  if (key == "scenario.margin") return config.margin;
  if (key == "quad_steps") return config.quad_steps;
  throw ConfigError("unknown parameter key '" + key + "'");
}

}  // namespace fieldlink
