#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fieldlink/field_model.hpp"
#include "fieldlink/qgem.hpp"
#include "fieldlink/scenario.hpp"

namespace fieldlink {

/// Parsed contents of a run configuration file. Sections: [field],
/// [scenario], [object_a.right], [object_a.left], [object_b.right],
/// [object_b.left], [amplitudes], [qgem]. Keys are `key = value` pairs,
/// '#' starts a comment, trajectory nodes are `(t,x);(t,x);...` lists
/// ((t,x,y,z) under [qgem]) and weights `(t,w);...` lists.
struct RunConfig {
  FieldSpec field;
  std::optional<Scenario> scenario;
  std::optional<QgemConfig> qgem;
  int quad_steps = 512;
  double margin = 0.0;

  const Scenario& require_scenario() const;
  const QgemConfig& require_qgem() const;
  double quad_step() const;       ///< scenario t_final / quad_steps
  double qgem_quad_step() const;  ///< qgem t_final / quad_steps
};

/// Parses a config file from disk. Throws ConfigError (file access) or
/// ParseError (syntax / unknown keys, with file:line diagnostics).
RunConfig load_config(const std::string& path);

/// Parses config text; `source_name` labels diagnostics.
RunConfig parse_config(std::string_view text, const std::string& source_name);

/// Applies a dotted-key override (e.g. "field.mode_cutoff", "quad_steps",
/// "scenario.coupling_a"). Used by the sweep subcommand and CLI flags.
/// Throws ConfigError for unknown keys or invalid values.
void apply_override(RunConfig& config, const std::string& key, const std::string& value);

/// Numeric value of a sweepable key (the same set apply_override accepts).
double read_parameter(const RunConfig& config, const std::string& key);

}  // namespace fieldlink
