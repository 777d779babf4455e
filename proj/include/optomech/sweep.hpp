#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "optomech/params.hpp"

namespace optomech {

// CouplingCase is a discrete axis: value 1 selects case one, 2 case two.
enum class SweepVariable { Power, DeltaA, Delta1, Lambda0, Nth, G0, CouplingCase };

struct Axis {
  SweepVariable variable = SweepVariable::Power;
  double start = 0.0;
  double stop = 0.0;
  int points = 2;
  bool log = false;

  std::vector<double> values() const;
};

enum class Output { Alpha, Beta, R, OmegaP, EN, Mu, NEff, F, Margin, Rates };

enum class ScenarioKind {
  Pipeline,      // full chain per grid point
  StabilityMap,  // drift margin only, axes g0 x lambda0 at fixed |alpha|
};

struct SweepSpec {
  std::string name;
  PhysicalConfig base;
  std::vector<Axis> axes;  // one or two; the last axis varies fastest
  std::vector<Output> outputs;
  ScenarioKind kind = ScenarioKind::Pipeline;
  std::optional<double> fixed_alpha_abs;
  // When set, a lambda0 sweep moves Delta1 and Delta2 together so that
  // Delta1 + Delta2 - 2 lambda0 equals this value at fixed Delta1 - Delta2.
  std::optional<double> detuning_excess;

  /// Throws ConfigError.
  void validate() const;
};

struct ScenarioResult {
  std::vector<std::string> provenance;  // without the leading '#'
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
};

/// Evaluates every grid point (concurrently when threads > 1) and assembles
/// rows in grid order. Per-point failures land in the `error` column.
ScenarioResult run_scenario(const SweepSpec& spec, unsigned threads = 0);

SweepSpec figure_preset(std::string_view name);
std::vector<std::string> preset_names();

SweepVariable parse_sweep_variable(std::string_view name);
std::string_view sweep_variable_column(SweepVariable v);

/// Parses "start:stop:points".
Axis parse_axis(SweepVariable v, std::string_view range, bool log);

std::string_view tool_version();

}  // namespace optomech
