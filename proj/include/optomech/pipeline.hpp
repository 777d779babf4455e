#pragma once

#include <optional>
#include <string>

#include "optomech/cooling.hpp"
#include "optomech/gaussian.hpp"
#include "optomech/meanfield.hpp"
#include "optomech/measures.hpp"
#include "optomech/squeezed_frame.hpp"

namespace optomech {

/// Everything computed at one working point. Stages that could not run are
/// left empty and `error` says why.
struct PointResult {
  std::optional<MeanFieldSolution> mean_field;
  std::optional<SqueezedFrame> frame;
  std::optional<double> margin;
  std::optional<LyapunovSolution> lyapunov;
  std::optional<EntanglementReport> entanglement;
  std::optional<StateQuality> quality;
  std::optional<CoolingReport> cooling;
  std::string error;

  bool ok() const { return error.empty(); }
};

struct PipelineOptions {
  // When set, the drive is chosen per point so that |alpha| equals this value.
  std::optional<double> fixed_alpha_abs;
  bool with_cooling = true;
};

/// mean field -> squeezed frame -> drift/diffusion -> Lyapunov -> measures
/// (+ cooling analytics). Library errors are caught and recorded.
PointResult evaluate_point(const PhysicalConfig& cfg, const PipelineOptions& options = {});

/// Same chain, but errors propagate.
PointResult evaluate_point_strict(const PhysicalConfig& cfg,
                                  const PipelineOptions& options = {});

}  // namespace optomech
