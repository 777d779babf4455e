#include "optomech/pipeline.hpp"

#include "optomech/errors.hpp"

namespace optomech {

namespace {

PointResult evaluate(const PhysicalConfig& base, const PipelineOptions& options, bool rethrow) {
  PointResult out;
  try {
    PhysicalConfig cfg = base;
    if (options.fixed_alpha_abs) {
      cfg.drive = DriveAmplitude{drive_for_target_alpha(cfg, *options.fixed_alpha_abs)};
    }
    out.mean_field = solve_mean_field(cfg);

    // The margin is computed before anything that could fail so that unstable
    // points still report it.
    const auto dd = build_drift_diffusion(linearized_model(cfg, *out.mean_field));
    out.margin = stability_margin(dd);

    out.frame = build_squeezed_frame(cfg, *out.mean_field);
    out.lyapunov = solve_lyapunov_steady(dd);

    const Mat4 v = mechanical_block(out.lyapunov->covariance);
    out.entanglement = logarithmic_negativity(v);
    out.quality = state_quality(v, out.frame->r);

    // Closed-form rates exist for case one only.
    if (options.with_cooling && cfg.coupling_case == CouplingCase::One) {
      out.cooling = cooling_analysis(*out.frame, out.mean_field->delta_a);
    }
  } catch (const Error& e) {
    if (rethrow) throw;
    out.error = e.what();
  }
  return out;
}

}  // namespace

PointResult evaluate_point(const PhysicalConfig& cfg, const PipelineOptions& options) {
  return evaluate(cfg, options, false);
}

PointResult evaluate_point_strict(const PhysicalConfig& cfg, const PipelineOptions& options) {
  return evaluate(cfg, options, true);
}

}  // namespace optomech
