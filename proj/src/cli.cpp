#include "optomech/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "optomech/config_io.hpp"
#include "optomech/cooling.hpp"
#include "optomech/csv.hpp"
#include "optomech/errors.hpp"
#include "optomech/fock_oracle.hpp"
#include "optomech/gaussian.hpp"
#include "optomech/meanfield.hpp"
#include "optomech/measures.hpp"
#include "optomech/pipeline.hpp"
#include "optomech/squeezed_frame.hpp"
#include "optomech/sweep.hpp"

namespace optomech {

namespace {

struct Common {
  std::string config_path;
  std::optional<double> alpha;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config_path, "parameter file")->required();
  sub->add_option("--alpha", c.alpha, "choose the drive so that |alpha| equals this value");
}

PhysicalConfig load_with_alpha(const Common& c) {
  PhysicalConfig cfg = load_config(c.config_path);
  if (c.alpha) cfg.drive = DriveAmplitude{drive_for_target_alpha(cfg, *c.alpha)};
  return cfg;
}

void emit(std::ostream& out, const std::vector<std::string>& header,
          const std::vector<double>& values) {
  std::vector<std::string> row;
  row.reserve(values.size());
  for (double v : values) row.push_back(csv::format_number(v));
  out << csv::join_row(header) << '\n' << csv::join_row(row) << '\n';
}

void cmd_steady(const Common& c, std::ostream& out) {
  const PhysicalConfig cfg = load_with_alpha(c);
  const auto s = solve_mean_field(cfg);
  emit(out,
       {"eps_d_over_kappa", "alpha_re", "alpha_im", "alpha_abs", "beta1", "beta2",
        "delta_a_over_kappa", "residual"},
       {s.eps_d, s.alpha.real(), s.alpha.imag(), std::abs(s.alpha), s.beta1, s.beta2, s.delta_a,
        s.residual});
}

void cmd_frame(const Common& c, std::ostream& out) {
  const PhysicalConfig cfg = load_with_alpha(c);
  const auto f = build_squeezed_frame(cfg, solve_mean_field(cfg));
  emit(out,
       {"r", "omega1p_over_kappa", "omega2p_over_kappa", "G1p_over_kappa", "G2p_over_kappa",
        "gamma1p_over_kappa", "gamma2p_over_kappa", "nth1p", "nth2p"},
       {f.r, f.omega1p, f.omega2p, f.G1p, f.G2p, f.gamma1p, f.gamma2p, f.nth1p, f.nth2p});
}

void cmd_measures(const Common& c, std::ostream& out) {
  const PhysicalConfig cfg = load_with_alpha(c);
  const auto p = evaluate_point_strict(cfg, {.fixed_alpha_abs = std::nullopt, .with_cooling = false});
  emit(out, {"log_negativity", "purity", "n_eff1", "n_eff2", "fidelity"},
       {p.entanglement->log_negativity, p.quality->mu, p.quality->n_eff1, p.quality->n_eff2,
        p.quality->fidelity});
}

void cmd_cooling(const Common& c, std::ostream& out) {
  const PhysicalConfig cfg = load_with_alpha(c);
  if (cfg.coupling_case != CouplingCase::One) {
    throw DomainError("cooling analytics cover coupling case one only");
  }
  const auto mf = solve_mean_field(cfg);
  const auto rep = cooling_analysis(build_squeezed_frame(cfg, mf), mf.delta_a);
  emit(out,
       {"gamma_minus1_over_kappa", "gamma_plus1_over_kappa", "gamma_minus2_over_kappa",
        "gamma_plus2_over_kappa", "gamma_net1_over_kappa", "gamma_net2_over_kappa", "n_eff1",
        "n_eff2"},
       {rep.gamma_minus1, rep.gamma_plus1, rep.gamma_minus2, rep.gamma_plus2, rep.gamma_net1,
        rep.gamma_net2, rep.n_eff1, rep.n_eff2});
}

void cmd_oracle(const Common& c, const std::vector<int>& cutoffs, std::ostream& out) {
  if (cutoffs.size() != 3) throw ConfigError("--cutoffs takes three integers a,b,c");
  const PhysicalConfig cfg = load_with_alpha(c);
  const auto model = linearized_model(cfg, solve_mean_field(cfg));
  const auto lyap = solve_lyapunov_steady(build_drift_diffusion(model));
  HilbertSpec spec;
  spec.cutoff_a = cutoffs[0];
  spec.cutoff_1 = cutoffs[1];
  spec.cutoff_2 = cutoffs[2];
  spec.max_dimension = 4096;
  const auto oracle = run_oracle(model, spec);
  const double diff = (oracle.second_moments - lyap.covariance).cwiseAbs().maxCoeff();
  emit(out,
       {"max_abs_discrepancy", "tail", "oracle_residual", "lyapunov_residual", "hilbert_dimension"},
       {diff, oracle.tail, oracle.solver_residual, lyap.residual,
        static_cast<double>(spec.dimension())});
}

void cmd_stability_map(const Common& c, const std::string& g0_range, const std::string& l0_range,
                       double alpha, std::ostream& out) {
  SweepSpec spec;
  spec.name = "stability-map";
  spec.kind = ScenarioKind::StabilityMap;
  spec.base = load_config(c.config_path);
  spec.fixed_alpha_abs = alpha;
  spec.axes = {parse_axis(SweepVariable::G0, g0_range, false),
               parse_axis(SweepVariable::Lambda0, l0_range, false)};
  out << run_scenario(spec).to_csv();
}

Output parse_output(std::string_view s) {
  static const std::map<std::string_view, Output> names{
      {"alpha", Output::Alpha}, {"beta", Output::Beta},     {"r", Output::R},
      {"Omega_p", Output::OmegaP}, {"E_N", Output::EN},     {"mu", Output::Mu},
      {"n_eff", Output::NEff},  {"F", Output::F},           {"margin", Output::Margin},
      {"rates", Output::Rates}};
  const auto it = names.find(s);
  if (it == names.end()) throw ConfigError("unknown output '" + std::string(s) + "'");
  return it->second;
}

struct SweepArgs {
  std::string preset;
  std::string config_path;
  std::string var;
  std::string range;
  bool log = false;
  std::string var2;
  std::string range2;
  bool log2 = false;
  std::optional<double> alpha;
  std::vector<std::string> outputs;
  std::string out_path;
  unsigned threads = 0;
};

SweepSpec sweep_spec_from(const SweepArgs& a) {
  if (!a.preset.empty()) {
    if (!a.config_path.empty() || !a.var.empty()) {
      throw ConfigError("--preset cannot be combined with --config/--var");
    }
    return figure_preset(a.preset);
  }
  if (a.config_path.empty() || a.var.empty() || a.range.empty()) {
    throw ConfigError("sweep needs --preset, or --config with --var and --range");
  }
  SweepSpec spec;
  spec.name = "custom";
  spec.base = load_config(a.config_path);
  spec.axes.push_back(parse_axis(parse_sweep_variable(a.var), a.range, a.log));
  if (!a.var2.empty() || !a.range2.empty()) {
    if (a.var2.empty() || a.range2.empty()) throw ConfigError("--var2 needs --range2");
    spec.axes.push_back(parse_axis(parse_sweep_variable(a.var2), a.range2, a.log2));
  }
  spec.fixed_alpha_abs = a.alpha;
  if (a.outputs.empty()) {
    spec.outputs = {Output::Alpha, Output::EN, Output::Mu, Output::NEff, Output::F,
                    Output::Margin};
  } else {
    for (const auto& o : a.outputs) spec.outputs.push_back(parse_output(o));
  }
  return spec;
}

void cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const SweepSpec spec = sweep_spec_from(a);
  const auto result = run_scenario(spec, a.threads);
  if (a.out_path.empty()) {
    out << result.to_csv();
    return;
  }
  std::ofstream f(a.out_path, std::ios::binary);
  if (!f) throw Error("cannot open '" + a.out_path + "' for writing");
  f << result.to_csv();
  if (!f.flush()) throw Error("write to '" + a.out_path + "' failed");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steady-state entanglement of two parametrically coupled mechanical modes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  Common common;
  auto* steady = app.add_subcommand("steady", "mean-field amplitudes");
  add_common(steady, common);
  auto* frame = app.add_subcommand("frame", "squeezed-frame parameters");
  add_common(frame, common);
  auto* measures = app.add_subcommand("measures", "entanglement, purity, occupations, fidelity");
  add_common(measures, common);
  auto* cooling = app.add_subcommand("cooling", "analytic cooling rates and occupations");
  add_common(cooling, common);

  std::vector<int> cutoffs{6, 6, 6};
  auto* oracle = app.add_subcommand("oracle-check", "Fock-basis cross-check of the covariance");
  add_common(oracle, common);
  oracle->add_option("--cutoffs", cutoffs, "Fock cutoffs for cavity, b1, b2")->delimiter(',');

  std::string g0_range;
  std::string l0_range;
  double map_alpha = 100.0;
  auto* smap = app.add_subcommand("stability-map", "drift-matrix margin over g0 x lambda0");
  smap->add_option("--config", common.config_path, "parameter file")->required();
  smap->add_option("--g0-range", g0_range, "start:stop:points")->required();
  smap->add_option("--lambda0-range", l0_range, "start:stop:points")->required();
  smap->add_option("--alpha", map_alpha, "|alpha| held fixed across the map");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  sweep->add_option("--preset", sa.preset, "figure preset")
      ->check(CLI::IsMember(preset_names()));
  sweep->add_option("--config", sa.config_path, "base parameter file");
  sweep->add_option("--var", sa.var, "swept variable");
  sweep->add_option("--range", sa.range, "start:stop:points");
  sweep->add_flag("--log", sa.log, "logarithmic spacing");
  sweep->add_option("--var2", sa.var2, "second (inner) swept variable");
  sweep->add_option("--range2", sa.range2, "start:stop:points");
  sweep->add_flag("--log2", sa.log2, "logarithmic spacing on the second axis");
  sweep->add_option("--alpha", sa.alpha, "hold |alpha| fixed");
  sweep->add_option("--outputs", sa.outputs, "alpha,beta,r,Omega_p,E_N,mu,n_eff,F,margin,rates")
      ->delimiter(',');
  sweep->add_option("--out", sa.out_path, "write CSV here instead of stdout");
  sweep->add_option("--threads", sa.threads, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (*steady) cmd_steady(common, out);
    else if (*frame) cmd_frame(common, out);
    else if (*measures) cmd_measures(common, out);
    else if (*cooling) cmd_cooling(common, out);
    else if (*oracle) cmd_oracle(common, cutoffs, out);
    else if (*smap) cmd_stability_map(common, g0_range, l0_range, map_alpha, out);
    else if (*sweep) cmd_sweep(sa, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace optomech
