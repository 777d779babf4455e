#include "optomech/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <sstream>
#include <thread>

#include "optomech/config_io.hpp"
#include "optomech/csv.hpp"
#include "optomech/errors.hpp"
#include "optomech/gaussian.hpp"
#include "optomech/pipeline.hpp"

namespace optomech {

namespace {

struct VariableName {
  SweepVariable var;
  std::string_view key;
  std::string_view column;
};

constexpr VariableName kVariables[] = {
    {SweepVariable::Power, "power", "power_watts"},
    {SweepVariable::DeltaA, "delta_a", "delta_a_over_kappa"},
    {SweepVariable::Delta1, "delta1", "delta1_over_kappa"},
    {SweepVariable::Lambda0, "lambda0", "lambda0_over_kappa"},
    {SweepVariable::Nth, "nth", "nth"},
    {SweepVariable::G0, "g0", "g0_over_kappa"},
    {SweepVariable::CouplingCase, "coupling_case", "coupling_case"},
};

std::string_view output_key(Output o) {
  switch (o) {
    case Output::Alpha: return "alpha";
    case Output::Beta: return "beta";
    case Output::R: return "r";
    case Output::OmegaP: return "Omega_p";
    case Output::EN: return "E_N";
    case Output::Mu: return "mu";
    case Output::NEff: return "n_eff";
    case Output::F: return "F";
    case Output::Margin: return "margin";
    case Output::Rates: return "rates";
  }
  return "?";
}

std::vector<std::string> output_columns(Output o, bool delta_a_is_axis) {
  switch (o) {
    case Output::Alpha: {
      std::vector<std::string> c{"eps_d_over_kappa", "alpha_abs", "alpha_re", "alpha_im"};
      if (!delta_a_is_axis) c.emplace_back("delta_a_over_kappa");
      return c;
    }
    case Output::Beta: return {"beta1", "beta2", "beta2_abs"};
    case Output::R: return {"r"};
    case Output::OmegaP: return {"omega1p_over_kappa", "omega2p_over_kappa"};
    case Output::EN: return {"log_negativity"};
    case Output::Mu: return {"purity"};
    case Output::NEff: return {"n_eff1", "n_eff2"};
    case Output::F: return {"fidelity"};
    case Output::Margin: return {"margin_over_kappa"};
    case Output::Rates:
      return {"gamma_minus1_over_kappa", "gamma_plus1_over_kappa", "gamma_minus2_over_kappa",
              "gamma_plus2_over_kappa", "n_eff1_analytic", "n_eff2_analytic"};
  }
  return {};
}

template <class T, class F>
std::optional<double> pick(const std::optional<T>& src, F f) {
  if (!src) return std::nullopt;
  return f(*src);
}

std::vector<std::string> output_values(Output o, const PointResult& p, bool delta_a_is_axis) {
  using csv::format_optional;
  std::vector<std::optional<double>> v;
  const auto& mf = p.mean_field;
  switch (o) {
    case Output::Alpha:
      v = {pick(mf, [](auto& m) { return m.eps_d; }),
           pick(mf, [](auto& m) { return std::abs(m.alpha); }),
           pick(mf, [](auto& m) { return m.alpha.real(); }),
           pick(mf, [](auto& m) { return m.alpha.imag(); })};
      if (!delta_a_is_axis) v.push_back(pick(mf, [](auto& m) { return m.delta_a; }));
      break;
    case Output::Beta:
      v = {pick(mf, [](auto& m) { return m.beta1; }), pick(mf, [](auto& m) { return m.beta2; }),
           pick(mf, [](auto& m) { return std::abs(m.beta2); })};
      break;
    case Output::R: v = {pick(p.frame, [](auto& f) { return f.r; })}; break;
    case Output::OmegaP:
      v = {pick(p.frame, [](auto& f) { return f.omega1p; }),
           pick(p.frame, [](auto& f) { return f.omega2p; })};
      break;
    case Output::EN:
      v = {pick(p.entanglement, [](auto& e) { return e.log_negativity; })};
      break;
    case Output::Mu: v = {pick(p.quality, [](auto& q) { return q.mu; })}; break;
    case Output::NEff:
      v = {pick(p.quality, [](auto& q) { return q.n_eff1; }),
           pick(p.quality, [](auto& q) { return q.n_eff2; })};
      break;
    case Output::F: v = {pick(p.quality, [](auto& q) { return q.fidelity; })}; break;
    case Output::Margin: v = {p.margin}; break;
    case Output::Rates:
      v = {pick(p.cooling, [](auto& c) { return c.gamma_minus1; }),
           pick(p.cooling, [](auto& c) { return c.gamma_plus1; }),
           pick(p.cooling, [](auto& c) { return c.gamma_minus2; }),
           pick(p.cooling, [](auto& c) { return c.gamma_plus2; }),
           pick(p.cooling, [](auto& c) { return c.n_eff1; }),
           pick(p.cooling, [](auto& c) { return c.n_eff2; })};
      break;
  }
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(format_optional(x));
  return out;
}

PhysicalConfig apply_axis(PhysicalConfig cfg, const SweepSpec& spec, SweepVariable var,
                          double value) {
  switch (var) {
    case SweepVariable::Power: cfg.drive = DrivePower{value}; break;
    case SweepVariable::DeltaA: cfg.delta_a = value; break;
    case SweepVariable::Delta1: cfg.delta1 = value; break;
    case SweepVariable::Lambda0:
      cfg.lambda0 = value;
      if (spec.detuning_excess) {
        const double diff = spec.base.delta1 - spec.base.delta2;
        const double sum = 2.0 * value + *spec.detuning_excess;
        cfg.delta1 = 0.5 * (sum + diff);
        cfg.delta2 = 0.5 * (sum - diff);
      }
      break;
    case SweepVariable::Nth: cfg.nth1 = cfg.nth2 = value; break;
    case SweepVariable::G0: cfg.g0 = value; break;
    case SweepVariable::CouplingCase:
      cfg.coupling_case = value == 2.0 ? CouplingCase::Two : CouplingCase::One;
      break;
  }
  return cfg;
}

bool has_axis(const SweepSpec& spec, SweepVariable v) {
  return std::any_of(spec.axes.begin(), spec.axes.end(),
                     [v](const Axis& a) { return a.variable == v; });
}

std::string canonical_text(const SweepSpec& spec) {
  std::ostringstream s;
  s << "name=" << spec.name << '\n'
    << "kind=" << (spec.kind == ScenarioKind::Pipeline ? "pipeline" : "stability-map") << '\n'
    << format_config(spec.base);
  for (const auto& a : spec.axes) {
    s << "axis=" << sweep_variable_column(a.variable) << ':' << csv::format_number(a.start) << ':'
      << csv::format_number(a.stop) << ':' << a.points << (a.log ? ":log" : ":lin") << '\n';
  }
  for (auto o : spec.outputs) s << "output=" << output_key(o) << '\n';
  if (spec.fixed_alpha_abs) s << "alpha_abs=" << csv::format_number(*spec.fixed_alpha_abs) << '\n';
  if (spec.detuning_excess) s << "detuning_excess=" << csv::format_number(*spec.detuning_excess) << '\n';
  return s.str();
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  }
}

std::vector<std::string> stability_map_row(const SweepSpec& spec, double g0, double lambda0) {
  PhysicalConfig cfg = spec.base;
  cfg.g0 = g0;
  cfg.lambda0 = lambda0;
  LinearizedModel m;
  // Past the parametric threshold Omega'_j does not exist; keep the base
  // working point there.
  try {
    m.delta_a = working_detuning(cfg);
  } catch (const ParametricInstabilityError&) {
    m.delta_a = working_detuning(spec.base);
  }
  m.delta1 = cfg.delta1;
  m.delta2 = cfg.delta2;
  m.lambda0 = lambda0;
  m.coupling1 = g0 * *spec.fixed_alpha_abs;
  m.coupling2 = cfg.coupling_case == CouplingCase::Two ? cfg.g2_over_g1 * m.coupling1 : 0.0;
  m.gamma1 = cfg.gamma1;
  m.gamma2 = cfg.gamma2;
  m.nth1 = cfg.nth1;
  m.nth2 = cfg.nth2;
  const double margin = stability_margin(build_drift_diffusion(m));
  return {csv::format_number(g0), csv::format_number(lambda0), csv::format_number(margin), ""};
}

}  // namespace

std::vector<double> Axis::values() const {
  std::vector<double> v(static_cast<std::size_t>(std::max(points, 0)));
  for (int i = 0; i < points; ++i) {
    const double t = points > 1 ? static_cast<double>(i) / (points - 1) : 0.0;
    double x;
    if (i == points - 1) {
      x = stop;
    } else if (log) {
      x = std::pow(10.0, std::log10(start) + t * (std::log10(stop) - std::log10(start)));
    } else {
      x = start + t * (stop - start);
    }
    v[static_cast<std::size_t>(i)] = i == 0 ? start : x;
  }
  return v;
}

void SweepSpec::validate() const {
  base.validate();
  if (axes.empty() || axes.size() > 2) throw ConfigError("a sweep needs one or two axes");
  for (const auto& a : axes) {
    if (a.points < 2) throw ConfigError("an axis needs at least 2 points");
    if (!std::isfinite(a.start) || !std::isfinite(a.stop)) {
      throw ConfigError("axis range must be finite");
    }
    if (a.log && !(a.start > 0.0 && a.stop > 0.0)) {
      throw ConfigError("log axis needs positive endpoints");
    }
    if (a.variable == SweepVariable::CouplingCase) {
      for (double x : a.values()) {
        if (x != 1.0 && x != 2.0) throw ConfigError("coupling_case axis takes values 1 and 2");
      }
    }
  }
  if (axes.size() == 2 && axes[0].variable == axes[1].variable) {
    throw ConfigError("the two axes must sweep different variables");
  }
  if (fixed_alpha_abs) {
    if (!(*fixed_alpha_abs >= 0.0) || !std::isfinite(*fixed_alpha_abs)) {
      throw ConfigError("fixed |alpha| must be a finite non-negative number");
    }
    if (has_axis(*this, SweepVariable::Power)) {
      throw ConfigError("cannot sweep power at fixed |alpha|");
    }
  }
  if (detuning_excess && !has_axis(*this, SweepVariable::Lambda0)) {
    throw ConfigError("detuning_excess requires a lambda0 axis");
  }
  if (kind == ScenarioKind::StabilityMap) {
    if (axes.size() != 2 || axes[0].variable != SweepVariable::G0 ||
        axes[1].variable != SweepVariable::Lambda0) {
      throw ConfigError("a stability map sweeps g0 then lambda0");
    }
    if (!fixed_alpha_abs) throw ConfigError("a stability map needs a fixed |alpha|");
  } else if (outputs.empty()) {
    throw ConfigError("no outputs requested");
  }
}

std::string ScenarioResult::to_csv() const {
  std::string out;
  for (const auto& p : provenance) out += "# " + p + '\n';
  out += csv::join_row(header) + '\n';
  for (const auto& r : rows) out += csv::join_row(r) + '\n';
  return out;
}

ScenarioResult run_scenario(const SweepSpec& spec, unsigned threads) {
  spec.validate();

  ScenarioResult result;
  result.provenance = {"tool: optomech " + std::string(tool_version()),
                       "scenario: " + spec.name,
                       "config_hash: " + csv::fnv1a_hex(canonical_text(spec)),
                       "generated_at: " + utc_timestamp()};

  const auto first = spec.axes[0].values();
  const auto second = spec.axes.size() > 1 ? spec.axes[1].values() : std::vector<double>{0.0};
  const std::size_t n = first.size() * second.size();
  result.rows.resize(n);

  if (spec.kind == ScenarioKind::StabilityMap) {
    result.header = {"g0_over_kappa", "lambda0_over_kappa", "margin_over_kappa", "error"};
    parallel_for(n, threads, [&](std::size_t i) {
      result.rows[i] = stability_map_row(spec, first[i / second.size()], second[i % second.size()]);
    });
    return result;
  }

  const bool delta_a_axis = has_axis(spec, SweepVariable::DeltaA);
  for (const auto& a : spec.axes) result.header.emplace_back(sweep_variable_column(a.variable));
  if (spec.detuning_excess) {
    result.header.emplace_back("delta1_over_kappa");
    result.header.emplace_back("delta2_over_kappa");
  }
  for (auto o : spec.outputs) {
    for (auto& c : output_columns(o, delta_a_axis)) result.header.push_back(std::move(c));
  }
  result.header.emplace_back("error");

  const bool want_rates =
      std::find(spec.outputs.begin(), spec.outputs.end(), Output::Rates) != spec.outputs.end();

  parallel_for(n, threads, [&](std::size_t i) {
    std::vector<double> coords{first[i / second.size()]};
    if (spec.axes.size() > 1) coords.push_back(second[i % second.size()]);

    PhysicalConfig cfg = spec.base;
    for (std::size_t k = 0; k < coords.size(); ++k) {
      cfg = apply_axis(cfg, spec, spec.axes[k].variable, coords[k]);
    }
    PipelineOptions opts;
    opts.fixed_alpha_abs = spec.fixed_alpha_abs;
    opts.with_cooling = want_rates;

    std::vector<std::string> row;
    for (double c : coords) row.push_back(csv::format_number(c));
    if (spec.detuning_excess) {
      row.push_back(csv::format_number(cfg.delta1));
      row.push_back(csv::format_number(cfg.delta2));
    }
    PointResult p;
    try {
      cfg.validate();
      p = evaluate_point(cfg, opts);
    } catch (const Error& e) {
      p.error = e.what();
    }
    for (auto o : spec.outputs) {
      for (auto& v : output_values(o, p, delta_a_axis)) row.push_back(std::move(v));
    }
    row.push_back(p.error);
    result.rows[i] = std::move(row);
  });
  return result;
}

SweepVariable parse_sweep_variable(std::string_view name) {
  for (const auto& v : kVariables) {
    if (v.key == name || v.column == name) return v.var;
  }
  throw ConfigError("unknown sweep variable '" + std::string(name) + "'");
}

std::string_view sweep_variable_column(SweepVariable var) {
  for (const auto& v : kVariables) {
    if (v.var == var) return v.column;
  }
  return "?";
}

Axis parse_axis(SweepVariable v, std::string_view range, bool log) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto colon = range.find(':', pos);
    parts.push_back(range.substr(pos, colon == std::string_view::npos ? colon : colon - pos));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts.size() != 3) throw ConfigError("range must look like start:stop:points");

  auto number = [&](std::string_view s) {
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ConfigError("cannot parse '" + std::string(s) + "' in range");
    }
    return x;
  };
  Axis a;
  a.variable = v;
  a.start = number(parts[0]);
  a.stop = number(parts[1]);
  int points = 0;
  const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), points);
  if (ec != std::errc{} || ptr != parts[2].data() + parts[2].size()) {
    throw ConfigError("point count must be an integer");
  }
  a.points = points;
  a.log = log;
  return a;
}

std::string_view tool_version() { return "1.0.0"; }

std::vector<std::string> preset_names() {
  return {"fig2", "fig3", "fig4", "fig5", "fig6a", "fig6b", "fig7a", "fig7b", "fig8", "fig9"};
}

SweepSpec figure_preset(std::string_view name) {
  SweepSpec s;
  s.name = std::string(name);
  s.base = PhysicalConfig{};  // reference parameters, Delta_a = Omega'_1

  using enum SweepVariable;
  const Axis power_grid{Power, 1e-8, 1e-5, 13, true};  // 0.01 to 10 uW
  if (name == "fig2") {
    s.axes = {{Power, 1e-10, 1e-4, 25, true}};  // 1e-4 to 1e2 uW
    s.outputs = {Output::Alpha, Output::Beta};
  } else if (name == "fig3") {
    s.kind = ScenarioKind::StabilityMap;
    s.fixed_alpha_abs = 100.0;
    s.axes = {{G0, 0.0, 0.02, 41, false}, {Lambda0, 29.0, 31.0, 41, false}};
  } else if (name == "fig4") {
    s.axes = {{Delta1, 29.9, 36.0, 62, false}};
    s.outputs = {Output::R, Output::OmegaP};
  } else if (name == "fig5") {
    s.fixed_alpha_abs = 100.0;
    s.axes = {{Delta1, 30.0, 33.0, 31, false}, {DeltaA, 0.0, 12.0, 121, false}};
    s.outputs = {Output::OmegaP, Output::EN, Output::Margin};
  } else if (name == "fig6a") {
    s.axes = {{CouplingCase, 1.0, 2.0, 2, false}, {DeltaA, 3.0, 8.0, 201, false}};
    s.outputs = {Output::EN, Output::NEff, Output::Margin};
  } else if (name == "fig6b") {
    s.detuning_excess = 1.0;
    s.axes = {{Lambda0, 0.5, 30.0, 60, false}};
    s.outputs = {Output::R, Output::OmegaP, Output::EN, Output::NEff, Output::Margin};
  } else if (name == "fig7a") {
    s.axes = {{Nth, 0.0, 100.0, 101, false}};
    s.outputs = {Output::EN, Output::NEff, Output::Margin};
  } else if (name == "fig7b") {
    s.base.nth1 = s.base.nth2 = 100.0;
    s.axes = {power_grid};
    s.outputs = {Output::Alpha, Output::EN, Output::NEff, Output::Margin};
  } else if (name == "fig8") {
    // Both panels as slices of one grid: P = 10 uW and nth = 10 are grid lines.
    s.axes = {power_grid, {Nth, 0.0, 100.0, 11, false}};
    s.outputs = {Output::Mu, Output::NEff, Output::Margin};
  } else if (name == "fig9") {
    s.axes = {power_grid, {Nth, 0.0, 100.0, 11, false}};
    s.outputs = {Output::F, Output::NEff, Output::Margin};
  } else {
    throw ConfigError("unknown preset '" + std::string(name) + "'");
  }
  return s;
}

}  // namespace optomech
