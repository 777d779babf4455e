#include "optomech/config_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "optomech/csv.hpp"
#include "optomech/errors.hpp"

namespace optomech {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Value {
  std::string text;
  bool quoted = false;
  int line = 0;
};

// Strips a trailing comment that is not inside a quoted string.
std::string_view strip_comment(std::string_view line) {
  bool in_quote = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_quote = !in_quote;
    if (line[i] == '#' && !in_quote) return line.substr(0, i);
  }
  return line;
}

std::map<std::string, Value> tokenize(std::string_view text) {
  std::map<std::string, Value> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const auto line = trim(strip_comment(text.substr(pos, end - pos)));
    ++line_no;
    pos = end + 1;
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    auto raw = trim(line.substr(eq + 1));
    if (key.empty() || raw.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");
    }
    Value v{.text = {}, .quoted = false, .line = line_no};
    if (raw.front() == '"') {
      if (raw.size() < 2 || raw.back() != '"') {
        throw ConfigError("line " + std::to_string(line_no) + ": unterminated string");
      }
      v.text = std::string(raw.substr(1, raw.size() - 2));
      v.quoted = true;
    } else {
      v.text = std::string(raw);
    }
    if (!entries.emplace(key, v).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
  }
  return entries;
}

double to_number(const std::string& key, const Value& v) {
  if (v.quoted) throw ConfigError("key '" + key + "' expects a number");
  std::string_view s = v.text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("key '" + key + "': cannot parse '" + v.text + "' as a number");
  }
  return x;
}

}  // namespace

PhysicalConfig parse_config(std::string_view text) {
  auto entries = tokenize(text);
  PhysicalConfig cfg;

  auto take = [&](const std::string& key) -> std::optional<Value> {
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    Value v = it->second;
    entries.erase(it);
    return v;
  };
  auto number = [&](const std::string& key) {
    auto v = take(key);
    if (!v) throw ConfigError("missing required key '" + key + "'");
    return to_number(key, *v);
  };

  cfg.kappa_hz = number("kappa_hz");
  cfg.gamma1 = number("gamma1_over_kappa");
  cfg.gamma2 = number("gamma2_over_kappa");
  cfg.g0 = number("g0_over_kappa");
  cfg.lambda0 = number("lambda0_over_kappa");
  cfg.delta1 = number("delta1_over_kappa");
  cfg.delta2 = number("delta2_over_kappa");
  cfg.nth1 = number("nth1");
  cfg.nth2 = number("nth2");
  cfg.omega_d_hz = number("omega_d_hz");

  const auto da_num = take("delta_a_over_kappa");
  const auto da_sym = take("delta_a");
  if (da_num.has_value() == da_sym.has_value()) {
    throw ConfigError("exactly one of delta_a_over_kappa or delta_a must be given");
  }
  if (da_num) {
    cfg.delta_a = to_number("delta_a_over_kappa", *da_num);
  } else if (da_sym->text == "omega1p") {
    cfg.delta_a = OptimalDetuning::Omega1p;
  } else if (da_sym->text == "omega2p") {
    cfg.delta_a = OptimalDetuning::Omega2p;
  } else {
    throw ConfigError("delta_a must be \"omega1p\" or \"omega2p\", got '" + da_sym->text + "'");
  }

  const auto power = take("power_watts");
  const auto eps = take("eps_d_over_kappa");
  if (power.has_value() == eps.has_value()) {
    throw ConfigError("exactly one of power_watts or eps_d_over_kappa must be given");
  }
  if (power) {
    cfg.drive = DrivePower{to_number("power_watts", *power)};
  } else {
    cfg.drive = DriveAmplitude{to_number("eps_d_over_kappa", *eps)};
  }

  const auto cc = take("coupling_case");
  if (!cc) throw ConfigError("missing required key 'coupling_case'");
  if (cc->text == "one") {
    cfg.coupling_case = CouplingCase::One;
  } else if (cc->text == "two") {
    cfg.coupling_case = CouplingCase::Two;
  } else {
    throw ConfigError("coupling_case must be \"one\" or \"two\", got '" + cc->text + "'");
  }

  if (const auto ratio = take("g2_over_g1")) cfg.g2_over_g1 = to_number("g2_over_g1", *ratio);

  if (!entries.empty()) {
    throw ConfigError("unknown key '" + entries.begin()->first + "' on line " +
                      std::to_string(entries.begin()->second.line));
  }
  cfg.validate();
  return cfg;
}

PhysicalConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string format_config(const PhysicalConfig& cfg) {
  using csv::format_number;
  std::ostringstream out;
  out << "kappa_hz = " << format_number(cfg.kappa_hz) << '\n'
      << "gamma1_over_kappa = " << format_number(cfg.gamma1) << '\n'
      << "gamma2_over_kappa = " << format_number(cfg.gamma2) << '\n'
      << "g0_over_kappa = " << format_number(cfg.g0) << '\n'
      << "lambda0_over_kappa = " << format_number(cfg.lambda0) << '\n'
      << "delta1_over_kappa = " << format_number(cfg.delta1) << '\n'
      << "delta2_over_kappa = " << format_number(cfg.delta2) << '\n';
  if (const auto* d = std::get_if<double>(&cfg.delta_a)) {
    out << "delta_a_over_kappa = " << format_number(*d) << '\n';
  } else {
    out << "delta_a = \""
        << (std::get<OptimalDetuning>(cfg.delta_a) == OptimalDetuning::Omega1p ? "omega1p"
                                                                               : "omega2p")
        << "\"\n";
  }
  out << "nth1 = " << format_number(cfg.nth1) << '\n'
      << "nth2 = " << format_number(cfg.nth2) << '\n'
      << "omega_d_hz = " << format_number(cfg.omega_d_hz) << '\n';
  if (const auto* p = std::get_if<DrivePower>(&cfg.drive)) {
    out << "power_watts = " << format_number(p->watts) << '\n';
  } else {
    out << "eps_d_over_kappa = " << format_number(std::get<DriveAmplitude>(cfg.drive).over_kappa)
        << '\n';
  }
  out << "coupling_case = \"" << (cfg.coupling_case == CouplingCase::One ? "one" : "two")
      << "\"\n"
      << "g2_over_g1 = " << format_number(cfg.g2_over_g1) << '\n';
  return out.str();
}

}  // namespace optomech
