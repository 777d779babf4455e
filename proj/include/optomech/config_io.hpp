#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "optomech/params.hpp"

namespace optomech {

// Flat `key = value` files (a TOML subset: numbers, quoted strings, `#`
// comments). Recognised keys:
//
//   kappa_hz, gamma1_over_kappa, gamma2_over_kappa, g0_over_kappa,
//   lambda0_over_kappa, delta1_over_kappa, delta2_over_kappa,
//   delta_a_over_kappa | delta_a = "omega1p" | "omega2p",
//   nth1, nth2, omega_d_hz, power_watts | eps_d_over_kappa,
//   coupling_case = "one" | "two", g2_over_g1 (optional, default 1)
//
// Every key except g2_over_g1 is required; unknown or duplicated keys are
// rejected with ConfigError.
PhysicalConfig parse_config(std::string_view text);
PhysicalConfig load_config(const std::filesystem::path& path);

// Canonical serialisation; parse_config(format_config(c)) reproduces c.
std::string format_config(const PhysicalConfig& cfg);

}  // namespace optomech
