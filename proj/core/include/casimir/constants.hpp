#pragma once

namespace casimir {

// All unit restoration flows through this table. Internal computation is
// dimensionless; lengths enter in nm and are converted here.
namespace constants {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double pi_sq = pi * pi;

// hbar * c in J*m
inline constexpr double hbar_c_joule_meter = 3.16152677e-26;

inline constexpr double nm_to_m = 1e-9;

// Reduced energy of an ideal-mirror cavity: e = -pi^2/720.
inline constexpr double ideal_reduced_energy = -pi_sq / 720.0;

// Reduced PFA response of an ideal-mirror cavity: g0 = E''L^5/(2 hbar c A) = -pi^2/120.
inline constexpr double ideal_reduced_g0 = -pi_sq / 120.0;

} // namespace constants

} // namespace casimir
