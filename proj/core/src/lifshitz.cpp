#include "casimir/lifshitz.hpp"

#include "casimir/constants.hpp"
#include "casimir/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace casimir {

namespace {

using constants::pi_sq;

double energy_integrand(double K, double Omega, double Kp) {
  const ReducedPoint p{K, Omega, Kp};
  const double e2k = std::exp(-2.0 * K);
  const double te = r_te(p);
  const double tm = r_tm(p);
  return K * (std::log1p(-te * te * e2k) + std::log1p(-tm * tm * e2k)) /
         (4.0 * pi_sq);
}

// Quadrature tolerance for the energy evaluations feeding the numerical
// second derivative. The h^-2 noise amplification of the difference stencil
// sets a floor well below the caller's tolerance.
double derivative_energy_tol(double rel_tol) {
  return std::clamp(rel_tol * 1e-3, 1e-13, 1e-11);
}

// F(s) = e(Kp s) / s^3, the reduced energy profile along a separation sweep
// at fixed plasma wavelength. E'' and g0 follow from F at s = 1.
double reduced_profile(double s, double Kp, bool perfect, double e_perfect,
                       double rel_tol) {
  const double s3 = s * s * s;
  if (perfect) return e_perfect / s3;
  return reduced_energy(Kp * s, rel_tol).e / s3;
}

} // namespace

std::vector<double> plasma_layer_breakpoints(double Kp) {
  if (!(Kp > 0.0)) return {};
  return {Kp / 30.0, Kp / 3.0, Kp, 3.0 * Kp, 30.0 * Kp};
}

ReducedEnergy reduced_energy(double Kp, double rel_tol) {
  if (!(Kp >= 0.0)) throw std::domain_error("Kp must be non-negative");
  if (Kp == 0.0) return {0.0, 0.0};
  QuadratureResult r = integrate_triangle(
      [Kp](double K, double Omega) { return energy_integrand(K, Omega, Kp); },
      rel_tol, plasma_layer_breakpoints(Kp));
  return {r.value, r.abs_error_estimate};
}

ReducedEnergy reduced_energy_perfect(double rel_tol) {
  // Both loop factors reduce to e^{-2K}; the inner Omega integral is a factor
  // K, leaving a 1-D integral.
  QuadratureResult r = integrate_semi_infinite(
      [](double K) {
        return K * K * 2.0 * std::log1p(-std::exp(-2.0 * K)) / (4.0 * pi_sq);
      },
      rel_tol);
  return {r.value, r.abs_error_estimate};
}

ReducedEnergy reduced_energy(const MirrorSpec& mirror, double L_nm,
                             double rel_tol) {
  if (mirror.is_perfect()) return reduced_energy_perfect(rel_tol);
  return reduced_energy(mirror.reduced_plasma(L_nm), rel_tol);
}

double energy_per_area(double L_nm, const MirrorSpec& mirror, double rel_tol) {
  if (!(L_nm > 0.0)) throw std::domain_error("separation must be positive");
  const double L_m = L_nm * constants::nm_to_m;
  const double e = reduced_energy(mirror, L_nm, rel_tol).e;
  return constants::hbar_c_joule_meter * e / (L_m * L_m * L_m);
}

EnergyDerivatives energy_derivatives(double L_nm, const MirrorSpec& mirror,
                                     double rel_tol) {
  if (!(L_nm > 0.0)) throw std::domain_error("separation must be positive");
  const bool perfect = mirror.is_perfect();
  const double Kp = perfect ? 0.0 : mirror.reduced_plasma(L_nm);
  const double etol = derivative_energy_tol(rel_tol);
  const double e_perfect =
      perfect ? reduced_energy_perfect(etol).e : 0.0;

  auto profile = [&](double s) {
    return reduced_profile(s, Kp, perfect, e_perfect, etol);
  };

  const double L_m = L_nm * constants::nm_to_m;
  const double scale = constants::hbar_c_joule_meter / (L_m * L_m * L_m);

  EnergyDerivatives d;
  d.energy = scale * profile(1.0);
  d.first = scale / L_m * first_derivative(profile, 1.0, 1e-3);
  d.second = scale / (L_m * L_m) * second_derivative(profile, 1.0, 1e-3);
  return d;
}

double pfa_g0_reduced(double Kp, double rel_tol) {
  if (!(Kp >= 0.0)) throw std::domain_error("Kp must be non-negative");
  const double etol = derivative_energy_tol(rel_tol);
  auto profile = [&](double s) {
    return reduced_profile(s, Kp, false, 0.0, etol);
  };
  return 0.5 * second_derivative(profile, 1.0, 1e-3);
}

double pfa_g0_reduced_perfect(double rel_tol) {
  const double etol = derivative_energy_tol(rel_tol);
  const double e = reduced_energy_perfect(etol).e;
  auto profile = [&](double s) {
    return reduced_profile(s, 0.0, true, e, etol);
  };
  return 0.5 * second_derivative(profile, 1.0, 1e-3);
}

double pfa_g0(double L_nm, const MirrorSpec& mirror, double rel_tol) {
  if (!(L_nm > 0.0)) throw std::domain_error("separation must be positive");
  if (mirror.is_perfect()) return pfa_g0_reduced_perfect(rel_tol);
  return pfa_g0_reduced(mirror.reduced_plasma(L_nm), rel_tol);
}

double pfa_curvature_ratio_reduced(double Kp, double rel_tol) {
  const double g0 = pfa_g0_reduced(Kp, rel_tol);
  const double e = reduced_energy(Kp, derivative_energy_tol(rel_tol)).e;
  return g0 / e;
}

double pfa_curvature_ratio(double L_nm, const MirrorSpec& mirror,
                           double rel_tol) {
  if (mirror.is_perfect()) {
    const double etol = derivative_energy_tol(rel_tol);
    return pfa_g0_reduced_perfect(rel_tol) / reduced_energy_perfect(etol).e;
  }
  return pfa_curvature_ratio_reduced(mirror.reduced_plasma(L_nm), rel_tol);
}

ForceResult plane_sphere_force(double L_nm, double R_nm,
                               const MirrorSpec& mirror, double rel_tol,
                               std::optional<double> l_c_nm) {
  if (!(R_nm > 0.0)) throw std::domain_error("sphere radius must be positive");
  ForceResult result;
  const double R_m = R_nm * constants::nm_to_m;
  result.force_newton =
      2.0 * constants::pi * R_m * energy_per_area(L_nm, mirror, rel_tol);
  if (R_nm < 10.0 * L_nm)
    result.warnings.push_back(
        "PFA validity: R >> L violated (R < 10 L)");
  if (l_c_nm && R_nm * L_nm < 10.0 * (*l_c_nm) * (*l_c_nm))
    result.warnings.push_back(
        "PFA validity: R L >> l_C^2 violated (R L < 10 l_C^2)");
  return result;
}

} // namespace casimir
