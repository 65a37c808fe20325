#pragma once

#include "casimir/mirror.hpp"

#include <optional>
#include <string>
#include <vector>

namespace casimir {

struct GeometrySpec {
  double L_nm;                          // mean plate separation
  double area_nm2;                      // plate area
  std::optional<double> sphere_radius_nm; // plane-sphere geometry only
};

// Dimensionless plane-plane Casimir energy: E_PP = (hbar c A / L^3) e(K_P).
// Bounded by the ideal-mirror value: -pi^2/720 <= e <= 0.
struct ReducedEnergy {
  double e;
  double error_estimate;
};

// e(Kp) = (1/4 pi^2) Int_0^inf dK K Int_0^K dOmega Sum_p ln(1 - r_p^2 e^{-2K})
ReducedEnergy reduced_energy(double Kp, double rel_tol = 1e-6);
ReducedEnergy reduced_energy_perfect(double rel_tol = 1e-6);
ReducedEnergy reduced_energy(const MirrorSpec& mirror, double L_nm,
                             double rel_tol = 1e-6);

// Physical energy per unit area, J/m^2 (negative, attractive).
double energy_per_area(double L_nm, const MirrorSpec& mirror,
                       double rel_tol = 1e-6);

// First and second separation derivatives of the energy per area,
// J/m^3 and J/m^4. Central differences with Richardson extrapolation.
struct EnergyDerivatives {
  double energy;  // J/m^2
  double first;   // J/m^3
  double second;  // J/m^4
};
EnergyDerivatives energy_derivatives(double L_nm, const MirrorSpec& mirror,
                                     double rel_tol = 1e-6);

// Reduced PFA response g0 = G(0) L^5 / (hbar c A) = (L^5/ hbar c A) E''/2 < 0.
double pfa_g0(double L_nm, const MirrorSpec& mirror, double rel_tol = 1e-6);

// Same quantity as a function of Kp alone (scale invariance).
double pfa_g0_reduced(double Kp, double rel_tol = 1e-6);
double pfa_g0_reduced_perfect(double rel_tol = 1e-6);

// Dimensionless curvature ratio L^2 E'' / (2 E) = g0 / e, in [3, 6] for the
// plasma model (3 at Kp -> 0, 6 at Kp -> inf).
double pfa_curvature_ratio(double L_nm, const MirrorSpec& mirror,
                           double rel_tol = 1e-6);
double pfa_curvature_ratio_reduced(double Kp, double rel_tol = 1e-6);

// Plane-sphere force via PFA: F_PS = 2 pi R E_PP / A, in newtons (negative,
// attractive). Warnings flag violated validity conditions (R >> L, and when a
// correlation length is supplied, R L >> l_C^2).
struct ForceResult {
  double force_newton;
  std::vector<std::string> warnings;
};
ForceResult plane_sphere_force(double L_nm, double R_nm,
                               const MirrorSpec& mirror, double rel_tol = 1e-6,
                               std::optional<double> l_c_nm = std::nullopt);

// Omega breakpoints resolving the TM boundary layer of width ~Kp near
// Omega = 0; shared by the energy and response integrals.
std::vector<double> plasma_layer_breakpoints(double Kp);

} // namespace casimir
