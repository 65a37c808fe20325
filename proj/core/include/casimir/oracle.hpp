#pragma once

#include "casimir/spectra.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace casimir {

// Independent brute-force validators. Everything here is deliberately dumb:
// uniform grids, trapezoid weights, no adaptivity. Golden values frozen into
// the test fixtures come from these routines, with the grid parameters
// recorded alongside.
namespace oracle {

// Reduced plane-plane energy e(Kp) on a uniform (K, Omega) trapezoid grid.
// Second-order convergent in the grid spacing.
double trapezoid_energy(double Kp, int n_K, int n_Omega, double K_max);
double trapezoid_energy_perfect(int n_K, int n_Omega, double K_max);

// Reduced PFA response g0 via differentiation under the integral:
//   g0 = -(1/2 pi^2) Int dK K^3 Int_0^K dOmega Sum_p (f_p + f_p^2).
// Independent of both the adaptive engine and the finite-difference path.
double trapezoid_g0(double Kp, int n, double K_max);
double trapezoid_g0_perfect(int n, double K_max);

// High-k coefficient alpha/L on the same uniform grid, normalized by
// trapezoid_g0.
double trapezoid_alpha(double Kp, int n, double K_max);

// Reduced perfect-reflector response on a uniform (K, K') grid, without the
// kink split used by the adaptive path.
double trapezoid_g_perfect(double q, int n_K, int n_Kprime, double K_max);

// Zero-mean Gaussian random height field with target spectrum, via spectral
// filtering of white noise (FFT-based). Deterministic for a fixed seed.
struct SurfaceField {
  int n;           // grid points per side (power of two)
  double step_nm;  // grid spacing
  std::vector<double> h; // row-major n*n heights, nm
};
SurfaceField synthesize_surface(const RoughnessSpectrum& spectrum, int grid_n,
                                double grid_step_nm, std::uint64_t seed);

double sample_mean(const SurfaceField& field);
double sample_variance(const SurfaceField& field);

// Radially averaged periodogram estimate of sigma(k): pairs (k, sigma_hat).
std::vector<std::pair<double, double>> radial_spectrum(const SurfaceField& field,
                                                       int n_bins);

} // namespace oracle

} // namespace casimir
