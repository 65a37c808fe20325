#pragma once

#include "casimir/mirror.hpp"
#include "casimir/response.hpp"
#include "casimir/spectra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace casimir {

// Length-scale hierarchy labels for the closed-form scaling laws. Every "<<"
// of the asymptotic orderings is realized as a ratio of at least `threshold`
// (default 10); anything less separated is `crossover`.
enum class Regime {
  pfa_short,     // L << lambda_p << l_C
  pfa_long,      // lambda_p << L << l_C
  perfect_rough, // lambda_p << l_C << L
  plasmon_rough, // l_C << L << lambda_p
  saturated,     // l_C << lambda_p << L
  crossover
};

std::string to_string(Regime regime);

struct CorrectionResult {
  double delta;     // relative correction, one number for both the
                    // plane-plane energy and the plane-sphere PFA force
  ResponseModel model;
  Regime regime;
  double quad_error;
  std::vector<std::string> warnings;
};

// Relative roughness correction
//   Delta = [E'' L^2 / (2 E)] (1/L^2) (1/2 pi) Int_0^inf k rho_model(k) sigma(k) dk
// with rho_pfa = 1.
CorrectionResult delta(double L_nm, const MirrorSpec& mirror,
                       const RoughnessSpectrum& spectrum, ResponseModel model,
                       double rel_tol = 1e-6);

// Model selection when the caller asks for `auto`: PFA-dominant spectra
// (l_C >= 10 L) -> pfa; small plasma wavelength in the long-distance regime
// -> perfect_reflector; otherwise stitched (with a heuristic warning).
ResponseModel choose_model(double L_nm, const MirrorSpec& mirror,
                           const RoughnessSpectrum& spectrum);

Regime classify_regime(double L_nm, double lambda_p_nm, double l_c_nm,
                       double threshold = 10.0);

// Closed-form scaling law for a deep regime, verbatim from the asymptotic
// analysis. Throws std::invalid_argument for `crossover`.
double scaling_delta(Regime regime, double L_nm, double lambda_p_nm,
                     double l_c_nm, double a2_nm2);

} // namespace casimir
