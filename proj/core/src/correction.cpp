#include "casimir/correction.hpp"

#include "casimir/constants.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace casimir {

namespace {

using constants::pi;

double lambda_p_or_zero(const MirrorSpec& mirror) {
  return mirror.is_perfect() ? 0.0 : mirror.lambda_p_nm();
}

} // namespace

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::pfa_short: return "pfa_short";
    case Regime::pfa_long: return "pfa_long";
    case Regime::perfect_rough: return "perfect_rough";
    case Regime::plasmon_rough: return "plasmon_rough";
    case Regime::saturated: return "saturated";
    case Regime::crossover: return "crossover";
  }
  return "unknown";
}

Regime classify_regime(double L_nm, double lambda_p_nm, double l_c_nm,
                       double threshold) {
  if (!(L_nm > 0.0) || !(lambda_p_nm >= 0.0) || !(l_c_nm > 0.0))
    throw std::domain_error("lengths must be positive");
  // lambda_p = 0 stands for the perfect mirror; ratios against it separate
  // trivially.
  auto much_less = [threshold](double small, double big) {
    if (small == 0.0) return true;
    return big / small >= threshold;
  };
  if (much_less(L_nm, lambda_p_nm) && much_less(lambda_p_nm, l_c_nm) &&
      lambda_p_nm > 0.0)
    return Regime::pfa_short;
  if (much_less(lambda_p_nm, L_nm) && much_less(L_nm, l_c_nm))
    return Regime::pfa_long;
  if (much_less(lambda_p_nm, l_c_nm) && much_less(l_c_nm, L_nm))
    return Regime::perfect_rough;
  if (much_less(l_c_nm, L_nm) && much_less(L_nm, lambda_p_nm))
    return Regime::plasmon_rough;
  if (much_less(l_c_nm, lambda_p_nm) && much_less(lambda_p_nm, L_nm))
    return Regime::saturated;
  return Regime::crossover;
}

double scaling_delta(Regime regime, double L_nm, double lambda_p_nm,
                     double l_c_nm, double a2_nm2) {
  const double sqrt_pi = std::sqrt(pi);
  switch (regime) {
    case Regime::pfa_short:
      return 3.0 * a2_nm2 / (L_nm * L_nm);
    case Regime::pfa_long:
      return 6.0 * a2_nm2 / (L_nm * L_nm);
    case Regime::perfect_rough:
      return 2.0 * sqrt_pi * a2_nm2 / (l_c_nm * L_nm);
    case Regime::plasmon_rough:
      return 2.7 * sqrt_pi * a2_nm2 / (l_c_nm * L_nm);
    case Regime::saturated:
      return (14.0 / (5.0 * sqrt_pi)) * (lambda_p_nm / l_c_nm) *
             (a2_nm2 / (L_nm * L_nm));
    case Regime::crossover:
      break;
  }
  throw std::invalid_argument("no closed-form scaling law in the crossover regime");
}

ResponseModel choose_model(double L_nm, const MirrorSpec& mirror,
                           const RoughnessSpectrum& spectrum) {
  const double l_c = spectrum.correlation_length();
  if (l_c >= 10.0 * L_nm) return ResponseModel::pfa;
  const double lambda_p = lambda_p_or_zero(mirror);
  if (lambda_p <= l_c / 10.0 && L_nm >= 10.0 * l_c)
    return ResponseModel::perfect_reflector;
  return ResponseModel::stitched;
}

CorrectionResult delta(double L_nm, const MirrorSpec& mirror,
                       const RoughnessSpectrum& spectrum, ResponseModel model,
                       double rel_tol) {
  if (!(L_nm > 0.0)) throw std::domain_error("separation must be positive");

  CorrectionResult result;
  result.model = model;

  if (spectrum.empty()) {
    result.delta = 0.0;
    result.regime = Regime::crossover;
    result.quad_error = 0.0;
    result.warnings.push_back("empty spectrum: no roughness, Delta = 0");
    return result;
  }

  const double l_c = spectrum.correlation_length();
  const double lambda_p = lambda_p_or_zero(mirror);
  result.regime = classify_regime(L_nm, lambda_p, l_c);

  const double ratio = pfa_curvature_ratio(L_nm, mirror, rel_tol);

  // rho(k) per model; alpha is a constant of the sweep, hoisted out.
  double alpha_over_L = 0.0;
  double Kp = 0.0;
  const bool needs_alpha =
      (model == ResponseModel::high_k ||
       (model == ResponseModel::stitched && !mirror.is_perfect()));
  if (needs_alpha) {
    if (mirror.is_perfect())
      throw std::domain_error(
          "high_k model requires a plasma mirror; use perfect_reflector "
          "for the ideal-mirror limit");
    Kp = mirror.reduced_plasma(L_nm);
    alpha_over_L = alpha(Kp, rel_tol);
  }

  auto rho = [&](double k) -> double {
    const double q = k * L_nm;
    switch (model) {
      case ResponseModel::pfa: return 1.0;
      case ResponseModel::high_k: return alpha_over_L * q;
      case ResponseModel::perfect_reflector:
        return rho_perfect(q, rel_tol);
      case ResponseModel::stitched: {
        double est = std::max(1.0, alpha_over_L * q);
        // Perfect-reflector branch holds while diffracted modes stay well
        // reflected, q <~ Kp (any q for the ideal mirror).
        if (mirror.is_perfect() || q <= Kp)
          est = std::max(est, rho_perfect(q, rel_tol));
        return est;
      }
    }
    return 1.0;
  };

  Integrand1D integrand = [&](double k) {
    return k * rho(k) * spectrum.sigma(k) / (2.0 * pi);
  };

  QuadratureResult moment;
  if (spectrum.is_gaussian()) {
    const double cutoff = spectrum.support_cutoff();
    std::vector<double> breaks{0.0, cutoff};
    // The stitched envelope switches branches at q = Kp; seed a panel edge.
    const double k_switch = Kp / L_nm;
    if (model == ResponseModel::stitched && k_switch > 0.0 &&
        k_switch < cutoff)
      breaks.insert(breaks.begin() + 1, k_switch);
    moment = integrate_segments(integrand, breaks, rel_tol);
  } else {
    // Interpolation kinks at the sample points; seed a panel per segment.
    std::vector<double> breaks;
    for (const auto& [k, s] : spectrum.samples()) breaks.push_back(k);
    if (breaks.front() > 0.0) breaks.insert(breaks.begin(), 0.0);
    moment = integrate_segments(integrand, breaks, rel_tol);
  }

  result.delta = ratio * moment.value / (L_nm * L_nm);
  result.quad_error = ratio * moment.abs_error_estimate / (L_nm * L_nm);

  // Validity warnings keyed on the spectrum's dominant wavevector ~ 1/l_C.
  const double k_dom = 1.0 / l_c;
  if (model == ResponseModel::high_k) {
    const double k_floor =
        std::max(mirror.is_perfect() ? 0.0 : 2.0 * pi / mirror.lambda_p_nm(),
                 1.0 / L_nm);
    if (k_dom < 10.0 * k_floor)
      result.warnings.push_back(
          "high_k model outside its validity window: dominant k is not >> "
          "max(2 pi/lambda_p, 1/L)");
  }
  if (model == ResponseModel::stitched)
    result.warnings.push_back(
        "stitched model: intermediate-k response is a heuristic lower-envelope "
        "estimate");
  if (model == ResponseModel::pfa && l_c < 10.0 * L_nm)
    result.warnings.push_back(
        "pfa model outside its validity window: l_C is not >> L");
  if (model == ResponseModel::perfect_reflector && lambda_p > 0.0 &&
      lambda_p * k_dom > 0.1)
    result.warnings.push_back(
        "perfect_reflector model outside its validity window: lambda_p is not "
        "<< 1/k");
  return result;
}

} // namespace casimir
