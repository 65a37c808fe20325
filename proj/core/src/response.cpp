#include "casimir/response.hpp"

#include "casimir/constants.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace casimir {

namespace {

using constants::pi_sq;

constexpr double kQLow = 1e-3;  // below: analytic PFA value
constexpr double kQHigh = 50.0; // above: analytic -pi^2 q/360 asymptote

// Integrand of the high-k coefficient (before the 1/(4 pi^2 g0) factor).
// The TM bracket is evaluated with denominators cleared of the K^4
// cancellation:
//   N = Omega^2 (2 Omega^2 - K^2) + Kp^2 (3 Omega^2 - 2 K^2)
//   D = K^2 Kp^2 + Omega^2 (2 K^2 - Omega^2)
// D > 0 on the open domain for Kp > 0; any non-positive value signals domain
// misuse and is turned into a hard error rather than a silent wrong sign.
double alpha_integrand(double K, double Omega, double Kp) {
  const ReducedPoint p{K, Omega, Kp};
  const double e2k = std::exp(-2.0 * K);
  const double te = r_te(p);
  const double tm = r_tm(p);
  const double ute = te * te * e2k;
  const double utm = tm * tm * e2k;
  const double f_te = ute / (1.0 - ute);
  const double f_tm = utm / (1.0 - utm);

  const double K2 = K * K;
  const double W2 = Omega * Omega;
  const double Kp2 = Kp * Kp;

  const double den = K2 * Kp2 + W2 * (2.0 * K2 - W2);
  if (!(den > 0.0))
    throw std::logic_error("TM bracket denominator not positive: domain misuse");
  const double num = W2 * (2.0 * W2 - K2) + Kp2 * (3.0 * W2 - 2.0 * K2);

  const double prefactor = Kp2 / (2.0 * W2 + Kp2);
  return K * prefactor * (K * f_te + (num / den) * K * f_tm);
}

double g_perfect_quadrature(double q, double rel_tol) {
  const double inner_tol = std::max(rel_tol * 0.02, 1e-14);
  const double upper = 30.0 + std::log1p(q);
  std::int64_t inner_evaluations = 0;

  Integrand1D outer = [&](double K) {
    const double lo = std::abs(K - q);
    const double hi = K + q;
    QuadratureResult inner = integrate(
        [K, q](double Kq) {
          const double a = K * Kq;
          const double b = 0.5 * (K * K + Kq * Kq - q * q);
          return (a * a + b * b) / (-std::expm1(-2.0 * Kq));
        },
        lo, hi, inner_tol);
    inner_evaluations += inner.evaluations;
    return std::exp(-2.0 * K) / (-std::expm1(-2.0 * K)) * inner.value;
  };

  // The lower limit |K - q| has a kink at K = q; split the outer integral
  // there so each panel sees a smooth integrand.
  std::vector<double> breaks{0.0};
  if (q < upper) breaks.push_back(q);
  breaks.push_back(upper);
  QuadratureResult r = integrate_segments(outer, breaks, rel_tol);
  return -r.value / (4.0 * pi_sq * q);
}

} // namespace

std::string to_string(ResponseModel model) {
  switch (model) {
    case ResponseModel::pfa: return "pfa";
    case ResponseModel::high_k: return "high_k";
    case ResponseModel::perfect_reflector: return "perfect_reflector";
    case ResponseModel::stitched: return "stitched";
  }
  return "unknown";
}

std::optional<ResponseModel> parse_response_model(const std::string& name) {
  if (name == "pfa") return ResponseModel::pfa;
  if (name == "high_k") return ResponseModel::high_k;
  if (name == "perfect" || name == "perfect_reflector")
    return ResponseModel::perfect_reflector;
  if (name == "stitched") return ResponseModel::stitched;
  return std::nullopt;
}

double alpha(double Kp, double rel_tol) {
  if (!(Kp > 0.0)) throw std::domain_error("alpha requires Kp > 0");
  const double g0 = pfa_g0_reduced(Kp, std::min(rel_tol, 1e-6));
  QuadratureResult r = integrate_triangle(
      [Kp](double K, double Omega) { return alpha_integrand(K, Omega, Kp); },
      rel_tol, plasma_layer_breakpoints(Kp));
  return r.value / (4.0 * pi_sq * g0);
}

double g_perfect(double q, double rel_tol) {
  if (!(q >= 0.0)) throw std::domain_error("g_perfect requires q >= 0");
  if (q <= kQLow) return constants::ideal_reduced_g0;
  if (q >= kQHigh) return -pi_sq * q / 360.0;
  return g_perfect_quadrature(q, rel_tol);
}

double rho_perfect(double q, double rel_tol) {
  return g_perfect(q, rel_tol) / constants::ideal_reduced_g0;
}

double rho_high_k(double k_nm_inv, double L_nm, const MirrorSpec& mirror,
                  double rel_tol) {
  if (!(k_nm_inv >= 0.0)) throw std::domain_error("k must be non-negative");
  if (!(L_nm > 0.0)) throw std::domain_error("separation must be positive");
  if (mirror.is_perfect())
    throw std::domain_error(
        "high_k model requires a plasma mirror (alpha vanishes for the "
        "perfect mirror; use the perfect_reflector model)");
  if (k_nm_inv == 0.0) return 0.0;
  return alpha(mirror.reduced_plasma(L_nm), rel_tol) * k_nm_inv * L_nm;
}

ResponseSample rho_estimate(double k_nm_inv, double L_nm,
                            const MirrorSpec& mirror, double rel_tol) {
  if (!(k_nm_inv >= 0.0)) throw std::domain_error("k must be non-negative");
  if (!(L_nm > 0.0)) throw std::domain_error("separation must be positive");
  const double q = k_nm_inv * L_nm;
  // Lower envelope of the known asymptotic branches: the PFA floor, the
  // high-k linear law, and the perfect-reflector response inside its
  // validity window q <~ Kp (diffracted modes still well reflected).
  double estimate = 1.0;
  if (mirror.is_perfect()) {
    estimate = std::max(estimate, rho_perfect(q, rel_tol));
  } else {
    const double Kp = mirror.reduced_plasma(L_nm);
    estimate = std::max(estimate, alpha(Kp, rel_tol) * q);
    if (q <= Kp) estimate = std::max(estimate, rho_perfect(q, rel_tol));
  }
  return ResponseSample{k_nm_inv, q, estimate, ResponseModel::stitched,
                        std::nullopt};
}

double response_ratio(double k_nm_inv, double L_nm, const MirrorSpec& mirror,
                      ResponseModel model, double rel_tol) {
  if (!(k_nm_inv >= 0.0)) throw std::domain_error("k must be non-negative");
  const double q = k_nm_inv * L_nm;
  double rho = 1.0;
  switch (model) {
    case ResponseModel::pfa:
      rho = 1.0;
      break;
    case ResponseModel::high_k:
      rho = rho_high_k(k_nm_inv, L_nm, mirror, rel_tol);
      break;
    case ResponseModel::perfect_reflector:
      rho = rho_perfect(q, rel_tol);
      break;
    case ResponseModel::stitched:
      rho = rho_estimate(k_nm_inv, L_nm, mirror, rel_tol).rho;
      break;
  }
  const double g0 = pfa_g0(L_nm, mirror, rel_tol);
  const double e = reduced_energy(mirror, L_nm, std::min(rel_tol, 1e-8)).e;
  return (g0 * rho / e) / (L_nm * L_nm);
}

} // namespace casimir
