#include "casimir/mirror.hpp"

#include "casimir/constants.hpp"

#include <cmath>

namespace casimir {

double MirrorSpec::reduced_plasma(double L_nm) const {
  if (!(L_nm > 0.0)) throw std::domain_error("separation must be positive");
  if (perfect_)
    throw std::logic_error("perfect mirror has no reduced plasma wavevector");
  return 2.0 * constants::pi * L_nm / lambda_p_nm_;
}

void validate(const ReducedPoint& p) {
  if (!(p.K >= 0.0) || !(p.Omega >= 0.0) || !(p.Kp >= 0.0))
    throw std::domain_error("reduced point components must be non-negative");
  if (p.K < p.Omega)
    throw std::domain_error("vacuum dispersion requires K >= Omega");
}

double k_t(const ReducedPoint& p) {
  validate(p);
  return std::hypot(p.K, p.Kp);
}

double r_te(const ReducedPoint& p) {
  validate(p);
  if (p.K == 0.0 && p.Kp == 0.0)
    throw std::domain_error("r_te undefined at K = Kp = 0");
  const double kt = std::hypot(p.K, p.Kp);
  // (kt - K) computed as Kp^2/(kt + K) to avoid cancellation for Kp << K.
  const double diff = p.Kp * p.Kp / (kt + p.K);
  return -diff / (kt + p.K);
}

double r_tm(const ReducedPoint& p) {
  validate(p);
  if (p.K == 0.0 && p.Kp == 0.0)
    throw std::domain_error("r_tm undefined at K = Omega = Kp = 0");
  if (p.K == 0.0) return 1.0; // Omega = 0 limit, Kp > 0
  const double kt = std::hypot(p.K, p.Kp);
  const double w2 = p.Omega * p.Omega;
  const double num = (w2 + p.Kp * p.Kp) * p.K - w2 * kt;
  const double den = (w2 + p.Kp * p.Kp) * p.K + w2 * kt;
  return num / den;
}

double loop_function(double r, double K) {
  if (!(std::abs(r) <= 1.0))
    throw std::domain_error("|r| must not exceed 1");
  if (!(K > 0.0)) throw std::domain_error("loop function requires K > 0");
  const double u = r * r * std::exp(-2.0 * K);
  if (u >= 1.0) throw std::domain_error("loop function pole: r^2 e^{-2K} >= 1");
  return u / (1.0 - u);
}

} // namespace casimir
