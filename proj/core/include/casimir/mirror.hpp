#pragma once

#include <stdexcept>

namespace casimir {

// Optical model of the (identical) cavity mirrors. Plasma model with
// dielectric function eps = 1 - wp^2/w^2, parametrized by the plasma
// wavelength lambda_p = 2 pi c / wp. The perfect mirror is a dedicated
// variant (r_TE = -1, r_TM = +1), not lambda_p = 0 fed through the plasma
// formulas.
class MirrorSpec {
public:
  static MirrorSpec plasma(double lambda_p_nm) {
    if (!(lambda_p_nm > 0.0))
      throw std::domain_error("plasma wavelength must be positive");
    return MirrorSpec(lambda_p_nm, false);
  }
  static MirrorSpec perfect() { return MirrorSpec(0.0, true); }

  bool is_perfect() const { return perfect_; }

  double lambda_p_nm() const {
    if (perfect_)
      throw std::logic_error("perfect mirror has no plasma wavelength");
    return lambda_p_nm_;
  }

  // K_P = wp L / c = 2 pi L / lambda_p
  double reduced_plasma(double L_nm) const;

private:
  MirrorSpec(double lp, bool perfect) : lambda_p_nm_(lp), perfect_(perfect) {}
  double lambda_p_nm_;
  bool perfect_;
};

// Dimensionless imaginary-frequency / wavevector point: K is the imaginary
// z-wavevector times L, Omega the imaginary frequency times L/c, Kp the
// reduced plasma wavevector wp L / c. Vacuum dispersion requires K >= Omega.
struct ReducedPoint {
  double K;
  double Omega;
  double Kp;
};

void validate(const ReducedPoint& p);

// K_t = sqrt(K^2 + Kp^2): z-wavevector inside the metal.
double k_t(const ReducedPoint& p);

// r_TE = -(K_t - K)/(K_t + K), in (-1, 0]. Independent of Omega.
double r_te(const ReducedPoint& p);

// TM reflection coefficient in the singularity-free form
//   r_TM = [(Omega^2 + Kp^2) K - Omega^2 K_t] / [(Omega^2 + Kp^2) K + Omega^2 K_t]
// which is continuous at Omega = 0 (value 1 for Kp > 0). In [0, 1).
double r_tm(const ReducedPoint& p);

// Closed-cavity round-trip factor f = r^2 e^{-2K} / (1 - r^2 e^{-2K}).
double loop_function(double r, double K);

} // namespace casimir
