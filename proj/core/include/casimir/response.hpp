#pragma once

#include "casimir/mirror.hpp"

#include <optional>
#include <string>

namespace casimir {

enum class ResponseModel { pfa, high_k, perfect_reflector, stitched };

std::string to_string(ResponseModel model);
std::optional<ResponseModel> parse_response_model(const std::string& name);

struct ResponseSample {
  double k_nm_inv;                  // roughness wavevector
  double q;                         // k L, dimensionless
  double rho;                       // deviation-from-PFA factor G(k)/G(0)
  ResponseModel model;
  std::optional<double> g_reduced;  // G L^5 / (hbar c A) when available
};

// High-k angular coefficient alpha/L as a function of Kp only. Positive;
// 0.4492 at Kp -> 0, saturating to 14/(15 Kp) at Kp -> inf.
double alpha(double Kp, double rel_tol = 1e-6);

// Reduced perfect-reflector response G(k) L^5 / (hbar c A) in the
// lambda_p -> 0 limit, as a function of q = k L. Below q = 1e-3 the analytic
// PFA value -pi^2/120 is returned, above q = 50 the asymptote -pi^2 q / 360.
double g_perfect(double q, double rel_tol = 1e-6);

// rho(q) = g_perfect(q) / g_perfect(0); 1 at q = 0, tending to q/3.
double rho_perfect(double q, double rel_tol = 1e-6);

// High-k linear law rho = (alpha/L) q. Valid only for k >> max(2 pi /
// lambda_p, 1/L); the caller is responsible for the validity window.
double rho_high_k(double k_nm_inv, double L_nm, const MirrorSpec& mirror,
                  double rel_tol = 1e-6);

// Stitched estimate: the lower envelope of the known asymptotic branches,
// max(1, (alpha/L) q, rho_perfect(q) for q <= Kp). The perfect-reflector
// branch is included only inside its validity window q <~ Kp, where the
// diffracted modes are still well reflected (unrestricted for the ideal
// mirror). This is a heuristic join, NOT the exact intermediate-k response
// function, which is outside the scope of this artifact.
ResponseSample rho_estimate(double k_nm_inv, double L_nm,
                            const MirrorSpec& mirror, double rel_tol = 1e-6);

// G(k)/E_PP in nm^-2: [g0 rho_model(k) / e(Kp)] / L^2. Positive.
double response_ratio(double k_nm_inv, double L_nm, const MirrorSpec& mirror,
                      ResponseModel model, double rel_tol = 1e-6);

} // namespace casimir
