#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace casimir {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0; // >= 0
  std::int64_t evaluations = 0;    // >= 1
};

// Thrown when the adaptive engine cannot reach the requested tolerance or the
// integrand produced a non-finite value. Carries the best estimate so far.
class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_estimate(best) {}
  QuadratureResult best_estimate;
};

using Integrand1D = std::function<double(double)>;
using Integrand2D = std::function<double(double, double)>;

// Adaptive Gauss-Kronrod (7/15) over [a, b]. Open rule: endpoints are never
// evaluated. Deterministic for fixed inputs.
QuadratureResult integrate(const Integrand1D& f, double a, double b,
                           double rel_tol);

// Same engine, seeded with one panel per consecutive breakpoint pair.
// Breakpoints must be strictly increasing.
QuadratureResult integrate_segments(const Integrand1D& f,
                                    const std::vector<double>& breakpoints,
                                    double rel_tol);

// Integral over [0, inf). The domain is truncated at `upper`; every integrand
// in this project decays like exp(-2K) or faster, so the default tail is far
// below 1e-13 of the estimate.
QuadratureResult integrate_semi_infinite(const Integrand1D& f, double rel_tol,
                                         double upper = 40.0);

// Integral of f(K, Omega) over the triangular domain 0 <= Omega <= K < inf.
// Outer variable is K, inner is Omega (the result is order-independent within
// tolerance). `inner_breakpoints` optionally splits the inner [0, K] interval
// at the given Omega values (clipped to the interval); integrands with a
// narrow boundary layer near Omega = 0 need this hint.
QuadratureResult integrate_triangle(const Integrand2D& f, double rel_tol,
                                    const std::vector<double>& inner_breakpoints = {},
                                    double upper = 40.0);

// Central difference with Richardson extrapolation, step sizes h0, h0/2, ...
// Relative error target ~1e-6 for smooth f. Throws std::domain_error on step
// underflow (x + h0 indistinguishable from x).
double first_derivative(const Integrand1D& f, double x, double h0);
double second_derivative(const Integrand1D& f, double x, double h0);

} // namespace casimir
