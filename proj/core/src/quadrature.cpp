#include "casimir/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <limits>

namespace casimir {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
// Positive abscissae; odd indices and the center are the Gauss nodes.
constexpr std::array<double, 8> kAbscissae = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  double resabs;
};

// QUADPACK-style error estimate: sharp on smooth integrands, conservative on
// rough ones.
double scale_error(double raw, double resasc) {
  if (resasc != 0.0 && raw != 0.0) {
    double scaled = resasc * std::min(1.0, std::pow(200.0 * raw / resasc, 1.5));
    raw = scaled;
  }
  return raw;
}

Panel evaluate_panel(const Integrand1D& f, double a, double b,
                     std::int64_t& evaluations, QuadratureResult& running) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<double, 15> fv{};
  const double fc = f(center);
  ++evaluations;
  if (!std::isfinite(fc)) {
    running.evaluations = evaluations;
    throw QuadratureError("integrand returned a non-finite value", running);
  }

  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  double resabs = kKronrodWeights[7] * std::abs(fc);
  fv[7] = fc;

  for (int i = 0; i < 7; ++i) {
    const double dx = kAbscissae[i] * half;
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    evaluations += 2;
    if (!std::isfinite(f1) || !std::isfinite(f2)) {
      running.evaluations = evaluations;
      throw QuadratureError("integrand returned a non-finite value", running);
    }
    fv[i] = f1;
    fv[14 - i] = f2;
    kronrod += kKronrodWeights[i] * (f1 + f2);
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (f1 + f2);
    resabs += kKronrodWeights[i] * (std::abs(f1) + std::abs(f2));
  }

  const double mean = 0.5 * kronrod;
  double resasc = kKronrodWeights[7] * std::abs(fc - mean);
  for (int i = 0; i < 7; ++i) {
    resasc += kKronrodWeights[i] *
              (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));
  }

  Panel p;
  p.a = a;
  p.b = b;
  p.value = kronrod * half;
  p.resabs = resabs * std::abs(half);
  p.error = scale_error(std::abs((kronrod - gauss) * half),
                        resasc * std::abs(half));
  return p;
}

struct PanelOrder {
  // Max-heap on error; ties broken on the left endpoint for determinism.
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

QuadratureResult adaptive(const Integrand1D& f,
                          const std::vector<double>& breakpoints,
                          double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw std::domain_error("rel_tol must lie in (0, 1)");
  if (breakpoints.size() < 2)
    throw std::domain_error("need at least two breakpoints");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i] > breakpoints[i - 1]))
      throw std::domain_error("breakpoints must be strictly increasing");

  constexpr std::size_t kMaxPanels = 20000;

  std::int64_t evaluations = 0;
  QuadratureResult running{};

  std::vector<Panel> heap;
  double total_value = 0.0, total_error = 0.0, total_resabs = 0.0;

  auto push = [&](Panel p) {
    total_value += p.value;
    total_error += p.error;
    total_resabs += p.resabs;
    heap.push_back(p);
    std::push_heap(heap.begin(), heap.end(), PanelOrder{});
  };

  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    push(evaluate_panel(f, breakpoints[i - 1], breakpoints[i], evaluations,
                        running));

  auto tolerance = [&]() {
    return std::max({rel_tol * std::abs(total_value),
                     50.0 * DBL_EPSILON * total_resabs, 1e-300});
  };

  while (total_error > tolerance() && heap.size() < kMaxPanels) {
    std::pop_heap(heap.begin(), heap.end(), PanelOrder{});
    Panel worst = heap.back();
    heap.pop_back();
    total_value -= worst.value;
    total_error -= worst.error;
    total_resabs -= worst.resabs;

    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval at floating-point resolution; keep it as-is.
      push(worst);
      break;
    }
    running.value = total_value;
    running.abs_error_estimate = total_error;
    push(evaluate_panel(f, worst.a, mid, evaluations, running));
    push(evaluate_panel(f, mid, worst.b, evaluations, running));
  }

  QuadratureResult result;
  result.value = total_value;
  result.abs_error_estimate = total_error;
  result.evaluations = evaluations;

  if (total_error > tolerance()) {
    throw QuadratureError("adaptive quadrature did not converge within budget",
                          result);
  }
  return result;
}

} // namespace

QuadratureResult integrate(const Integrand1D& f, double a, double b,
                           double rel_tol) {
  return adaptive(f, {a, b}, rel_tol);
}

QuadratureResult integrate_segments(const Integrand1D& f,
                                    const std::vector<double>& breakpoints,
                                    double rel_tol) {
  return adaptive(f, breakpoints, rel_tol);
}

QuadratureResult integrate_semi_infinite(const Integrand1D& f, double rel_tol,
                                         double upper) {
  if (!(upper > 0.0)) throw std::domain_error("upper cutoff must be positive");
  // Seed with a split at 1 so the scale of the near-origin region is resolved
  // even when the bulk of the integral lives elsewhere.
  std::vector<double> breaks{0.0};
  if (upper > 2.0) breaks.push_back(1.0);
  breaks.push_back(upper);
  return adaptive(f, breaks, rel_tol);
}

QuadratureResult integrate_triangle(const Integrand2D& f, double rel_tol,
                                    const std::vector<double>& inner_breakpoints,
                                    double upper) {
  const double inner_tol = std::max(rel_tol * 0.02, 1e-14);
  std::int64_t inner_evaluations = 0;

  Integrand1D outer = [&](double K) {
    std::vector<double> breaks{0.0};
    for (double w : inner_breakpoints)
      if (w > 0.0 && w < K) breaks.push_back(w);
    std::sort(breaks.begin(), breaks.end());
    breaks.push_back(K);
    QuadratureResult inner = adaptive(
        [&, K](double Omega) { return f(K, Omega); }, breaks, inner_tol);
    inner_evaluations += inner.evaluations;
    return inner.value;
  };

  QuadratureResult result = integrate_semi_infinite(outer, rel_tol, upper);
  result.evaluations += inner_evaluations;
  // The outer estimate sees inner noise at inner_tol; fold it in.
  result.abs_error_estimate += inner_tol * std::abs(result.value);
  return result;
}

namespace {

// Shared Richardson driver. `difference(h)` is an O(h^2)-accurate stencil.
double richardson(const std::function<double(double)>& difference, double x,
                  double h0) {
  if (!(h0 > 0.0)) throw std::domain_error("h0 must be positive");
  if (x + h0 == x || x - h0 == x)
    throw std::domain_error("step underflow: h0 too small relative to x");

  constexpr int kLevels = 4;
  std::array<std::array<double, kLevels>, kLevels> table{};

  double best = 0.0;
  double best_change = std::numeric_limits<double>::infinity();
  double h = h0;
  for (int j = 0; j < kLevels; ++j, h *= 0.5) {
    if (x + h == x) break;
    table[j][0] = difference(h);
    double factor = 4.0;
    for (int m = 1; m <= j; ++m, factor *= 4.0)
      table[j][m] =
          (factor * table[j][m - 1] - table[j - 1][m - 1]) / (factor - 1.0);
    if (j == 0) {
      best = table[0][0];
      continue;
    }
    const double candidate = table[j][j];
    const double change = std::abs(candidate - table[j - 1][j - 1]);
    if (change <= best_change) {
      best = candidate;
      best_change = change;
      if (change <= 1e-8 * std::abs(candidate)) break;
    } else {
      // Noise regime: further refinement only amplifies quadrature error.
      break;
    }
  }
  return best;
}

} // namespace

double first_derivative(const Integrand1D& f, double x, double h0) {
  return richardson(
      [&](double h) { return (f(x + h) - f(x - h)) / (2.0 * h); }, x, h0);
}

double second_derivative(const Integrand1D& f, double x, double h0) {
  const double fx = f(x);
  return richardson(
      [&](double h) { return (f(x + h) - 2.0 * fx + f(x - h)) / (h * h); }, x,
      h0);
}

} // namespace casimir
