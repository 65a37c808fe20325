#include "casimir/oracle.hpp"

#include "casimir/constants.hpp"
#include "casimir/mirror.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <stdexcept>

namespace casimir {
namespace oracle {

namespace {

using constants::pi;
using constants::pi_sq;

double trapezoid_1d(const std::function<double(double)>& f, double lo,
                    double hi, int n) {
  const double h = (hi - lo) / n;
  double sum = 0.5 * (f(lo) + f(hi));
  for (int i = 1; i < n; ++i) sum += f(lo + i * h);
  return sum * h;
}

// Inner Omega trapezoid over [0, K] of f(K, Omega), then outer over [0, K_max].
double trapezoid_triangle(const std::function<double(double, double)>& f,
                          int n_K, int n_Omega, double K_max) {
  auto inner = [&](double K) {
    if (K == 0.0) return 0.0;
    return trapezoid_1d([&](double Om) { return f(K, Om); }, 0.0, K, n_Omega);
  };
  return trapezoid_1d(inner, 0.0, K_max, n_K);
}

double loop_sq_sum(double K, double Omega, double Kp, bool perfect) {
  const double e2k = std::exp(-2.0 * K);
  double sum = 0.0;
  if (perfect) {
    const double f = e2k / (1.0 - e2k);
    sum = 2.0 * (f + f * f);
  } else {
    const ReducedPoint p{K, Omega, Kp};
    for (double r : {r_te(p), r_tm(p)}) {
      const double u = r * r * e2k;
      const double f = u / (1.0 - u);
      sum += f + f * f;
    }
  }
  return sum;
}

void check_grid(int n, double K_max) {
  if (n < 16) throw std::domain_error("oracle grid needs n >= 16");
  if (!(K_max >= 20.0)) throw std::domain_error("oracle needs K_max >= 20");
}

} // namespace

double trapezoid_energy(double Kp, int n_K, int n_Omega, double K_max) {
  check_grid(std::min(n_K, n_Omega), K_max);
  auto f = [Kp](double K, double Omega) {
    if (K == 0.0) return 0.0;
    const ReducedPoint p{K, Omega, Kp};
    const double e2k = std::exp(-2.0 * K);
    const double te = r_te(p);
    const double tm = r_tm(p);
    return K * (std::log1p(-te * te * e2k) + std::log1p(-tm * tm * e2k)) /
           (4.0 * pi_sq);
  };
  return trapezoid_triangle(f, n_K, n_Omega, K_max);
}

double trapezoid_energy_perfect(int n_K, int n_Omega, double K_max) {
  check_grid(std::min(n_K, n_Omega), K_max);
  auto f = [](double K, double) {
    if (K == 0.0) return 0.0;
    return K * 2.0 * std::log1p(-std::exp(-2.0 * K)) / (4.0 * pi_sq);
  };
  return trapezoid_triangle(f, n_K, n_Omega, K_max);
}

double trapezoid_g0(double Kp, int n, double K_max) {
  check_grid(n, K_max);
  auto f = [Kp](double K, double Omega) {
    if (K == 0.0) return 0.0;
    return -K * K * K * loop_sq_sum(K, Omega, Kp, false) / (2.0 * pi_sq);
  };
  return trapezoid_triangle(f, n, n, K_max);
}

double trapezoid_g0_perfect(int n, double K_max) {
  check_grid(n, K_max);
  auto f = [](double K, double) {
    if (K == 0.0) return 0.0;
    return -K * K * K * loop_sq_sum(K, 0.0, 0.0, true) / (2.0 * pi_sq);
  };
  return trapezoid_triangle(f, n, n, K_max);
}

double trapezoid_alpha(double Kp, int n, double K_max) {
  check_grid(n, K_max);
  if (!(Kp > 0.0)) throw std::domain_error("alpha requires Kp > 0");
  auto f = [Kp](double K, double Omega) {
    if (K == 0.0) return 0.0;
    const ReducedPoint p{K, Omega, Kp};
    const double e2k = std::exp(-2.0 * K);
    const double te = r_te(p);
    const double tm = r_tm(p);
    const double ute = te * te * e2k;
    const double utm = tm * tm * e2k;
    const double f_te = ute / (1.0 - ute);
    const double f_tm = utm / (1.0 - utm);
    const double K2 = K * K, W2 = Omega * Omega, Kp2 = Kp * Kp;
    const double den = K2 * Kp2 + W2 * (2.0 * K2 - W2);
    const double num = W2 * (2.0 * W2 - K2) + Kp2 * (3.0 * W2 - 2.0 * K2);
    return K * (Kp2 / (2.0 * W2 + Kp2)) * (K * f_te + num / den * K * f_tm);
  };
  const double integral = trapezoid_triangle(f, n, n, K_max);
  return integral / (4.0 * pi_sq * trapezoid_g0(Kp, n, K_max));
}

double trapezoid_g_perfect(double q, int n_K, int n_Kprime, double K_max) {
  check_grid(std::min(n_K, n_Kprime), K_max);
  if (!(q > 0.0)) throw std::domain_error("trapezoid_g_perfect requires q > 0");
  auto outer = [&](double K) {
    if (K == 0.0) return 0.0;
    auto w = [&](double Kq) {
      if (Kq == 0.0) return 0.0; // integrand vanishes as K'^2 there
      const double a = K * Kq;
      const double b = 0.5 * (K * K + Kq * Kq - q * q);
      return (a * a + b * b) / (-std::expm1(-2.0 * Kq));
    };
    const double inner =
        trapezoid_1d(w, std::abs(K - q), K + q, n_Kprime);
    return std::exp(-2.0 * K) / (-std::expm1(-2.0 * K)) * inner;
  };
  const double integral = trapezoid_1d(outer, 0.0, K_max, n_K);
  return -integral / (4.0 * pi_sq * q);
}

SurfaceField synthesize_surface(const RoughnessSpectrum& spectrum, int grid_n,
                                double grid_step_nm, std::uint64_t seed) {
  if (grid_n < 2 || (grid_n & (grid_n - 1)) != 0)
    throw std::domain_error("grid_n must be a power of two");
  if (!(grid_step_nm > 0.0))
    throw std::domain_error("grid step must be positive");
  const double extent = grid_n * grid_step_nm;
  if (extent < 10.0 * spectrum.correlation_length())
    throw std::domain_error(
        "grid too small: side must cover at least 10 correlation lengths");

  const int n = grid_n;
  std::vector<std::complex<double>> buf(static_cast<std::size_t>(n) * n);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (auto& z : buf) z = {gauss(rng), 0.0};

  auto* data = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_plan forward =
      fftw_plan_dft_2d(n, n, data, data, FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_execute(forward);
  fftw_destroy_plan(forward);

  // Filter: H_k = W_k sqrt(sigma(|k|)) / step. Zero DC mode: the profiles are
  // defined with zero average.
  const double dk = 2.0 * pi / extent;
  for (int i = 0; i < n; ++i) {
    const int fi = (i <= n / 2) ? i : i - n;
    for (int j = 0; j < n; ++j) {
      const int fj = (j <= n / 2) ? j : j - n;
      const double k = dk * std::hypot(double(fi), double(fj));
      double filter = 0.0;
      if (i != 0 || j != 0)
        filter = std::sqrt(spectrum.sigma(k)) / grid_step_nm;
      buf[static_cast<std::size_t>(i) * n + j] *= filter;
    }
  }

  fftw_plan backward =
      fftw_plan_dft_2d(n, n, data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_execute(backward);
  fftw_destroy_plan(backward);

  SurfaceField field;
  field.n = n;
  field.step_nm = grid_step_nm;
  field.h.resize(buf.size());
  const double norm = 1.0 / (static_cast<double>(n) * n);
  for (std::size_t i = 0; i < buf.size(); ++i) field.h[i] = buf[i].real() * norm;
  return field;
}

double sample_mean(const SurfaceField& field) {
  double sum = 0.0;
  for (double v : field.h) sum += v;
  return sum / field.h.size();
}

double sample_variance(const SurfaceField& field) {
  const double mean = sample_mean(field);
  double sum = 0.0;
  for (double v : field.h) sum += (v - mean) * (v - mean);
  return sum / field.h.size();
}

std::vector<std::pair<double, double>> radial_spectrum(const SurfaceField& field,
                                                       int n_bins) {
  const int n = field.n;
  std::vector<std::complex<double>> buf(field.h.size());
  for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = field.h[i];

  auto* data = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_plan forward =
      fftw_plan_dft_2d(n, n, data, data, FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_execute(forward);
  fftw_destroy_plan(forward);

  const double extent = n * field.step_nm;
  const double dk = 2.0 * pi / extent;
  const double k_max = dk * (n / 2);
  const double bin_width = k_max / n_bins;
  const double norm = field.step_nm * field.step_nm /
                      (static_cast<double>(n) * n);

  std::vector<double> power(n_bins, 0.0);
  std::vector<int> count(n_bins, 0);
  for (int i = 0; i < n; ++i) {
    const int fi = (i <= n / 2) ? i : i - n;
    for (int j = 0; j < n; ++j) {
      const int fj = (j <= n / 2) ? j : j - n;
      if (fi == 0 && fj == 0) continue;
      const double k = dk * std::hypot(double(fi), double(fj));
      const int bin = static_cast<int>(k / bin_width);
      if (bin >= n_bins) continue;
      const double a = std::abs(buf[static_cast<std::size_t>(i) * n + j]);
      power[bin] += a * a * norm;
      ++count[bin];
    }
  }

  std::vector<std::pair<double, double>> out;
  for (int b = 0; b < n_bins; ++b)
    if (count[b] > 0)
      out.emplace_back((b + 0.5) * bin_width, power[b] / count[b]);
  return out;
}

} // namespace oracle
} // namespace casimir
