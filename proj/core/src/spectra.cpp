#include "casimir/spectra.hpp"

#include "casimir/constants.hpp"
#include "casimir/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace casimir {

namespace {
using constants::pi;
}

RoughnessSpectrum RoughnessSpectrum::gaussian(double a2_nm2, double l_c_nm) {
  if (!(a2_nm2 > 0.0)) throw std::domain_error("variance a^2 must be positive");
  if (!(l_c_nm > 0.0))
    throw std::domain_error("correlation length must be positive");
  RoughnessSpectrum s;
  s.gaussian_ = true;
  s.a2_ = a2_nm2;
  s.l_c_ = l_c_nm;
  return s;
}

RoughnessSpectrum RoughnessSpectrum::tabulated(
    std::vector<std::pair<double, double>> samples) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i].first >= 0.0))
      throw std::domain_error("tabulated k must be non-negative");
    if (!(samples[i].second >= 0.0))
      throw std::domain_error("tabulated sigma must be non-negative");
    if (i > 0 && !(samples[i].first > samples[i - 1].first))
      throw std::domain_error("tabulated k must be strictly increasing");
  }
  RoughnessSpectrum s;
  s.samples_ = std::move(samples);
  return s;
}

RoughnessSpectrum RoughnessSpectrum::load_csv(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spectrum file: " + path.string());

  std::vector<std::pair<double, double>> samples;
  std::string line;
  std::size_t line_number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!header_seen) {
      std::string compact;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
      if (compact != "k_nm_inv,sigma_nm4")
        throw SpectrumParseError("expected header 'k_nm_inv,sigma_nm4'",
                                 line_number);
      header_seen = true;
      continue;
    }
    std::istringstream row(line);
    double k, sigma;
    char comma;
    if (!(row >> k >> comma >> sigma) || comma != ',')
      throw SpectrumParseError("malformed row, expected 'k,sigma'", line_number);
    if (!(k >= 0.0)) throw SpectrumParseError("negative k", line_number);
    if (!(sigma >= 0.0)) throw SpectrumParseError("negative sigma", line_number);
    if (!samples.empty()) {
      if (k == samples.back().first)
        throw SpectrumParseError("duplicate k", line_number);
      if (k < samples.back().first)
        throw SpectrumParseError("k out of order", line_number);
    }
    samples.emplace_back(k, sigma);
  }
  if (!header_seen)
    throw SpectrumParseError("missing header 'k_nm_inv,sigma_nm4'", line_number);
  return tabulated(std::move(samples));
}

double RoughnessSpectrum::sigma(double k_nm_inv) const {
  if (!(k_nm_inv >= 0.0)) throw std::domain_error("k must be non-negative");
  if (gaussian_) {
    const double x = k_nm_inv * l_c_;
    return a2_ * pi * l_c_ * l_c_ * std::exp(-0.25 * x * x);
  }
  if (samples_.empty()) return 0.0;
  if (k_nm_inv < samples_.front().first || k_nm_inv > samples_.back().first)
    return 0.0;
  auto hi = std::lower_bound(
      samples_.begin(), samples_.end(), k_nm_inv,
      [](const auto& s, double k) { return s.first < k; });
  if (hi->first == k_nm_inv) return hi->second;
  auto lo = hi - 1;
  const double t = (k_nm_inv - lo->first) / (hi->first - lo->first);
  return lo->second + t * (hi->second - lo->second);
}

double RoughnessSpectrum::variance(double rel_tol) const {
  if (gaussian_) {
    QuadratureResult r = integrate(
        [this](double k) { return k * sigma(k) / (2.0 * pi); }, 0.0,
        support_cutoff(), rel_tol);
    return r.value;
  }
  // k * sigma(k) is piecewise quadratic; Simpson per segment is exact.
  double sum = 0.0;
  for (std::size_t i = 1; i < samples_.size(); ++i) {
    const auto& [k0, s0] = samples_[i - 1];
    const auto& [k1, s1] = samples_[i];
    const double km = 0.5 * (k0 + k1);
    const double sm = 0.5 * (s0 + s1);
    sum += (k1 - k0) / 6.0 * (k0 * s0 + 4.0 * km * sm + k1 * s1);
  }
  return sum / (2.0 * pi);
}

bool RoughnessSpectrum::empty() const {
  if (gaussian_) return false;
  return std::all_of(samples_.begin(), samples_.end(),
                     [](const auto& s) { return s.second == 0.0; });
}

double RoughnessSpectrum::a2() const {
  if (!gaussian_) throw std::logic_error("a2 is defined for Gaussian spectra");
  return a2_;
}

double RoughnessSpectrum::l_c() const {
  if (!gaussian_) throw std::logic_error("l_c is defined for Gaussian spectra");
  return l_c_;
}

const std::vector<std::pair<double, double>>& RoughnessSpectrum::samples()
    const {
  return samples_;
}

double RoughnessSpectrum::correlation_length() const {
  if (gaussian_) return l_c_;
  // 1 / <k> with weight k sigma(k) dk (the variance integrand).
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 1; i < samples_.size(); ++i) {
    const auto& [k0, s0] = samples_[i - 1];
    const auto& [k1, s1] = samples_[i];
    const double km = 0.5 * (k0 + k1);
    const double sm = 0.5 * (s0 + s1);
    const double h = (k1 - k0) / 6.0;
    m1 += h * (k0 * s0 + 4.0 * km * sm + k1 * s1);
    m2 += h * (k0 * k0 * s0 + 4.0 * km * km * sm + k1 * k1 * s1);
  }
  if (m2 <= 0.0) throw std::logic_error("empty spectrum has no correlation length");
  return m1 / m2;
}

double RoughnessSpectrum::support_cutoff() const {
  if (gaussian_) return 20.0 / l_c_;
  return samples_.empty() ? 0.0 : samples_.back().first;
}

} // namespace casimir
