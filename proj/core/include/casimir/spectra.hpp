#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace casimir {

class SpectrumParseError : public std::runtime_error {
public:
  SpectrumParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_number(line) {}
  std::size_t line_number;
};

// Roughness spectrum sigma(k), the summed spectrum of both plates, in nm^4.
// Either the Gaussian model sigma = a^2 pi l_C^2 exp(-k^2 l_C^2 / 4) or a
// tabulated set of (k, sigma) samples with linear interpolation and zero
// extrapolation outside the sampled range. Crossed correlations between the
// plates are not modeled. Immutable after construction.
class RoughnessSpectrum {
public:
  static RoughnessSpectrum gaussian(double a2_nm2, double l_c_nm);
  static RoughnessSpectrum tabulated(
      std::vector<std::pair<double, double>> samples);

  // CSV format: header `k_nm_inv,sigma_nm4`, one `k,sigma` pair per line,
  // `#` comments allowed. k strictly increasing, sigma >= 0.
  static RoughnessSpectrum load_csv(const std::filesystem::path& path);

  double sigma(double k_nm_inv) const; // nm^4

  // Roughness variance a^2 = (1/2 pi) Int_0^inf k sigma(k) dk, nm^2.
  double variance(double rel_tol = 1e-8) const;

  bool is_gaussian() const { return gaussian_; }
  bool empty() const;
  double a2() const;  // Gaussian only
  double l_c() const; // Gaussian only
  const std::vector<std::pair<double, double>>& samples() const;

  // Effective correlation length: l_C for the Gaussian model, the inverse of
  // the sigma-weighted mean wavevector for tabulated spectra. Used for regime
  // classification and model-validity warnings only.
  double correlation_length() const;

  // Upper integration cutoff for moments of this spectrum.
  double support_cutoff() const;

private:
  RoughnessSpectrum() = default;
  bool gaussian_ = false;
  double a2_ = 0.0;
  double l_c_ = 0.0;
  std::vector<std::pair<double, double>> samples_;
};

} // namespace casimir
