// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.
// Criterion 13 needs the CLI binary; pass its path as argv[1].

#include "casimir/constants.hpp"
#include "casimir/correction.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/mirror.hpp"
#include "casimir/oracle.hpp"
#include "casimir/response.hpp"
#include "casimir/spectra.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace casimir;
using constants::pi;
using constants::pi_sq;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool pass,
            const std::string& detail = "") {
  std::printf("%s  %2d. %s%s%s\n", pass ? "PASS" : "FAIL", id, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

bool within(double value, double reference, double rel) {
  return std::abs(value - reference) <= rel * std::abs(reference);
}

std::string show(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

int main(int argc, char** argv) {
  // 1. Ideal-mirror energy normalization.
  {
    const double e = reduced_energy_perfect(1e-9).e;
    report(1, "ideal-mirror reduced energy = -pi^2/720 (1e-6 rel)",
           within(e, -pi_sq / 720.0, 1e-6), show(e));
  }

  // 2. PFA curvature ratio limits.
  {
    const double low = pfa_curvature_ratio_reduced(1e-3, 1e-7);
    const double high = pfa_curvature_ratio_reduced(1e3, 1e-7);
    report(2, "curvature ratio: 3 at Kp=1e-3 and 6 at Kp=1e3 (2%)",
           within(low, 3.0, 0.02) && within(high, 6.0, 0.02),
           show(low) + ", " + show(high));
  }

  // 3. High-k coefficient, short-distance limit.
  {
    const double a = alpha(1e-3, 1e-7);
    report(3, "alpha(Kp=1e-3) = 0.4492 (1%)", within(a, 0.4492, 0.01),
           show(a));
  }

  // 4. High-k coefficient saturation.
  {
    const double product = alpha(1e3, 1e-7) * 1e3;
    const double lambda_p = 136.0;
    const double L = 5.0e4; // deep saturation for lambda_p = 136 nm
    const double a_nm =
        alpha(MirrorSpec::plasma(lambda_p).reduced_plasma(L), 1e-7) * L;
    const double a_sat = 14.0 * lambda_p / (30.0 * pi); // 20.2 nm
    report(4, "alpha saturation: Kp alpha -> 14/15 and alpha -> 20.2 nm (1%)",
           within(product, 14.0 / 15.0, 0.01) && within(a_nm, a_sat, 0.01),
           show(product) + ", " + show(a_nm) + " nm");
  }

  // 5. Perfect-reflector response anchors.
  {
    const double slope = rho_perfect(30.0, 1e-7) / 30.0;
    const double unity = rho_perfect(1e-3, 1e-7);
    const double g0 = g_perfect(0.0, 1e-8);
    report(5,
           "perfect reflector: rho/q -> 1/3 (2%), rho(1e-3) = 1 (1%), "
           "g(0) = -pi^2/120 (1e-4)",
           within(slope, 1.0 / 3.0, 0.02) && within(unity, 1.0, 0.01) &&
               within(g0, -pi_sq / 120.0, 1e-4),
           show(slope) + ", " + show(unity) + ", " + show(g0));
  }

  // 6. Gaussian spectrum variance.
  {
    bool pass = true;
    std::string detail;
    for (auto [a, lc] : {std::pair{1.0, 10.0}, {5.0, 60.0}, {0.3, 500.0}}) {
      const double v = RoughnessSpectrum::gaussian(a * a, lc).variance(1e-9);
      pass = pass && within(v, a * a, 1e-6);
      detail += show(v) + " ";
    }
    report(6, "Gaussian variance = a^2 for three (a, l_C) pairs (1e-6 rel)",
           pass, detail);
  }

  // 7. Scaling-law reproduction by full quadrature.
  {
    const double L1 = 100.0, lc1 = L1 / 50.0, a1 = 0.1;
    auto r1 = delta(L1, MirrorSpec::perfect(),
                    RoughnessSpectrum::gaussian(a1 * a1, lc1),
                    ResponseModel::perfect_reflector, 1e-7);
    const double norm1 = r1.delta * lc1 * L1 / (std::sqrt(pi) * a1 * a1);

    const double L2 = 100.0, lambda_p = 2.0 * pi * L2 / 1e3;
    const double lc2 = lambda_p / 50.0, a2 = 0.01;
    auto r2 = delta(L2, MirrorSpec::plasma(lambda_p),
                    RoughnessSpectrum::gaussian(a2 * a2, lc2),
                    ResponseModel::high_k, 1e-7);
    const double norm2 = r2.delta * L2 * L2 * lc2 / (lambda_p * a2 * a2);

    report(7,
           "quadrature reproduces scaling laws: 2 (perfect) and 14/5sqrt(pi) "
           "(saturated), 5%",
           within(norm1, 2.0, 0.05) &&
               within(norm2, 14.0 / (5.0 * std::sqrt(pi)), 0.05),
           show(norm1) + ", " + show(norm2));
  }

  // 8. Plasmon-regime diagnostic: which coefficient does the quadrature match?
  {
    const double L = 100.0, lc = L / 50.0, a = 0.01;
    const double lambda_p = 100.0 * L; // l_C << L << lambda_p
    auto r = delta(L, MirrorSpec::plasma(lambda_p),
                   RoughnessSpectrum::gaussian(a * a, lc),
                   ResponseModel::high_k, 1e-7);
    const double norm = r.delta * lc * L / (std::sqrt(pi) * a * a);
    const bool matches_printed = within(norm, 2.695, 0.05);
    const bool matches_composed = within(norm, 1.348, 0.05);
    std::string which = matches_printed   ? "matches printed 2.695"
                        : matches_composed ? "matches composed 1.348"
                                           : "matches neither";
    report(8, "plasmon-regime coefficient diagnostic (5% against one of two)",
           matches_printed || matches_composed, show(norm) + ", " + which);
  }

  // 9. Stitched never undercuts PFA on randomized spectra.
  {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    bool pass = true;
    std::string detail;
    for (int i = 0; i < 20; ++i) {
      const double L = 50.0 * std::pow(10.0, u(rng));
      const double lambda_p = 30.0 * std::pow(20.0, u(rng));
      const double lc = 4.0 * std::pow(50.0, u(rng));
      const double a2 = (1e-4 + u(rng)) * 1e-4 * L * L;
      auto mirror = MirrorSpec::plasma(lambda_p);
      auto spec = RoughnessSpectrum::gaussian(a2, lc);
      const double stitched =
          delta(L, mirror, spec, ResponseModel::stitched, 1e-6).delta;
      const double pfa =
          delta(L, mirror, spec, ResponseModel::pfa, 1e-6).delta;
      if (!(stitched >= pfa * (1.0 - 1e-9))) {
        pass = false;
        detail = "violated at L=" + show(L) + " lambda_p=" + show(lambda_p) +
                 " lc=" + show(lc);
        break;
      }
    }
    report(9, "delta(stitched) >= delta(pfa) on 20 randomized spectra", pass,
           detail);
  }

  // 10. Oracle equivalence: adaptive vs fixed-grid trapezoid.
  {
    bool pass = true;
    double worst = 0.0;
    const double kps[] = {0.5, 2.0, 9.239978392911157, 62.83185307179586,
                          300.0};
    for (double Kp : kps) {
      const double rel = std::abs(reduced_energy(Kp, 1e-8).e /
                                      oracle::trapezoid_energy(Kp, 2048, 2048,
                                                               40.0) -
                                  1.0);
      worst = std::max(worst, rel);
    }
    for (double Kp : kps) {
      const double rel =
          std::abs(alpha(Kp, 1e-8) / oracle::trapezoid_alpha(Kp, 1024, 40.0) -
                   1.0);
      worst = std::max(worst, rel);
    }
    for (double q : {0.5, 1.0, 2.0, 5.0, 10.0}) {
      const double rel =
          std::abs(g_perfect(q, 1e-8) /
                       oracle::trapezoid_g_perfect(q, 1024, 1024, 35.0) -
                   1.0);
      worst = std::max(worst, rel);
    }
    pass = worst <= 1e-4;
    report(10, "adaptive vs trapezoid oracle <= 1e-4 on 15 points", pass,
           "worst rel dev " + show(worst));
  }

  // 11. Scale invariance of dimensionless outputs.
  {
    auto gold = MirrorSpec::plasma(136.0);
    auto spec = RoughnessSpectrum::gaussian(4.0, 40.0);
    const double e0 = reduced_energy(gold, 200.0, 1e-9).e;
    const double c0 = pfa_curvature_ratio(200.0, gold, 1e-8);
    const double rho0 = rho_estimate(0.02, 200.0, gold, 1e-8).rho;
    const double d0 = delta(200.0, gold, spec, ResponseModel::stitched, 1e-8)
                          .delta;
    bool pass = true;
    double worst = 0.0;
    for (double s : {0.5, 2.0, 10.0}) {
      auto m = MirrorSpec::plasma(136.0 * s);
      auto sp = RoughnessSpectrum::gaussian(4.0 * s * s, 40.0 * s);
      const double devs[] = {
          std::abs(reduced_energy(m, 200.0 * s, 1e-9).e / e0 - 1.0),
          std::abs(pfa_curvature_ratio(200.0 * s, m, 1e-8) / c0 - 1.0),
          std::abs(rho_estimate(0.02 / s, 200.0 * s, m, 1e-8).rho / rho0 -
                   1.0),
          std::abs(delta(200.0 * s, m, sp, ResponseModel::stitched, 1e-8)
                       .delta /
                       d0 -
                   1.0)};
      for (double dev : devs) worst = std::max(worst, dev);
    }
    pass = worst <= 1e-8;
    report(11, "scale invariance to 1e-8 for s in {0.5, 2, 10}", pass,
           "worst rel dev " + show(worst));
  }

  // 12. Soft figure check for the stitched response.
  {
    const double rho =
        rho_estimate(0.02, 200.0, MirrorSpec::plasma(136.0), 1e-7).rho;
    report(12, "stitched rho(L=200, lambda_p=136, k=0.02) in [1.2, 2.0]",
           rho >= 1.2 && rho <= 2.0, show(rho));
  }

  // 13. CLI sweep determinism (byte-identical reruns).
  {
    if (argc < 2) {
      report(13, "CLI sweep determinism", false,
             "missing CLI path argument (argv[1])");
    } else {
      namespace fs = std::filesystem;
      const fs::path dir = fs::temp_directory_path();
      const fs::path out1 = dir / "acceptance_sweep_1.csv";
      const fs::path out2 = dir / "acceptance_sweep_2.csv";
      const std::string base =
          std::string("\"") + argv[1] +
          "\" sweep --axis L --min 50 --max 400 --points 6 --lambda-p 136 "
          "--spectrum gaussian:a=1,lc=20 --output ";
      const int rc1 = std::system((base + out1.string()).c_str());
      const int rc2 = std::system((base + out2.string()).c_str());
      const std::string body1 = read_file(out1);
      const std::string body2 = read_file(out2);
      const bool pass =
          rc1 == 0 && rc2 == 0 && !body1.empty() && body1 == body2;
      report(13, "CLI sweep determinism (byte-identical reruns)", pass,
             pass ? std::to_string(body1.size()) + " bytes"
                  : "exit codes " + std::to_string(rc1) + "/" +
                        std::to_string(rc2));
      fs::remove(out1);
      fs::remove(out2);
    }
  }

  if (failures == 0) std::printf("all 13 criteria passed\n");
  else std::printf("%d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
