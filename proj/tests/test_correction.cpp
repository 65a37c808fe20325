#include "doctest.h"

#include "casimir/constants.hpp"
#include "casimir/correction.hpp"
#include "casimir/lifshitz.hpp"

#include <cmath>
#include <random>

using namespace casimir;
using constants::pi;

TEST_SUITE("correction") {

TEST_CASE("regime classification") {
  CHECK(classify_regime(5.0, 136.0, 5000.0) == Regime::pfa_short);
  CHECK(classify_regime(5000.0, 136.0, 13.6) == Regime::saturated);
  CHECK(classify_regime(200.0, 136.0, 300.0) == Regime::crossover);
  CHECK(classify_regime(200.0, 10.0, 2000.0) == Regime::pfa_long);
  CHECK(classify_regime(2000.0, 10.0, 200.0) == Regime::perfect_rough);
  CHECK(classify_regime(200.0, 2000.0, 20.0) == Regime::plasmon_rough);
  // lambda_p = 0 (perfect mirror) counts as infinitely small.
  CHECK(classify_regime(1000.0, 0.0, 100.0) == Regime::perfect_rough);
  CHECK(classify_regime(100.0, 0.0, 1000.0) == Regime::pfa_long);
  CHECK_THROWS_AS(classify_regime(-1.0, 136.0, 100.0), std::domain_error);
}

TEST_CASE("closed-form scaling laws") {
  const double L = 100.0, lp = 10.0, lc = 5.0, a2 = 4.0;
  CHECK(scaling_delta(Regime::pfa_short, L, lp, lc, a2) ==
        doctest::Approx(3.0 * a2 / (L * L)));
  CHECK(scaling_delta(Regime::pfa_long, L, lp, lc, a2) ==
        doctest::Approx(6.0 * a2 / (L * L)));
  CHECK(scaling_delta(Regime::perfect_rough, L, lp, lc, a2) ==
        doctest::Approx(2.0 * std::sqrt(pi) * a2 / (lc * L)));
  CHECK(scaling_delta(Regime::plasmon_rough, L, lp, lc, a2) ==
        doctest::Approx(2.7 * std::sqrt(pi) * a2 / (lc * L)));
  CHECK(scaling_delta(Regime::saturated, L, lp, lc, a2) ==
        doctest::Approx(14.0 / (5.0 * std::sqrt(pi)) * (lp / lc) * a2 /
                        (L * L)));
  CHECK_THROWS_AS(scaling_delta(Regime::crossover, L, lp, lc, a2),
                  std::invalid_argument);
}

TEST_CASE("pfa delta equals curvature ratio times a^2/L^2") {
  auto gold = MirrorSpec::plasma(136.0);
  auto spec = RoughnessSpectrum::gaussian(1.0, 33.0);
  const double L = 150.0;
  auto result = delta(L, gold, spec, ResponseModel::pfa, 1e-8);
  const double expected =
      pfa_curvature_ratio(L, gold, 1e-8) * 1.0 / (L * L);
  CHECK(result.delta == doctest::Approx(expected).epsilon(1e-6));
  CHECK(result.delta > 0.0);
}

TEST_CASE("perfect-reflector deep regime matches its scaling law") {
  const double L = 100.0, lc = L / 50.0, a = 0.1;
  auto spec = RoughnessSpectrum::gaussian(a * a, lc);
  auto result =
      delta(L, MirrorSpec::perfect(), spec, ResponseModel::perfect_reflector,
            1e-7);
  const double norm = result.delta * lc * L / (std::sqrt(pi) * a * a);
  CHECK(norm == doctest::Approx(2.0).epsilon(0.05));
  CHECK(result.regime == Regime::perfect_rough);
}

TEST_CASE("high-k saturated regime matches its scaling law") {
  const double L = 100.0;
  const double lambda_p = 2.0 * pi * L / 1e3; // Kp = 1e3
  const double lc = lambda_p / 50.0, a = 0.01;
  auto spec = RoughnessSpectrum::gaussian(a * a, lc);
  auto result = delta(L, MirrorSpec::plasma(lambda_p), spec,
                      ResponseModel::high_k, 1e-7);
  const double norm = result.delta * L * L * lc / (lambda_p * a * a);
  CHECK(norm == doctest::Approx(14.0 / (5.0 * std::sqrt(pi))).epsilon(0.05));
  CHECK(result.regime == Regime::saturated);
}

TEST_CASE("stitched never undercuts pfa") {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 5; ++i) {
    const double L = 50.0 * std::pow(10.0, u(rng));
    const double lambda_p = 30.0 * std::pow(10.0, u(rng));
    const double lc = 5.0 * std::pow(40.0, u(rng));
    const double a2 = 0.01 * L * L * u(rng) + 1e-4;
    auto mirror = MirrorSpec::plasma(lambda_p);
    auto spec = RoughnessSpectrum::gaussian(a2, lc);
    const double stitched =
        delta(L, mirror, spec, ResponseModel::stitched, 1e-6).delta;
    const double pfa = delta(L, mirror, spec, ResponseModel::pfa, 1e-6).delta;
    CHECK(stitched >= pfa * (1.0 - 1e-9));
  }
}

TEST_CASE("perfect-reflector model degrades to pfa for smooth spectra") {
  const double L = 50.0;
  auto spec = RoughnessSpectrum::gaussian(1.0, 100.0 * L);
  const double perfect =
      delta(L, MirrorSpec::perfect(), spec, ResponseModel::perfect_reflector,
            1e-7)
          .delta;
  const double pfa =
      delta(L, MirrorSpec::perfect(), spec, ResponseModel::pfa, 1e-7).delta;
  CHECK(perfect == doctest::Approx(pfa).epsilon(0.03));
}

TEST_CASE("delta scale invariance") {
  auto gold = MirrorSpec::plasma(136.0);
  auto spec = RoughnessSpectrum::gaussian(4.0, 40.0);
  const double base =
      delta(200.0, gold, spec, ResponseModel::stitched, 1e-8).delta;
  for (double s : {0.5, 2.0, 10.0}) {
    auto scaled_mirror = MirrorSpec::plasma(136.0 * s);
    auto scaled_spec = RoughnessSpectrum::gaussian(4.0 * s * s, 40.0 * s);
    const double scaled =
        delta(200.0 * s, scaled_mirror, scaled_spec, ResponseModel::stitched,
              1e-8)
            .delta;
    CHECK(scaled == doctest::Approx(base).epsilon(1e-8));
  }
}

TEST_CASE("empty spectrum yields zero with a warning") {
  auto spec = RoughnessSpectrum::tabulated({{0.0, 0.0}, {1.0, 0.0}});
  auto result =
      delta(100.0, MirrorSpec::perfect(), spec, ResponseModel::pfa, 1e-6);
  CHECK(result.delta == 0.0);
  CHECK(!result.warnings.empty());
}

TEST_CASE("model choice heuristics") {
  auto gold = MirrorSpec::plasma(136.0);
  CHECK(choose_model(100.0, gold, RoughnessSpectrum::gaussian(1.0, 5000.0)) ==
        ResponseModel::pfa);
  CHECK(choose_model(1000.0, MirrorSpec::perfect(),
                     RoughnessSpectrum::gaussian(1.0, 50.0)) ==
        ResponseModel::perfect_reflector);
  CHECK(choose_model(200.0, gold, RoughnessSpectrum::gaussian(1.0, 50.0)) ==
        ResponseModel::stitched);
}

TEST_CASE("high_k model refuses the perfect mirror") {
  auto spec = RoughnessSpectrum::gaussian(1.0, 10.0);
  CHECK_THROWS_AS(
      delta(100.0, MirrorSpec::perfect(), spec, ResponseModel::high_k, 1e-6),
      std::domain_error);
}

TEST_CASE("validity warnings") {
  auto gold = MirrorSpec::plasma(136.0);
  // high_k far outside its window: dominant k ~ 1/2000 << 2 pi / lambda_p.
  auto wide = RoughnessSpectrum::gaussian(1.0, 2000.0);
  auto result = delta(100.0, gold, wide, ResponseModel::high_k, 1e-6);
  CHECK(!result.warnings.empty());
  // pfa outside its window: l_C not >> L.
  auto narrow = RoughnessSpectrum::gaussian(1.0, 20.0);
  CHECK(!delta(100.0, gold, narrow, ResponseModel::pfa, 1e-6).warnings.empty());
}

} // TEST_SUITE
