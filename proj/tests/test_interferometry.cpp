#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <iostream>

#include "dds/densities.hpp"
#include "dds/interferometry.hpp"
#include "dds/numerics.hpp"

using namespace dds;

TEST_CASE("one-particle lower envelope vanishes at theta = pi/4") {
  const ThetaParams prm(1.0, 1.2, kPi / 4.0);
  const EnvelopePair env = one_particle_envelopes(prm);
  CHECK(env.lower_coeff == 0.0);
  CHECK(env.upper_coeff > 0.0);
}

TEST_CASE("envelope ratio is coth(ah^2)(1+sin2t)/(1-sin2t)") {
  const ThetaParams prm(1.0, 1.0, kPi / 12.0);
  const EnvelopePair env = one_particle_envelopes(prm);
  const double ratio = env.upper_coeff / env.lower_coeff;
  const double expected = (1.0 / std::tanh(1.0)) * 1.5 / 0.5;  // 3 coth(1) ~ 3.9391
  CHECK(ratio == doctest::Approx(expected).epsilon(1e-12));
  CHECK(ratio == doctest::Approx(3.9391).epsilon(1e-4));
  CHECK(visibility_theta(prm).ratio == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("envelope accuracy at ah^2 = 4: exact on axis, percent-level off axis") {
  const ThetaParams prm(1.0, 2.0, kPi / 6.0);  // a h^2 = 4
  const EnvelopePair env = one_particle_envelopes(prm);
  auto f = [&](double p) { return momentum_density_theta(prm, p); };
  double central = -1.0, side = -1.0, minima = -1.0;
  for (const Extremum& e : locate_extrema(f, -2.0, 2.0, kPi / prm.h)) {
    const double coeff =
        e.kind == ExtremumKind::Maximum ? env.upper_coeff : env.lower_coeff;
    const double envelope =
        coeff * std::exp(-e.position * e.position / (2.0 * env.gaussian_var));
    const double rel = std::abs(e.value - envelope) / envelope;
    if (e.kind == ExtremumKind::Minimum)
      minima = std::max(minima, rel);
    else if (std::abs(e.position) < 0.5)
      central = rel;
    else
      side = std::max(side, rel);
  }
  // the envelope touches the pattern exactly at p1 = 0
  CHECK(central == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
  CHECK(minima < 1e-2);
  // side maxima are pulled toward the origin by the Gaussian; the envelope
  // is off by ~(p pi / (2ah^2))^2 there, percent level and not exponentially
  // small in ah^2
  std::cout << "[info] ah^2 = 4 side-maximum envelope deviation: " << side << "\n";
  CHECK(side > 0.05);
  CHECK(side < 0.2);
}

TEST_CASE("visibility_theta closed form") {
  SUBCASE("theta = pi/4 gives V = 1 for any a, h") {
    for (double h : {0.2, 1.0, 3.0})
      CHECK(visibility_theta(ThetaParams(1.7, h, kPi / 4.0)).visibility ==
            doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("theta = 0, a h^2 = 1 gives V = e^{-2}") {
    CHECK(visibility_theta(ThetaParams(1.0, 1.0, 0.0)).visibility ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  }
  SUBCASE("matches the Monte Carlo fringe-fit estimate") {
    const ThetaParams prm(1.0, 2.0, kPi / 12.0);
    const SampleBatch batch = sample_joint(prm, 1000000, 20260824);
    const FringeFit fit = fit_visibility(batch, prm);
    CHECK(std::abs(fit.visibility_hat - visibility_theta(prm).visibility) < 1e-3 + 0.01);
  }
}

TEST_CASE("visibility_asym closed form and degenerate h2 = 0") {
  const AsymParams prm(1.0, 1.0, 0.5, 2.0);
  const VisibilityReport rep = visibility_asym(prm);
  CHECK(rep.visibility == doctest::Approx(std::exp(-4.0)).epsilon(1e-15));
  CHECK(rep.ratio == doctest::Approx(1.0 / std::tanh(2.0)).epsilon(1e-13));

  const VisibilityReport degenerate = visibility_asym(AsymParams(1.0, 1.0, 0.5, 0.0));
  CHECK(degenerate.visibility == 1.0);
  CHECK(std::isinf(degenerate.ratio));
}

TEST_CASE("ratio and visibility are algebraically dual") {
  const std::tuple<double, double, double, double> cases[] = {
      {1.0, 1.0, 0.5, 2.0}, {2.0, 0.3, 1.5, 0.8}, {0.7, 2.2, 0.9, 1.3},
      {1.1, 0.6, 2.4, 0.5}, {3.0, 1.0, 0.3, 1.9}};
  for (const auto& [a, h1, b, h2] : cases) {
    const VisibilityReport rep = visibility_asym(AsymParams(a, h1, b, h2));
    CHECK(rep.ratio * (1.0 - rep.visibility) / (1.0 + rep.visibility) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  // same duality for the theta family
  for (double theta : {0.0, kPi / 12.0, kPi / 6.0}) {
    const VisibilityReport rep = visibility_theta(ThetaParams(1.0, 1.0, theta));
    CHECK((rep.ratio - 1.0) / (rep.ratio + 1.0) ==
          doctest::Approx(rep.visibility).epsilon(1e-12));
  }
}

TEST_CASE("two-particle envelopes at theta = 0") {
  const ThetaParams prm(1.0, 1.0, 0.0);
  const TwoParticleEnvelopes env = two_particle_envelopes(prm);
  const double e4 = std::exp(4.0);
  CHECK(env.exact.upper_coeff ==
        doctest::Approx(prm.c_ratio(0.0) * (2.0 + 2.0 * e4)).epsilon(1e-13));
  CHECK(env.exact.lower_coeff == 0.0);
  CHECK(env.simplified.upper_coeff ==
        doctest::Approx(2.0 * prm.c_ratio(4.0)).epsilon(1e-13));
  CHECK(env.simplified.lower_coeff == 0.0);
  // simplified forms at theta = 0 give P = 1
  CHECK(predictability_theta(0.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("exact and simplified envelopes converge at large ah^2") {
  const ThetaParams prm(1.0, 2.0, kPi / 6.0);  // a h^2 = 4
  const TwoParticleEnvelopes env = two_particle_envelopes(prm);
  const double rel =
      std::abs(env.exact.upper_coeff - env.simplified.upper_coeff) /
      env.exact.upper_coeff;
  CHECK(rel <= 10.0 * std::exp(-2.0 * prm.exponent()));
}

TEST_CASE("envelope gap shrinks like e^{-2ah^2}") {
  double fitted_c = 0.0;
  for (double h : {1.5, 2.0, 2.5, 3.0}) {
    const ThetaParams prm(1.0, h, kPi / 6.0);
    const TwoParticleEnvelopes env = two_particle_envelopes(prm);
    const double rel = std::abs(env.exact.upper_coeff - env.simplified.upper_coeff) /
                       env.exact.upper_coeff;
    fitted_c = std::max(fitted_c, rel / std::exp(-2.0 * prm.exponent()));
  }
  std::cout << "[info] envelope relative gap <= C e^{-2ah^2} with C = " << fitted_c
            << "\n";
  CHECK(fitted_c <= 10.0);
}

TEST_CASE("predictability closed form") {
  CHECK(predictability_theta(0.0) == doctest::Approx(1.0));
  CHECK(predictability_theta(kPi / 4.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK(predictability_theta(kPi / 6.0) == doctest::Approx(3.0 / 7.0).epsilon(1e-15));
  CHECK_THROWS_AS(predictability_theta(-0.1), std::domain_error);
  CHECK_THROWS_AS(predictability_theta(1.0), std::domain_error);
}

TEST_CASE("predictability identity (c^2 + c)/(c^2 - c + 2)") {
  for (int k = 0; k <= 50; ++k) {
    const double theta = (kPi / 4.0) * k / 50.0;
    const double c = std::cos(2.0 * theta);
    CHECK(predictability_theta(theta) ==
          doctest::Approx((c * c + c) / (c * c - c + 2.0)).epsilon(1e-14));
    CHECK(predictability_theta(theta) <= c + 1e-14);
  }
}

TEST_CASE("complementarity record at the endpoints") {
  const ComplementarityRecord at0 = complementarity(ThetaParams(1.0, 1.0, 0.0));
  CHECK(at0.v_simple == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK(at0.predictability == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(at0.sum_sq == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(at0.holds);

  const ComplementarityRecord at45 = complementarity(ThetaParams(1.0, 1.0, kPi / 4.0));
  CHECK(at45.v_simple == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(at45.predictability == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK(at45.sum_sq == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(at45.holds);
}

TEST_CASE("complementarity sweep never exceeds 1") {
  double worst = -1.0;
  for (int k = 0; k < 400; ++k) {
    const ThetaParams prm(1.0, 1.0, (kPi / 4.0) * k / 399.0);
    const ComplementarityRecord rec = complementarity(prm);
    CHECK(rec.holds);
    worst = std::max(worst, rec.sum_sq);
  }
  CHECK(worst <= 1.0 + 1e-12);
}

TEST_CASE("lower-bound chain sin2t <= V <= 1") {
  for (int ia = 1; ia <= 10; ++ia)
    for (int ih = 0; ih < 10; ++ih)
      for (int it = 0; it < 10; ++it) {
        const ThetaParams prm(0.3 * ia, 0.35 * ih, (kPi / 4.0) * it / 9.0);
        const double v = visibility_theta(prm).visibility;
        CHECK(v >= prm.sin2t() - 1e-12);
        CHECK(v <= 1.0 + 1e-12);
      }
}

TEST_CASE("V is nondecreasing in theta and decreasing in ah^2") {
  const double a = 1.0, h = 1.2;
  double prev = -1.0;
  for (int k = 0; k <= 100; ++k) {
    const double v = visibility_theta(ThetaParams(a, h, (kPi / 4.0) * k / 100.0)).visibility;
    CHECK(v >= prev - 1e-15);
    prev = v;
  }
  prev = 2.0;
  for (double hh : {0.5, 0.8, 1.1, 1.6, 2.3, 3.0}) {
    const double v = visibility_theta(ThetaParams(a, hh, kPi / 12.0)).visibility;
    CHECK(v <= prev + 1e-15);
    prev = v;
  }
}

TEST_CASE("P^2 + V_envelope^2 may exceed 1 for small ah^2 (diagnostic only)") {
  const ThetaParams prm(1.0, 0.3, kPi / 8.0);
  const double v = visibility_theta(prm).visibility;
  const double p = predictability_theta(prm.theta);
  std::cout << "[info] diagnostic P^2 + V_envelope^2 at (1, 0.3, pi/8): "
            << p * p + v * v << "\n";
  CHECK(std::isfinite(p * p + v * v));
}

TEST_CASE("predictability_exact approaches the simplified P at large ah^2") {
  const ThetaParams tight(1.0, 3.0, kPi / 6.0);  // a h^2 = 9
  CHECK(std::abs(predictability_exact(tight) - predictability_theta(tight.theta)) < 1e-4);
}
