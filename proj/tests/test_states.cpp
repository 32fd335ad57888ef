#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "dds/densities.hpp"
#include "dds/numerics.hpp"
#include "dds/states.hpp"

using namespace dds;

namespace {

// Brute-force L2 norm of a 2-D real wavefunction on a symmetric grid.
double position_norm(const std::function<double(double, double)>& psi, const Grid& g1,
                     const Grid& g2) {
  return integrate_2d([&](double x1, double x2) {
    const double v = psi(x1, x2);
    return v * v;
  }, g1, g2);
}

}  // namespace

TEST_CASE("theta = 0 reduces to the plain entangled double-slit state") {
  const ThetaParams prm(1.3, 0.8, 0.0);
  const double a = prm.a, h = prm.h;
  const double amp = std::sqrt(prm.a_theta_sq());
  for (double x1 : {-1.5, -0.3, 0.0, 0.7, 2.1})
    for (double x2 : {-2.0, -0.1, 0.4, 1.8}) {
      const double expected =
          amp * (std::exp(-a * (x1 - h) * (x1 - h) - a * (x2 - h) * (x2 - h)) +
                 std::exp(-a * (x1 + h) * (x1 + h) - a * (x2 + h) * (x2 + h)));
      CHECK(psi_theta_position(prm, x1, x2) == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("psi_theta is even under joint parity") {
  const ThetaParams prm(1.0, 1.2, kPi / 5.0 / 2.0);
  for (double x1 : {-1.7, 0.2, 0.9})
    for (double x2 : {-0.6, 0.3, 1.4})
      CHECK(psi_theta_position(prm, x1, x2) ==
            doctest::Approx(psi_theta_position(prm, -x1, -x2)).epsilon(1e-15));
}

TEST_CASE("psi_theta position norm is 1 (quadrature oracle)") {
  const ThetaParams prm(1.0, 1.0, kPi / 6.0);
  const Grid g = position_grid(prm.a, prm.h, QuadratureSpec{8.0, 32, 801, 20001});
  const double norm =
      position_norm([&](double x1, double x2) { return psi_theta_position(prm, x1, x2); },
                    g, g);
  CHECK(std::abs(norm - 1.0) < 1e-8);
}

TEST_CASE("unit norm across a parameter sweep, both families") {
  const std::tuple<double, double, double> theta_cases[] = {
      {1.0, 0.5, 0.0}, {2.0, 1.0, kPi / 8.0}, {0.5, 2.0, kPi / 4.0},
      {1.5, 0.0, kPi / 12.0}, {3.0, 1.5, kPi / 6.0}};
  for (const auto& [a, h, t] : theta_cases) {
    const ThetaParams prm(a, h, t);
    const Grid g = position_grid(a, h, QuadratureSpec{8.0, 32, 601, 20001});
    const double norm = position_norm(
        [&](double x1, double x2) { return psi_theta_position(prm, x1, x2); }, g, g);
    CAPTURE(a); CAPTURE(h); CAPTURE(t);
    CHECK(std::abs(norm - 1.0) < 1e-8);
  }

  const std::tuple<double, double, double, double> asym_cases[] = {
      {1.0, 1.5, 0.5, 2.0}, {2.0, 0.7, 1.0, 0.0}, {0.8, 0.0, 0.8, 0.0},
      {1.0, 1.0, 3.0, 0.4}, {0.4, 2.5, 0.9, 1.1}};
  for (const auto& [a, h1, b, h2] : asym_cases) {
    const AsymParams prm(a, h1, b, h2);
    const Grid g1 = position_grid(a, h1, QuadratureSpec{8.0, 32, 601, 20001});
    const Grid g2 = position_grid(b, h2, QuadratureSpec{8.0, 32, 601, 20001});
    const double norm = position_norm(
        [&](double x1, double x2) { return psi_asym_position(prm, x1, x2); }, g1, g2);
    CAPTURE(a); CAPTURE(h1); CAPTURE(b); CAPTURE(h2);
    CHECK(std::abs(norm - 1.0) < 1e-8);
  }
}

TEST_CASE("asymmetric state reduces to theta = 0 at a = b, h1 = h2") {
  const AsymParams ap(1.1, 0.9, 1.1, 0.9);
  const ThetaParams tp(1.1, 0.9, 0.0);
  for (double x1 : {-1.0, 0.0, 0.5, 1.7})
    for (double x2 : {-0.8, 0.2, 1.3})
      CHECK(psi_asym_position(ap, x1, x2) ==
            doctest::Approx(psi_theta_position(tp, x1, x2)).epsilon(1e-14));
}

TEST_CASE("psi_asym is even under joint parity") {
  const AsymParams prm(1.0, 1.5, 0.5, 2.0);
  for (double x1 : {-1.3, 0.4})
    for (double x2 : {-2.2, 0.9})
      CHECK(psi_asym_position(prm, x1, x2) ==
            doctest::Approx(psi_asym_position(prm, -x1, -x2)).epsilon(1e-15));
}

TEST_CASE("asym norm validates the M^2 formula for (1, 1.5, 0.5, 2)") {
  const AsymParams prm(1.0, 1.5, 0.5, 2.0);
  const Grid g1 = position_grid(prm.a, prm.h1, QuadratureSpec{8.0, 32, 801, 20001});
  const Grid g2 = position_grid(prm.b, prm.h2, QuadratureSpec{8.0, 32, 801, 20001});
  const double norm = position_norm(
      [&](double x1, double x2) { return psi_asym_position(prm, x1, x2); }, g1, g2);
  CHECK(std::abs(norm - 1.0) < 1e-8);
}

TEST_CASE("momentum wavefunction is real (conjugate-pair sum)") {
  const AsymParams prm(1.0, 1.5, 0.5, 2.0);
  for (double p1 : {-3.0, -0.4, 0.0, 1.1})
    for (double p2 : {-1.7, 0.3, 2.6})
      CHECK(std::abs(psi_asym_momentum(prm, p1, p2).imag()) < 1e-15);
}

TEST_CASE("momentum wavefunction at the origin") {
  // The complex-square exponents cancel the e^{-a h1^2 - b h2^2} factors,
  // leaving M/sqrt(ab) exactly.
  const AsymParams prm(1.0, 1.5, 0.5, 2.0);
  const double expected = std::sqrt(prm.m_sq()) / std::sqrt(prm.a * prm.b);
  CHECK(psi_asym_momentum(prm, 0.0, 0.0).real() ==
        doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("|psi_asym_momentum|^2 marginal matches the closed-form density") {
  const AsymParams prm(1.0, 1.5, 0.5, 2.0);
  std::vector<double> pts;
  for (int i = 0; i < 41; ++i) pts.push_back(-4.0 + 8.0 * i / 40.0);
  const Grid g2 = momentum_grid(prm.b, prm.h2);
  const TabulatedMarginal marg = quadrature_marginal(
      [&](double p1, double p2) { return std::norm(psi_asym_momentum(prm, p1, p2)); }, 0,
      pts, g2);
  for (std::size_t i = 0; i < pts.size(); ++i)
    CHECK(std::abs(marg.val[i] - momentum_density_asym(prm, pts[i])) < 1e-8);
}

TEST_CASE("momentum representation is the Fourier transform of position space") {
  const AsymParams prm(1.0, 1.2, 0.7, 0.8);
  const Grid g1 = position_grid(prm.a, prm.h1, QuadratureSpec{8.0, 32, 801, 20001});
  const Grid g2 = position_grid(prm.b, prm.h2, QuadratureSpec{8.0, 32, 801, 20001});
  for (double p1 : {-1.5, 0.0, 0.8})
    for (double p2 : {-0.5, 1.2}) {
      std::complex<double> ft = 0.0;
      for (int i = 0; i < g1.n; ++i) {
        const double w1 = (i == 0 || i == g1.n - 1) ? 0.5 : 1.0;
        const double x1 = g1.point(i);
        for (int j = 0; j < g2.n; ++j) {
          const double w2 = (j == 0 || j == g2.n - 1) ? 0.5 : 1.0;
          const double x2 = g2.point(j);
          ft += w1 * w2 * psi_asym_position(prm, x1, x2) *
                std::exp(std::complex<double>(0.0, -(p1 * x1 + p2 * x2)));
        }
      }
      ft *= g1.step() * g2.step() / (2.0 * kPi);
      const std::complex<double> closed = psi_asym_momentum(prm, p1, p2);
      CHECK(std::abs(ft - closed) < 1e-6);
    }
}

TEST_CASE("psi_theta_momentum squared equals the joint density") {
  const ThetaParams prm(1.0, 1.0, kPi / 6.0);
  for (double p1 : {-2.1, 0.0, 0.9})
    for (double p2 : {-1.3, 0.6}) {
      const double v = psi_theta_momentum(prm, p1, p2);
      CHECK(v * v ==
            doctest::Approx(joint_momentum_density_theta(prm, MomentumPair{p1, p2}))
                .epsilon(1e-12));
    }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ThetaParams(0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ThetaParams(1.0, -0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ThetaParams(1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ThetaParams(1.0, 1.0, -0.2), std::invalid_argument);
  CHECK_THROWS_AS(AsymParams(1.0, 1.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(AsymParams(-1.0, 1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(AsymParams(1.0, -1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("log-domain constants survive huge a h^2") {
  const ThetaParams prm(1.0, 20.0, kPi / 8.0);  // a h^2 = 400, e^{4ah^2} overflows
  CHECK(std::isfinite(prm.log_c_theta()));
  CHECK(std::isfinite(prm.c_ratio(4.0)));
  CHECK(prm.c_ratio(4.0) > 0.0);
  // e^{4E}/C -> 1/(2 pi a) up to the (1 + s e^{-2E})^2 factor -> exactly 1/(8 pi a / 4)
  CHECK(prm.c_ratio(4.0) == doctest::Approx(4.0 / (8.0 * kPi * prm.a)).epsilon(1e-12));
}
