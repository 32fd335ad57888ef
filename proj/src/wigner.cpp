#include "dds/wigner.hpp"

#include <cmath>

namespace dds {

GaussFactors gauss_factors(double width, double half_sep, double x, double p) {
  const double mom = std::exp(-p * p / (2.0 * width));
  return GaussFactors{
      std::exp(-2.0 * width * (x - half_sep) * (x - half_sep)) * mom,
      std::exp(-2.0 * width * (x + half_sep) * (x + half_sep)) * mom,
      std::exp(-2.0 * width * x * x) * mom};
}

double wigner_theta(const ThetaParams& prm, const PhasePoint& pt) {
  const GaussFactors g1 = gauss_factors(prm.a, prm.h, pt.x1, pt.p1);
  const GaussFactors g2 = gauss_factors(prm.a, prm.h, pt.x2, pt.p2);
  const double b = prm.b_theta();
  const double ct = std::cos(prm.theta), st = std::sin(prm.theta);
  const double s2 = prm.sin2t();
  const double block_cos2 =
      g1.g_minus * g2.g_minus + g1.g_plus * g2.g_plus +
      2.0 * g1.g_zero * g2.g_zero * std::cos(2.0 * prm.h * (pt.p1 + pt.p2));
  const double block_mixed =
      std::cos(2.0 * prm.h * pt.p1) * g1.g_zero * (g2.g_minus + g2.g_plus) +
      std::cos(2.0 * prm.h * pt.p2) * g2.g_zero * (g1.g_minus + g1.g_plus);
  const double block_sin2 =
      g1.g_minus * g2.g_plus + g1.g_plus * g2.g_minus +
      2.0 * g1.g_zero * g2.g_zero * std::cos(2.0 * prm.h * (pt.p1 - pt.p2));
  return b * (ct * ct * block_cos2 + s2 * block_mixed + st * st * block_sin2);
}

double wigner_partial_theta(const ThetaParams& prm, double x1, double p1) {
  const GaussFactors g = gauss_factors(prm.a, prm.h, x1, p1);
  const double b = prm.b_theta();
  const double d = prm.decay();
  const double s2 = prm.sin2t();
  return kPi * b * (1.0 + d * s2) * (g.g_minus + g.g_plus) +
         2.0 * kPi * b * (d + s2) * g.g_zero * std::cos(2.0 * prm.h * p1);
}

double wigner_asym(const AsymParams& prm, const PhasePoint& pt) {
  const GaussFactors g1 = gauss_factors(prm.a, prm.h1, pt.x1, pt.p1);
  const GaussFactors g2 = gauss_factors(prm.b, prm.h2, pt.x2, pt.p2);
  const double g = prm.g_norm();
  return g * (g1.g_minus * g2.g_minus + g1.g_plus * g2.g_plus) +
         2.0 * g * g1.g_zero * g2.g_zero *
             std::cos(2.0 * prm.h1 * pt.p1 + 2.0 * prm.h2 * pt.p2);
}

double wigner_partial_asym(const AsymParams& prm, double x1, double p1) {
  const GaussFactors g1 = gauss_factors(prm.a, prm.h1, x1, p1);
  const double g = prm.g_norm();
  const double d2 = std::exp(-2.0 * prm.b * prm.h2 * prm.h2);
  return kPi * g *
         (g1.g_minus + g1.g_plus + 2.0 * d2 * g1.g_zero * std::cos(2.0 * prm.h1 * p1));
}

double wigner_partial_asym_second(const AsymParams& prm, double x2, double p2) {
  return wigner_partial_asym(swapped(prm), x2, p2);
}

}  // namespace dds
