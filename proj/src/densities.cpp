#include "dds/densities.hpp"

#include <cmath>

namespace dds {

double momentum_density_theta(const ThetaParams& prm, double p1) {
  const double pref = std::sqrt(2.0 * kPi / prm.a) * kPi * prm.b_theta();
  const double d = prm.decay();
  const double c = std::cos(2.0 * prm.h * p1);
  return pref * std::exp(-p1 * p1 / (2.0 * prm.a)) *
         ((1.0 + d * c) + prm.sin2t() * (d + c));
}

double joint_momentum_density_theta(const ThetaParams& prm, const MomentumPair& mp) {
  const double ct = std::cos(prm.theta), st = std::sin(prm.theta);
  const double pp = mp.plus(), pm = mp.minus();
  const double bracket = 1.0 + ct * ct * std::cos(2.0 * prm.h * pp) +
                         2.0 * prm.sin2t() * std::cos(prm.h * pp) * std::cos(prm.h * pm) +
                         st * st * std::cos(2.0 * prm.h * pm);
  return prm.b_theta() * (kPi / prm.a) *
         std::exp(-(mp.p1 * mp.p1 + mp.p2 * mp.p2) / (2.0 * prm.a)) * bracket;
}

double corrected_joint(const ThetaParams& prm, const MomentumPair& mp) {
  const double s = prm.sin2t(), c = prm.cos2t();
  // q_k = e^{k a h^2} / C_theta, evaluated in log domain for large a h^2
  const double q0 = prm.c_ratio(0.0);
  const double q2 = prm.c_ratio(2.0);
  const double q4 = prm.c_ratio(4.0);
  const double pp = mp.plus(), pm = mp.minus();
  const double gauss = std::exp(-(pp * pp + pm * pm) / (4.0 * prm.a));
  const double even = q0 + c * c * q4;
  const double odd = c * (q0 + q4 + 2.0 * s * q2);
  return gauss * (q4 + c * c * q0 +
                  2.0 * s * s * q2 * std::cos(prm.h * pp) * std::cos(prm.h * pm)) +
         0.5 * gauss * (even + odd) * std::cos(2.0 * prm.h * pp) +
         0.5 * gauss * (even - odd) * std::cos(2.0 * prm.h * pm);
}

double corrected_joint_bar(const ThetaParams& prm, const MomentumPair& mp) {
  const ThetaParams prm0(prm.a, prm.h, 0.0);
  return joint_momentum_density_theta(prm, mp) -
         momentum_density_theta(prm, mp.p1) * momentum_density_theta(prm, mp.p2) +
         momentum_density_theta(prm0, mp.p1) * momentum_density_theta(prm0, mp.p2);
}

double momentum_density_asym(const AsymParams& prm, double p1) {
  const double pref = kPi * prm.g_norm() * std::sqrt(2.0 * kPi / prm.a);
  const double d2 = std::exp(-2.0 * prm.b * prm.h2 * prm.h2);
  return pref * std::exp(-p1 * p1 / (2.0 * prm.a)) *
         (1.0 + d2 * std::cos(2.0 * prm.h1 * p1));
}

}  // namespace dds
