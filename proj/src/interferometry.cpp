#include "dds/interferometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dds {

EnvelopePair one_particle_envelopes(const ThetaParams& prm) {
  const double pref = kPi * std::sqrt(2.0 * kPi / prm.a) * prm.b_theta();
  const double d = prm.decay();
  const double s = prm.sin2t();
  return EnvelopePair{pref * (1.0 + d) * (1.0 + s), pref * (1.0 - d) * (1.0 - s),
                      prm.a};
}

VisibilityReport visibility_theta(const ThetaParams& prm) {
  const double d = prm.decay();
  const double s = prm.sin2t();
  const double v = (d + s) / (1.0 + d * s);
  double ratio;
  if (d == 1.0 || s == 1.0) {
    ratio = std::numeric_limits<double>::infinity();
  } else {
    ratio = (1.0 + d) / (1.0 - d) * (1.0 + s) / (1.0 - s);
  }
  return VisibilityReport{v, ratio, prm.exponent() >= kEnvelopeRegimeThreshold};
}

VisibilityReport visibility_asym(const AsymParams& prm) {
  const double e2 = prm.b * prm.h2 * prm.h2;
  const double v = std::exp(-2.0 * e2);
  const double ratio = (e2 == 0.0) ? std::numeric_limits<double>::infinity()
                                   : 1.0 / std::tanh(e2);
  return VisibilityReport{v, ratio, prm.a * prm.h1 * prm.h1 >= kEnvelopeRegimeThreshold};
}

TwoParticleEnvelopes two_particle_envelopes(const ThetaParams& prm) {
  const double s = prm.sin2t(), c = prm.cos2t();
  const double q0 = prm.c_ratio(0.0);
  const double q2 = prm.c_ratio(2.0);
  const double q4 = prm.c_ratio(4.0);
  // upper: N [2 + 2 e^{4ah^2} - sin^2(2t) (1 - e^{2ah^2})^2]
  const double upper = 2.0 * q0 + 2.0 * q4 - s * s * (q0 - 2.0 * q2 + q4);
  // lower: N (e^{4ah^2} - cos2t [1 + e^{4ah^2} + 2 sin2t - cos2t]),
  // grouped as (1-c)(e^{4ah^2} - c) - 2 s c so that theta = 0 gives exactly 0
  const double lower = (1.0 - c) * (q4 - c * q0) - 2.0 * s * c * q0;
  const double simple_upper = q4 * (1.0 + c * c);
  const double simple_lower = q4 * (1.0 - c);
  return TwoParticleEnvelopes{EnvelopePair{upper, lower, 2.0 * prm.a},
                              EnvelopePair{simple_upper, simple_lower, 2.0 * prm.a}};
}

double predictability_theta(double theta) {
  if (!(theta >= 0.0 && theta <= kPi / 4.0 + 1e-15))
    throw std::domain_error("predictability_theta: theta must lie in [0, pi/4]");
  const double c = std::cos(2.0 * theta);
  const double ct = std::cos(theta), st = std::sin(theta);
  return c * ct * ct / (1.0 - c * st * st);
}

double predictability_exact(const ThetaParams& prm) {
  const TwoParticleEnvelopes env = two_particle_envelopes(prm);
  return (env.exact.upper_coeff - env.exact.lower_coeff) /
         (env.exact.upper_coeff + env.exact.lower_coeff);
}

ComplementarityRecord complementarity(const ThetaParams& prm) {
  const double v = prm.sin2t();
  const double p = predictability_theta(prm.theta);
  const double sum = p * p + v * v;
  return ComplementarityRecord{v, p, sum, sum <= 1.0 + 1e-12};
}

}  // namespace dds
