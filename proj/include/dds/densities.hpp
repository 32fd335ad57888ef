#pragma once

#include "dds/states.hpp"

namespace dds {

struct MomentumPair {
  double p1, p2;
  double plus() const { return p1 + p2; }
  double minus() const { return p1 - p2; }
};

// One-particle momentum density of the theta family,
//   sqrt(2pi/a) pi B e^{-p1^2/2a} ([1 + e^{-2ah^2} cos2hp1]
//                                  + sin2t [e^{-2ah^2} + cos2hp1]).
double momentum_density_theta(const ThetaParams& prm, double p1);

// Joint momentum density,
//   B (pi/a) e^{-(p1^2+p2^2)/2a} [1 + cos^2(t) cos2hp+ +
//     2 sin2t cos(hp+)cos(hp-) + sin^2(t) cos2hp-].
double joint_momentum_density_theta(const ThetaParams& prm, const MomentumPair& mp);

// Corrected joint distribution F~ (signed; not asserted to be normalized).
// The correction term is rescaled to the theta normalization:
//   F~ = f12 - f1 f2 + (B_t/B_0)^2 f1^{t=0} f2^{t=0}.
double corrected_joint(const ThetaParams& prm, const MomentumPair& mp);

// Variant F^bar with the correction term at its own (theta = 0) normalization:
// f12 - f1 f2 + f1^{t=0} f2^{t=0}. Exposed for comparison only.
double corrected_joint_bar(const ThetaParams& prm, const MomentumPair& mp);

// Alice's marginal momentum density of the asymmetric state,
//   pi G sqrt(2pi/a) e^{-p1^2/2a} [1 + e^{-2bh2^2} cos(2 h1 p1)].
double momentum_density_asym(const AsymParams& prm, double p1);

}  // namespace dds
