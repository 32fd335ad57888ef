#pragma once

#include "dds/states.hpp"

namespace dds {

// a h^2 above which the envelope approximation is sub-percent accurate
// (e^{-2ah^2} <= 2.5e-3).
inline constexpr double kEnvelopeRegimeThreshold = 3.0;

// Coefficients multiplying the shared Gaussian profile e^{-p^2/(2 gaussian_var)}.
struct EnvelopePair {
  double upper_coeff;
  double lower_coeff;
  double gaussian_var;
};

struct VisibilityReport {
  double visibility;  // in [0, 1]
  double ratio;       // upper/lower envelope ratio, >= 1, may be +inf
  bool regime_ok;     // envelope approximation regime (a h^2 >= threshold)
};

struct TwoParticleEnvelopes {
  EnvelopePair exact;       // exact coefficients on the p- = 0 section
  EnvelopePair simplified;  // large a h^2 forms
};

struct ComplementarityRecord {
  double v_simple;        // sin(2 theta)
  double predictability;  // P_theta
  double sum_sq;          // P^2 + V^2
  bool holds;             // sum_sq <= 1 (+1e-12)
};

// Envelopes of the one-particle fringe pattern (coefficients of e^{-p1^2/2a}).
EnvelopePair one_particle_envelopes(const ThetaParams& prm);

// Envelope-based visibility V = (e^{-2ah^2} + sin2t)/(1 + e^{-2ah^2} sin2t).
VisibilityReport visibility_theta(const ThetaParams& prm);

// Constant visibility of Alice's pattern, V = e^{-2 b h2^2}; ratio coth(b h2^2).
VisibilityReport visibility_asym(const AsymParams& prm);

// Envelopes of the corrected joint distribution on the p- = 0 section
// (coefficients of e^{-p+^2/4a}, i.e. gaussian_var = 2a).
TwoParticleEnvelopes two_particle_envelopes(const ThetaParams& prm);

// Two-particle interference P = cos2t cos^2(t) / (1 - cos2t sin^2(t)).
// Throws std::domain_error outside [0, pi/4].
double predictability_theta(double theta);

// Exact-envelope analogue of P, from the un-approximated envelope pair.
double predictability_exact(const ThetaParams& prm);

// P^2 + V^2 <= 1 with the simple visibility V = sin(2 theta).
ComplementarityRecord complementarity(const ThetaParams& prm);

}  // namespace dds
