#pragma once

#include "dds/states.hpp"

namespace dds {

struct PhasePoint {
  double x1, x2;  // lengths
  double p1, p2;  // inverse lengths
};

// Per-particle Gaussian phase-space factors,
//   g^± = e^{-2w(x±h)^2} e^{-p^2/2w},  g^0 = e^{-2wx^2} e^{-p^2/2w}.
struct GaussFactors {
  double g_minus, g_plus, g_zero;
};

GaussFactors gauss_factors(double width, double half_sep, double x, double p);

// Full Wigner function of the theta family.
double wigner_theta(const ThetaParams& prm, const PhasePoint& pt);

// Partial Wigner function of particle 1 after tracing out particle 2:
//   pi B [1 + e^{-2ah^2} sin2t](g- + g+) + 2 pi B [e^{-2ah^2} + sin2t] g0 cos(2hp1)
double wigner_partial_theta(const ThetaParams& prm, double x1, double p1);

// Full Wigner function of the asymmetric state.
double wigner_asym(const AsymParams& prm, const PhasePoint& pt);

// Partial Wigner function of particle 1 (Alice):
//   pi G [g- + g+ + 2 e^{-2bh2^2} g0 cos(2 h1 p1)]
double wigner_partial_asym(const AsymParams& prm, double x1, double p1);

// Particle-swap adapter for Bob's partial Wigner function.
double wigner_partial_asym_second(const AsymParams& prm, double x2, double p2);

}  // namespace dds
