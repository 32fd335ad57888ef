#pragma once

#include <complex>

namespace dds {

inline constexpr double kPi = 3.14159265358979323846;

// Exponent size beyond which cosh-type normalization factors switch to
// log-domain evaluation (C_theta overflows double near a*h^2 ~ 350).
inline constexpr double kLogDomainThreshold = 30.0;

// log(cosh(y) + s) for y >= 0, s in [0, 1]; stable for large y.
double log_cosh_plus(double y, double s);

// Symmetric double-double-slit family: two Gaussian wavepackets of width
// parameter a = 1/Delta^2, slits at +-h, entanglement controlled by theta.
// theta = 0 is maximally entangled, theta = pi/4 is a product state.
struct ThetaParams {
  double a;      // inverse length squared, > 0
  double h;      // slit half-separation, >= 0
  double theta;  // radians in [0, pi/4]

  ThetaParams(double a_, double h_, double theta_);

  double exponent() const { return a * h * h; }  // a h^2
  double sin2t() const;
  double cos2t() const;
  double decay() const;  // e^{-2 a h^2}

  // 1/A_theta^2 = (pi/a)[1 + 2 e^{-2ah^2} sin2theta + e^{-4ah^2}]
  double a_theta_sq() const;
  // B_theta = A_theta^2 / (2 pi a)
  double b_theta() const;
  // C_theta = 8 pi a [cosh(2ah^2) + sin2theta]^2, in log form
  double log_c_theta() const;
  // e^{k a h^2} / C_theta, safe for large a h^2 (N_theta = c_ratio(0))
  double c_ratio(double k) const;
};

// Asymmetric state: Alice (a, h1), Bob (b, h2).
struct AsymParams {
  double a, h1;
  double b, h2;

  AsymParams(double a_, double h1_, double b_, double h2_);

  // M^2 = (sqrt(ab)/pi) / (1 + e^{-2(a h1^2 + b h2^2)})
  double m_sq() const;
  // G = M^2 / (2 pi sqrt(ab))
  double g_norm() const;
};

// Position wavefunction of the theta family; real valued.
double psi_theta_position(const ThetaParams& p, double x1, double x2);

// Momentum wavefunction of the theta family,
//   (A_theta/a) e^{-(p1^2+p2^2)/4a} [cos(theta) cos(h p+) + sin(theta) cos(h p-)];
// real valued (global phase removed by symmetry).
double psi_theta_momentum(const ThetaParams& p, double p1, double p2);

// Position wavefunction of the asymmetric state.
double psi_asym_position(const AsymParams& p, double x1, double x2);

// Momentum wavefunction of the asymmetric state: sum of two conjugate
// complex Gaussian terms with prefactor M/(2 sqrt(ab)); imaginary part
// vanishes identically.
std::complex<double> psi_asym_momentum(const AsymParams& p, double p1, double p2);

// Alice and Bob switch roles.
AsymParams swapped(const AsymParams& p);

}  // namespace dds
