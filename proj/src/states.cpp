#include "dds/states.hpp"

#include <cmath>
#include <stdexcept>

namespace dds {

double log_cosh_plus(double y, double s) {
  if (y > kLogDomainThreshold) {
    // cosh(y) + s = (e^y / 2)(1 + e^{-2y} + 2 s e^{-y})
    return y - std::log(2.0) + std::log1p(std::exp(-2.0 * y) + 2.0 * s * std::exp(-y));
  }
  return std::log(std::cosh(y) + s);
}

ThetaParams::ThetaParams(double a_, double h_, double theta_)
    : a(a_), h(h_), theta(theta_) {
  if (!(a > 0.0)) throw std::invalid_argument("ThetaParams: a must be > 0");
  if (!(h >= 0.0)) throw std::invalid_argument("ThetaParams: h must be >= 0");
  if (!(theta >= 0.0 && theta <= kPi / 4.0 + 1e-15))
    throw std::invalid_argument("ThetaParams: theta must lie in [0, pi/4]");
}

double ThetaParams::sin2t() const { return std::sin(2.0 * theta); }
double ThetaParams::cos2t() const { return std::cos(2.0 * theta); }
double ThetaParams::decay() const { return std::exp(-2.0 * exponent()); }

double ThetaParams::a_theta_sq() const {
  const double d = decay();
  return (a / kPi) / (1.0 + 2.0 * d * sin2t() + d * d);
}

double ThetaParams::b_theta() const { return a_theta_sq() / (2.0 * kPi * a); }

double ThetaParams::log_c_theta() const {
  return std::log(8.0 * kPi * a) + 2.0 * log_cosh_plus(2.0 * exponent(), sin2t());
}

double ThetaParams::c_ratio(double k) const {
  return std::exp(k * exponent() - log_c_theta());
}

AsymParams::AsymParams(double a_, double h1_, double b_, double h2_)
    : a(a_), h1(h1_), b(b_), h2(h2_) {
  if (!(a > 0.0 && b > 0.0))
    throw std::invalid_argument("AsymParams: a and b must be > 0");
  if (!(h1 >= 0.0 && h2 >= 0.0))
    throw std::invalid_argument("AsymParams: h1 and h2 must be >= 0");
}

double AsymParams::m_sq() const {
  const double e = std::exp(-2.0 * (a * h1 * h1 + b * h2 * h2));
  return (std::sqrt(a * b) / kPi) / (1.0 + e);
}

double AsymParams::g_norm() const {
  return m_sq() / (2.0 * kPi * std::sqrt(a * b));
}

double psi_theta_position(const ThetaParams& p, double x1, double x2) {
  const double a = p.a, h = p.h;
  auto pair = [&](double s2) {
    return std::exp(-a * (x1 - h) * (x1 - h) - a * (x2 - s2 * h) * (x2 - s2 * h)) +
           std::exp(-a * (x1 + h) * (x1 + h) - a * (x2 + s2 * h) * (x2 + s2 * h));
  };
  const double amp = std::sqrt(p.a_theta_sq());
  return amp * (pair(+1.0) * std::cos(p.theta) + pair(-1.0) * std::sin(p.theta));
}

double psi_theta_momentum(const ThetaParams& p, double p1, double p2) {
  const double amp = std::sqrt(p.a_theta_sq()) / p.a;
  const double gauss = std::exp(-(p1 * p1 + p2 * p2) / (4.0 * p.a));
  return amp * gauss *
         (std::cos(p.theta) * std::cos(p.h * (p1 + p2)) +
          std::sin(p.theta) * std::cos(p.h * (p1 - p2)));
}

double psi_asym_position(const AsymParams& p, double x1, double x2) {
  const double m = std::sqrt(p.m_sq());
  return m * (std::exp(-p.a * (x1 - p.h1) * (x1 - p.h1) - p.b * (x2 - p.h2) * (x2 - p.h2)) +
              std::exp(-p.a * (x1 + p.h1) * (x1 + p.h1) - p.b * (x2 + p.h2) * (x2 + p.h2)));
}

std::complex<double> psi_asym_momentum(const AsymParams& p, double p1, double p2) {
  using cplx = std::complex<double>;
  const cplx i(0.0, 1.0);
  const double e1 = p.a * p.h1 * p.h1;
  const double e2 = p.b * p.h2 * p.h2;
  auto term = [&](double sign) {
    const cplx z1 = p1 + sign * 2.0 * p.a * p.h1 * i;
    const cplx z2 = p2 + sign * 2.0 * p.b * p.h2 * i;
    return std::exp(-z1 * z1 / (4.0 * p.a) - e1 - z2 * z2 / (4.0 * p.b) - e2);
  };
  const double pref = std::sqrt(p.m_sq()) / (2.0 * std::sqrt(p.a * p.b));
  return pref * (term(+1.0) + term(-1.0));
}

AsymParams swapped(const AsymParams& p) { return AsymParams(p.b, p.h2, p.a, p.h1); }

}  // namespace dds
