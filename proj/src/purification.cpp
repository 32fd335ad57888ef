#include "dds/purification.hpp"

#include <algorithm>
#include <cmath>

#include "dds/wigner.hpp"

namespace dds {

namespace {

double sin_two_theta_of(const AsymParams& prm) {
  const double u = std::exp(-2.0 * prm.a * prm.h1 * prm.h1);
  const double v = std::exp(-2.0 * prm.b * prm.h2 * prm.h2);
  if (u == 1.0 && v == 1.0) return 0.0;  // both separations degenerate
  return (v - u) / (1.0 - u * v);
}

}  // namespace

PurificationResult solve_theta(const AsymParams& prm) {
  if (prm.b * prm.h2 * prm.h2 > prm.a * prm.h1 * prm.h1) {
    throw NoPurificationError(
        "no purification in the theta family: b*h2^2 > a*h1^2 gives "
        "sin(2theta) < 0; swap the particles (a,h1) <-> (b,h2) and retry");
  }
  const double s = sin_two_theta_of(prm);
  const double theta = 0.5 * std::asin(std::min(s, 1.0));
  PurificationResult res{theta, s, 0.0};
  res.wigner_gap = verify_purification(prm);
  return res;
}

double verify_purification(const AsymParams& prm, int grid_n) {
  if (prm.b * prm.h2 * prm.h2 > prm.a * prm.h1 * prm.h1) {
    throw NoPurificationError(
        "no purification in the theta family: b*h2^2 > a*h1^2; "
        "swap the particles (a,h1) <-> (b,h2) and retry");
  }
  const double s = sin_two_theta_of(prm);
  const ThetaParams tp(prm.a, prm.h1, 0.5 * std::asin(std::min(s, 1.0)));
  const double x_max = prm.h1 + 5.0 / (2.0 * std::sqrt(prm.a));
  const double p_max = 5.0 * std::sqrt(2.0 * prm.a);
  double gap = 0.0;
  for (int i = 0; i < grid_n; ++i) {
    const double x = -x_max + 2.0 * x_max * i / (grid_n - 1);
    for (int j = 0; j < grid_n; ++j) {
      const double p = -p_max + 2.0 * p_max * j / (grid_n - 1);
      gap = std::max(gap, std::abs(wigner_partial_asym(prm, x, p) -
                                   wigner_partial_theta(tp, x, p)));
    }
  }
  return gap;
}

}  // namespace dds
