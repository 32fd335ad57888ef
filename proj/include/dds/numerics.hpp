#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "dds/states.hpp"

namespace dds {

struct QuadratureSpec {
  double half_width_sigmas = 6.0;  // domain truncation in units of the Gaussian sigma
  int points_per_fringe = 32;      // resolution of cos(2hp) oscillations (floor 8)
  int min_points = 201;
  int max_points = 20001;
};

struct Grid {
  double lo, hi;
  int n;  // number of points, >= 2
  double step() const { return (hi - lo) / (n - 1); }
  double point(int i) const { return lo + step() * i; }
};

// Momentum-axis grid for densities with Gaussian scale e^{-p^2/2a} and
// fringe factor cos(2hp).
Grid momentum_grid(double a, double h, const QuadratureSpec& spec = {});

// Position-axis grid for Wigner factors e^{-2a(x±h)^2}.
Grid position_grid(double a, double h, const QuadratureSpec& spec = {});

// Trapezoidal rule over a grid; integrands here are entire functions with
// Gaussian decay, for which the rule converges spectrally.
double integrate(const std::function<double(double)>& f, const Grid& g);
double integrate_2d(const std::function<double(double, double)>& f, const Grid& gx,
                    const Grid& gy);

struct TabulatedMarginal {
  std::vector<double> arg;
  std::vector<double> val;
  double truncation_error;  // max change when the integration domain doubles
};

// Marginalizes a 2-D density by quadrature. axis = 0 keeps the first
// argument (integrates the second); axis = 1 keeps the second. Throws on
// non-finite integrand values.
TabulatedMarginal quadrature_marginal(const std::function<double(double, double)>& density,
                                      int axis, const std::vector<double>& eval_points,
                                      const Grid& integration_grid);

enum class ExtremumKind { Maximum, Minimum };

struct Extremum {
  double position;
  double value;
  ExtremumKind kind;
};

// Bracketed golden-section refinement of every interior extremum of f on
// [lo, hi]; scan resolution tied to the fringe period.
std::vector<Extremum> locate_extrema(const std::function<double(double)>& f, double lo,
                                     double hi, double fringe_period);

struct SampleBatch {
  std::uint64_t seed = 0;
  std::vector<std::pair<double, double>> samples;  // (p1, p2) hits
  double acceptance_rate = 0.0;
};

// Deterministic sub-seed for chunk index c: splitmix64(seed + (c+1)*golden).
// Sampling proceeds in fixed-size chunks so the merged output is identical
// for any worker count at the same master seed.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk);

inline constexpr std::size_t kSampleChunk = 8192;

// I.i.d. draws from the joint momentum density by rejection against two
// independent N(0, a) proposals; the bound uses the exact bracket supremum
// 2 + 2 sin(2 theta) attained at p1 = p2 = 0.
SampleBatch sample_joint(const ThetaParams& prm, std::size_t n, std::uint64_t seed,
                         int workers = 1);

struct FringeFit {
  double baseline;        // K
  double visibility_hat;  // fitted V
  double residual_rms;    // rms residual relative to K
};

// Histogram p1 (bin width <= fringe period / 24), divide out the Gaussian
// profile e^{-p1^2/2a}, least-squares fit K(1 + V cos(2hp1)) over +-3 sqrt(a).
// Throws on h = 0 (no fringes) or fewer than 10^4 samples.
FringeFit fit_visibility(const SampleBatch& batch, double a, double h);
FringeFit fit_visibility(const SampleBatch& batch, const ThetaParams& prm);
FringeFit fit_visibility(const SampleBatch& batch, const AsymParams& prm);

// CDF of a 1-D density tabulated by cumulative trapezoid over the grid,
// linearly interpolated.
std::function<double(double)> tabulated_cdf(const std::function<double(double)>& density,
                                            const Grid& g);

// Kolmogorov-Smirnov distance between a sample and a reference CDF.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

}  // namespace dds
