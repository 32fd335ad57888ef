#include "dds/numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <thread>

#include "dds/densities.hpp"

namespace dds {

namespace {

int clamp_odd(double wanted, int lo, int hi) {
  int n = static_cast<int>(std::ceil(wanted));
  n = std::max(n, lo);
  n = std::min(n, hi);
  if (n % 2 == 0) ++n;
  return n;
}

}  // namespace

Grid momentum_grid(double a, double h, const QuadratureSpec& spec) {
  const double sigma = std::sqrt(a);
  const double half = spec.half_width_sigmas * sigma;
  double wanted = spec.min_points;
  if (h > 0.0) {
    const double period = kPi / h;
    const int ppf = std::max(spec.points_per_fringe, 8);
    wanted = std::max(wanted, ppf * (2.0 * half / period));
  }
  return Grid{-half, half, clamp_odd(wanted, spec.min_points, spec.max_points)};
}

Grid position_grid(double a, double h, const QuadratureSpec& spec) {
  const double sigma = 1.0 / (2.0 * std::sqrt(a));
  const double half = h + spec.half_width_sigmas * sigma;
  return Grid{-half, half, clamp_odd(spec.min_points, spec.min_points, spec.max_points)};
}

double integrate(const std::function<double(double)>& f, const Grid& g) {
  double sum = 0.5 * (f(g.lo) + f(g.hi));
  for (int i = 1; i < g.n - 1; ++i) sum += f(g.point(i));
  return sum * g.step();
}

double integrate_2d(const std::function<double(double, double)>& f, const Grid& gx,
                    const Grid& gy) {
  double sum = 0.0;
  for (int i = 0; i < gx.n; ++i) {
    const double wx = (i == 0 || i == gx.n - 1) ? 0.5 : 1.0;
    const double x = gx.point(i);
    double row = 0.0;
    for (int j = 0; j < gy.n; ++j) {
      const double wy = (j == 0 || j == gy.n - 1) ? 0.5 : 1.0;
      row += wy * f(x, gy.point(j));
    }
    sum += wx * row;
  }
  return sum * gx.step() * gy.step();
}

TabulatedMarginal quadrature_marginal(const std::function<double(double, double)>& density,
                                      int axis, const std::vector<double>& eval_points,
                                      const Grid& integration_grid) {
  if (axis != 0 && axis != 1)
    throw std::invalid_argument("quadrature_marginal: axis must be 0 or 1");
  auto slice = [&](double kept, double integrated) {
    const double v = axis == 0 ? density(kept, integrated) : density(integrated, kept);
    if (!std::isfinite(v))
      throw std::runtime_error("quadrature oracle: non-finite integrand value");
    return v;
  };
  const Grid wide{2.0 * integration_grid.lo, 2.0 * integration_grid.hi,
                  2 * integration_grid.n - 1};
  TabulatedMarginal out;
  out.arg = eval_points;
  out.truncation_error = 0.0;
  for (double kept : eval_points) {
    auto f = [&](double t) { return slice(kept, t); };
    const double base = integrate(f, integration_grid);
    const double doubled = integrate(f, wide);
    out.val.push_back(base);
    out.truncation_error = std::max(out.truncation_error, std::abs(doubled - base));
  }
  return out;
}

namespace {

// Golden-section search for a maximum of sgn*f in [lo, hi].
double golden_refine(const std::function<double(double)>& f, double lo, double hi,
                     double sgn, double tol) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = sgn * f(c), fd = sgn * f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = sgn * f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = sgn * f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<Extremum> locate_extrema(const std::function<double(double)>& f, double lo,
                                     double hi, double fringe_period) {
  if (!(fringe_period > 0.0))
    throw std::invalid_argument("locate_extrema: fringe_period must be > 0");
  if (!(hi > lo)) throw std::invalid_argument("locate_extrema: empty range");
  const int per_half_period = 64;
  const int n = std::max(512, static_cast<int>(std::ceil(
                                  2.0 * per_half_period * (hi - lo) / fringe_period)));
  const double step = (hi - lo) / n;
  std::vector<double> xs(n + 1), fs(n + 1);
  for (int i = 0; i <= n; ++i) {
    xs[i] = lo + step * i;
    fs[i] = f(xs[i]);
  }
  const double tol = 1e-10 * (hi - lo);
  std::vector<Extremum> out;
  for (int i = 1; i < n; ++i) {
    if (fs[i] > fs[i - 1] && fs[i] > fs[i + 1]) {
      const double x = golden_refine(f, xs[i - 1], xs[i + 1], +1.0, tol);
      out.push_back(Extremum{x, f(x), ExtremumKind::Maximum});
    } else if (fs[i] < fs[i - 1] && fs[i] < fs[i + 1]) {
      const double x = golden_refine(f, xs[i - 1], xs[i + 1], -1.0, tol);
      out.push_back(Extremum{x, f(x), ExtremumKind::Minimum});
    }
  }
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  return splitmix64(seed + (chunk + 1) * 0x9e3779b97f4a7c15ULL);
}

namespace {

// Uniform in (0, 1], 53-bit.
double uniform_open(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

struct SplitMixStream {
  // mt19937_64 would do; a hand-rolled splitmix stream keeps the output
  // contract bit-stable across standard library versions.
  std::uint64_t state;
  std::uint64_t next() { return splitmix64(state++); }
};

double bracket_value(const ThetaParams& prm, double p1, double p2) {
  const double ct = std::cos(prm.theta), st = std::sin(prm.theta);
  const double pp = p1 + p2, pm = p1 - p2;
  return 1.0 + ct * ct * std::cos(2.0 * prm.h * pp) +
         2.0 * prm.sin2t() * std::cos(prm.h * pp) * std::cos(prm.h * pm) +
         st * st * std::cos(2.0 * prm.h * pm);
}

}  // namespace

SampleBatch sample_joint(const ThetaParams& prm, std::size_t n, std::uint64_t seed,
                         int workers) {
  if (n < 1) throw std::invalid_argument("sample_joint: n must be >= 1");
  if (workers < 1) throw std::invalid_argument("sample_joint: workers must be >= 1");

  const double sigma = std::sqrt(prm.a);
  const double bound = 2.0 + 2.0 * prm.sin2t();
  const std::size_t n_chunks = (n + kSampleChunk - 1) / kSampleChunk;

  SampleBatch batch;
  batch.seed = seed;
  batch.samples.resize(n);
  std::atomic<std::uint64_t> proposals{0};
  std::atomic<std::size_t> next_chunk{0};

  auto run_chunk = [&](std::size_t c) {
    SplitMixStream rng{chunk_seed(seed, c)};
    const std::size_t begin = c * kSampleChunk;
    const std::size_t end = std::min(begin + kSampleChunk, n);
    std::uint64_t local_proposals = 0;
    for (std::size_t k = begin; k < end; ++k) {
      for (std::uint64_t iter = 0; iter < 1000000; ++iter) {
        ++local_proposals;
        const double u1 = uniform_open(rng.next());
        const double u2 = uniform_open(rng.next());
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double p1 = sigma * r * std::cos(2.0 * kPi * u2);
        const double p2 = sigma * r * std::sin(2.0 * kPi * u2);
        const double u = uniform_open(rng.next());
        if (u * bound <= bracket_value(prm, p1, p2)) {
          batch.samples[k] = {p1, p2};
          break;
        }
      }
    }
    proposals += local_proposals;
  };

  if (workers == 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t c = next_chunk++; c < n_chunks; c = next_chunk++) run_chunk(c);
      });
    }
    for (auto& t : pool) t.join();
  }
  batch.acceptance_rate = static_cast<double>(n) / static_cast<double>(proposals.load());
  return batch;
}

FringeFit fit_visibility(const SampleBatch& batch, double a, double h) {
  if (batch.samples.size() < 10000)
    throw std::invalid_argument("fit_visibility: need at least 10^4 samples");
  if (!(h > 0.0))
    throw std::runtime_error("fit_visibility: h = 0 gives no fringes, fit is degenerate");
  const double range = 3.0 * std::sqrt(a);
  const double period = kPi / h;
  const int nbins = static_cast<int>(std::ceil(2.0 * range / (period / 24.0)));
  const double width = 2.0 * range / nbins;

  std::vector<double> counts(nbins, 0.0);
  std::size_t in_range = 0;
  for (const auto& [p1, p2] : batch.samples) {
    (void)p2;
    if (p1 < -range || p1 >= range) continue;
    ++counts[static_cast<int>((p1 + range) / width)];
    ++in_range;
  }
  if (in_range == 0) throw std::runtime_error("fit_visibility: no samples in fit window");

  const double total = static_cast<double>(batch.samples.size());
  double s1 = 0.0, sc = 0.0, scc = 0.0, sy = 0.0, scy = 0.0;
  std::vector<double> ys(nbins), cs(nbins);
  for (int i = 0; i < nbins; ++i) {
    const double pc = -range + (i + 0.5) * width;
    const double profile = std::exp(-pc * pc / (2.0 * a));
    ys[i] = counts[i] / (total * width) / profile;
    cs[i] = std::cos(2.0 * h * pc);
    s1 += 1.0;
    sc += cs[i];
    scc += cs[i] * cs[i];
    sy += ys[i];
    scy += cs[i] * ys[i];
  }
  const double det = s1 * scc - sc * sc;
  if (!(det > 1e-9 * s1 * scc))
    throw std::runtime_error("fit_visibility: normal equations ill-conditioned");
  const double baseline = (scc * sy - sc * scy) / det;
  const double kv = (s1 * scy - sc * sy) / det;
  if (!(baseline > 0.0)) throw std::runtime_error("fit_visibility: non-positive baseline");

  double ss = 0.0;
  for (int i = 0; i < nbins; ++i) {
    const double r = ys[i] - (baseline + kv * cs[i]);
    ss += r * r;
  }
  return FringeFit{baseline, kv / baseline, std::sqrt(ss / nbins) / baseline};
}

FringeFit fit_visibility(const SampleBatch& batch, const ThetaParams& prm) {
  return fit_visibility(batch, prm.a, prm.h);
}

FringeFit fit_visibility(const SampleBatch& batch, const AsymParams& prm) {
  return fit_visibility(batch, prm.a, prm.h1);
}

std::function<double(double)> tabulated_cdf(const std::function<double(double)>& density,
                                            const Grid& g) {
  auto xs = std::make_shared<std::vector<double>>(g.n);
  auto cum = std::make_shared<std::vector<double>>(g.n);
  double running = 0.0;
  double prev = density(g.lo);
  (*xs)[0] = g.lo;
  (*cum)[0] = 0.0;
  for (int i = 1; i < g.n; ++i) {
    const double x = g.point(i);
    const double cur = density(x);
    running += 0.5 * (prev + cur) * g.step();
    (*xs)[i] = x;
    (*cum)[i] = running;
    prev = cur;
  }
  const double norm = running;
  return [xs, cum, norm](double x) {
    if (x <= xs->front()) return 0.0;
    if (x >= xs->back()) return 1.0;
    const auto it = std::upper_bound(xs->begin(), xs->end(), x);
    const std::size_t i = static_cast<std::size_t>(it - xs->begin());
    const double t = (x - (*xs)[i - 1]) / ((*xs)[i] - (*xs)[i - 1]);
    return ((*cum)[i - 1] + t * ((*cum)[i] - (*cum)[i - 1])) / norm;
  };
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_distance: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(f - static_cast<double>(i + 1) / n));
  }
  return d;
}

}  // namespace dds
