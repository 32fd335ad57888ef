#include "dds/multipath.hpp"

#include <cmath>
#include <stdexcept>

namespace dds {

namespace {

// (1/(n-1)) sum_{i!=j} |psi_i||psi_j| w_ij with w from the overlap matrix
// (or all ones).
double pair_sum(const PathEnsemble& e, bool use_overlaps) {
  const std::size_t n = e.amplitudes.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double w = use_overlaps ? e.overlaps[i][j] : 1.0;
      sum += e.amplitudes[i] * e.amplitudes[j] * w;
    }
  return sum / static_cast<double>(n - 1);
}

double complement_sqrt(double c) {
  const double radicand = 1.0 - c * c;
  if (radicand < -1e-12)
    throw std::runtime_error("path measure: radicand below -1e-12, invariant broken");
  return std::sqrt(radicand > 0.0 ? radicand : 0.0);
}

}  // namespace

void PathEnsemble::validate() const {
  const std::size_t n = amplitudes.size();
  if (n < 2) throw std::invalid_argument("PathEnsemble: need n >= 2 paths");
  double norm = 0.0;
  for (double amp : amplitudes) {
    if (!(amp >= 0.0)) throw std::invalid_argument("PathEnsemble: amplitudes must be >= 0");
    norm += amp * amp;
  }
  if (std::abs(norm - 1.0) > 1e-12)
    throw std::invalid_argument("PathEnsemble: sum |psi_i|^2 must equal 1 (within 1e-12)");
  if (overlaps.size() != n)
    throw std::invalid_argument("PathEnsemble: overlap matrix must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    if (overlaps[i].size() != n)
      throw std::invalid_argument("PathEnsemble: overlap matrix must be n x n");
    if (overlaps[i][i] != 1.0)
      throw std::invalid_argument("PathEnsemble: overlap diagonal must be exactly 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (!(overlaps[i][j] >= 0.0 && overlaps[i][j] <= 1.0))
        throw std::invalid_argument("PathEnsemble: overlaps must lie in [0, 1]");
      if (overlaps[i][j] != overlaps[j][i])
        throw std::invalid_argument("PathEnsemble: overlap matrix must be symmetric");
    }
  }
}

PathEnsemble PathEnsemble::from_probabilities(const std::vector<double>& probs) {
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw std::invalid_argument("from_probabilities: negative weight");
    total += p;
  }
  if (!(total > 0.0)) throw std::invalid_argument("from_probabilities: all weights zero");
  PathEnsemble e;
  for (double p : probs) e.amplitudes.push_back(std::sqrt(p / total));
  e.overlaps.assign(probs.size(), std::vector<double>(probs.size(), 1.0));
  for (std::size_t i = 0; i < probs.size(); ++i) e.overlaps[i][i] = 1.0;
  return e;
}

double distinguishability(const PathEnsemble& e) {
  e.validate();
  return complement_sqrt(pair_sum(e, true));
}

double predictability_n(const PathEnsemble& e) {
  e.validate();
  return complement_sqrt(pair_sum(e, false));
}

double coherence(const PathEnsemble& e) {
  e.validate();
  return pair_sum(e, true);
}

double fringe_visibility(double i_max, double i_min) {
  if (!(i_min >= 0.0 && i_max >= i_min))
    throw std::invalid_argument("fringe_visibility: need i_max >= i_min >= 0");
  if (i_max == 0.0)
    throw std::invalid_argument("fringe_visibility: contrast undefined for zero intensities");
  return (i_max - i_min) / (i_max + i_min);
}

}  // namespace dds
