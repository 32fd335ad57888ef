#pragma once

#include <vector>

namespace dds {

// n-path ensemble: amplitude moduli |psi_i| with sum |psi_i|^2 = 1, plus a
// symmetric matrix of detector-state overlap magnitudes |<d_i|d_j>| with
// unit diagonal.
struct PathEnsemble {
  std::vector<double> amplitudes;
  std::vector<std::vector<double>> overlaps;

  // Throws std::invalid_argument on any broken invariant.
  void validate() const;

  // Ensemble from unnormalized path probabilities, all overlaps = 1.
  static PathEnsemble from_probabilities(const std::vector<double>& probs);
};

// D = sqrt(1 - [ (1/(n-1)) sum_{i!=j} |psi_i||psi_j| |<d_i|d_j>| ]^2)
double distinguishability(const PathEnsemble& e);

// P = sqrt(1 - [ (1/(n-1)) sum_{i!=j} |psi_i||psi_j| ]^2);
// for n = 2 this equals ||psi_1|^2 - |psi_2|^2|.
double predictability_n(const PathEnsemble& e);

// C = (1/(n-1)) sum_{i!=j} |psi_i||psi_j| |<d_i|d_j>|
double coherence(const PathEnsemble& e);

// V = (I_max - I_min)/(I_max + I_min). Throws std::invalid_argument for
// i_max = i_min = 0 or inconsistent intensities.
double fringe_visibility(double i_max, double i_min);

}  // namespace dds
