#pragma once

#include <stdexcept>

#include "dds/states.hpp"

namespace dds {

// Raised when no theta-family purification exists (b h2^2 > a h1^2); the
// message names the particle swap that makes the problem well posed.
struct NoPurificationError : std::domain_error {
  using std::domain_error::domain_error;
};

struct PurificationResult {
  double theta;          // in [0, pi/4]
  double sin_two_theta;  // in [0, 1]
  double wigner_gap;     // max |W1_asym - W1_theta| on the verification grid
};

// Solve sin2t = (e^{-2bh2^2} - e^{-2ah1^2}) / (1 - e^{-2ah1^2} e^{-2bh2^2})
// for the theta reproducing Alice's local statistics. Requires
// b h2^2 <= a h1^2; the Wigner gap is evaluated on a default 41x41 grid.
PurificationResult solve_theta(const AsymParams& prm);

// Max pointwise |wigner_partial_asym - wigner_partial_theta| over an
// n x n phase-space grid; the two closed forms share the same
// normalization analytically, so no rescaling is applied.
double verify_purification(const AsymParams& prm, int grid_n = 41);

}  // namespace dds
