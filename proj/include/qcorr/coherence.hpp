#pragma once

#include "qcorr/bloch.hpp"

namespace qcorr {

struct CoherenceBreakdown {
  double basis_entropy = 0.0;  // H of the joint outcome distribution, bits
  double entropy = 0.0;        // von Neumann entropy S(rho), bits
  double coherence = 0.0;      // basis_entropy - entropy
};

/// -sum lambda_k log2 lambda_k over the spectrum of the reconstructed
/// density operator, 0 log 0 := 0.
double von_neumann_entropy(const TwoQubitState& state);

/// Coherence of the product basis defined by the pair, relative to the
/// state: Coh = H_basis - S(rho). For states with maximally mixed marginals
/// this equals 2 - I(n, m) - S(rho); both sides are computed independently
/// and cross-checked internally.
CoherenceBreakdown coherence_of_basis(const TwoQubitState& state, const ObservablePair& pair);

}  // namespace qcorr
