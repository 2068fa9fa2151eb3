#pragma once

#include <vector>

#include "dsm/graph.hpp"

namespace dsm {

// Symmetric doubly stochastic mixing matrix matching a graph's sparsity
// pattern. Stored dense row-major; n stays small (a few thousand at most).
struct WeightMatrix {
  int n = 0;
  std::vector<double> w;  // row-major n*n

  double at(int i, int j) const { return w[static_cast<std::size_t>(i) * n + j]; }
  double& at(int i, int j) { return w[static_cast<std::size_t>(i) * n + j]; }
};

// Spectral and structural diagnostics of a candidate mixing matrix.
// beta = max(|lambda_2|, |lambda_n|); consensus contracts at rate beta per
// round, so beta < 1 is what the averaging steps need. assumption1_holds
// bundles symmetry, nonnegativity, row stochasticity, the sparsity pattern
// and rank(I - W) = n - 1.
struct SpectralReport {
  double beta = 1.0;
  double lambda_second = 1.0;  // second largest eigenvalue
  double lambda_min = 1.0;     // smallest eigenvalue
  bool connected = false;
  bool symmetric = false;
  bool nonnegative = false;
  bool row_stochastic = false;
  bool pattern_matches = false;
  bool assumption1_holds = false;
};

// Metropolis rule: w_ij = 1/(1 + max(d_i, d_j)) on edges, zero elsewhere,
// diagonal absorbing the remainder. Always satisfies the weight conditions
// on a connected graph.
WeightMatrix metropolis_weights(const CommGraph& g);

// Full validation of a (possibly user-supplied) weight matrix against its
// graph: structural checks at the given tolerances plus the eigenvalue
// test that null(I - W) = span(1).
SpectralReport validate_weights(const WeightMatrix& w, const CommGraph& g,
                                double stochastic_tol = 1e-12,
                                double symmetry_tol = 1e-9);

// Eigenvalue summary only (no graph needed). Throws on asymmetry beyond
// symmetry_tol. Uses a full dense symmetric eigendecomposition.
SpectralReport spectral_beta(const WeightMatrix& w, double symmetry_tol = 1e-9);

// All eigenvalues sorted nonincreasing.
std::vector<double> symmetric_eigenvalues(const WeightMatrix& w);

}  // namespace dsm
