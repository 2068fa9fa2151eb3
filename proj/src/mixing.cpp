#include "dsm/mixing.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsm {

WeightMatrix metropolis_weights(const CommGraph& g) {
  WeightMatrix m;
  m.n = g.n;
  m.w.assign(static_cast<std::size_t>(g.n) * g.n, 0.0);
  for (auto [i, j] : g.edges) {
    double wij = 1.0 / (1.0 + std::max(g.degree(i), g.degree(j)));
    m.at(i, j) = wij;
    m.at(j, i) = wij;
  }
  for (int i = 0; i < g.n; ++i) {
    double off = 0.0;
    for (int j : g.adjacency[i]) off += m.at(i, j);
    m.at(i, i) = 1.0 - off;
  }
  return m;
}

std::vector<double> symmetric_eigenvalues(const WeightMatrix& w) {
  Eigen::MatrixXd a(w.n, w.n);
  for (int i = 0; i < w.n; ++i)
    for (int j = 0; j < w.n; ++j) a(i, j) = w.at(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  std::vector<double> eig(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + w.n);
  std::sort(eig.begin(), eig.end(), std::greater<double>());
  return eig;
}

SpectralReport spectral_beta(const WeightMatrix& w, double symmetry_tol) {
  if (w.n < 1 || w.w.size() != static_cast<std::size_t>(w.n) * w.n)
    throw std::invalid_argument("malformed weight matrix");
  for (int i = 0; i < w.n; ++i)
    for (int j = i + 1; j < w.n; ++j)
      if (std::abs(w.at(i, j) - w.at(j, i)) > symmetry_tol)
        throw std::invalid_argument("weight matrix is not symmetric");

  SpectralReport rep;
  std::vector<double> eig = symmetric_eigenvalues(w);
  rep.lambda_min = eig.back();
  if (w.n == 1) {
    // Single node: consensus is immediate, no second eigenvalue exists.
    rep.lambda_second = 0.0;
    rep.beta = 0.0;
  } else {
    rep.lambda_second = eig[1];
    rep.beta = std::max(std::abs(eig[1]), std::abs(eig.back()));
  }
  rep.symmetric = true;
  return rep;
}

SpectralReport validate_weights(const WeightMatrix& w, const CommGraph& g,
                                double stochastic_tol, double symmetry_tol) {
  if (w.n != g.n) throw std::invalid_argument("weight/graph dimension mismatch");

  SpectralReport rep;
  rep.symmetric = true;
  rep.nonnegative = true;
  rep.row_stochastic = true;
  rep.pattern_matches = true;

  for (int i = 0; i < w.n; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < w.n; ++j) {
      double wij = w.at(i, j);
      row_sum += wij;
      if (wij < 0.0) rep.nonnegative = false;
      if (std::abs(wij - w.at(j, i)) > symmetry_tol) rep.symmetric = false;
      if (i != j && wij != 0.0) {
        bool is_edge = std::binary_search(g.adjacency[i].begin(),
                                          g.adjacency[i].end(), j);
        if (!is_edge) rep.pattern_matches = false;
      }
    }
    if (std::abs(row_sum - 1.0) > stochastic_tol) rep.row_stochastic = false;
  }

  rep.connected = is_connected(g);

  if (rep.symmetric) {
    SpectralReport spec = spectral_beta(w, symmetry_tol);
    rep.beta = spec.beta;
    rep.lambda_second = spec.lambda_second;
    rep.lambda_min = spec.lambda_min;
  }

  // rank(I - W) = n - 1 is equivalent to the eigenvalue 1 being simple,
  // i.e. lambda_2 < 1.
  bool one_is_simple = (w.n == 1) || rep.lambda_second < 1.0 - 1e-9;
  rep.assumption1_holds = rep.symmetric && rep.nonnegative &&
                          rep.row_stochastic && rep.pattern_matches &&
                          one_is_simple;
  return rep;
}

}  // namespace dsm
