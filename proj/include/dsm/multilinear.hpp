#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dsm/rng.hpp"
#include "dsm/setfn.hpp"

namespace dsm {

// A fractional point is a vector in [0,1]^p of inclusion probabilities.
// These functions validate coordinates to within 1e-9 and clamp before use.

// Exact multilinear extension by full subset enumeration:
//   F(x) = sum_S f(S) prod_{i in S} x_i prod_{j notin S} (1 - x_j).
// Feasible up to p = 20 (2^p terms).
double exact_multilinear(const SetObjective& f, const std::vector<double>& x);

// Exact gradient: coordinate i is F(x; x_i <- 1) - F(x; x_i <- 0). Entries
// lie in [0, m_f] for monotone f. Same p limit as exact_multilinear.
std::vector<double> exact_gradient(const SetObjective& f,
                                   const std::vector<double>& x);

struct GradientEstimate {
  std::vector<double> g;
  int batch = 0;
};

// Unbiased gradient estimator: per batch round one set S is sampled by
// including each element j independently with probability x_j, and the
// i-th coordinate of that round's sample is f(S u {i}) - f(S \ {i}); the
// batch mean is returned. Each entry is a marginal difference, so it is
// bounded by m_f in magnitude.
GradientEstimate stochastic_gradient(const SetObjective& f,
                                     const std::vector<double>& x, int batch,
                                     RngStream& rng);

// Closed-form multilinear value and gradient for facility-location
// objectives. With items sorted by rating descending per user, the expected
// maximum telescopes:
//   value_user = sum_k r_(k) x_(k) prod_{k'<k} (1 - x_(k'))
// and the gradient of coordinate (k) is prefix_(k) * (r_(k) - tail_(k+1)).
// Agrees with exact_multilinear / exact_gradient wherever those are
// computable, at any p.
std::pair<double, std::vector<double>> facility_closed_form(
    const FacilityObjective& f, const std::vector<double>& x);

}  // namespace dsm
