#include "dsm/multilinear.hpp"

#include <cmath>
#include <stdexcept>

namespace dsm {

namespace {

constexpr int kMaxEnumerationSize = 20;

std::vector<double> checked_point(const SetObjective& f,
                                  const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != f.ground_size())
    throw std::invalid_argument("point dimension does not match ground set");
  std::vector<double> clamped(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > -1e-9 && x[i] < 1.0 + 1e-9))
      throw std::invalid_argument("coordinate outside [0,1]");
    clamped[i] = std::min(1.0, std::max(0.0, x[i]));
  }
  return clamped;
}

// f tabulated over all 2^p subsets (mask-indexed).
std::vector<double> value_table(const SetObjective& f) {
  int p = f.ground_size();
  if (p > kMaxEnumerationSize)
    throw std::invalid_argument("ground set too large for enumeration");
  std::vector<double> table(std::uint64_t(1) << p);
  for (std::uint64_t m = 0; m < table.size(); ++m)
    table[m] = f.value(Subset::from_mask(p, m));
  return table;
}

// Inclusion-probability weights prod x_i prod (1-x_j) over all masks,
// built one coordinate at a time (no divisions, stable at 0/1).
std::vector<double> weight_table(const std::vector<double>& x) {
  int p = static_cast<int>(x.size());
  std::vector<double> w(std::uint64_t(1) << p);
  w[0] = 1.0;
  std::uint64_t filled = 1;
  for (int j = 0; j < p; ++j) {
    for (std::uint64_t m = 0; m < filled; ++m) {
      double base = w[m];
      w[m] = base * (1.0 - x[j]);
      w[m | filled] = base * x[j];
    }
    filled <<= 1;
  }
  return w;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

double exact_multilinear(const SetObjective& f, const std::vector<double>& x) {
  std::vector<double> xc = checked_point(f, x);
  return dot(value_table(f), weight_table(xc));
}

std::vector<double> exact_gradient(const SetObjective& f,
                                   const std::vector<double>& x) {
  std::vector<double> xc = checked_point(f, x);
  int p = f.ground_size();
  std::vector<double> table = value_table(f);
  std::vector<double> grad(p, 0.0);
  for (int i = 0; i < p; ++i) {
    // Setting x_i to 0 zeroes the weight of every mask containing i and
    // leaves the conditional weight of the others, so one pass gives
    // sum_{S not containing i} w(S) * (f(S u i) - f(S)).
    std::vector<double> xi = xc;
    xi[i] = 0.0;
    std::vector<double> w = weight_table(xi);
    const std::uint64_t bit = std::uint64_t(1) << i;
    double g = 0.0;
    for (std::uint64_t m = 0; m < w.size(); ++m) {
      if (m & bit) continue;
      g += w[m] * (table[m | bit] - table[m]);
    }
    grad[i] = g;
  }
  return grad;
}

GradientEstimate stochastic_gradient(const SetObjective& f,
                                     const std::vector<double>& x, int batch,
                                     RngStream& rng) {
  if (batch < 1) throw std::invalid_argument("batch must be at least 1");
  std::vector<double> xc = checked_point(f, x);
  int p = f.ground_size();

  GradientEstimate est;
  est.batch = batch;
  est.g.assign(p, 0.0);
  for (int b = 0; b < batch; ++b) {
    Subset s(p);
    for (int j = 0; j < p; ++j)
      if (rng.uniform() < xc[j]) s.add(j);
    // One shared sample serves all coordinates; f(S u {i}) or f(S \ {i})
    // equals f(S) on one side, so this costs p+1 evaluations.
    double fs = f.value(s);
    for (int i = 0; i < p; ++i) {
      if (s.contains(i))
        est.g[i] += fs - f.value(s.without(i));
      else
        est.g[i] += f.value(s.with(i)) - fs;
    }
  }
  for (double& v : est.g) v /= batch;
  return est;
}

std::pair<double, std::vector<double>> facility_closed_form(
    const FacilityObjective& f, const std::vector<double>& x) {
  std::vector<double> xc = checked_point(f, x);
  int p = f.ground_size();
  double value = 0.0;
  std::vector<double> grad(p, 0.0);

  std::vector<double> tail;  // reused across users
  for (const auto& row : f.preferences()) {
    int len = static_cast<int>(row.size());
    if (len == 0) continue;
    // tail[k] = expected max over positions k.. given nothing before k hit
    tail.assign(len + 1, 0.0);
    for (int k = len - 1; k >= 0; --k) {
      double xk = xc[row[k].first];
      tail[k] = row[k].second * xk + (1.0 - xk) * tail[k + 1];
    }
    value += tail[0];
    double prefix = 1.0;  // prod_{k'<k} (1 - x_(k'))
    for (int k = 0; k < len; ++k) {
      grad[row[k].first] += prefix * (row[k].second - tail[k + 1]);
      prefix *= 1.0 - xc[row[k].first];
    }
  }
  return {value, std::move(grad)};
}

}  // namespace dsm
