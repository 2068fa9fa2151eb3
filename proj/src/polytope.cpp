#include "dsm/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dsm {

FeasibleBody FeasibleBody::uniform_matroid(int dim, int k) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if (k < 0) throw std::invalid_argument("negative cardinality cap");
  FeasibleBody b;
  b.kind_ = BodyKind::uniform_matroid;
  b.dim_ = dim;
  b.k_ = k;
  return b;
}

FeasibleBody FeasibleBody::partition_matroid(
    int dim, const std::vector<std::vector<int>>& parts,
    const std::vector<int>& caps) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if (parts.size() != caps.size())
    throw std::invalid_argument("parts/caps size mismatch");
  FeasibleBody b;
  b.kind_ = BodyKind::partition_matroid;
  b.dim_ = dim;
  b.part_of_.assign(dim, -1);
  b.caps_ = caps;
  for (std::size_t t = 0; t < parts.size(); ++t) {
    if (caps[t] < 0) throw std::invalid_argument("negative part cap");
    for (int coord : parts[t]) {
      if (coord < 0 || coord >= dim)
        throw std::invalid_argument("part references coordinate outside range");
      if (b.part_of_[coord] != -1)
        throw std::invalid_argument("coordinate assigned to two parts");
      b.part_of_[coord] = static_cast<int>(t);
    }
  }
  for (int coord = 0; coord < dim; ++coord)
    if (b.part_of_[coord] == -1)
      throw std::invalid_argument("coordinate not covered by any part");
  return b;
}

FeasibleBody FeasibleBody::box(const std::vector<double>& upper) {
  if (upper.empty()) throw std::invalid_argument("dimension must be positive");
  for (double u : upper)
    if (!(u > 0.0 && u <= 1.0))
      throw std::invalid_argument("box bounds must lie in (0,1]");
  FeasibleBody b;
  b.kind_ = BodyKind::box;
  b.dim_ = static_cast<int>(upper.size());
  b.upper_ = upper;
  return b;
}

bool FeasibleBody::is_independent_set(const Subset& s) const {
  if (s.universe_size() != dim_) return false;
  switch (kind_) {
    case BodyKind::uniform_matroid:
      return s.count() <= k_;
    case BodyKind::partition_matroid: {
      std::vector<int> used(caps_.size(), 0);
      for (int e : s.elements())
        if (++used[part_of_[e]] > caps_[part_of_[e]]) return false;
      return true;
    }
    case BodyKind::box:
      return false;
  }
  return false;
}

bool FeasibleBody::can_add(const Subset& s, int e) const {
  if (s.contains(e)) return false;
  return is_independent_set(s.with(e));
}

namespace {

void check_direction(const FeasibleBody& body, const std::vector<double>& d) {
  if (static_cast<int>(d.size()) != body.dim())
    throw std::invalid_argument("direction dimension mismatch");
  for (double v : d)
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite direction");
}

}  // namespace

std::vector<double> lmo(const FeasibleBody& body, const std::vector<double>& d) {
  check_direction(body, d);
  int p = body.dim();
  std::vector<double> v(p, 0.0);

  switch (body.kind()) {
    case BodyKind::box: {
      for (int j = 0; j < p; ++j)
        if (d[j] > 0.0) v[j] = body.upper()[j];
      break;
    }
    case BodyKind::uniform_matroid: {
      std::vector<int> idx;
      for (int j = 0; j < p; ++j)
        if (d[j] > 0.0) idx.push_back(j);
      int take = std::min<int>(body.cardinality_cap(), static_cast<int>(idx.size()));
      std::partial_sort(idx.begin(), idx.begin() + take, idx.end(),
                        [&](int a, int b) {
                          if (d[a] != d[b]) return d[a] > d[b];
                          return a < b;
                        });
      for (int t = 0; t < take; ++t) v[idx[t]] = 1.0;
      break;
    }
    case BodyKind::partition_matroid: {
      std::vector<std::vector<int>> per_part(body.num_parts());
      for (int j = 0; j < p; ++j)
        if (d[j] > 0.0) per_part[body.part_of(j)].push_back(j);
      for (int t = 0; t < body.num_parts(); ++t) {
        auto& idx = per_part[t];
        int take = std::min<int>(body.part_cap(t), static_cast<int>(idx.size()));
        std::partial_sort(idx.begin(), idx.begin() + take, idx.end(),
                          [&](int a, int b) {
                            if (d[a] != d[b]) return d[a] > d[b];
                            return a < b;
                          });
        for (int q = 0; q < take; ++q) v[idx[q]] = 1.0;
      }
      break;
    }
  }
  return v;
}

bool contains(const FeasibleBody& body, const std::vector<double>& x,
              double tol) {
  if (static_cast<int>(x.size()) != body.dim())
    throw std::invalid_argument("point dimension mismatch");
  for (double xi : x)
    if (xi < -tol || xi > 1.0 + tol) return false;

  switch (body.kind()) {
    case BodyKind::box: {
      for (int j = 0; j < body.dim(); ++j)
        if (x[j] > body.upper()[j] + tol) return false;
      return true;
    }
    case BodyKind::uniform_matroid: {
      double sum = std::accumulate(x.begin(), x.end(), 0.0);
      return sum <= body.cardinality_cap() + tol;
    }
    case BodyKind::partition_matroid: {
      std::vector<double> part_sum(body.num_parts(), 0.0);
      for (int j = 0; j < body.dim(); ++j) part_sum[body.part_of(j)] += x[j];
      for (int t = 0; t < body.num_parts(); ++t)
        if (part_sum[t] > body.part_cap(t) + tol) return false;
      return true;
    }
  }
  return false;
}

double diameter(const FeasibleBody& body) {
  switch (body.kind()) {
    case BodyKind::box: {
      double s = 0.0;
      for (double u : body.upper()) s += u * u;
      return std::sqrt(s);
    }
    case BodyKind::uniform_matroid: {
      // Two independent sets of size k' = min(k,p) differ in at most
      // min(2k', p) coordinates, attained by (near-)disjoint sets.
      int p = body.dim();
      int k = std::min(body.cardinality_cap(), p);
      return std::sqrt(static_cast<double>(std::min(2 * k, p)));
    }
    case BodyKind::partition_matroid: {
      // Parts are independent, so the squared diameter adds up per part.
      std::vector<int> part_size(body.num_parts(), 0);
      for (int j = 0; j < body.dim(); ++j) ++part_size[body.part_of(j)];
      double sq = 0.0;
      for (int t = 0; t < body.num_parts(); ++t) {
        int cap = std::min(body.part_cap(t), part_size[t]);
        sq += std::min(2 * cap, part_size[t]);
      }
      return std::sqrt(sq);
    }
  }
  return 0.0;
}

}  // namespace dsm
