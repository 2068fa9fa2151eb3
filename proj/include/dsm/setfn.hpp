#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dsm/subset.hpp"

namespace dsm {

// Monotone submodular set function on the ground set {0, ..., p-1}.
// Evaluation must be deterministic and nonnegative. max_marginal() caches
// m_f = max_i f({i}), which bounds every marginal gain of a monotone
// submodular function and drives all the gradient-norm constants.
class SetObjective {
 public:
  virtual ~SetObjective() = default;

  virtual double value(const Subset& s) const = 0;

  int ground_size() const { return p_; }
  double max_marginal() const { return max_marginal_; }

  // f(s u {e}) - f(s); zero when e is already in s.
  double marginal(const Subset& s, int e) const {
    if (e < 0 || e >= p_) throw std::out_of_range("element outside ground set");
    if (s.contains(e)) return 0.0;
    return value(s.with(e)) - value(s);
  }

 protected:
  SetObjective(int ground_size, double max_marginal)
      : p_(ground_size), max_marginal_(max_marginal) {
    if (ground_size < 1) throw std::invalid_argument("empty ground set");
  }

  int p_;
  double max_marginal_;
};

// Sparse user x movie ratings. Absent entries mean rating 0.
struct RatingsMatrix {
  int num_users = 0;
  int num_items = 0;
  // Per user: (item, rating) with rating > 0, item indices strictly increasing.
  std::vector<std::vector<std::pair<int, double>>> rows;
};

// Facility-location objective over a set of users:
//   f(S) = sum_users max_{j in S} rating(user, j),  max over {} = 0.
// Per-user ratings are cached sorted by rating descending so evaluation can
// stop at the first item found in S.
class FacilityObjective final : public SetObjective {
 public:
  FacilityObjective(const RatingsMatrix& ratings, std::vector<int> users);

  double value(const Subset& s) const override;

  int num_users() const { return static_cast<int>(prefs_.size()); }
  // Per user: (item, rating) sorted by rating descending, item ascending.
  const std::vector<std::vector<std::pair<int, double>>>& preferences() const {
    return prefs_;
  }

 private:
  std::vector<std::vector<std::pair<int, double>>> prefs_;
};

// Adapter for ad-hoc objectives (tests, synthetic cases). The callable
// must be deterministic; m_f is computed from the singletons.
class FunctionObjective final : public SetObjective {
 public:
  using Fn = std::function<double(const Subset&)>;
  FunctionObjective(int ground_size, Fn fn);
  double value(const Subset& s) const override { return fn_(s); }

 private:
  static double singleton_max(int p, const Fn& fn);
  Fn fn_;
};

// Assignment of users to nodes; lists are disjoint, cover every user, and
// sizes differ by at most one.
struct NodePartition {
  int num_users = 0;
  std::vector<std::vector<int>> node_users;
};

std::shared_ptr<FacilityObjective> facility_location(const RatingsMatrix& ratings,
                                                     const std::vector<int>& users);

// Random equal split: users are permuted with the seeded stream and cut
// into n contiguous chunks of size floor(M/n) or ceil(M/n).
NodePartition partition_users(int num_users, int num_nodes, std::uint64_t seed);

// Exhaustive monotonicity + submodularity check; feasible for |V| <= 14
// (values are tabulated once, then all 4^|V|/pair inequalities checked).
struct PropertyReport {
  bool monotone = true;
  bool submodular = true;
  // First violations found, as element lists (empty when none).
  std::vector<int> monotone_witness_a, monotone_witness_b;
  std::vector<int> submodular_witness_a, submodular_witness_b;
  bool ok() const { return monotone && submodular; }
};

PropertyReport check_monotone_submodular(const SetObjective& f);

}  // namespace dsm
