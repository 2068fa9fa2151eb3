#include "dsm/setfn.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dsm/rng.hpp"

namespace dsm {

FacilityObjective::FacilityObjective(const RatingsMatrix& ratings,
                                     std::vector<int> users)
    : SetObjective(std::max(ratings.num_items, 1), 0.0) {
  if (ratings.num_items < 1) throw std::invalid_argument("no items");
  if (users.empty()) throw std::invalid_argument("empty user set");
  prefs_.reserve(users.size());
  std::vector<double> column_sum(ratings.num_items, 0.0);
  for (int u : users) {
    if (u < 0 || u >= ratings.num_users)
      throw std::out_of_range("user index outside ratings matrix");
    auto row = ratings.rows[u];
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    for (const auto& [item, r] : row) column_sum[item] += r;
    prefs_.push_back(std::move(row));
  }
  max_marginal_ = *std::max_element(column_sum.begin(), column_sum.end());
}

double FacilityObjective::value(const Subset& s) const {
  if (s.universe_size() != p_)
    throw std::invalid_argument("subset universe does not match ground set");
  double total = 0.0;
  for (const auto& row : prefs_) {
    for (const auto& [item, r] : row) {
      if (s.contains(item)) {
        total += r;  // rows are sorted descending, first hit is the max
        break;
      }
    }
  }
  return total;
}

FunctionObjective::FunctionObjective(int ground_size, Fn fn)
    : SetObjective(ground_size, 0.0), fn_(std::move(fn)) {
  max_marginal_ = singleton_max(p_, fn_);
}

double FunctionObjective::singleton_max(int p, const Fn& fn) {
  double m = 0.0;
  for (int i = 0; i < p; ++i)
    m = std::max(m, fn(Subset::of(p, {i})));
  return m;
}

std::shared_ptr<FacilityObjective> facility_location(const RatingsMatrix& ratings,
                                                     const std::vector<int>& users) {
  return std::make_shared<FacilityObjective>(ratings, users);
}

NodePartition partition_users(int num_users, int num_nodes, std::uint64_t seed) {
  if (num_nodes < 1) throw std::invalid_argument("node count must be positive");
  if (num_users < num_nodes)
    throw std::invalid_argument("fewer users than nodes");

  std::vector<int> perm(num_users);
  std::iota(perm.begin(), perm.end(), 0);
  RngStream rng(seed, 0x504152u /* "PAR" */);
  for (int i = num_users - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }

  NodePartition part;
  part.num_users = num_users;
  part.node_users.resize(num_nodes);
  int base = num_users / num_nodes;
  int extra = num_users % num_nodes;
  int pos = 0;
  for (int node = 0; node < num_nodes; ++node) {
    int size = base + (node < extra ? 1 : 0);
    part.node_users[node].assign(perm.begin() + pos, perm.begin() + pos + size);
    pos += size;
  }
  return part;
}

PropertyReport check_monotone_submodular(const SetObjective& f) {
  int p = f.ground_size();
  if (p > 14)
    throw std::invalid_argument("ground set too large for exhaustive check");
  const std::uint64_t full = std::uint64_t(1) << p;

  std::vector<double> table(full);
  for (std::uint64_t m = 0; m < full; ++m)
    table[m] = f.value(Subset::from_mask(p, m));

  PropertyReport rep;
  // Monotonicity: f(A) <= f(A u {i}) chains to all A subset B.
  for (std::uint64_t m = 0; m < full && rep.monotone; ++m) {
    for (int i = 0; i < p; ++i) {
      if (m & (std::uint64_t(1) << i)) continue;
      if (table[m | (std::uint64_t(1) << i)] < table[m] - 1e-12) {
        rep.monotone = false;
        rep.monotone_witness_a = Subset::from_mask(p, m).elements();
        rep.monotone_witness_b =
            Subset::from_mask(p, m | (std::uint64_t(1) << i)).elements();
        break;
      }
    }
  }
  for (std::uint64_t a = 0; a < full && rep.submodular; ++a) {
    for (std::uint64_t b = a + 1; b < full; ++b) {
      if (table[a] + table[b] < table[a | b] + table[a & b] - 1e-12) {
        rep.submodular = false;
        rep.submodular_witness_a = Subset::from_mask(p, a).elements();
        rep.submodular_witness_b = Subset::from_mask(p, b).elements();
        break;
      }
    }
  }
  return rep;
}

}  // namespace dsm
