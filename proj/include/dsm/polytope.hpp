#pragma once

#include <vector>

#include "dsm/subset.hpp"

namespace dsm {

enum class BodyKind { uniform_matroid, partition_matroid, box };

// Down-closed feasible body in [0,1]^p. Three kinds are supported, all with
// exact linear maximization, membership and diameter:
//   uniform matroid  { x : sum x_j <= k }
//   partition matroid{ x : sum over part t of x_j <= cap_t }
//   box              { x : x <= u }, u in (0,1]^p
class FeasibleBody {
 public:
  static FeasibleBody uniform_matroid(int dim, int k);
  static FeasibleBody partition_matroid(int dim,
                                        const std::vector<std::vector<int>>& parts,
                                        const std::vector<int>& caps);
  static FeasibleBody box(const std::vector<double>& upper);

  BodyKind kind() const { return kind_; }
  int dim() const { return dim_; }
  int cardinality_cap() const { return k_; }
  int num_parts() const { return static_cast<int>(caps_.size()); }
  int part_of(int coord) const { return part_of_[coord]; }
  int part_cap(int part) const { return caps_[part]; }
  const std::vector<double>& upper() const { return upper_; }

  // True when the indicator of s is a vertex of the body (matroid kinds:
  // s independent; box is not a set family and always rejects).
  bool is_independent_set(const Subset& s) const;
  bool can_add(const Subset& s, int e) const;

 private:
  FeasibleBody() = default;
  BodyKind kind_ = BodyKind::uniform_matroid;
  int dim_ = 0;
  int k_ = 0;                     // uniform
  std::vector<int> part_of_;      // partition: coord -> part
  std::vector<int> caps_;         // partition: per-part cap
  std::vector<double> upper_;     // box
};

// Linear maximization oracle: an exact vertex maximizer of <d, v> over the
// body. Down-closedness lets every coordinate with d_j <= 0 be zeroed;
// among strictly positive coordinates ties break toward the lowest index.
std::vector<double> lmo(const FeasibleBody& body, const std::vector<double>& d);

// Membership test with additive tolerance.
bool contains(const FeasibleBody& body, const std::vector<double>& x,
              double tol = 1e-9);

// Exact Euclidean diameter.
double diameter(const FeasibleBody& body);

}  // namespace dsm
