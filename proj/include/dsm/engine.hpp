#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dsm/mixing.hpp"
#include "dsm/polytope.hpp"
#include "dsm/setfn.hpp"

namespace dsm {

// Per-node state of the decentralized conditional-gradient rounds:
// x is the local decision variable, d the gradient consensus estimate, g
// the smoothed local gradient estimate (discrete mode only; empty in
// continuous mode).
struct NodeState {
  std::vector<double> x;
  std::vector<double> d;
  std::vector<double> g;
};

struct RunParameters {
  int rounds = 100;          // T
  double alpha = -1.0;       // gradient averaging weight; <0 -> 1/sqrt(T)
  double phi = -1.0;         // estimate averaging weight; <0 -> T^(-2/3)
  int batch = 1;             // estimator batch size (sampled mode)
  std::uint64_t seed = 0;
  int snapshot_stride = 0;   // 0 -> max(1, T/200); 1 -> every round

  double resolved_alpha() const;
  double resolved_phi() const;
  int resolved_stride() const;
  void validate() const;
};

// Full record of one run. snapshot_rounds always includes 0 and T; with
// stride 1 it is every round, which the lemma checkers require.
struct Trajectory {
  int num_nodes = 0;
  int dim = 0;
  int rounds = 0;
  double alpha = 0.0;
  double phi = 0.0;
  std::uint64_t seed = 0;
  bool discrete = false;
  double beta = 0.0;  // from the validated weight matrix
  std::vector<int> snapshot_rounds;
  std::vector<std::vector<NodeState>> snapshots;  // [snapshot][node]

  const std::vector<NodeState>& final_states() const { return snapshots.back(); }
  bool full_stride() const;
};

using GradientOracle =
    std::function<std::vector<double>(const std::vector<double>&)>;

// Decentralized continuous greedy. Every round each node mixes neighbor
// gradient estimates into d, ascends along the lmo vertex of d with step
// 1/T, and mixes neighbor decision variables; all reads reference the
// previous round's committed values. Starts from x = d = 0. Iterates are
// checked against the body every round (tolerance 1e-9).
Trajectory run_continuous_dcg(const std::vector<GradientOracle>& local_gradients,
                              const FeasibleBody& body, const WeightMatrix& w,
                              const RunParameters& params);

enum class GradientMode { sampled, exact_facility };

// Discrete variant: node i holds a set function f_i and tracks a smoothed
// gradient estimate g_i updated from either the sampled unbiased estimator
// (per-node streams keyed by seed/node/round) or the exact facility
// closed form; g_i feeds the same d/v/x updates as the continuous run.
Trajectory run_discrete_dcg(
    const std::vector<std::shared_ptr<const SetObjective>>& local_functions,
    const FeasibleBody& body, const WeightMatrix& w, const RunParameters& params,
    GradientMode mode);

// Per-snapshot consensus and objective metrics. The objective oracle is
// caller-supplied (typically the global fractional objective).
struct MetricsRow {
  int round = 0;
  double distance_to_average = 0.0;  // (1/n) sum_i ||x_i - xbar||
  double d_consensus_residual = 0.0; // (1/n) sum_i ||d_i - dbar||
  double mean_objective = 0.0;
  std::vector<double> per_node_objective;
};

std::vector<MetricsRow> snapshot_metrics(
    const Trajectory& traj,
    const std::function<double(const std::vector<double>&)>& objective);

}  // namespace dsm
