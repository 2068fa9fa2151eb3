#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dsm {

// Undirected communication graph on nodes 0..n-1. No self-loops, no
// duplicate edges, adjacency kept symmetric and sorted.
struct CommGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;   // i < j, sorted
  std::vector<std::vector<int>> adjacency;  // per-node sorted neighbor lists

  int degree(int i) const { return static_cast<int>(adjacency[i].size()); }

  // Number of resampling attempts used by random generation (1 for
  // deterministic topologies).
  int sample_attempts = 1;
};

enum class GraphKind { line, complete, erdos_renyi, custom };

CommGraph make_line_graph(int n);
CommGraph make_complete_graph(int n);

// Samples G(n, edge_prob) repeatedly (up to max_attempts) until connected.
// Throws std::runtime_error if no connected sample is found.
CommGraph make_erdos_renyi_graph(int n, double edge_prob, std::uint64_t seed,
                                 int max_attempts = 100);

// Builds a graph from an explicit edge list; validates indices and rejects
// self-loops. Duplicate edges are collapsed.
CommGraph make_custom_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

bool is_connected(const CommGraph& g);

// Edge-list text format: one "i j" pair per line, 0-indexed, '#' comments
// and blank lines allowed. Node count is max index + 1 unless n_hint is
// larger.
CommGraph load_edge_list(const std::string& path, int n_hint = 0);

}  // namespace dsm
