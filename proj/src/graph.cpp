#include "dsm/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dsm/rng.hpp"

namespace dsm {

namespace {

CommGraph finalize(int n, std::set<std::pair<int, int>> edge_set) {
  CommGraph g;
  g.n = n;
  g.edges.assign(edge_set.begin(), edge_set.end());
  g.adjacency.assign(n, {});
  for (auto [i, j] : g.edges) {
    g.adjacency[i].push_back(j);
    g.adjacency[j].push_back(i);
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::pair<int, int> ordered(int i, int j) {
  return i < j ? std::make_pair(i, j) : std::make_pair(j, i);
}

}  // namespace

CommGraph make_line_graph(int n) {
  if (n < 1) throw std::invalid_argument("node count must be positive");
  std::set<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.insert({i, i + 1});
  return finalize(n, std::move(es));
}

CommGraph make_complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("node count must be positive");
  std::set<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.insert({i, j});
  return finalize(n, std::move(es));
}

CommGraph make_erdos_renyi_graph(int n, double edge_prob, std::uint64_t seed,
                                 int max_attempts) {
  if (n < 1) throw std::invalid_argument("node count must be positive");
  if (edge_prob < 0.0 || edge_prob > 1.0)
    throw std::invalid_argument("edge probability outside [0,1]");
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    RngStream rng(seed, 0x4552u /* "ER" */, static_cast<std::uint64_t>(attempt));
    std::set<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.bernoulli(edge_prob)) es.insert({i, j});
    CommGraph g = finalize(n, std::move(es));
    g.sample_attempts = attempt;
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("no connected Erdos-Renyi sample within retry budget");
}

CommGraph make_custom_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
  if (n < 1) throw std::invalid_argument("node count must be positive");
  std::set<std::pair<int, int>> es;
  for (auto [i, j] : edge_list) {
    if (i == j) throw std::invalid_argument("self-loop in edge list");
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw std::invalid_argument("edge references node outside [0, n)");
    es.insert(ordered(i, j));
  }
  return finalize(n, std::move(es));
}

bool is_connected(const CommGraph& g) {
  if (g.n == 0) return false;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.adjacency[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++visited;
        stack.push_back(v);
      }
    }
  }
  return visited == g.n;
}

CommGraph load_edge_list(const std::string& path, int n_hint) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge-list file: " + path);
  std::vector<std::pair<int, int>> edge_list;
  std::string line;
  int line_no = 0;
  int max_node = -1;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    long long i, j;
    if (!(ls >> i)) continue;  // blank or comment-only line
    if (!(ls >> j))
      throw std::runtime_error("edge-list line " + std::to_string(line_no) +
                               ": expected two node indices");
    if (i < 0 || j < 0)
      throw std::runtime_error("edge-list line " + std::to_string(line_no) +
                               ": negative node index");
    edge_list.emplace_back(static_cast<int>(i), static_cast<int>(j));
    max_node = std::max(max_node, static_cast<int>(std::max(i, j)));
  }
  int n = std::max(n_hint, max_node + 1);
  if (n == 0) throw std::runtime_error("edge-list file has no nodes: " + path);
  return make_custom_graph(n, edge_list);
}

}  // namespace dsm
