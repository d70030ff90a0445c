#include "ncg/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace ncg {

namespace {

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

int HostGraph::max_degree() const {
  int d = 0;
  for (const auto& a : adj) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

int HostGraph::edge_index(int a, int b) const {
  Edge e = make_edge(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || !(*it == e)) return -1;
  return static_cast<int>(it - edges.begin());
}

HostGraph build_host_graph(int n, const std::vector<std::pair<int, int>>& edge_list,
                           Rational alpha) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  if (alpha.is_negative()) throw std::invalid_argument("alpha must be nonnegative");
  HostGraph g;
  g.n = n;
  g.alpha = alpha;
  g.edges.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + pair_str(a, b));
    }
    if (a == b) throw std::invalid_argument("self-loop rejected: " + pair_str(a, b));
    g.edges.push_back(make_edge(a, b));
  }
  std::sort(g.edges.begin(), g.edges.end());
  auto dup = std::adjacent_find(g.edges.begin(), g.edges.end());
  if (dup != g.edges.end()) {
    throw std::invalid_argument("duplicate edge rejected: " + pair_str(dup->u, dup->v));
  }
  g.adj = adjacency_from_edges(n, g.edges);
  return g;
}

std::vector<std::vector<int>> adjacency_from_edges(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

void bfs_from(int source, const std::vector<std::vector<int>>& adj,
              std::vector<std::int32_t>& dist_out) {
  const int n = static_cast<int>(adj.size());
  dist_out.assign(n, DistanceMatrix::kUnreachable);
  dist_out[source] = 0;
  std::vector<int> queue;
  queue.reserve(n);
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    std::int32_t du = dist_out[u];
    for (int v : adj[u]) {
      if (dist_out[v] == DistanceMatrix::kUnreachable) {
        dist_out[v] = du + 1;
        queue.push_back(v);
      }
    }
  }
}

void DistanceMatrix::recompute(int n, const std::vector<std::vector<int>>& adj) {
  n_ = n;
  d_.assign(static_cast<std::size_t>(n) * n, kUnreachable);
  finite_sum_.assign(n, 0);
  unreachable_.assign(n, 0);
  total_finite_ = 0;
  total_unreachable_ = 0;
  diameter_ = 0;

  std::vector<int> queue;
  queue.reserve(n);
  for (int s = 0; s < n; ++s) {
    std::int32_t* row = d_.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    queue.clear();
    queue.push_back(s);
    std::int64_t sum = 0;
    int reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      std::int32_t du = row[u];
      for (int v : adj[u]) {
        if (row[v] == kUnreachable) {
          row[v] = du + 1;
          sum += du + 1;
          ++reached;
          if (du + 1 > diameter_) diameter_ = du + 1;
          queue.push_back(v);
        }
      }
    }
    finite_sum_[s] = sum;
    unreachable_[s] = n - reached;
    total_finite_ += sum;
    total_unreachable_ += n - reached;
  }
}

DistanceMatrix all_pairs_distances(int n, const std::vector<Edge>& edges) {
  DistanceMatrix m;
  m.recompute(n, adjacency_from_edges(n, edges));
  return m;
}

DistanceMatrix all_pairs_distances(const HostGraph& g) {
  DistanceMatrix m;
  m.recompute(g.n, g.adj);
  return m;
}

int neighborhood_size(const DistanceMatrix& dist, int u, int k) {
  if (u < 0 || u >= dist.size()) throw std::invalid_argument("vertex out of range");
  if (k < 0) throw std::invalid_argument("radius must be nonnegative");
  const std::int32_t* row = dist.row(u);
  int count = 0;
  for (int v = 0; v < dist.size(); ++v) {
    if (row[v] != DistanceMatrix::kUnreachable && row[v] <= k) ++count;
  }
  return count;
}

NeighborhoodProfile neighborhood_profile(const DistanceMatrix& dist, int u, int k) {
  return NeighborhoodProfile{u, k, neighborhood_size(dist, u, k)};
}

HostGraph complete_graph(int n, Rational alpha) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return build_host_graph(n, edges, alpha);
}

HostGraph path_graph(int n, Rational alpha) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return build_host_graph(n, edges, alpha);
}

HostGraph cycle_graph(int n, Rational alpha) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  if (n >= 3) edges.emplace_back(n - 1, 0);
  return build_host_graph(n, edges, alpha);
}

HostGraph star_graph(int n, Rational alpha) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return build_host_graph(n, edges, alpha);
}

}  // namespace ncg
