#ifndef NCG_GRAPH_HPP
#define NCG_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "ncg/cost.hpp"
#include "ncg/rational.hpp"

namespace ncg {

// Unordered vertex pair, normalized u < v.
struct Edge {
  int u = -1;
  int v = -1;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Fixed graph of permitted links with a uniform link price alpha.
// Immutable after construction; vertices are dense ids 0..n-1.
struct HostGraph {
  int n = 0;
  std::vector<Edge> edges;  // sorted, unique
  Rational alpha;
  std::vector<std::vector<int>> adj;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int max_degree() const;

  // Index into `edges`, or -1 if {a,b} is not a host edge.
  int edge_index(int a, int b) const;

  HostGraph with_alpha(Rational a) const {
    HostGraph g = *this;
    g.alpha = a;
    return g;
  }
};

// Validates and canonicalizes. Rejects out-of-range endpoints, self-loops and
// duplicate edges, naming the offending pair.
HostGraph build_host_graph(int n, const std::vector<std::pair<int, int>>& edge_list,
                           Rational alpha);

std::vector<std::vector<int>> adjacency_from_edges(int n, const std::vector<Edge>& edges);

// All-pairs unweighted shortest-path distances (BFS per source) with an
// explicit unreachable marker; aggregates stay in (unreachable count,
// finite sum) form so nothing is ever folded into a big sentinel.
class DistanceMatrix {
 public:
  static constexpr std::int32_t kUnreachable = -1;

  DistanceMatrix() = default;

  void recompute(int n, const std::vector<std::vector<int>>& adj);

  int size() const { return n_; }
  std::int32_t operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  const std::int32_t* row(int u) const { return d_.data() + static_cast<std::size_t>(u) * n_; }

  bool reachable(int u, int v) const { return (*this)(u, v) != kUnreachable; }

  std::int64_t finite_sum(int u) const { return finite_sum_[u]; }
  std::int64_t unreachable_count(int u) const { return unreachable_[u]; }

  std::int64_t total_finite_sum() const { return total_finite_; }
  std::int64_t total_unreachable_pairs() const { return total_unreachable_; }

  // Max finite entry (0 when n <= 1).
  int diameter() const { return diameter_; }

  // Usage cost of vertex u: (unreachable count, sum of finite distances).
  Cost usage(int u) const { return Cost{unreachable_[u], Rational(finite_sum_[u])}; }
  Cost total_usage() const { return Cost{total_unreachable_, Rational(total_finite_)}; }

 private:
  int n_ = 0;
  std::vector<std::int32_t> d_;
  std::vector<std::int64_t> finite_sum_;
  std::vector<std::int64_t> unreachable_;
  std::int64_t total_finite_ = 0;
  std::int64_t total_unreachable_ = 0;
  int diameter_ = 0;
};

DistanceMatrix all_pairs_distances(int n, const std::vector<Edge>& edges);
DistanceMatrix all_pairs_distances(const HostGraph& g);

// |{v : d(u,v) <= k, finite}|; includes u itself.
int neighborhood_size(const DistanceMatrix& dist, int u, int k);

// Ball summary around a vertex: monotone in k, size 1 at k=0, at most n.
struct NeighborhoodProfile {
  int u = 0;
  int k = 0;
  int size = 0;
};

NeighborhoodProfile neighborhood_profile(const DistanceMatrix& dist, int u, int k);

// Single-source distances; dist entries kUnreachable where not reached.
void bfs_from(int source, const std::vector<std::vector<int>>& adj,
              std::vector<std::int32_t>& dist_out);

// Plumbing generators used by the CLI and tests.
HostGraph complete_graph(int n, Rational alpha);
HostGraph path_graph(int n, Rational alpha);
HostGraph cycle_graph(int n, Rational alpha);
HostGraph star_graph(int n, Rational alpha);

}  // namespace ncg

#endif  // NCG_GRAPH_HPP
