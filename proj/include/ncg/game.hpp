#ifndef NCG_GAME_HPP
#define NCG_GAME_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "ncg/cost.hpp"
#include "ncg/graph.hpp"

namespace ncg {

enum class Model { unilateral, cooperative };

// Unilateral strategy: per player, the set of neighbor vertices whose
// incident host edges the player buys. Neighbor lists are kept sorted.
struct UnilateralStrategy {
  std::vector<std::vector<int>> buys;

  static UnilateralStrategy empty(int n) {
    UnilateralStrategy s;
    s.buys.resize(n);
    return s;
  }
};

// Sparse payment vectors, aligned with HostGraph::edges: entries[i] lists
// (player, amount) pairs for host edge i, players sorted, amounts > 0.
struct PaymentMatrix {
  std::vector<std::vector<std::pair<int, Rational>>> entries;

  static PaymentMatrix empty(const HostGraph& host) {
    PaymentMatrix p;
    p.entries.resize(host.edges.size());
    return p;
  }

  Rational edge_sum(int edge_idx) const {
    Rational s;
    for (const auto& [player, amount] : entries[edge_idx]) s += amount;
    return s;
  }

  // Amount player pays on edge_idx (0 if absent from the sparse list).
  Rational paid(int edge_idx, int player) const;

  void set(int edge_idx, int player, Rational amount);
};

using JointStrategy = std::variant<UnilateralStrategy, PaymentMatrix>;

// Realized network G_s: spanning subgraph of the host plus its distances.
struct BuiltGraph {
  HostGraph host;              // carries n and alpha
  std::vector<char> present;   // by host edge index
  std::vector<Edge> edges;     // realized edges, sorted
  DistanceMatrix dist;

  int n() const { return host.n; }
  int realized_count() const { return static_cast<int>(edges.size()); }
};

// Unilateral rule: {i,j} realized iff j in s_i or i in s_j.
// Cooperative rule: edge realized iff raw payments sum to >= alpha.
// Rejects strategies naming non-host edges.
BuiltGraph realize_network(const HostGraph& host, const JointStrategy& strategy);

// Realization from an explicit edge-presence bitmap (analysis plumbing).
BuiltGraph realize_edges(const HostGraph& host, const std::vector<char>& present);

// Scales every edge whose payment sum exceeds alpha down to exactly alpha;
// under-alpha edges are untouched, so the realized set never changes.
PaymentMatrix normalize_payments(const HostGraph& host, const PaymentMatrix& payments);

struct PlayerCost {
  Rational creation;
  std::int64_t usage_finite = 0;
  std::int64_t usage_unreachable = 0;

  Cost total() const { return Cost{usage_unreachable, creation + Rational(usage_finite)}; }
};

struct CostBreakdown {
  std::vector<PlayerCost> players;
  Rational creation_total;
  std::int64_t usage_finite_total = 0;
  std::int64_t usage_unreachable_total = 0;
  Cost total;
};

// Cooperative mode expects payments pre-normalized (see normalize_payments).
PlayerCost player_cost(const BuiltGraph& built, const JointStrategy& strategy, int player,
                       Model model);

// Unilateral total is the sum of player costs; cooperative total is
// alpha * |E_s| + sum of all ordered-pair distances.
CostBreakdown social_cost(const BuiltGraph& built, const JointStrategy& strategy, Model model);

// Social cost of a bare edge set (strategy-independent form shared by the
// optimum search and the dynamics potential).
Cost edge_set_cost(const HostGraph& host, const DistanceMatrix& dist, int edge_count);

}  // namespace ncg

#endif  // NCG_GAME_HPP
