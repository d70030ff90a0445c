#include "ncg/equilibrium.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ncg {

namespace {

std::string edge_str(Edge e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

std::vector<std::vector<int>> adjacency_without(const BuiltGraph& built, Edge e) {
  auto adj = adjacency_from_edges(built.n(), built.edges);
  auto drop = [](std::vector<int>& list, int x) {
    list.erase(std::remove(list.begin(), list.end(), x), list.end());
  };
  drop(adj[e.u], e.v);
  drop(adj[e.v], e.u);
  return adj;
}

}  // namespace

// Per-player benefits of adding absent edge e, from the cached distances:
// d'(u,v) = min(d(u,v), d(u,a)+1+d(b,v), d(u,b)+1+d(a,v)).
void addition_benefits_on(const DistanceMatrix& dist, Edge e, std::vector<Cost>* per_player,
                          Cost* total) {
  const int n = dist.size();
  const std::int32_t* ra = dist.row(e.u);
  const std::int32_t* rb = dist.row(e.v);
  if (per_player) per_player->assign(n, Cost{});
  Cost sum;

  const bool connected = dist.total_unreachable_pairs() == 0;
  for (int u = 0; u < n; ++u) {
    std::int32_t A = ra[u];
    std::int32_t B = rb[u];
    if (A == DistanceMatrix::kUnreachable && B == DistanceMatrix::kUnreachable) continue;
    const std::int32_t* ru = dist.row(u);
    std::int64_t improved = 0;
    std::int64_t new_pairs = 0;
    std::int64_t new_dist_sum = 0;

    if (A != DistanceMatrix::kUnreachable && B != DistanceMatrix::kUnreachable) {
      std::int32_t a1 = A + 1;
      std::int32_t b1 = B + 1;
      if (connected) {
        for (int v = 0; v < n; ++v) {
          std::int32_t cand = std::min(a1 + rb[v], b1 + ra[v]);
          std::int32_t delta = ru[v] - cand;
          if (delta > 0) improved += delta;
        }
      } else {
        for (int v = 0; v < n; ++v) {
          if (ru[v] == DistanceMatrix::kUnreachable) continue;  // e stays within the component
          std::int32_t cand = std::min(a1 + rb[v], b1 + ra[v]);
          if (cand < ru[v]) improved += ru[v] - cand;
        }
      }
    } else if (A != DistanceMatrix::kUnreachable) {
      // u on a's side; b's component becomes reachable through the new edge.
      for (int v = 0; v < n; ++v) {
        if (rb[v] == DistanceMatrix::kUnreachable) continue;
        ++new_pairs;
        new_dist_sum += A + 1 + rb[v];
      }
    } else {
      for (int v = 0; v < n; ++v) {
        if (ra[v] == DistanceMatrix::kUnreachable) continue;
        ++new_pairs;
        new_dist_sum += B + 1 + ra[v];
      }
    }

    Cost c{new_pairs, Rational(improved - new_dist_sum)};
    if (per_player) (*per_player)[u] = c;
    sum += c;
  }
  if (total) *total = sum;
}

Cost addition_benefit_total(const BuiltGraph& built, Edge e) {
  Cost total;
  addition_benefits_on(built.dist, e, nullptr, &total);
  return total;
}

Cost removal_loss_for(const BuiltGraph& built, Edge e, int player) {
  auto adj = adjacency_without(built, e);
  std::vector<std::int32_t> d;
  bfs_from(player, adj, d);
  std::int64_t finite = 0;
  std::int64_t unreachable = 0;
  for (int v = 0; v < built.n(); ++v) {
    if (d[v] == DistanceMatrix::kUnreachable) {
      ++unreachable;
    } else {
      finite += d[v];
    }
  }
  Cost after{unreachable, Rational(finite)};
  return after - built.dist.usage(player);
}

EdgeValuation edge_valuations(const BuiltGraph& built, Edge e) {
  e = make_edge(e.u, e.v);
  int idx = built.host.edge_index(e.u, e.v);
  if (idx < 0) throw std::invalid_argument("not a host edge: " + edge_str(e));

  EdgeValuation val;
  val.edge = e;
  val.present = built.present[idx] != 0;

  if (!val.present) {
    addition_benefits_on(built.dist, e, &val.per_player, &val.total);
    return val;
  }

  DistanceMatrix after;
  after.recompute(built.n(), adjacency_without(built, e));
  val.per_player.resize(built.n());
  for (int u = 0; u < built.n(); ++u) {
    Cost loss{after.unreachable_count(u) - built.dist.unreachable_count(u),
              Rational(after.finite_sum(u) - built.dist.finite_sum(u))};
    val.per_player[u] = loss;
    val.total += loss;
  }
  return val;
}

EquilibriumReport verify_collaborative(const HostGraph& host, const PaymentMatrix& payments) {
  if (payments.entries.size() != host.edges.size()) {
    throw std::invalid_argument("payment matrix not aligned with host edge list");
  }
  EquilibriumReport report;
  report.kind = VerifyKind::collaborative;
  report.verdict_label = "collaborative equilibrium";

  std::vector<char> present(host.edges.size(), 0);
  for (std::size_t idx = 0; idx < host.edges.size(); ++idx) {
    Rational sum;
    for (const auto& [player, amount] : payments.entries[idx]) {
      if (amount.is_negative()) {
        report.violations.push_back({"negative_payment", host.edges[idx], {player}, Cost{},
                                     "negative payment by player " + std::to_string(player)});
      }
      sum += amount;
    }
    if (sum >= host.alpha) present[idx] = 1;
    if (!sum.is_zero() && sum != host.alpha) {
      report.violations.push_back(
          {"unnormalized_payment_sum", host.edges[idx], {}, Cost{},
           "payment sum " + sum.to_string() + " not in {0, " + host.alpha.to_string() + "}"});
    }
  }

  BuiltGraph built = realize_edges(host, present);

  for (std::size_t idx = 0; idx < host.edges.size(); ++idx) {
    Edge e = host.edges[idx];
    if (!present[idx]) {
      // (a) no coalition can fund the edge: total benefit must stay <= alpha.
      Cost total = addition_benefit_total(built, e);
      if (total > Cost::finite_value(host.alpha)) {
        EdgeValuation val = edge_valuations(built, e);
        Violation v;
        v.kind = "absent_edge_fundable";
        v.edge = e;
        for (int i = 0; i < built.n(); ++i) {
          if (val.per_player[i] > Cost{}) v.players.push_back(i);
        }
        v.gain = total - Cost::finite_value(host.alpha);
        v.detail = "benefit sum " + total.to_string() + " exceeds alpha";
        report.violations.push_back(std::move(v));
      }
    } else {
      // (b) every payer's share must not exceed its removal loss.
      for (const auto& [player, amount] : payments.entries[idx]) {
        if (amount.is_zero()) continue;
        if (!built.dist.reachable(e.u, player)) {
          report.violations.push_back({"payment_exceeds_loss", e, {player},
                                       Cost::finite_value(amount),
                                       "payer outside the edge's component"});
          continue;
        }
        Cost loss = removal_loss_for(built, e, player);
        if (Cost::finite_value(amount) > loss) {
          report.violations.push_back(
              {"payment_exceeds_loss", e, {player},
               Cost::finite_value(amount) - loss,
               "player " + std::to_string(player) + " pays " + amount.to_string() +
                   " > loss " + loss.to_string()});
        }
      }
    }
  }

  report.pass = report.violations.empty();
  return report;
}

namespace {

struct DeviationSearch {
  const HostGraph& host;
  std::vector<std::vector<int>> base_adj;  // realization with player's buys removed
  int player;
  std::vector<int> neighbors;  // sorted host neighbors of player

  // Buffers.
  std::vector<std::int32_t> dist;
  std::vector<int> queue;

  DeviationSearch(const HostGraph& h, const UnilateralStrategy& s, int i) : host(h), player(i) {
    UnilateralStrategy stripped = s;
    stripped.buys[i].clear();
    std::vector<Edge> edges;
    for (int p = 0; p < h.n; ++p) {
      for (int j : stripped.buys[p]) edges.push_back(make_edge(p, j));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    base_adj = adjacency_from_edges(h.n, edges);
    neighbors = h.adj[i];
    std::sort(neighbors.begin(), neighbors.end());
  }

  // Cost of playing `extra` (subset of `neighbors` as a bitmask), others fixed.
  Cost cost_of_mask(unsigned mask) {
    const int n = host.n;
    dist.assign(n, DistanceMatrix::kUnreachable);
    queue.clear();
    dist[player] = 0;
    queue.push_back(player);
    for (std::size_t b = 0; b < neighbors.size(); ++b) {
      if (mask & (1u << b)) {
        int j = neighbors[b];
        if (dist[j] == DistanceMatrix::kUnreachable) {
          dist[j] = 1;
          queue.push_back(j);
        }
      }
    }
    for (int j : base_adj[player]) {
      if (dist[j] == DistanceMatrix::kUnreachable) {
        dist[j] = 1;
        queue.push_back(j);
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : base_adj[u]) {
        if (dist[v] == DistanceMatrix::kUnreachable) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    std::int64_t finite = 0;
    std::int64_t unreachable = 0;
    for (int v = 0; v < n; ++v) {
      if (v == player) continue;
      if (dist[v] == DistanceMatrix::kUnreachable) {
        ++unreachable;
      } else {
        finite += dist[v];
      }
    }
    int bought = __builtin_popcount(mask);
    return Cost{unreachable, host.alpha * Rational(bought) + Rational(finite)};
  }

  std::vector<int> mask_to_set(unsigned mask) const {
    std::vector<int> out;
    for (std::size_t b = 0; b < neighbors.size(); ++b) {
      if (mask & (1u << b)) out.push_back(neighbors[b]);
    }
    return out;
  }

  unsigned set_to_mask(const std::vector<int>& set) const {
    unsigned mask = 0;
    for (int j : set) {
      auto it = std::lower_bound(neighbors.begin(), neighbors.end(), j);
      if (it == neighbors.end() || *it != j) {
        throw std::invalid_argument("strategy buys non-host edge {" + std::to_string(player) +
                                    "," + std::to_string(j) + "}");
      }
      mask |= 1u << (it - neighbors.begin());
    }
    return mask;
  }
};

// (cost, popcount, lex set) ordering used for deterministic tie-breaks.
bool mask_preferred(DeviationSearch& search, unsigned cand, const Cost& cand_cost, unsigned best,
                    const Cost& best_cost) {
  if (cand_cost != best_cost) return cand_cost < best_cost;
  int pc = __builtin_popcount(cand);
  int pb = __builtin_popcount(best);
  if (pc != pb) return pc < pb;
  return search.mask_to_set(cand) < search.mask_to_set(best);
}

}  // namespace

std::vector<int> best_response(const HostGraph& host, const UnilateralStrategy& s, int player) {
  if (player < 0 || player >= host.n) throw std::invalid_argument("player out of range");
  if (host.degree(player) > 16) {
    throw std::runtime_error("best_response: host degree " + std::to_string(host.degree(player)) +
                             " exceeds the 2^16 enumeration cap");
  }
  DeviationSearch search(host, s, player);
  unsigned best = 0;
  Cost best_cost = search.cost_of_mask(0);
  const unsigned limit = 1u << search.neighbors.size();
  for (unsigned mask = 1; mask < limit; ++mask) {
    Cost c = search.cost_of_mask(mask);
    if (mask_preferred(search, mask, c, best, best_cost)) {
      best = mask;
      best_cost = c;
    }
  }
  return search.mask_to_set(best);
}

EquilibriumReport verify_unilateral_nash(const HostGraph& host, const UnilateralStrategy& s,
                                         NashMode mode) {
  if (static_cast<int>(s.buys.size()) != host.n) {
    throw std::invalid_argument("strategy player count does not match host");
  }
  if (mode == NashMode::exact && host.max_degree() > 16) {
    throw std::runtime_error("exact Nash verification requires max host degree <= 16 (got " +
                             std::to_string(host.max_degree()) +
                             "); use local (link-stable) mode instead");
  }

  EquilibriumReport report;
  report.kind = mode == NashMode::exact ? VerifyKind::nash_exact : VerifyKind::nash_local;
  report.verdict_label = mode == NashMode::exact ? "Nash equilibrium" : "link-stable";

  for (int i = 0; i < host.n; ++i) {
    DeviationSearch search(host, s, i);
    unsigned current = search.set_to_mask(s.buys[i]);
    Cost current_cost = search.cost_of_mask(current);

    unsigned best = current;
    Cost best_cost = current_cost;
    auto consider = [&](unsigned mask) {
      Cost c = search.cost_of_mask(mask);
      if (mask_preferred(search, mask, c, best, best_cost)) {
        best = mask;
        best_cost = c;
      }
    };

    if (mode == NashMode::exact) {
      const unsigned limit = 1u << search.neighbors.size();
      for (unsigned mask = 0; mask < limit; ++mask) {
        if (mask != current) consider(mask);
      }
    } else {
      const unsigned deg = static_cast<unsigned>(search.neighbors.size());
      for (unsigned b = 0; b < deg; ++b) {
        unsigned bit = 1u << b;
        if (current & bit) {
          consider(current & ~bit);  // drop
        } else {
          consider(current | bit);  // add
        }
      }
      for (unsigned b = 0; b < deg; ++b) {
        if (!(current & (1u << b))) continue;
        for (unsigned c2 = 0; c2 < deg; ++c2) {
          if (current & (1u << c2)) continue;
          consider((current & ~(1u << b)) | (1u << c2));  // swap
        }
      }
    }

    if (best_cost < current_cost) {
      Violation v;
      v.kind = "better_response";
      v.players = {i};
      v.gain = current_cost - best_cost;
      auto set = search.mask_to_set(best);
      std::string detail = "player " + std::to_string(i) + " improves by switching to {";
      for (std::size_t t = 0; t < set.size(); ++t) {
        detail += (t ? "," : "") + std::to_string(set[t]);
      }
      detail += "}";
      // Name one changed edge for report readability.
      unsigned changed = best ^ current;
      if (changed) {
        int b = __builtin_ctz(changed);
        v.edge = make_edge(i, search.neighbors[b]);
      }
      v.detail = std::move(detail);
      report.violations.push_back(std::move(v));
    }
  }

  report.pass = report.violations.empty();
  return report;
}

}  // namespace ncg
