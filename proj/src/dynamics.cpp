#include "ncg/dynamics.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ncg {

namespace {

// Mutable dynamics state: presence bitmap, per-edge payer lists, cached
// distances and potential.
struct DynamicsState {
  const HostGraph& host;
  std::vector<char> present;
  std::vector<std::vector<std::pair<int, Rational>>> payments;
  std::vector<std::vector<int>> adj;
  DistanceMatrix dist;
  int realized = 0;
  Cost potential;
  std::vector<char> repaired;  // per edge, cleared on every mutation

  explicit DynamicsState(const HostGraph& h, const PaymentMatrix& init) : host(h) {
    const std::size_t m = h.edges.size();
    present.assign(m, 0);
    payments.assign(m, {});
    repaired.assign(m, 0);

    // Scale over-funded edges down to alpha and drop sub-alpha bids on
    // absent edges; neither changes the realized set or any cost.
    for (std::size_t i = 0; i < m; ++i) {
      Rational sum;
      for (const auto& [player, amount] : init.entries[i]) sum += amount;
      if (sum >= h.alpha) {
        present[i] = 1;
        ++realized;
        payments[i] = init.entries[i];
        if (sum > h.alpha) {
          Rational scale = h.alpha / sum;
          for (auto& [player, amount] : payments[i]) amount *= scale;
        }
      }
    }
    adj.assign(h.n, {});
    for (std::size_t i = 0; i < m; ++i) {
      if (present[i]) {
        adj[h.edges[i].u].push_back(h.edges[i].v);
        adj[h.edges[i].v].push_back(h.edges[i].u);
      }
    }
    dist.recompute(h.n, adj);
    potential = edge_set_cost(h, dist, realized);
  }

  void link(Edge e) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  void unlink(Edge e) {
    auto drop = [](std::vector<int>& list, int x) {
      list.erase(std::find(list.begin(), list.end(), x));
    };
    drop(adj[e.u], e.v);
    drop(adj[e.v], e.u);
  }

  // Component of e.u when e is removed; true if e.v stays reachable.
  bool still_connected_without(Edge e, std::vector<char>* side_u = nullptr,
                               int* side_u_size = nullptr) {
    unlink(e);
    std::vector<std::int32_t> d;
    bfs_from(e.u, adj, d);
    link(e);
    if (side_u) {
      side_u->assign(host.n, 0);
      int cnt = 0;
      for (int v = 0; v < host.n; ++v) {
        if (d[v] != DistanceMatrix::kUnreachable) {
          (*side_u)[v] = 1;
          ++cnt;
        }
      }
      if (side_u_size) *side_u_size = cnt;
    }
    return d[e.v] != DistanceMatrix::kUnreachable;
  }

  // Per-player removal losses via a full recompute of G_s - e.
  void removal_losses(Edge e, std::vector<Cost>& losses, Cost& total, DistanceMatrix& after) {
    unlink(e);
    after.recompute(host.n, adj);
    link(e);
    losses.assign(host.n, Cost{});
    total = Cost{};
    for (int u = 0; u < host.n; ++u) {
      Cost loss{after.unreachable_count(u) - dist.unreachable_count(u),
                Rational(after.finite_sum(u) - dist.finite_sum(u))};
      losses[u] = loss;
      total += loss;
    }
  }

  void apply_add(int idx, const std::vector<Cost>& benefits) {
    Edge e = host.edges[idx];
    present[idx] = 1;
    ++realized;
    link(e);
    dist.recompute(host.n, adj);
    potential = edge_set_cost(host, dist, realized);
    payments[idx] = allocate(benefits);
    std::fill(repaired.begin(), repaired.end(), 0);
  }

  void apply_remove(int idx, DistanceMatrix&& after) {
    Edge e = host.edges[idx];
    present[idx] = 0;
    --realized;
    unlink(e);
    dist = std::move(after);
    potential = edge_set_cost(host, dist, realized);
    payments[idx].clear();
    std::fill(repaired.begin(), repaired.end(), 0);
  }

  // Split alpha proportionally to valuation weights. Connectivity gains
  // dominate: when any player reconnects vertices, only those players fund
  // the edge (weights = reconnection counts); otherwise weights are the
  // finite usage savings. Proportionality keeps every share at most the
  // player's valuation because the weights sum to more than alpha.
  std::vector<std::pair<int, Rational>> allocate(const std::vector<Cost>& valuations) {
    std::vector<std::pair<int, Rational>> out;
    if (host.alpha.is_zero()) return out;
    std::int64_t weight_sum = 0;
    bool any_unreachable = false;
    for (const Cost& c : valuations) {
      if (c.unreachable > 0) any_unreachable = true;
    }
    std::vector<std::int64_t> w(valuations.size(), 0);
    for (std::size_t i = 0; i < valuations.size(); ++i) {
      if (any_unreachable) {
        w[i] = valuations[i].unreachable;
      } else if (valuations[i].value > Rational(0)) {
        w[i] = valuations[i].value.num();  // integer usage delta
      }
      weight_sum += w[i];
    }
    if (weight_sum <= 0) throw std::logic_error("allocation with empty valuation weights");
    for (std::size_t i = 0; i < valuations.size(); ++i) {
      if (w[i] > 0) {
        out.emplace_back(static_cast<int>(i),
                         host.alpha * Rational(w[i]) / Rational(weight_sum));
      }
    }
    return out;
  }
};

enum class MoveKind { none, add, remove, repair };

struct Move {
  MoveKind kind = MoveKind::none;
  Cost gain;  // potential decrease for add/remove
  std::vector<Cost> valuations;
  DistanceMatrix after;  // filled for remove
};

// Decide what examining edge idx would do, without mutating anything.
Move examine(DynamicsState& st, int idx, bool allow_repair) {
  const HostGraph& host = st.host;
  Edge e = host.edges[idx];
  Move move;
  Cost alpha_cost = Cost::finite_value(host.alpha);

  if (!st.present[idx]) {
    Cost total;
    std::vector<Cost> benefits;
    addition_benefits_on(st.dist, e, &benefits, &total);
    if (total > alpha_cost) {
      move.kind = MoveKind::add;
      move.gain = total - alpha_cost;
      move.valuations = std::move(benefits);
    }
    return move;
  }

  std::vector<char> side_u;
  int side_u_size = 0;
  if (!st.still_connected_without(e, &side_u, &side_u_size)) {
    // Bridge: total loss has a connectivity component, never removed.
    // Payers inside the bridge's component are safe; a payer elsewhere has
    // zero loss, which a repair resolves.
    bool needs_repair = false;
    for (const auto& [player, amount] : st.payments[idx]) {
      if (!st.dist.reachable(e.u, player) && !amount.is_zero()) needs_repair = true;
    }
    if (needs_repair && allow_repair && !st.repaired[idx]) {
      int comp = host.n - static_cast<int>(st.dist.unreachable_count(e.u));
      std::vector<Cost> losses(host.n, Cost{});
      for (int v = 0; v < host.n; ++v) {
        if (!st.dist.reachable(e.u, v)) continue;
        losses[v].unreachable = side_u[v] ? comp - side_u_size : side_u_size;
      }
      move.kind = MoveKind::repair;
      move.valuations = std::move(losses);
    }
    return move;
  }

  std::vector<Cost> losses;
  Cost total;
  move.after = DistanceMatrix();
  st.removal_losses(e, losses, total, move.after);
  if (total < alpha_cost) {
    move.kind = MoveKind::remove;
    move.gain = alpha_cost - total;
    return move;
  }
  bool needs_repair = false;
  for (const auto& [player, amount] : st.payments[idx]) {
    if (Cost::finite_value(amount) > losses[player]) needs_repair = true;
  }
  if (needs_repair && allow_repair && !st.repaired[idx]) {
    move.kind = MoveKind::repair;
    move.valuations = std::move(losses);
  }
  return move;
}

}  // namespace

PaymentMatrix host_complete_payments(const HostGraph& host) {
  PaymentMatrix p = PaymentMatrix::empty(host);
  Rational half = host.alpha / Rational(2);
  for (std::size_t i = 0; i < host.edges.size(); ++i) {
    if (half.is_zero()) continue;
    p.entries[i] = {{host.edges[i].u, half}, {host.edges[i].v, half}};
  }
  return p;
}

Trajectory run_dynamics(const HostGraph& host, const PaymentMatrix& init, DynamicsPolicy policy,
                        std::size_t max_steps) {
  if (init.entries.size() != host.edges.size()) {
    throw std::invalid_argument("initial payments not aligned with host edge list");
  }
  DynamicsState st(host, init);
  Trajectory traj;
  traj.initial_potential = st.potential;

  const int m = host.edge_count();
  if (m == 0) {
    traj.converged = true;
    traj.final_potential = st.potential;
    traj.final_payments = PaymentMatrix::empty(host);
    traj.final_built = realize_edges(host, st.present);
    return traj;
  }

  std::mt19937_64 rng(policy.seed);
  std::size_t since_change = 0;
  int rr_cursor = 0;

  auto record = [&](Edge e, StepAction action, bool realloc) {
    traj.steps.push_back(TrajectoryStep{e, action, realloc, st.potential});
  };

  auto execute = [&](int idx, Move&& move) {
    Edge e = host.edges[idx];
    switch (move.kind) {
      case MoveKind::add:
        st.apply_add(idx, move.valuations);
        ++traj.mutation_count;
        since_change = 0;
        record(e, StepAction::add, true);
        break;
      case MoveKind::remove:
        st.apply_remove(idx, std::move(move.after));
        ++traj.mutation_count;
        since_change = 0;
        record(e, StepAction::remove, false);
        break;
      case MoveKind::repair:
        st.payments[idx] = st.allocate(move.valuations);
        st.repaired[idx] = 1;
        since_change = 0;
        record(e, StepAction::none, true);
        break;
      case MoveKind::none:
        ++since_change;
        record(e, StepAction::none, false);
        break;
    }
  };

  auto is_stable = [&]() {
    for (int idx = 0; idx < m; ++idx) {
      Move move = examine(st, idx, true);
      if (move.kind != MoveKind::none) return false;
    }
    return true;
  };

  while (traj.steps.size() < max_steps) {
    int idx;
    if (policy.kind == DynamicsPolicy::Kind::round_robin) {
      idx = rr_cursor;
      rr_cursor = (rr_cursor + 1) % m;
    } else if (policy.kind == DynamicsPolicy::Kind::random) {
      idx = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
    } else {
      // Greedy: take the applicable mutation with the largest potential
      // decrease; fall back to pending repairs; otherwise converged.
      int best_idx = -1;
      Move best;
      for (int i = 0; i < m; ++i) {
        Move mv = examine(st, i, false);
        if (mv.kind == MoveKind::none) continue;
        if (best_idx < 0 || mv.gain > best.gain) {
          best_idx = i;
          best = std::move(mv);
        }
      }
      if (best_idx < 0) {
        bool repaired_any = false;
        for (int i = 0; i < m && traj.steps.size() < max_steps; ++i) {
          Move mv = examine(st, i, true);
          if (mv.kind == MoveKind::repair) {
            execute(i, std::move(mv));
            repaired_any = true;
          }
        }
        if (!repaired_any) {
          traj.converged = true;
          break;
        }
        continue;
      }
      execute(best_idx, std::move(best));
      continue;
    }

    Move move = examine(st, idx, true);
    execute(idx, std::move(move));

    if (since_change >= static_cast<std::size_t>(m) &&
        since_change % static_cast<std::size_t>(m) == 0) {
      if (is_stable()) {
        traj.converged = true;
        break;
      }
    }
  }

  traj.final_potential = st.potential;
  traj.final_payments = PaymentMatrix::empty(host);
  traj.final_payments.entries = st.payments;
  traj.final_built = realize_edges(host, st.present);
  return traj;
}

}  // namespace ncg
