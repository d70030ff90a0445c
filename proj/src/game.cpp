#include "ncg/game.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ncg {

namespace {

std::string edge_str(int a, int b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

void check_payments_shape(const HostGraph& host, const PaymentMatrix& p) {
  if (p.entries.size() != host.edges.size()) {
    throw std::invalid_argument("payment matrix not aligned with host edge list");
  }
  for (std::size_t i = 0; i < p.entries.size(); ++i) {
    for (const auto& [player, amount] : p.entries[i]) {
      if (player < 0 || player >= host.n) {
        throw std::invalid_argument("payment by out-of-range player " + std::to_string(player));
      }
      if (amount.is_negative()) {
        throw std::invalid_argument("negative payment on edge " +
                                    edge_str(host.edges[i].u, host.edges[i].v));
      }
    }
  }
}

}  // namespace

Rational PaymentMatrix::paid(int edge_idx, int player) const {
  for (const auto& [p, amount] : entries[edge_idx]) {
    if (p == player) return amount;
  }
  return Rational(0);
}

void PaymentMatrix::set(int edge_idx, int player, Rational amount) {
  auto& list = entries[edge_idx];
  auto it = std::find_if(list.begin(), list.end(),
                         [player](const auto& e) { return e.first == player; });
  if (amount.is_zero()) {
    if (it != list.end()) list.erase(it);
    return;
  }
  if (it != list.end()) {
    it->second = amount;
  } else {
    list.emplace_back(player, amount);
    std::sort(list.begin(), list.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
}

BuiltGraph realize_network(const HostGraph& host, const JointStrategy& strategy) {
  std::vector<char> present(host.edges.size(), 0);

  if (const auto* uni = std::get_if<UnilateralStrategy>(&strategy)) {
    if (static_cast<int>(uni->buys.size()) != host.n) {
      throw std::invalid_argument("strategy player count does not match host");
    }
    for (int i = 0; i < host.n; ++i) {
      for (int j : uni->buys[i]) {
        if (j == i) throw std::invalid_argument("player buys self-edge " + edge_str(i, j));
        int idx = j >= 0 && j < host.n ? host.edge_index(i, j) : -1;
        if (idx < 0) {
          throw std::invalid_argument("strategy buys non-host edge " + edge_str(i, j));
        }
        present[idx] = 1;
      }
    }
  } else {
    const auto& pay = std::get<PaymentMatrix>(strategy);
    check_payments_shape(host, pay);
    for (std::size_t idx = 0; idx < host.edges.size(); ++idx) {
      if (pay.edge_sum(static_cast<int>(idx)) >= host.alpha) present[idx] = 1;
    }
  }
  return realize_edges(host, present);
}

BuiltGraph realize_edges(const HostGraph& host, const std::vector<char>& present) {
  if (present.size() != host.edges.size()) {
    throw std::invalid_argument("presence bitmap not aligned with host edge list");
  }
  BuiltGraph b;
  b.host = host;
  b.present = present;
  for (std::size_t i = 0; i < present.size(); ++i) {
    if (present[i]) b.edges.push_back(host.edges[i]);
  }
  b.dist.recompute(host.n, adjacency_from_edges(host.n, b.edges));
  return b;
}

PaymentMatrix normalize_payments(const HostGraph& host, const PaymentMatrix& payments) {
  check_payments_shape(host, payments);
  PaymentMatrix out = payments;
  for (std::size_t idx = 0; idx < out.entries.size(); ++idx) {
    Rational sum = out.edge_sum(static_cast<int>(idx));
    if (sum > host.alpha) {
      Rational scale = host.alpha / sum;
      for (auto& [player, amount] : out.entries[idx]) amount *= scale;
    }
  }
  return out;
}

PlayerCost player_cost(const BuiltGraph& built, const JointStrategy& strategy, int player,
                       Model model) {
  if (player < 0 || player >= built.n()) throw std::invalid_argument("player out of range");
  PlayerCost c;
  c.usage_finite = built.dist.finite_sum(player);
  c.usage_unreachable = built.dist.unreachable_count(player);

  if (model == Model::unilateral) {
    const auto& uni = std::get<UnilateralStrategy>(strategy);
    c.creation = built.host.alpha * Rational(static_cast<std::int64_t>(uni.buys[player].size()));
  } else {
    const auto& pay = std::get<PaymentMatrix>(strategy);
    // Costs are measured on the normalized payments; only realized edges bill.
    for (std::size_t idx = 0; idx < built.present.size(); ++idx) {
      if (!built.present[idx]) continue;
      Rational amount = pay.paid(static_cast<int>(idx), player);
      if (amount.is_zero()) continue;
      Rational sum = pay.edge_sum(static_cast<int>(idx));
      if (sum > built.host.alpha) amount = amount * built.host.alpha / sum;
      c.creation += amount;
    }
  }
  return c;
}

CostBreakdown social_cost(const BuiltGraph& built, const JointStrategy& strategy, Model model) {
  CostBreakdown total;
  total.players.reserve(built.n());
  for (int i = 0; i < built.n(); ++i) {
    total.players.push_back(player_cost(built, strategy, i, model));
  }
  for (const PlayerCost& pc : total.players) {
    total.usage_finite_total += pc.usage_finite;
    total.usage_unreachable_total += pc.usage_unreachable;
  }
  if (model == Model::unilateral) {
    for (const PlayerCost& pc : total.players) total.creation_total += pc.creation;
  } else {
    total.creation_total =
        built.host.alpha * Rational(static_cast<std::int64_t>(built.edges.size()));
  }
  total.total = Cost{total.usage_unreachable_total,
                     total.creation_total + Rational(total.usage_finite_total)};
  return total;
}

Cost edge_set_cost(const HostGraph& host, const DistanceMatrix& dist, int edge_count) {
  return Cost{dist.total_unreachable_pairs(),
              host.alpha * Rational(edge_count) + Rational(dist.total_finite_sum())};
}

}  // namespace ncg
