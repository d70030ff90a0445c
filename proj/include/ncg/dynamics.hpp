#ifndef NCG_DYNAMICS_HPP
#define NCG_DYNAMICS_HPP

#include <cstdint>
#include <vector>

#include "ncg/equilibrium.hpp"
#include "ncg/game.hpp"

namespace ncg {

// Edge-scan order for the bidding dynamics. round_robin is the reproducible
// default; random(seed) drives convergence statistics; greedy picks the
// applicable move with the largest potential decrease.
struct DynamicsPolicy {
  enum class Kind { round_robin, random, greedy };
  Kind kind = Kind::round_robin;
  std::uint64_t seed = 0;

  static DynamicsPolicy round_robin() { return {Kind::round_robin, 0}; }
  static DynamicsPolicy random(std::uint64_t seed) { return {Kind::random, seed}; }
  static DynamicsPolicy greedy() { return {Kind::greedy, 0}; }
};

enum class StepAction { add, remove, none };

struct TrajectoryStep {
  Edge edge;
  StepAction action = StepAction::none;
  bool payments_reallocated = false;
  Cost potential;  // c(s) after the step
};

// Ordered record of one dynamics run. The potential strictly decreases at
// every add/remove step, so no realized edge set can repeat.
struct Trajectory {
  std::vector<TrajectoryStep> steps;
  bool converged = false;
  std::size_t mutation_count = 0;
  Cost initial_potential;
  Cost final_potential;
  PaymentMatrix final_payments;
  BuiltGraph final_built;
};

// Bidding dynamics for the cooperative game. Per examined host edge:
// an absent edge whose total valuation exceeds alpha is added with payments
// proportional to benefits; a present edge whose total removal loss is below
// alpha is removed; a present edge where some payer exceeds its loss gets a
// payment reallocation (potential-neutral, at most once per edge between
// mutations). Terminates when a full pass changes nothing, or at max_steps
// with the trajectory flagged non-converged.
Trajectory run_dynamics(const HostGraph& host, const PaymentMatrix& init, DynamicsPolicy policy,
                        std::size_t max_steps);

// Host-complete initial strategy: every host edge paid alpha/2 per endpoint.
PaymentMatrix host_complete_payments(const HostGraph& host);

}  // namespace ncg

#endif  // NCG_DYNAMICS_HPP
