#ifndef NCG_EQUILIBRIUM_HPP
#define NCG_EQUILIBRIUM_HPP

#include <string>
#include <vector>

#include "ncg/game.hpp"

namespace ncg {

// Per-player valuation of one host edge: usage-cost decrease if the edge
// were added (absent edge), or increase if it were removed (present edge).
struct EdgeValuation {
  Edge edge;
  bool present = false;
  std::vector<Cost> per_player;
  Cost total;
};

// Exact deltas against the distances of G_s with the edge toggled.
EdgeValuation edge_valuations(const BuiltGraph& built, Edge e);

// Sum-only fast path for an absent edge (per-pair improvement formula over
// the cached distance matrix; no per-player breakdown).
Cost addition_benefit_total(const BuiltGraph& built, Edge e);

// Same computation against a bare distance matrix; either output may be null.
// Used by the dynamics loop, which owns its own incremental state.
void addition_benefits_on(const DistanceMatrix& dist, Edge e, std::vector<Cost>* per_player,
                          Cost* total);

// Loss a single player incurs if a present edge is removed.
Cost removal_loss_for(const BuiltGraph& built, Edge e, int player);

struct Violation {
  std::string kind;
  Edge edge{-1, -1};
  std::vector<int> players;  // deviating player or coalition
  Cost gain;                 // strict improvement for the deviators
  std::string detail;
};

enum class VerifyKind { collaborative, nash_exact, nash_local };

struct EquilibriumReport {
  VerifyKind kind = VerifyKind::collaborative;
  bool pass = false;
  std::vector<Violation> violations;
  // "collaborative equilibrium", "Nash equilibrium", "link-stable"
  std::string verdict_label;
};

// Collaborative equilibrium check. Payments are expected normalized; edges
// whose sum is outside {0, alpha} are reported as structural violations
// (never thrown). Pass iff
//   (a) every absent host edge has total addition benefit <= alpha, and
//   (b) every present edge has payment sum exactly alpha and every payer's
//       contribution at most its removal loss.
EquilibriumReport verify_collaborative(const HostGraph& host, const PaymentMatrix& payments);

enum class NashMode { exact, local };

// Exact mode enumerates every alternative strategy of every player
// (requires max host degree <= 16); local mode checks single-edge
// add/drop/swap deviations only and labels the verdict "link-stable".
EquilibriumReport verify_unilateral_nash(const HostGraph& host, const UnilateralStrategy& s,
                                         NashMode mode);

// Cost-minimizing neighbor set for one player, holding the others fixed.
// Ties break toward fewer edges, then the lexicographically smallest set.
std::vector<int> best_response(const HostGraph& host, const UnilateralStrategy& s, int player);

}  // namespace ncg

#endif  // NCG_EQUILIBRIUM_HPP
