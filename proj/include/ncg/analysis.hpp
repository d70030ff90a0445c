#ifndef NCG_ANALYSIS_HPP
#define NCG_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ncg/equilibrium.hpp"
#include "ncg/game.hpp"

namespace ncg {

struct OptimumResult {
  std::vector<Edge> edges;
  Cost cost;
};

// Globally minimal social cost over all 2^|E| edge subsets (host edge count
// capped at 20). Disconnected subsets lose automatically under the
// connectivity-lexicographic cost order; exact cost ties break toward the
// lexicographically smallest edge set.
OptimumResult social_optimum_exact(const HostGraph& host);

// alpha*(n-1) + sum of ordered host distances; every spanning connected
// subgraph needs at least n-1 edges and cannot beat host distances, so this
// never exceeds the exact optimum. Requires a connected host.
Cost social_optimum_lower_bound(const HostGraph& host);

// Exact ratio of two finite positive costs.
Rational price_of_anarchy(const Cost& equilibrium_cost, const Cost& optimum_cost);

// Cycle-of-paths host family with its two reference unicyclic subgraphs:
// g1 keeps the short base cycle (cheap), g2 keeps the long detour cycle and
// is a collaborative equilibrium at the suggested alpha = 12*n*k^2.
struct LowerBoundInstance {
  int k = 0;
  int l = 0;
  HostGraph host;  // alpha set to the suggested value
  Rational suggested_alpha;
  std::vector<int> cycle_vertices;        // ids of v_1..v_{2l}
  std::vector<char> g1_present;           // by host edge index
  std::vector<char> g2_present;
  PaymentMatrix g2_payments;              // each retained edge bought by its lower endpoint
};

// Requires k >= 2, l >= 3. Produces (3k-1)*l vertices and (3k+2)*l edges;
// both subgraphs are connected and unicyclic with exactly n edges.
LowerBoundInstance generate_lower_bound_instance(int k, int l);

struct LemmaWitness {
  int u = 0;
  int k = 0;
  Rational bound;
  Rational observed;  // -1 encodes "never reaches the full vertex set"
};

struct LemmaCheckReport {
  std::string lemma;
  std::vector<LemmaWitness> witnesses;  // failing witnesses only
  std::int64_t checked = 0;
  bool pass = true;
};

// Neighborhood doubling on a verified equilibrium graph: whenever
// |N_k(u)| > n/2, the ball of radius ceil(2k + 2*alpha/n) must cover all of
// V (both models), and radius ceil(2k + 4*sqrt(alpha/n)) as well in the
// cooperative model. Radii round up, which only weakens the assertion.
// One report per radius formula.
std::vector<LemmaCheckReport> check_doubling_lemma(const BuiltGraph& built, Rational alpha,
                                                   Model model);

// Distance stretch of a cooperative equilibrium against its host:
// d_s(u,v) <= 3*d_G(u,v) + 7*alpha^(1/3) + 5*alpha^(1/3)*d_G(u,v)^(2/3),
// with cube roots certified from above by exact integer arithmetic.
LemmaCheckReport check_distance_stretch(const HostGraph& host, const BuiltGraph& built,
                                        Rational alpha);

// Informational unilateral analogue with a configurable constant c:
// d_s <= c*(d_G + sqrt(alpha)*sqrt(d_G)); reported, never gating.
LemmaCheckReport check_distance_stretch_unilateral(const HostGraph& host,
                                                   const BuiltGraph& built, Rational alpha,
                                                   Rational c);

// Total-cost bound for verified unilateral equilibria:
// c(s) <= alpha*n + 2 * sum of ordered-pair distances in G_s.
LemmaCheckReport check_cost_bound_unilateral(const BuiltGraph& built,
                                             const UnilateralStrategy& strategy, Rational alpha);

// Greedy maximal 2k-separated subset of S = {v : d(u,v) = 4k+3}, scanning S
// in ascending vertex id; every member of S ends within 2k of some center.
std::vector<int> greedy_center_points(const DistanceMatrix& dist, int u, int k);

// Smallest integer r with r >= 2k + 4*sqrt(alpha/n), by exact arithmetic.
int doubling_radius_sqrt(int k, Rational alpha, int n);

// Smallest integer r with r >= value (exact rational ceiling).
int ceil_radius(Rational value);

}  // namespace ncg

#endif  // NCG_ANALYSIS_HPP
