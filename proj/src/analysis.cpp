#include "ncg/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace ncg {

namespace {

using u64 = std::uint64_t;
using i128 = __int128;

// Distance totals of one edge subset over <= 64 vertices, frontier-mask BFS.
void subset_totals_bitmask(int n, const std::vector<u64>& adj, std::int64_t* finite,
                           std::int64_t* unreachable) {
  std::int64_t fin = 0;
  std::int64_t unr = 0;
  const u64 all = n == 64 ? ~u64{0} : (u64{1} << n) - 1;
  for (int s = 0; s < n; ++s) {
    u64 visited = u64{1} << s;
    u64 frontier = visited;
    std::int64_t d = 0;
    while (frontier) {
      u64 next = 0;
      u64 f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj[v];
      }
      next &= ~visited;
      if (!next) break;
      ++d;
      fin += d * std::popcount(next);
      visited |= next;
      frontier = next;
    }
    unr += std::popcount(all & ~visited);
  }
  *finite = fin;
  *unreachable = unr;
}

std::vector<Edge> mask_edges(const HostGraph& host, unsigned mask) {
  std::vector<Edge> out;
  for (int j = 0; j < host.edge_count(); ++j) {
    if (mask & (1u << j)) out.push_back(host.edges[j]);
  }
  return out;
}

}  // namespace

OptimumResult social_optimum_exact(const HostGraph& host) {
  const int m = host.edge_count();
  if (m > 20) {
    throw std::runtime_error("social_optimum_exact: host has " + std::to_string(m) +
                             " edges, above the 2^20 enumeration cap; use the lower bound");
  }
  const int n = host.n;
  const unsigned limit = 1u << m;

  Cost best_cost;
  bool have_best = false;
  unsigned best_mask = 0;

  std::vector<u64> adj;
  if (n <= 64) adj.assign(n, 0);

  for (unsigned mask = 0; mask < limit; ++mask) {
    std::int64_t finite = 0;
    std::int64_t unreachable = 0;
    if (n <= 64) {
      for (int j = 0; j < m; ++j) {
        if (mask & (1u << j)) {
          adj[host.edges[j].u] |= u64{1} << host.edges[j].v;
          adj[host.edges[j].v] |= u64{1} << host.edges[j].u;
        }
      }
      subset_totals_bitmask(n, adj, &finite, &unreachable);
      for (int j = 0; j < m; ++j) {
        adj[host.edges[j].u] = 0;
        adj[host.edges[j].v] = 0;
      }
    } else {
      DistanceMatrix dist = all_pairs_distances(n, mask_edges(host, mask));
      finite = dist.total_finite_sum();
      unreachable = dist.total_unreachable_pairs();
    }
    Cost cost{unreachable,
              host.alpha * Rational(std::popcount(mask)) + Rational(finite)};
    if (!have_best || cost < best_cost) {
      best_cost = cost;
      best_mask = mask;
      have_best = true;
    } else if (cost == best_cost) {
      // Tie: prefer the lexicographically smallest edge list. Ascending edge
      // index equals the canonical edge order.
      auto cand = mask_edges(host, mask);
      auto cur = mask_edges(host, best_mask);
      if (std::lexicographical_compare(cand.begin(), cand.end(), cur.begin(), cur.end())) {
        best_mask = mask;
      }
    }
  }
  return OptimumResult{mask_edges(host, best_mask), best_cost};
}

Cost social_optimum_lower_bound(const HostGraph& host) {
  DistanceMatrix dist = all_pairs_distances(host);
  if (dist.total_unreachable_pairs() > 0) {
    throw std::invalid_argument("social_optimum_lower_bound requires a connected host");
  }
  return Cost::finite_value(host.alpha * Rational(host.n - 1) +
                            Rational(dist.total_finite_sum()));
}

Rational price_of_anarchy(const Cost& equilibrium_cost, const Cost& optimum_cost) {
  if (!equilibrium_cost.finite() || !optimum_cost.finite()) {
    throw std::invalid_argument("price of anarchy requires finite costs");
  }
  if (!(optimum_cost.value > Rational(0))) {
    throw std::invalid_argument("price of anarchy requires a positive optimum cost");
  }
  return equilibrium_cost.value / optimum_cost.value;
}

LowerBoundInstance generate_lower_bound_instance(int k, int l) {
  if (k < 2) throw std::invalid_argument("lower-bound instance requires k >= 2");
  if (l < 3) throw std::invalid_argument("lower-bound instance requires l >= 3");

  const int two_l = 2 * l;
  const std::int64_t n64 = static_cast<std::int64_t>(3 * k - 1) * l;
  if (n64 > 2'000'000) throw std::invalid_argument("lower-bound instance too large");
  const int n = static_cast<int>(n64);

  // Vertex layout: ids 0..2l-1 are the cycle vertices v_1..v_{2l}; the
  // interior vertices of the 2l parallel paths follow, then those of the l
  // chord paths.
  const int base_p = two_l;
  const int base_q = two_l + two_l * (k - 1);

  std::vector<std::pair<int, int>> edge_list;
  edge_list.reserve(static_cast<std::size_t>(3 * k + 2) * l);

  std::vector<std::pair<int, int>> cycle_edges;
  // chains[path] = ordered edge endpoints of that path; paths 0..2l-1 are
  // the parallel paths, 2l..3l-1 the chords.
  std::vector<std::vector<std::pair<int, int>>> chains(3 * l);

  for (int i = 1; i <= two_l; ++i) {
    int a = i - 1;
    int b = i % two_l;
    cycle_edges.emplace_back(a, b);
    edge_list.emplace_back(a, b);
  }
  auto add_chain = [&](int slot, int a, int b, int base, int ordinal) {
    auto& chain = chains[slot];
    int prev = a;
    for (int t = 0; t < k - 1; ++t) {
      int w = base + ordinal * (k - 1) + t;
      chain.emplace_back(prev, w);
      prev = w;
    }
    chain.emplace_back(prev, b);
    for (auto& e : chain) edge_list.push_back(e);
  };
  for (int i = 1; i <= two_l; ++i) {
    add_chain(i - 1, i - 1, i % two_l, base_p, i - 1);
  }
  for (int i = 1; i <= l; ++i) {
    add_chain(two_l + i - 1, 2 * i - 1, (2 * i + 1) % two_l, base_q, i - 1);
  }

  Rational alpha = Rational(12) * Rational(n) * Rational(k) * Rational(k);
  LowerBoundInstance inst;
  inst.k = k;
  inst.l = l;
  inst.suggested_alpha = alpha;
  inst.host = build_host_graph(n, edge_list, alpha);
  for (int i = 0; i < two_l; ++i) inst.cycle_vertices.push_back(i);

  const int mid = k / 2;  // removed interior edge of a pruned path
  auto chain_edge_idx = [&](int slot, int t) {
    auto [a, b] = chains[slot][t];
    int idx = inst.host.edge_index(a, b);
    if (idx < 0) throw std::logic_error("lower-bound chain edge missing from host");
    return idx;
  };

  inst.g1_present.assign(inst.host.edges.size(), 1);
  for (int slot = 0; slot < 3 * l; ++slot) {
    inst.g1_present[chain_edge_idx(slot, mid)] = 0;
  }

  inst.g2_present.assign(inst.host.edges.size(), 1);
  for (auto [a, b] : cycle_edges) {
    inst.g2_present[inst.host.edge_index(a, b)] = 0;
  }
  for (int i = 2; i <= two_l; i += 2) {
    inst.g2_present[chain_edge_idx(i - 1, mid)] = 0;  // every even parallel path
  }

  inst.g2_payments = PaymentMatrix::empty(inst.host);
  for (std::size_t idx = 0; idx < inst.host.edges.size(); ++idx) {
    if (inst.g2_present[idx]) {
      inst.g2_payments.entries[idx] = {{inst.host.edges[idx].u, alpha}};
    }
  }
  return inst;
}

int ceil_radius(Rational value) {
  std::int64_t c = value.ceil();
  return c < 0 ? 0 : static_cast<int>(c);
}

int doubling_radius_sqrt(int k, Rational alpha, int n) {
  // Smallest t >= 0 with t^2 * n * den >= 16 * num, then r = 2k + t.
  if (alpha.is_negative()) throw std::invalid_argument("alpha must be nonnegative");
  i128 target = i128(16) * alpha.num();
  i128 scale = i128(n) * alpha.den();
  std::int64_t t = static_cast<std::int64_t>(
      std::sqrt(16.0 * alpha.to_double() / static_cast<double>(n)));
  if (t < 0) t = 0;
  while (t > 0 && i128(t - 1) * (t - 1) * scale >= target) --t;
  while (i128(t) * t * scale < target) ++t;
  return 2 * k + static_cast<int>(t);
}

std::vector<LemmaCheckReport> check_doubling_lemma(const BuiltGraph& built, Rational alpha,
                                                   Model model) {
  const int n = built.n();
  const DistanceMatrix& dist = built.dist;
  const int diam = dist.diameter();

  LemmaCheckReport linear;
  linear.lemma = "doubling_radius";
  LemmaCheckReport sqrt_report;
  sqrt_report.lemma = "doubling_radius_sqrt";
  const bool cooperative = model == Model::cooperative;

  const int linear_slack =
      n > 0 ? ceil_radius(Rational(2) * alpha / Rational(n)) : 0;

  std::vector<std::int64_t> histogram(static_cast<std::size_t>(diam) + 2, 0);
  for (int u = 0; u < n; ++u) {
    std::fill(histogram.begin(), histogram.end(), 0);
    const std::int32_t* row = dist.row(u);
    int ecc = 0;
    int reached = 0;
    for (int v = 0; v < n; ++v) {
      if (row[v] == DistanceMatrix::kUnreachable) continue;
      ++reached;
      ++histogram[row[v]];
      ecc = std::max(ecc, static_cast<int>(row[v]));
    }
    const int covers = reached == n ? ecc : -1;  // -1: never reaches all of V

    std::int64_t cum = 0;
    for (int k = 0; k <= diam; ++k) {
      cum += histogram[k];
      if (2 * cum <= n) continue;  // hypothesis |N_k(u)| > n/2

      ++linear.checked;
      int bound1 = 2 * k + linear_slack;
      if (covers < 0 || covers > bound1) {
        linear.witnesses.push_back(
            LemmaWitness{u, k, Rational(bound1), Rational(covers)});
      }
      if (cooperative) {
        ++sqrt_report.checked;
        int bound2 = doubling_radius_sqrt(k, alpha, n);
        if (covers < 0 || covers > bound2) {
          sqrt_report.witnesses.push_back(
              LemmaWitness{u, k, Rational(bound2), Rational(covers)});
        }
      }
    }
  }
  linear.pass = linear.witnesses.empty();
  sqrt_report.pass = sqrt_report.witnesses.empty();

  std::vector<LemmaCheckReport> reports;
  reports.push_back(std::move(linear));
  if (cooperative) reports.push_back(std::move(sqrt_report));
  return reports;
}

namespace {

// Smallest c >= 0 with (c/1024)^3 >= x; c/1024 is a certified upper bound
// on x^(1/3).
std::int64_t cbrt_upper_scaled(Rational x) {
  if (x.is_negative()) throw std::invalid_argument("cube root of negative value");
  i128 num_scaled = i128(x.num()) << 30;
  std::int64_t c = static_cast<std::int64_t>(std::cbrt(x.to_double()) * 1024.0) + 2;
  if (c < 0) c = 0;
  auto cube_ok = [&](std::int64_t t) { return i128(t) * t * t * x.den() >= num_scaled; };
  while (c > 0 && cube_ok(c - 1)) --c;
  while (!cube_ok(c)) ++c;
  return c;
}

std::int64_t sqrt_upper_scaled(Rational x) {
  if (x.is_negative()) throw std::invalid_argument("square root of negative value");
  i128 num_scaled = i128(x.num()) << 20;
  std::int64_t c = static_cast<std::int64_t>(std::sqrt(x.to_double()) * 1024.0) + 2;
  if (c < 0) c = 0;
  auto sq_ok = [&](std::int64_t t) { return i128(t) * t * x.den() >= num_scaled; };
  while (c > 0 && sq_ok(c - 1)) --c;
  while (!sq_ok(c)) ++c;
  return c;
}

}  // namespace

LemmaCheckReport check_distance_stretch(const HostGraph& host, const BuiltGraph& built,
                                        Rational alpha) {
  LemmaCheckReport report;
  report.lemma = "distance_stretch";
  const int n = built.n();
  DistanceMatrix host_dist = all_pairs_distances(host);

  Rational cbrt_alpha(cbrt_upper_scaled(alpha), 1024);
  const int host_diam = host_dist.diameter();
  // Integer thresholds per host distance: d_s passes iff
  // d_s <= floor(3d + 7*cbrt(alpha) + 5*cbrt(alpha)*d^(2/3)).
  std::vector<std::int64_t> threshold(static_cast<std::size_t>(host_diam) + 1, 0);
  for (int d = 0; d <= host_diam; ++d) {
    Rational d23(cbrt_upper_scaled(Rational(static_cast<std::int64_t>(d) * d)), 1024);
    Rational bound = Rational(3 * d) + Rational(7) * cbrt_alpha +
                     Rational(5) * cbrt_alpha * d23;
    threshold[d] = bound.floor();
  }

  for (int u = 0; u < n; ++u) {
    const std::int32_t* hrow = host_dist.row(u);
    const std::int32_t* brow = built.dist.row(u);
    for (int v = u + 1; v < n; ++v) {
      if (hrow[v] == DistanceMatrix::kUnreachable) continue;  // bound is vacuous
      ++report.checked;
      std::int64_t limit = threshold[hrow[v]];
      if (brow[v] == DistanceMatrix::kUnreachable || brow[v] > limit) {
        report.witnesses.push_back(LemmaWitness{
            u, hrow[v], Rational(limit),
            Rational(brow[v] == DistanceMatrix::kUnreachable ? -1 : brow[v])});
      }
    }
  }
  report.pass = report.witnesses.empty();
  return report;
}

LemmaCheckReport check_distance_stretch_unilateral(const HostGraph& host,
                                                   const BuiltGraph& built, Rational alpha,
                                                   Rational c) {
  LemmaCheckReport report;
  report.lemma = "distance_stretch_unilateral";
  const int n = built.n();
  DistanceMatrix host_dist = all_pairs_distances(host);

  Rational sqrt_alpha(sqrt_upper_scaled(alpha), 1024);
  const int host_diam = host_dist.diameter();
  std::vector<std::int64_t> threshold(static_cast<std::size_t>(host_diam) + 1, 0);
  for (int d = 0; d <= host_diam; ++d) {
    Rational sqrt_d(sqrt_upper_scaled(Rational(d)), 1024);
    threshold[d] = (c * (Rational(d) + sqrt_alpha * sqrt_d)).floor();
  }

  for (int u = 0; u < n; ++u) {
    const std::int32_t* hrow = host_dist.row(u);
    const std::int32_t* brow = built.dist.row(u);
    for (int v = u + 1; v < n; ++v) {
      if (hrow[v] == DistanceMatrix::kUnreachable) continue;
      ++report.checked;
      std::int64_t limit = threshold[hrow[v]];
      if (brow[v] == DistanceMatrix::kUnreachable || brow[v] > limit) {
        report.witnesses.push_back(LemmaWitness{
            u, hrow[v], Rational(limit),
            Rational(brow[v] == DistanceMatrix::kUnreachable ? -1 : brow[v])});
      }
    }
  }
  report.pass = report.witnesses.empty();
  return report;
}

LemmaCheckReport check_cost_bound_unilateral(const BuiltGraph& built,
                                             const UnilateralStrategy& strategy,
                                             Rational alpha) {
  LemmaCheckReport report;
  report.lemma = "equilibrium_cost_bound";
  report.checked = 1;

  Cost cost = social_cost(built, strategy, Model::unilateral).total;
  Rational bound = alpha * Rational(built.n()) +
                   Rational(2) * Rational(built.dist.total_finite_sum());
  bool ok = cost.finite() && cost.value <= bound;
  if (!ok) {
    report.witnesses.push_back(
        LemmaWitness{0, 0, bound, cost.finite() ? cost.value : Rational(-1)});
  }
  report.pass = report.witnesses.empty();
  return report;
}

std::vector<int> greedy_center_points(const DistanceMatrix& dist, int u, int k) {
  if (u < 0 || u >= dist.size()) throw std::invalid_argument("vertex out of range");
  if (k < 0) throw std::invalid_argument("radius must be nonnegative");

  const int target = 4 * k + 3;
  std::vector<int> shell;
  const std::int32_t* row = dist.row(u);
  for (int v = 0; v < dist.size(); ++v) {
    if (row[v] == target) shell.push_back(v);
  }

  std::vector<int> centers;
  std::vector<char> marked(shell.size(), 0);
  for (std::size_t zi = 0; zi < shell.size(); ++zi) {
    if (marked[zi]) continue;
    int z = shell[zi];
    centers.push_back(z);
    for (std::size_t wi = 0; wi < shell.size(); ++wi) {
      if (marked[wi]) continue;
      std::int32_t d = dist(z, shell[wi]);
      if (d != DistanceMatrix::kUnreachable && d <= 2 * k) marked[wi] = 1;
    }
  }
  return centers;
}

}  // namespace ncg
