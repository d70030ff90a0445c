#ifndef NCG_IO_HPP
#define NCG_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncg/analysis.hpp"
#include "ncg/dynamics.hpp"

namespace ncg {

// Edge-list text format: optional '#' comment lines, then "n m", then m
// lines "u v" (whitespace-separated, 0-indexed).
struct EdgeListData {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

EdgeListData read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, int n, const std::vector<Edge>& edges,
                     const std::vector<std::string>& comment_lines = {});

// Strategy blocks: "player i: j1 j2 ..." / "edge u v: i1=p1 i2=p2 ...".
// Both round-trip losslessly (payments as exact rationals).
std::string format_unilateral(const UnilateralStrategy& s);
UnilateralStrategy parse_unilateral(std::istream& in, int n);

std::string format_payments(const HostGraph& host, const PaymentMatrix& p);
PaymentMatrix parse_payments(std::istream& in, const HostGraph& host);

// One line per step: "step edge(u,v) action potential_num/potential_den".
// The rational part of the potential is printed; connectivity progress is
// visible in the Trajectory object itself.
void write_trajectory(std::ostream& out, const Trajectory& traj);

nlohmann::ordered_json lemma_report_json(const LemmaCheckReport& report);
nlohmann::ordered_json equilibrium_report_json(const EquilibriumReport& report);

// One sweep output row; columns are pinned by the versioned CSV header.
struct SweepRow {
  Rational alpha;
  int n = 0;
  int edges_realized = 0;
  int diameter = 0;
  Cost social_cost;
  std::string optimum_basis = "-";  // "exact" | "lower_bound" | "-"
  bool has_poa = false;
  Rational poa;
  bool converged = false;
  std::uint64_t steps = 0;
  std::string lemma_verdicts = "-";
};

extern const char* const kCsvVersionLine;
extern const char* const kCsvHeader;

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace ncg

#endif  // NCG_IO_HPP
