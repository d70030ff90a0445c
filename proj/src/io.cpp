#include "ncg/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ncg {

namespace {

// Next non-empty, non-comment line.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

EdgeListData read_edge_list(std::istream& in) {
  EdgeListData data;
  std::string line;
  if (!next_content_line(in, line)) throw std::invalid_argument("edge list: missing header line");
  std::istringstream header(line);
  std::size_t m = 0;
  if (!(header >> data.n >> m)) throw std::invalid_argument("edge list: bad header line: " + line);
  data.edges.reserve(m);
  while (data.edges.size() < m) {
    if (!next_content_line(in, line)) {
      throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(data.edges.size()));
    }
    std::istringstream row(line);
    int u = 0;
    int v = 0;
    while (row >> u >> v) {
      data.edges.emplace_back(u, v);
    }
  }
  return data;
}

void write_edge_list(std::ostream& out, int n, const std::vector<Edge>& edges,
                     const std::vector<std::string>& comment_lines) {
  for (const std::string& c : comment_lines) out << "# " << c << "\n";
  out << n << " " << edges.size() << "\n";
  for (const Edge& e : edges) out << e.u << " " << e.v << "\n";
}

std::string format_unilateral(const UnilateralStrategy& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.buys.size(); ++i) {
    out << "player " << i << ":";
    for (int j : s.buys[i]) out << " " << j;
    out << "\n";
  }
  return out.str();
}

UnilateralStrategy parse_unilateral(std::istream& in, int n) {
  UnilateralStrategy s = UnilateralStrategy::empty(n);
  std::string line;
  while (next_content_line(in, line)) {
    std::istringstream row(line);
    std::string tag;
    int player = -1;
    if (!(row >> tag >> player) || tag != "player") {
      throw std::invalid_argument("strategy: expected 'player i: ...', got: " + line);
    }
    if (player < 0 || player >= n) {
      throw std::invalid_argument("strategy: player out of range: " + std::to_string(player));
    }
    char colon = 0;
    row >> colon;
    if (colon != ':') throw std::invalid_argument("strategy: missing ':' in line: " + line);
    int j = 0;
    while (row >> j) s.buys[player].push_back(j);
  }
  for (auto& buys : s.buys) std::sort(buys.begin(), buys.end());
  return s;
}

std::string format_payments(const HostGraph& host, const PaymentMatrix& p) {
  std::ostringstream out;
  for (std::size_t idx = 0; idx < p.entries.size(); ++idx) {
    if (p.entries[idx].empty()) continue;
    out << "edge " << host.edges[idx].u << " " << host.edges[idx].v << ":";
    for (const auto& [player, amount] : p.entries[idx]) {
      out << " " << player << "=" << amount.to_string();
    }
    out << "\n";
  }
  return out.str();
}

PaymentMatrix parse_payments(std::istream& in, const HostGraph& host) {
  PaymentMatrix p = PaymentMatrix::empty(host);
  std::string line;
  while (next_content_line(in, line)) {
    std::istringstream row(line);
    std::string tag;
    int u = 0;
    int v = 0;
    if (!(row >> tag >> u >> v) || tag != "edge") {
      throw std::invalid_argument("payments: expected 'edge u v: ...', got: " + line);
    }
    char colon = 0;
    row >> colon;
    if (colon != ':') throw std::invalid_argument("payments: missing ':' in line: " + line);
    int idx = host.edge_index(u, v);
    if (idx < 0) {
      throw std::invalid_argument("payments: not a host edge: {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}");
    }
    std::string entry;
    while (row >> entry) {
      auto eq = entry.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("payments: expected player=amount, got: " + entry);
      }
      int player = std::stoi(entry.substr(0, eq));
      Rational amount = Rational::parse(entry.substr(eq + 1));
      if (amount.is_negative()) throw std::invalid_argument("payments: negative amount: " + entry);
      if (!amount.is_zero()) p.set(idx, player, amount);
    }
  }
  return p;
}

void write_trajectory(std::ostream& out, const Trajectory& traj) {
  for (std::size_t i = 0; i < traj.steps.size(); ++i) {
    const TrajectoryStep& s = traj.steps[i];
    const char* action = s.action == StepAction::add      ? "add"
                         : s.action == StepAction::remove ? "remove"
                                                          : "none";
    out << i << " (" << s.edge.u << "," << s.edge.v << ") " << action << " "
        << s.potential.value.num() << "/" << s.potential.value.den() << "\n";
  }
}

nlohmann::ordered_json lemma_report_json(const LemmaCheckReport& report) {
  nlohmann::ordered_json j;
  j["lemma"] = report.lemma;
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const LemmaWitness& w : report.witnesses) {
    j["witnesses"].push_back({{"u", w.u},
                              {"k", w.k},
                              {"bound", w.bound.to_string()},
                              {"observed", w.observed.to_string()}});
  }
  j["verdict"] = report.pass ? "pass" : "fail";
  j["checked"] = report.checked;
  return j;
}

nlohmann::ordered_json equilibrium_report_json(const EquilibriumReport& report) {
  nlohmann::ordered_json j;
  j["concept"] = report.verdict_label;
  j["verdict"] = report.pass ? "pass" : "fail";
  j["violations"] = nlohmann::ordered_json::array();
  for (const Violation& v : report.violations) {
    nlohmann::ordered_json vj;
    vj["kind"] = v.kind;
    if (v.edge.u >= 0) vj["edge"] = {v.edge.u, v.edge.v};
    vj["players"] = v.players;
    vj["gain"] = v.gain.to_string();
    vj["detail"] = v.detail;
    j["violations"].push_back(std::move(vj));
  }
  return j;
}

const char* const kCsvVersionLine = "# ncg sweep csv v1";
const char* const kCsvHeader =
    "alpha_num,alpha_den,n,edges_realized,diameter,social_cost_num,social_cost_den,"
    "optimum_basis,poa_num,poa_den,converged,steps,lemma_verdicts";

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kCsvVersionLine << "\n" << kCsvHeader << "\n";
  for (const SweepRow& r : rows) {
    out << r.alpha.num() << "," << r.alpha.den() << "," << r.n << "," << r.edges_realized << ","
        << r.diameter << "," << r.social_cost.value.num() << "," << r.social_cost.value.den()
        << "," << r.optimum_basis << ",";
    if (r.has_poa) {
      out << r.poa.num() << "," << r.poa.den();
    } else {
      out << "-,-";
    }
    out << "," << (r.converged ? 1 : 0) << "," << r.steps << "," << r.lemma_verdicts << "\n";
  }
}

}  // namespace ncg
