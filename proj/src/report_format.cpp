#include <sstream>

#include "ramsey/proof_engine.hpp"

namespace ramsey {

namespace {

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out.empty() ? "-" : out;
}

std::string join_edges(const std::vector<Edge>& es) {
  std::string out;
  for (std::size_t i = 0; i < es.size(); ++i) out += (i ? " " : "") + std::to_string(es[i].u) + "-" + std::to_string(es[i].v);
  return out.empty() ? "-" : out;
}

void write_checks(std::ostream& out, std::string_view tag, const std::vector<NamedCheck>& checks) {
  for (const NamedCheck& c : checks) {
    out << tag << ' ' << c.name << ' ' << (c.holds ? "PASS" : "FAIL");
    if (!c.detail.empty()) out << ' ' << c.detail;
    out << '\n';
  }
}

}  // namespace

std::string format_witness(const StructureWitness& w) {
  std::ostringstream out;
  out << "witness " << to_string(w.kind) << " colour " << w.color << '\n';
  out << "component " << w.component.size() << ' ' << join(w.component) << '\n';
  if (w.matching) out << "matching " << w.matching->size() << ' ' << join_edges(w.matching->edges) << '\n';
  if (w.cycle) out << "cycle " << w.cycle->length() << ' ' << join(w.cycle->vertices) << '\n';
  if (w.odd_cycle) out << "odd_cycle " << w.odd_cycle->length() << ' ' << join(w.odd_cycle->vertices) << '\n';
  return out.str();
}

std::string format_trace(const Lemma4Trace& t) {
  std::ostringstream out;
  const PkParameters& p = t.params;
  out << "lemma4 verdict " << to_string(t.verdict) << '\n';
  out << "param k " << p.k << '\n'
      << "param n " << p.n << '\n'
      << "param c " << to_string(p.c) << '\n'
      << "param epsilon " << to_string(p.epsilon) << '\n'
      << "param delta " << to_string(p.delta) << '\n'
      << "param N " << p.N << '\n';
  out << "host order " << t.host_order << " edges " << t.host_edges << '\n';
  write_checks(out, "precondition", t.preconditions);
  for (const PeelStep& s : t.peel_log) out << "peel " << s.vertex << ' ' << s.degree << '\n';
  out << "working order " << t.working_order << " edges " << t.working_edges << '\n';
  for (std::size_t i = 0; i < t.decompositions.size(); ++i) {
    const FLDecomposition& d = t.decompositions[i];
    out << "decomposition colour " << i + 1 << " V1 " << d.v1.size() << " V2 " << d.v2.size() << " V3 " << d.v3.size()
        << " hypothesis " << (d.hypothesis_holds ? 1 : 0) << " sparse_edges " << d.sparse_edge_count << " sparse_bound "
        << to_string(d.sparse_bound) << '\n';
  }
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    out << "cell ";
    for (const int j : t.cells[i].signature) out << j;
    out << ' ' << t.cells[i].members.size() << (i == t.chosen_cell ? " chosen" : "") << '\n';
  }
  out << "x size " << t.x_size << " members " << join(t.cells[t.chosen_cell].members) << '\n';
  for (std::size_t i = 0; i < t.color_edges_in_x.size(); ++i) {
    out << "x colour " << i + 1 << " edges " << t.color_edges_in_x[i] << " bound " << to_string(t.per_color_bound) << '\n';
  }
  out << "x edges " << t.edges_in_x << '\n';
  out << "bound eq2 " << to_string(t.eq2_bound) << '\n'
      << "bound eq3 " << to_string(t.eq3_bound) << '\n'
      << "chain slack " << to_string(t.slack) << '\n'
      << "chain relaxed " << to_string(t.relaxed_slack) << '\n'
      << "chain worst " << to_string(t.worst_slack) << '\n'
      << "chain epsilon_term " << to_string(t.epsilon_term) << '\n'
      << "interval lower " << to_string(t.lower_end) << " upper " << to_string(t.upper_end) << '\n';
  write_checks(out, "check", t.checks);
  return out.str();
}

std::string format_inequality_report(const InequalityReport& r) {
  std::ostringstream out;
  out << "inequality k " << r.k << " n " << r.n << " epsilon " << to_string(r.epsilon) << '\n'
      << "delta " << to_string(r.delta) << '\n'
      << "N " << r.N.str() << '\n'
      << "kn " << r.kn.str() << '\n'
      << "x_min " << r.x_min.str() << '\n'
      << "x_pigeon " << r.x_pigeon.str() << '\n'
      << "n_ceiling " << r.n_ceiling.str() << '\n'
      << "slack " << to_string(r.slack) << '\n'
      << "relaxed " << to_string(r.relaxed_slack) << '\n'
      << "worst " << to_string(r.worst_slack) << '\n'
      << "epsilon_term " << to_string(r.epsilon_term) << '\n'
      << "interval lower " << to_string(r.lower_end) << " upper " << to_string(r.upper_end) << '\n';
  write_checks(out, "link", r.links);
  out << "chain " << (r.chain_holds ? "HOLDS" : "FAILS") << '\n';
  out << "contradiction " << (r.contradiction ? "CONFIRMED" : "NOT_CONFIRMED") << '\n';
  return out.str();
}

std::string format_even_report(const EvenReport& r) {
  std::ostringstream out;
  out << "even n " << r.n << " order " << r.order << " epsilon " << to_string(r.epsilon) << '\n';
  write_checks(out, "precondition", r.preconditions);
  out << "majority colour " << r.majority_color << " edges " << r.majority_edges << " threshold " << r.threshold
      << (r.meets_threshold ? " MET" : " NOT_MET") << '\n';
  out << "pigeonhole " << to_string(r.pigeonhole_lhs) << " > " << to_string(r.pigeonhole_rhs) << ' '
      << (r.pigeonhole_holds ? "HOLDS" : "FAILS") << '\n';
  if (r.witness) {
    out << format_witness(*r.witness);
  } else {
    out << "no_witness preconditions not met: N too small for the pigeonhole step\n";
  }
  return out.str();
}

}  // namespace ramsey
