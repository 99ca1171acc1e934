#include "ramsey/proof_engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ramsey/cycle_matching.hpp"
#include "ramsey/error.hpp"

namespace ramsey {

namespace {

BigInt pow2(int e) { return BigInt(1) << e; }

NamedCheck check(std::string name, bool holds, std::string detail = {}) {
  return {std::move(name), holds, std::move(detail)};
}

std::string le(const Rational& a, const Rational& b) { return to_string(a) + " <= " + to_string(b); }

std::vector<Vertex> lift_all(const std::vector<Vertex>& local, const std::vector<Vertex>& original) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (const Vertex v : local) out.push_back(original[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace

std::string_view to_string(Lemma4Verdict verdict) {
  return verdict == Lemma4Verdict::ContradictionEstablished ? "CONTRADICTION_ESTABLISHED" : "INEQUALITY_FAILS";
}

PkParameters PkParameters::for_odd_cycles(int k, int n, const Rational& epsilon) {
  if (k < 1 || k > 30) throw Error(Errc::ParamOutOfRange, "k must lie in 1..30");
  if (epsilon <= 0) throw Error(Errc::ParamOutOfRange, "epsilon must be positive");
  PkParameters p;
  p.k = k;
  p.n = n;
  p.c = Rational(BigInt(k) * pow2(k));
  p.epsilon = epsilon;
  p.delta = epsilon / Rational(pow2(2 * k + 4));
  p.N = static_cast<long long>(ceil((1 + epsilon) * p.c * n));
  return p;
}

std::optional<StructureWitness> pk_witness_search(const EdgeColoring& coloring, int n, Parity parity) {
  const int needed = parity == Parity::Odd ? n / 2 + 1 : (n + 1) / 2;
  for (Color c = 1; c <= coloring.color_count(); ++c) {
    const Graph cls = color_class(coloring, c);
    for (const Component& comp : components(cls).components) {
      if (comp.matching_size < needed) continue;
      if (parity == Parity::Odd && comp.bipartite) continue;
      const InducedSubgraph sub = induced_subgraph(cls, comp.vertices);
      StructureWitness w;
      w.kind = parity == Parity::Odd ? WitnessKind::NonbipComponentMatching : WitnessKind::ComponentMatching;
      w.color = c;
      w.component = comp.vertices;
      MatchingCertificate m = max_matching(sub.graph);
      for (Edge& e : m.edges) e = make_edge(sub.lift(e.u), sub.lift(e.v));
      w.matching = std::move(m);
      if (parity == Parity::Odd) {
        CycleCertificate odd = *find_odd_cycle(sub.graph);
        for (Vertex& v : odd.vertices) v = sub.lift(v);
        w.odd_cycle = std::move(odd);
      }
      return w;
    }
  }
  return std::nullopt;
}

std::string check_witness(const EdgeColoring& coloring, int n, const StructureWitness& w) {
  if (w.color < 1 || w.color > coloring.color_count()) return "colour out of range";
  const Graph cls = color_class(coloring, w.color);
  const auto comps = vertex_components(cls);
  const auto comp = std::find(comps.begin(), comps.end(), w.component);
  if (comp == comps.end()) return "component is not a component of the colour class";
  auto inside = [&](Vertex v) { return std::binary_search(comp->begin(), comp->end(), v); };

  if (w.cycle) {
    if (!is_cycle_of(cls, *w.cycle)) return "cycle is not a cycle of the colour class";
    if (!std::all_of(w.cycle->vertices.begin(), w.cycle->vertices.end(), inside)) return "cycle leaves the component";
  }
  if (w.kind == WitnessKind::MonoCycle) {
    if (!w.cycle || w.cycle->length() != n) return "missing C_n";
    return {};
  }
  if (!w.matching || !is_matching_of(cls, *w.matching)) return "matching is not a matching of the colour class";
  for (const Edge& e : w.matching->edges)
    if (!inside(e.u) || !inside(e.v)) return "matching leaves the component";
  if (w.kind == WitnessKind::NonbipComponentMatching) {
    if (w.matching->size() < n / 2 + 1) return "matching smaller than floor(n/2)+1";
    if (!w.odd_cycle || !is_cycle_of(cls, *w.odd_cycle) || w.odd_cycle->length() % 2 == 0) return "missing odd cycle";
    if (!std::all_of(w.odd_cycle->vertices.begin(), w.odd_cycle->vertices.end(), inside)) return "odd cycle leaves the component";
  } else if (w.matching->size() < (n + 1) / 2) {
    return "matching smaller than ceil(n/2)";
  }
  return {};
}

std::vector<std::string> Lemma4Trace::failed_checks() const {
  std::vector<std::string> out;
  for (const auto* list : {&preconditions, &checks})
    for (const NamedCheck& c : *list)
      if (!c.holds) out.push_back(c.name);
  return out;
}

Lemma4Outcome lemma4_execute(const EdgeColoring& coloring, const PkParameters& params) {
  const int n = params.n;
  const int k = coloring.color_count();
  if (k > 20) throw Error(Errc::InvalidParams, "too many colours for the 2^k cell table");
  Lemma4Outcome outcome;
  if (auto w = pk_witness_search(coloring, n, Parity::Odd)) {
    outcome.witness = std::move(w);
    return outcome;
  }

  Lemma4Trace t;
  t.params = params;
  t.host_order = coloring.vertex_count();
  t.host_edges = static_cast<long long>(coloring.base().edge_count());
  const Rational& delta = params.delta;
  const Rational& eps = params.epsilon;

  t.preconditions.push_back(check("colour_count", k == params.k, std::to_string(k) + " colours, parameters say " + std::to_string(params.k)));
  t.preconditions.push_back(check("host_order", t.host_order >= params.N, std::to_string(t.host_order) + " >= " + std::to_string(params.N)));
  const Rational density_floor = (1 - delta) * Rational(choose2(t.host_order));
  t.preconditions.push_back(check("host_density", Rational(t.host_edges) >= density_floor, std::to_string(t.host_edges) + " >= " + to_string(density_floor)));

  // Peel down to exactly N when possible; otherwise work on the whole host.
  EdgeColoring work = coloring;
  if (t.host_order >= params.N) {
    PeelResult peeled = min_degree_peel(coloring.base(), static_cast<int>(params.N));
    t.peel_log = std::move(peeled.log);
    InducedColoring ic = induced_coloring(coloring, peeled.kept);
    work = std::move(ic.coloring);
    t.working_vertices = std::move(ic.original);
  } else {
    for (Vertex v = 0; v < t.host_order; ++v) t.working_vertices.push_back(v);
  }
  const long long N = work.vertex_count();
  t.working_order = N;
  t.working_edges = static_cast<long long>(work.base().edge_count());
  const Rational peeled_floor = (1 - delta) * Rational(choose2(N));
  t.checks.push_back(check("peeled_density", Rational(t.working_edges) >= peeled_floor, std::to_string(t.working_edges) + " >= " + to_string(peeled_floor)));

  // Per-colour decompositions and each vertex's cell signature bits.
  const auto local_n = static_cast<std::size_t>(N);
  std::vector<std::size_t> cell_of(local_n, 0);
  std::vector<std::vector<char>> in_sparse;
  for (Color c = 1; c <= k; ++c) {
    const FLDecomposition d = fl_decompose(color_class(work, c), n);
    std::vector<char> first_side(local_n, 0);
    std::vector<char> sparse(local_n, 0);
    for (const Vertex v : d.v1) first_side[static_cast<std::size_t>(v)] = 1;
    for (const Vertex v : d.v3) sparse[static_cast<std::size_t>(v)] = 1;
    for (std::size_t v = 0; v < local_n; ++v) cell_of[v] = cell_of[v] * 2 + (first_side[v] ? 0 : 1);
    in_sparse.push_back(std::move(sparse));

    FLDecomposition lifted = d;
    lifted.v1 = lift_all(d.v1, t.working_vertices);
    lifted.v2 = lift_all(d.v2, t.working_vertices);
    lifted.v3 = lift_all(d.v3, t.working_vertices);
    t.decompositions.push_back(std::move(lifted));
  }

  const std::size_t cell_count = std::size_t{1} << k;
  t.cells.resize(cell_count);
  for (std::size_t idx = 0; idx < cell_count; ++idx) {
    for (int i = k - 1; i >= 0; --i) t.cells[idx].signature.push_back(((idx >> i) & 1U) ? 2 : 1);
  }
  for (std::size_t v = 0; v < local_n; ++v) t.cells[cell_of[v]].members.push_back(t.working_vertices[v]);

  std::size_t covered = 0;
  for (std::size_t idx = 0; idx < cell_count; ++idx) {
    covered += t.cells[idx].members.size();
    if (t.cells[idx].members.size() > t.cells[t.chosen_cell].members.size()) t.chosen_cell = idx;
  }
  t.checks.push_back(check("cells_partition", covered == local_n, std::to_string(covered) + " of " + std::to_string(N) + " vertices"));
  t.x_size = static_cast<long long>(t.cells[t.chosen_cell].members.size());
  const BigInt X = t.x_size;
  t.checks.push_back(check("pigeonhole", X * BigInt(cell_count) >= N, "|X|*2^k = " + (X * BigInt(cell_count)).str() + " >= " + std::to_string(N)));

  // Monochromatic edges inside X, all of which must sit in the sparse sets.
  t.color_edges_in_x.assign(static_cast<std::size_t>(k), 0);
  bool all_sparse = true;
  const auto edges = work.base().edges();
  const auto colors = work.colors();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto u = static_cast<std::size_t>(edges[i].u);
    const auto v = static_cast<std::size_t>(edges[i].v);
    if (cell_of[u] != t.chosen_cell || cell_of[v] != t.chosen_cell) continue;
    const auto c = static_cast<std::size_t>(colors[i] - 1);
    ++t.color_edges_in_x[c];
    ++t.edges_in_x;
    if (!in_sparse[c][u] || !in_sparse[c][v]) all_sparse = false;
  }
  t.checks.push_back(check("x_edges_in_sparse_sets", all_sparse));

  const BigInt kn = BigInt(k) * n;
  t.per_color_bound = Rational(BigInt(n) * (X - 1), 2);
  t.eq2_bound = Rational(kn * (X - 1), 2);
  t.eq3_bound = Rational(choose2(t.x_size)) - delta * Rational(choose2(N));
  const bool per_color_ok = std::all_of(t.color_edges_in_x.begin(), t.color_edges_in_x.end(),
                                        [&](long long e) { return Rational(e) <= t.per_color_bound; });
  t.checks.push_back(check("eq2_per_colour", per_color_ok, "each e_i(G[X]) <= " + to_string(t.per_color_bound)));
  t.checks.push_back(check("eq2", Rational(t.edges_in_x) <= t.eq2_bound, le(Rational(t.edges_in_x), t.eq2_bound)));
  t.checks.push_back(check("eq3", Rational(t.edges_in_x) >= t.eq3_bound, to_string(Rational(t.edges_in_x)) + " >= " + to_string(t.eq3_bound)));

  const BigInt n_ceiling = kn * pow2(k + 1);
  t.worst_slack = 2 * delta * Rational(n_ceiling * n_ceiling) / Rational(kn);
  t.epsilon_term = eps * Rational(kn) / 2;
  t.lower_end = (1 + eps) * Rational(kn);
  t.upper_end = Rational(kn) + t.epsilon_term;
  if (t.x_size >= 2) {
    t.slack = delta * Rational(BigInt(N) * (N - 1)) / Rational(X - 1);
    t.relaxed_slack = 2 * delta * Rational(BigInt(N) * N) / Rational(X);
    t.checks.push_back(check("combined", Rational(X) <= Rational(kn) + t.slack, le(Rational(X), Rational(kn) + t.slack)));
    t.checks.push_back(check("chain_link_1", t.slack <= t.relaxed_slack, le(t.slack, t.relaxed_slack)));
  } else {
    t.checks.push_back(check("combined", false, "|X| < 2"));
    t.checks.push_back(check("chain_link_1", false, "|X| < 2"));
  }
  t.checks.push_back(check("n_bound", BigInt(N) <= n_ceiling, std::to_string(N) + " <= " + n_ceiling.str()));
  t.checks.push_back(check("x_exceeds_kn", X > kn, X.str() + " > " + kn.str()));
  t.checks.push_back(check("chain_link_2", t.x_size >= 2 && t.relaxed_slack <= t.worst_slack, le(t.relaxed_slack, t.worst_slack)));
  t.checks.push_back(check("chain_link_3", t.worst_slack <= t.epsilon_term, le(t.worst_slack, t.epsilon_term)));
  t.checks.push_back(check("lower_end", Rational(X) >= t.lower_end, to_string(Rational(X)) + " >= " + to_string(t.lower_end)));

  t.verdict = std::all_of(t.checks.begin(), t.checks.end(), [](const NamedCheck& c) { return c.holds; })
                  ? Lemma4Verdict::ContradictionEstablished
                  : Lemma4Verdict::InequalityFails;
  outcome.trace = std::move(t);
  return outcome;
}

InequalityReport lemma4_inequality_check(int k, const Rational& epsilon, int n) {
  if (k < 4 || k > 30) throw Error(Errc::ParamOutOfRange, "k must lie in 4..30, got " + std::to_string(k));
  if (epsilon <= 0 || epsilon >= 1) throw Error(Errc::ParamOutOfRange, "epsilon must satisfy 0 < epsilon < 1, got " + to_string(epsilon));
  if (n < 3 || n % 2 == 0) throw Error(Errc::ParamOutOfRange, "n must be odd and at least 3, got " + std::to_string(n));

  InequalityReport r;
  r.k = k;
  r.n = n;
  r.epsilon = epsilon;
  r.delta = epsilon / Rational(pow2(2 * k + 4));
  r.N = ceil((1 + epsilon) * Rational(BigInt(k) * pow2(k) * n));
  r.kn = BigInt(k) * n;
  r.x_min = r.kn + 1;
  r.x_pigeon = ceil(Rational(r.N, pow2(k)));
  r.n_ceiling = r.kn * pow2(k + 1);

  // The slack terms only shrink as |X| grows, so the least admissible |X|
  // is the binding case for links 1 and 2.
  r.slack = r.delta * Rational(r.N * (r.N - 1)) / Rational(r.x_min - 1);
  r.relaxed_slack = 2 * r.delta * Rational(r.N * r.N) / Rational(r.x_min);
  r.worst_slack = 2 * r.delta * Rational(r.n_ceiling * r.n_ceiling) / Rational(r.kn);
  r.epsilon_term = epsilon * Rational(r.kn) / 2;
  r.lower_end = (1 + epsilon) * Rational(r.kn);
  r.upper_end = Rational(r.kn) + r.epsilon_term;
  r.worst_slack_coefficient = 2 * r.delta * Rational(BigInt(k) * pow2(2 * k + 2));
  r.epsilon_term_coefficient = epsilon * k / 2;

  r.links.push_back(check("n_bound", r.N <= r.n_ceiling, r.N.str() + " <= " + r.n_ceiling.str()));
  r.links.push_back(check("pigeon_exceeds_kn", r.x_pigeon > r.kn, r.x_pigeon.str() + " > " + r.kn.str()));
  r.links.push_back(check("pigeon_lower_end", Rational(r.x_pigeon) >= r.lower_end, to_string(Rational(r.x_pigeon)) + " >= " + to_string(r.lower_end)));
  r.links.push_back(check("link_1", r.slack <= r.relaxed_slack, le(r.slack, r.relaxed_slack)));
  r.links.push_back(check("link_2", r.relaxed_slack <= r.worst_slack, le(r.relaxed_slack, r.worst_slack)));
  r.links.push_back(check("link_3", r.worst_slack <= r.epsilon_term, le(r.worst_slack, r.epsilon_term)));
  r.links.push_back(check("leading_coefficients", r.worst_slack_coefficient == r.epsilon_term_coefficient,
                          to_string(r.worst_slack_coefficient) + " == " + to_string(r.epsilon_term_coefficient)));
  r.chain_holds = std::all_of(r.links.begin(), r.links.end(), [](const NamedCheck& c) { return c.holds; });
  r.contradiction = r.chain_holds && r.lower_end > r.upper_end;
  return r;
}

EvenReport even_engine(const EdgeColoring& coloring, int n, const Rational& epsilon) {
  if (n % 2 != 0) throw Error(Errc::OddCycleLength, "even engine needs even n, got " + std::to_string(n));
  if (n < 4) throw Error(Errc::CycleTooShort, "even cycle length must be at least 4");
  EvenReport r;
  r.n = n;
  r.order = coloring.vertex_count();
  r.epsilon = epsilon;
  const int k = coloring.color_count();
  const BigInt pairs = choose2(r.order);
  const auto edges = static_cast<long long>(coloring.base().edge_count());

  const Rational order_floor = (1 + epsilon) * n * k;
  r.preconditions.push_back(check("host_order", Rational(r.order) > order_floor, std::to_string(r.order) + " > " + to_string(order_floor)));
  const Rational density_floor = (1 - epsilon / 3) * Rational(pairs);
  r.preconditions.push_back(check("host_density", Rational(edges) >= density_floor, std::to_string(edges) + " >= " + to_string(density_floor)));

  for (Color c = 1; c <= k; ++c) {
    const auto size = static_cast<long long>(coloring.class_size(c));
    if (size > r.majority_edges || r.majority_color == 0) {
      r.majority_color = c;
      r.majority_edges = size;
    }
  }
  r.pigeonhole_lhs = (1 - epsilon / 3) * Rational(pairs) / k;
  r.pigeonhole_rhs = Rational(BigInt(n) * (r.order - 1), 2) + 1;
  r.pigeonhole_holds = r.pigeonhole_lhs > r.pigeonhole_rhs;
  r.threshold = r.order >= 1 ? eg_threshold(n + 1, r.order) : 1;
  r.meets_threshold = r.order >= 1 && r.majority_edges >= r.threshold;
  if (!r.meets_threshold) return r;

  const Graph cls = color_class(coloring, r.majority_color);
  auto cycle = longest_cycle(cls);
  if (!cycle || cycle->length() < n + 1) {
    throw std::logic_error("colour class above the Erdos-Gallai threshold has no cycle of length n+1");
  }
  StructureWitness w;
  w.kind = WitnessKind::ComponentMatching;
  w.color = r.majority_color;
  for (auto& comp : vertex_components(cls)) {
    if (std::binary_search(comp.begin(), comp.end(), cycle->vertices.front())) {
      w.component = std::move(comp);
      break;
    }
  }
  MatchingCertificate m;
  for (int i = 0; i < n / 2; ++i) {
    m.edges.push_back(make_edge(cycle->vertices[static_cast<std::size_t>(2 * i)], cycle->vertices[static_cast<std::size_t>(2 * i + 1)]));
  }
  w.matching = std::move(m);
  w.cycle = cycle;
  r.cycle = std::move(cycle);
  r.witness = std::move(w);
  return r;
}

}  // namespace ramsey
