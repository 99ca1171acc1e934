#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/constructions.hpp"
#include "ramsey/cycle_matching.hpp"
#include "ramsey/decomposition.hpp"
#include "ramsey/error.hpp"
#include "ramsey/exact_search.hpp"
#include "ramsey/io.hpp"
#include "ramsey/proof_engine.hpp"

namespace ramsey::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  bool json_output = false;
  int threads = 1;
  int k = 0;
  int n = 0;
  int N = 0;
  int target = 0;
  std::string epsilon = "1/2";
  std::string parity = "odd";
  std::string input;
  std::string output;
  std::string checkpoint;
  std::string resume;
  std::uint64_t budget = 0;
  int split_depth = 6;
  bool exhaustive = false;
  bool colex = false;
};

int default_threads() {
  if (const char* env = std::getenv("RAMSEY_THREADS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return 1;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json witness_json(const StructureWitness& w) {
  json out = {{"kind", to_string(w.kind)}, {"colour", w.color}, {"component", w.component}};
  if (w.matching) out["matching"] = edges_json(w.matching->edges);
  if (w.cycle) out["cycle"] = w.cycle->vertices;
  if (w.odd_cycle) out["odd_cycle"] = w.odd_cycle->vertices;
  return out;
}

json checks_json(const std::vector<NamedCheck>& checks) {
  json out = json::array();
  for (const NamedCheck& c : checks) out.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
  return out;
}

EdgeColoring load_coloring(const std::string& path) { return parse_coloring(read_file(path)); }

Graph load_graph(const std::string& path) {
  auto parsed = parse_any(read_file(path));
  if (auto* g = std::get_if<Graph>(&parsed)) return std::move(*g);
  return std::get<EdgeColoring>(parsed).base();
}

void emit(std::ostream& out, const RunConfig& cfg, const json& object, const std::string& text) {
  if (cfg.json_output) {
    out << object.dump() << '\n';
  } else {
    out << text;
  }
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const EdgeColoring col = bondy_erdos_coloring(cfg.k, cfg.n);
  const std::string text = serialize_coloring(col);
  if (!cfg.output.empty()) {
    write_file(cfg.output, text);
    emit(out, cfg, {{"command", "construct"}, {"vertices", col.vertex_count()}, {"edges", col.base().edge_count()}, {"output", cfg.output}},
         "constructed " + std::to_string(col.vertex_count()) + " vertices " + std::to_string(col.base().edge_count()) + " edges -> " + cfg.output + "\n");
  } else if (cfg.json_output) {
    out << json{{"command", "construct"}, {"coloring", text}}.dump() << '\n';
  } else {
    out << text;
  }
  return kDefinite;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const EdgeColoring col = load_coloring(cfg.input);
  std::ostringstream text;
  json object = {{"command", "verify"}, {"n", cfg.n}};
  if (cfg.n % 2 == 1) {
    const StructuralCertificate cert = structural_certificate(col, cfg.n);
    json colours = json::array();
    for (std::size_t c = 0; c < cert.colors.size(); ++c) {
      json comps = json::array();
      for (const TaggedComponent& comp : cert.colors[c]) {
        text << "component colour " << c + 1 << " order " << comp.vertices.size() << ' ' << to_string(comp.tag) << '\n';
        comps.push_back({{"order", comp.vertices.size()}, {"tag", to_string(comp.tag)}});
      }
      colours.push_back(comps);
    }
    text << "structural " << (cert.all_tagged() ? "ALL_TAGGED" : "UNTAGGED " + std::to_string(cert.untagged_count())) << '\n';
    object["structural"] = {{"all_tagged", cert.all_tagged()}, {"colours", colours}};
  }
  const MonoCycleVerdict verdict = verify_mono_cycle_free(col, cfg.n, cfg.exhaustive ? VerifyMode::Exhaustive : VerifyMode::Certified);
  object["cycle_free"] = verdict.cycle_free;
  object["components_certified"] = verdict.components_certified;
  object["components_searched"] = verdict.components_searched;
  if (verdict.cycle_free) {
    text << "verdict MONO_CYCLE_FREE\n";
  } else {
    text << "verdict MONO_CYCLE_FOUND\n" << format_witness(*verdict.witness);
    object["witness"] = witness_json(*verdict.witness);
  }
  emit(out, cfg, object, text.str());
  return verdict.cycle_free ? kDefinite : kNegative;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  auto parsed = parse_any(read_file(cfg.input));
  std::vector<Graph> classes;
  if (auto* g = std::get_if<Graph>(&parsed)) {
    classes.push_back(*g);
  } else {
    const auto& col = std::get<EdgeColoring>(parsed);
    for (Color c = 1; c <= col.color_count(); ++c) classes.push_back(color_class(col, c));
  }
  std::ostringstream text;
  json list = json::array();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const FLDecomposition d = fl_decompose(classes[i], cfg.n);
    auto join = [](const std::vector<Vertex>& vs) {
      std::string s;
      for (std::size_t j = 0; j < vs.size(); ++j) s += (j ? "," : "") + std::to_string(vs[j]);
      return s.empty() ? std::string("-") : s;
    };
    text << "colour " << i + 1 << " V1 " << join(d.v1) << " V2 " << join(d.v2) << " V3 " << join(d.v3) << '\n';
    text << "colour " << i + 1 << " hypothesis " << (d.hypothesis_holds ? 1 : 0) << " sparse_edges " << d.sparse_edge_count
         << " sparse_bound " << to_string(d.sparse_bound) << '\n';
    list.push_back({{"colour", i + 1}, {"V1", d.v1}, {"V2", d.v2}, {"V3", d.v3}, {"hypothesis_holds", d.hypothesis_holds},
                    {"sparse_edge_count", d.sparse_edge_count}, {"sparse_bound", to_string(d.sparse_bound)}});
  }
  emit(out, cfg, {{"command", "decompose"}, {"n", cfg.n}, {"decompositions", list}}, text.str());
  return kDefinite;
}

int cmd_peel(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg.input);
  const PeelResult r = min_degree_peel(g, cfg.target);
  std::ostringstream text;
  json log = json::array();
  for (const PeelStep& s : r.log) {
    text << "peel " << s.vertex << ' ' << s.degree << '\n';
    log.push_back({s.vertex, s.degree});
  }
  text << "kept";
  for (const Vertex v : r.kept) text << ' ' << v;
  text << "\nresult vertices " << r.graph.vertex_count() << " edges " << r.graph.edge_count() << '\n';
  if (!cfg.output.empty()) write_file(cfg.output, serialize_graph(r.graph));
  emit(out, cfg, {{"command", "peel"}, {"log", log}, {"kept", r.kept}, {"edges", r.graph.edge_count()}}, text.str());
  return kDefinite;
}

int cmd_engine(const RunConfig& cfg, std::ostream& out) {
  const EdgeColoring col = load_coloring(cfg.input);
  const Rational eps = parse_rational(cfg.epsilon);
  if (cfg.n % 2 == 0) {
    const EvenReport r = even_engine(col, cfg.n, eps);
    json object = {{"command", "engine"}, {"parity", "even"}, {"preconditions", checks_json(r.preconditions)},
                   {"majority_colour", r.majority_color}, {"majority_edges", r.majority_edges}, {"threshold", r.threshold},
                   {"pigeonhole_holds", r.pigeonhole_holds}};
    if (r.witness) object["witness"] = witness_json(*r.witness);
    emit(out, cfg, object, format_even_report(r));
    return r.witness ? kDefinite : kNegative;
  }
  const PkParameters params = PkParameters::for_odd_cycles(col.color_count(), cfg.n, eps);
  const Lemma4Outcome r = lemma4_execute(col, params);
  if (r.witness) {
    emit(out, cfg, {{"command", "engine"}, {"parity", "odd"}, {"witness", witness_json(*r.witness)}}, format_witness(*r.witness));
    return kDefinite;
  }
  const Lemma4Trace& t = *r.trace;
  json cells = json::array();
  for (const Cell& c : t.cells) cells.push_back({{"signature", c.signature}, {"size", c.members.size()}});
  emit(out, cfg,
       {{"command", "engine"}, {"parity", "odd"}, {"verdict", to_string(t.verdict)}, {"N", params.N},
        {"delta", to_string(params.delta)}, {"preconditions", checks_json(t.preconditions)}, {"cells", cells},
        {"chosen_cell", t.chosen_cell}, {"x_size", t.x_size}, {"edges_in_x", t.edges_in_x},
        {"eq2_bound", to_string(t.eq2_bound)}, {"eq3_bound", to_string(t.eq3_bound)}, {"checks", checks_json(t.checks)}},
       format_trace(t));
  return kNegative;
}

int cmd_ineq(const RunConfig& cfg, std::ostream& out) {
  const InequalityReport r = lemma4_inequality_check(cfg.k, parse_rational(cfg.epsilon), cfg.n);
  emit(out, cfg,
       {{"command", "ineq"}, {"k", r.k}, {"n", r.n}, {"epsilon", to_string(r.epsilon)}, {"delta", to_string(r.delta)},
        {"N", r.N.str()}, {"lower", to_string(r.lower_end)}, {"upper", to_string(r.upper_end)},
        {"links", checks_json(r.links)}, {"chain_holds", r.chain_holds}, {"contradiction", r.contradiction}},
       format_inequality_report(r));
  return r.contradiction ? kDefinite : kNegative;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  SearchOptions options;
  options.node_budget = cfg.budget;
  options.threads = cfg.threads;
  options.split_depth = cfg.split_depth;
  options.order = cfg.colex ? EdgeOrder::Colex : EdgeOrder::Lex;
  if (!cfg.resume.empty()) {
    options.resume = parse_checkpoint(read_file(cfg.resume));
    if (options.resume.empty()) throw Error(Errc::ParseError, "checkpoint '" + cfg.resume + "' has no open prefixes");
  }
  const SearchResult r = ramsey_check(cfg.k, cfg.n, cfg.N, options);
  if (!cfg.checkpoint.empty() && r.verdict == Verdict::Indeterminate) write_file(cfg.checkpoint, format_checkpoint(r.open));
  if (!cfg.output.empty() && r.counterexample) write_file(cfg.output, serialize_coloring(*r.counterexample));

  std::ostringstream text;
  text << to_string(r.verdict) << '\n';
  text << "stats nodes " << r.stats.nodes << " mono_cycle_prunes " << r.stats.mono_cycle_prunes << " symmetry_prunes "
       << r.stats.symmetry_prunes << '\n';
  if (r.verdict == Verdict::Indeterminate) text << "open_prefixes " << r.open.size() << '\n';
  if (r.counterexample && cfg.output.empty()) text << serialize_coloring(*r.counterexample);
  json object = {{"command", "search"}, {"k", cfg.k}, {"n", cfg.n}, {"N", cfg.N}, {"verdict", to_string(r.verdict)},
                 {"nodes", r.stats.nodes}, {"mono_cycle_prunes", r.stats.mono_cycle_prunes},
                 {"symmetry_prunes", r.stats.symmetry_prunes}, {"wall_seconds", r.stats.wall_seconds}, {"open_prefixes", r.open.size()}};
  if (r.counterexample) object["counterexample"] = serialize_coloring(*r.counterexample);
  emit(out, cfg, object, text.str());
  switch (r.verdict) {
    case Verdict::AllContain: return kDefinite;
    case Verdict::Counterexample: return kNegative;
    case Verdict::Indeterminate: return kIndeterminate;
  }
  return kIndeterminate;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
  const EdgeColoring col = load_coloring(cfg.input);
  const auto w = pk_witness_search(col, cfg.n, cfg.parity == "even" ? Parity::Even : Parity::Odd);
  if (!w) {
    emit(out, cfg, {{"command", "witness"}, {"found", false}}, "no_witness\n");
    return kNegative;
  }
  emit(out, cfg, {{"command", "witness"}, {"found", true}, {"witness", witness_json(*w)}}, format_witness(*w));
  return kDefinite;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.threads = default_threads();

  CLI::App app{"Multicolour Ramsey numbers of cycles: constructions, proof engines and exact search", "ramsey"};
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json_output, "One JSON object per line instead of text reports");
  app.add_option("--threads", cfg.threads, "Search threads (default: $RAMSEY_THREADS or 1)")->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "Emit the doubling lower-bound colouring");
  construct->add_option("--k", cfg.k, "Number of colours")->required();
  construct->add_option("--n", cfg.n, "Cycle length")->required();
  construct->add_option("-o,--output", cfg.output, "Output coloring file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a coloring for monochromatic C_n");
  verify->add_option("--n", cfg.n, "Cycle length")->required();
  verify->add_option("-i,--input", cfg.input, "Coloring file")->required();
  verify->add_flag("--exhaustive", cfg.exhaustive, "Search every component instead of trusting the structural certificate");

  auto* decompose = app.add_subcommand("decompose", "(V1, V2, V3) decomposition of each colour class");
  decompose->add_option("--n", cfg.n, "Cycle length")->required();
  decompose->add_option("-i,--input", cfg.input, "Graph or coloring file")->required();

  auto* peel = app.add_subcommand("peel", "Minimum-degree peeling");
  peel->add_option("-i,--input", cfg.input, "Graph or coloring file")->required();
  peel->add_option("--target", cfg.target, "Vertices to keep")->required();
  peel->add_option("-o,--output", cfg.output, "Write the peeled graph here");

  auto* engine = app.add_subcommand("engine", "Run the odd (pigeonhole over 2^k cells) or even engine, by parity of n");
  engine->add_option("--n", cfg.n, "Cycle length")->required();
  engine->add_option("--eps", cfg.epsilon, "Epsilon as p/q")->required();
  engine->add_option("-i,--input", cfg.input, "Coloring file")->required();

  auto* ineq = app.add_subcommand("ineq", "Exact check of the odd-case inequality chain");
  ineq->add_option("--k", cfg.k, "Number of colours")->required();
  ineq->add_option("--eps", cfg.epsilon, "Epsilon as p/q")->required();
  ineq->add_option("--n", cfg.n, "Odd cycle length")->required();

  auto* search = app.add_subcommand("search", "Exhaustive search over k-colourings of K_N");
  search->add_option("--k", cfg.k, "Number of colours")->required();
  search->add_option("--n", cfg.n, "Cycle length")->required();
  search->add_option("--N", cfg.N, "Order of the complete graph")->required();
  search->add_option("--budget", cfg.budget, "Node budget (0 = unlimited)");
  search->add_option("--split-depth", cfg.split_depth, "Prefix length for parallel work splitting");
  search->add_option("--checkpoint", cfg.checkpoint, "Write open prefixes here when the budget runs out");
  search->add_option("--resume", cfg.resume, "Resume from a checkpoint file");
  search->add_option("-o,--output", cfg.output, "Write a counterexample coloring here");
  search->add_flag("--colex", cfg.colex, "Assign edges in (max, min) endpoint order");

  auto* witness = app.add_subcommand("witness", "Find a monochromatic component with a large matching");
  witness->add_option("--n", cfg.n, "Cycle length")->required();
  witness->add_option("--parity", cfg.parity, "odd or even")->check(CLI::IsMember({"odd", "even"}));
  witness->add_option("-i,--input", cfg.input, "Coloring file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kDefinite;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*construct) return cmd_construct(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*decompose) return cmd_decompose(cfg, out);
    if (*peel) return cmd_peel(cfg, out);
    if (*engine) return cmd_engine(cfg, out);
    if (*ineq) return cmd_ineq(cfg, out);
    if (*search) return cmd_search(cfg, out);
    if (*witness) return cmd_witness(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ramsey::cli
