#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/error.hpp"
#include "ramsey/proof_engine.hpp"

using namespace ramsey;

namespace {

EdgeColoring mono(int order) {
  const Graph base = complete_graph(order);
  return EdgeColoring(base, 1, std::vector<Color>(base.edge_count(), 1));
}

EdgeColoring two_colored_bipartite(int left, int right) {
  const Graph base = complete_graph(left + right);
  std::vector<Color> colors;
  for (const Edge& e : base.edges()) colors.push_back((e.u < left) != (e.v < left) ? 1 : 2);
  return EdgeColoring(base, 2, colors);
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(RAMSEY_TEST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const NamedCheck& find_check(const std::vector<NamedCheck>& checks, const std::string& name) {
  const auto it = std::find_if(checks.begin(), checks.end(), [&](const NamedCheck& c) { return c.name == name; });
  REQUIRE(it != checks.end());
  return *it;
}

}  // namespace

TEST_CASE("parameters for the odd-cycle argument") {
  const PkParameters p = PkParameters::for_odd_cycles(4, 5, Rational(1, 2));
  CHECK(p.c == Rational(64));
  CHECK(p.delta == Rational(1, 8192));
  CHECK(p.N == 480);
  const PkParameters q = PkParameters::for_odd_cycles(2, 5, Rational(1));
  CHECK(q.N == 80);
  CHECK(q.delta == Rational(1, 256));
  // Ceiling: (1 + 1/3) * 8 * 5 = 160/3.
  CHECK(PkParameters::for_odd_cycles(2, 5, Rational(1, 3)).N == 54);
}

TEST_CASE("pk_witness_search") {
  const auto w = pk_witness_search(mono(9), 5, Parity::Odd);
  REQUIRE(w);
  CHECK(w->kind == WitnessKind::NonbipComponentMatching);
  CHECK(w->matching->size() == 4);
  CHECK(w->odd_cycle->length() % 2 == 1);
  CHECK(check_witness(mono(9), 5, *w).empty());

  CHECK_FALSE(pk_witness_search(bondy_erdos_coloring(2, 5), 5, Parity::Odd));

  const EdgeColoring k34 = two_colored_bipartite(3, 4);
  const auto e = pk_witness_search(k34, 6, Parity::Even);
  REQUIRE(e);
  CHECK(e->kind == WitnessKind::ComponentMatching);
  CHECK(e->color == 1);
  CHECK(e->matching->size() == 3);
  CHECK(check_witness(k34, 6, *e).empty());
  // Odd mode ignores the bipartite colour-1 class; colour 2 (K_3 + K_4) has matchings of size 1 and 2.
  CHECK_FALSE(pk_witness_search(k34, 5, Parity::Odd));
}

TEST_CASE("witness checker rejects tampered witnesses") {
  auto w = *pk_witness_search(mono(9), 5, Parity::Odd);
  w.matching->edges.pop_back();
  w.matching->edges.pop_back();
  CHECK_FALSE(check_witness(mono(9), 5, w).empty());
  auto v = *pk_witness_search(mono(9), 5, Parity::Odd);
  v.component.pop_back();
  CHECK_FALSE(check_witness(mono(9), 5, v).empty());
}

TEST_CASE("lemma4_execute returns a witness before any trace work") {
  const Lemma4Outcome r = lemma4_execute(mono(12), PkParameters::for_odd_cycles(1, 5, Rational(1, 2)));
  CHECK(r.witness);
  CHECK_FALSE(r.trace);
}

TEST_CASE("lemma4_execute diagnostic trace on the k = 2, n = 5 doubling colouring") {
  const EdgeColoring col = bondy_erdos_coloring(2, 5);
  const Lemma4Outcome r = lemma4_execute(col, PkParameters::for_odd_cycles(2, 5, Rational(1)));
  REQUIRE(r.trace);
  const Lemma4Trace& t = *r.trace;
  CHECK(t.params.N == 80);
  CHECK_FALSE(find_check(t.preconditions, "host_order").holds);
  CHECK(t.peel_log.empty());
  CHECK(t.working_order == 8);

  REQUIRE(t.decompositions.size() == 2);
  CHECK(t.decompositions[0].v3.size() == 8);
  CHECK(t.decompositions[0].v1.empty());
  CHECK(t.decompositions[1].v3.empty());
  CHECK(t.decompositions[1].v1.size() == 4);
  CHECK(t.decompositions[1].v2.size() == 4);

  REQUIRE(t.cells.size() == 4);
  CHECK(t.cells[0].members.empty());                       // (1,1)
  CHECK(t.cells[1].members.empty());                       // (1,2)
  CHECK(t.cells[2].members == std::vector<Vertex>{0, 1, 2, 3});  // (2,1)
  CHECK(t.cells[3].members == std::vector<Vertex>{4, 5, 6, 7});  // (2,2)
  CHECK(t.chosen_cell == 2);  // tie broken towards the smaller signature
  CHECK(t.edges_in_x == 6);
  CHECK(t.eq3_bound == Rational(377, 64));
  CHECK(t.verdict == Lemma4Verdict::InequalityFails);
  const auto failed = t.failed_checks();
  CHECK(std::find(failed.begin(), failed.end(), "host_order") != failed.end());
  CHECK(std::find(failed.begin(), failed.end(), "lower_end") != failed.end());

  CHECK(format_trace(t) == golden("lemma4_doubling_k2_n5.txt"));
}

TEST_CASE("lemma4_execute peels a large host down to N") {
  // Tiny epsilon and n keep N below the host order: N = ceil((1+1/8)*2*4*3) = 27.
  std::mt19937_64 rng(12);
  const Graph base = oracle::random_graph(30, 0.97, rng);
  const EdgeColoring col = oracle::random_coloring(base, 2, rng);
  PkParameters p = PkParameters::for_odd_cycles(2, 3, Rational(1, 8));
  REQUIRE(p.N == 27);
  p.n = 61;  // matching of 31 edges is impossible on 30 vertices, so no witness
  const Lemma4Outcome r = lemma4_execute(col, p);
  REQUIRE(r.trace);
  CHECK(r.trace->peel_log.size() == 3);
  CHECK(r.trace->working_order == 27);
  CHECK(find_check(r.trace->preconditions, "host_order").holds);
}

TEST_CASE("edge-bound soundness on random colourings") {
  std::mt19937_64 rng(77);
  int traces = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::uniform_int_distribution<int> order(6, 24);
    const int N = order(rng);
    const int k = 2 + trial % 3;
    const int n = 2 * std::uniform_int_distribution<int>(2, N)(rng) + 1;
    const EdgeColoring col = oracle::random_coloring(complete_graph(N), k, rng);
    const Lemma4Outcome r = lemma4_execute(col, PkParameters::for_odd_cycles(k, n, Rational(1, 2)));
    if (!r.trace) continue;
    ++traces;
    const Lemma4Trace& t = *r.trace;
    for (const char* name : {"cells_partition", "pigeonhole", "x_edges_in_sparse_sets", "eq2_per_colour", "eq2"})
      CHECK_MESSAGE(find_check(t.checks, name).holds, name);

    // X_i^1 = V_i^1 and X_i^2 = V_i^2 u V_i^3, cell by cell.
    std::size_t covered = 0;
    for (const Cell& cell : t.cells) {
      covered += cell.members.size();
      for (const Vertex v : cell.members) {
        for (int i = 0; i < k; ++i) {
          const auto& v1 = t.decompositions[static_cast<std::size_t>(i)].v1;
          const bool in_v1 = std::binary_search(v1.begin(), v1.end(), v);
          CHECK((cell.signature[static_cast<std::size_t>(i)] == 1) == in_v1);
        }
      }
    }
    CHECK(covered == static_cast<std::size_t>(N));
    CHECK(t.x_size * (1LL << k) >= N);
  }
  CHECK(traces > 30);
}

TEST_CASE("inequality chain examples") {
  const InequalityReport r = lemma4_inequality_check(4, Rational(1, 2), 5);
  CHECK(r.chain_holds);
  CHECK(r.contradiction);
  CHECK(r.lower_end == Rational(30));
  CHECK(r.upper_end == Rational(25));
  CHECK(r.delta == Rational(1, 8192));

  CHECK(lemma4_inequality_check(5, Rational(1, 4), 7).chain_holds);

  for (const auto& bad : {std::tuple{4, Rational(1), 5}, std::tuple{3, Rational(1, 2), 5}, std::tuple{4, Rational(0), 5},
                          std::tuple{4, Rational(1, 2), 6}}) {
    try {
      lemma4_inequality_check(std::get<0>(bad), std::get<1>(bad), std::get<2>(bad));
      FAIL("expected ParamOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParamOutOfRange);
    }
  }
}

TEST_CASE("symbolic run: k = 4, epsilon = 1/2") {
  for (const int n : {5, 101, 1001}) {
    const InequalityReport r = lemma4_inequality_check(4, Rational(1, 2), n);
    CHECK(r.delta == Rational(1, 1 << 13));
    CHECK(r.N == BigInt(96) * n);
    CHECK(r.chain_holds);
    // Final link is an identity in n: 2*delta*(k*2^(k+1))^2/k = epsilon*k/2 = 1.
    CHECK(r.worst_slack_coefficient == Rational(1));
    CHECK(r.epsilon_term_coefficient == Rational(1));
    CHECK(r.worst_slack == r.epsilon_term);
  }
}

TEST_CASE("inequality chain over the parameter grid") {
  for (int k = 4; k <= 8; ++k)
    for (const Rational& eps : {Rational(1, 4), Rational(1, 2), Rational(3, 4)})
      for (const int n : {5, 7, 101}) {
        const InequalityReport r = lemma4_inequality_check(k, eps, n);
        CHECK(r.chain_holds);
        CHECK(r.contradiction);
      }
}

TEST_CASE("even engine") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const EdgeColoring col = oracle::random_coloring(complete_graph(13), 2, rng);
    const EvenReport r = even_engine(col, 6, Rational(1, 12));
    CHECK(r.majority_edges >= 39);
    CHECK(r.threshold == 37);
    CHECK(r.pigeonhole_holds);
    REQUIRE(r.witness);
    CHECK(r.cycle->length() >= 7);
    CHECK(r.witness->matching->size() == 3);
    CHECK(check_witness(col, 6, *r.witness).empty());
  }

  const EvenReport m = even_engine(mono(8), 6, Rational(1, 12));
  CHECK(m.majority_edges == 28);
  CHECK(m.threshold == 22);
  CHECK(m.witness);

  // 14/14 split of K_8: first 14 edges in lexicographic order get colour 1.
  const Graph k8 = complete_graph(8);
  std::vector<Color> colors(28, 2);
  std::fill(colors.begin(), colors.begin() + 14, 1);
  const EvenReport split = even_engine(EdgeColoring(k8, 2, colors), 8, Rational(1, 12));
  CHECK(split.majority_edges == 14);
  CHECK(split.threshold == 29);
  CHECK_FALSE(split.meets_threshold);
  CHECK_FALSE(split.pigeonhole_holds);
  CHECK_FALSE(split.witness);
  CHECK_FALSE(find_check(split.preconditions, "host_order").holds);

  try {
    even_engine(mono(8), 5, Rational(1, 12));
    FAIL("expected OddCycleLength");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OddCycleLength);
  }
}
