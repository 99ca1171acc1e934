#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/decomposition.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/witness.hpp"

namespace ramsey {

/// Finite instantiation of the density property: host order N must reach
/// (1+epsilon)*c*n while the host misses at most a delta fraction of pairs.
struct PkParameters {
  int k = 0;
  int n = 0;
  Rational c;
  Rational epsilon;
  Rational delta;
  long long N = 0;

  /// c = k*2^k, delta = epsilon / 2^(2k+4), N = ceil((1+epsilon)*c*n).
  static PkParameters for_odd_cycles(int k, int n, const Rational& epsilon);
};

enum class Parity { Odd, Even };

/// Scans every colour class for a component carrying a large matching.
/// Odd: a non-bipartite component with floor(n/2)+1 matching edges (that is
/// (n+1)/2 for odd n). Even: any component with ceil(n/2) matching edges.
std::optional<StructureWitness> pk_witness_search(const EdgeColoring& coloring, int n, Parity parity);

/// Re-checks a witness against the coloring; returns a description of the
/// first problem or an empty string.
std::string check_witness(const EdgeColoring& coloring, int n, const StructureWitness& witness);

struct NamedCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// One of the 2^k sets X_1^{j_1} n ... n X_k^{j_k} with X_i^1 = V_i^1 and
/// X_i^2 = V_i^2 u V_i^3.
struct Cell {
  std::vector<int> signature;   // j_1..j_k, each 1 or 2
  std::vector<Vertex> members;  // host ids
};

enum class Lemma4Verdict { ContradictionEstablished, InequalityFails };

std::string_view to_string(Lemma4Verdict verdict);

struct Lemma4Trace {
  PkParameters params;
  int host_order = 0;
  long long host_edges = 0;
  std::vector<NamedCheck> preconditions;

  std::vector<PeelStep> peel_log;  // host ids
  std::vector<Vertex> working_vertices;
  long long working_order = 0;  // N as used in every bound below
  long long working_edges = 0;

  std::vector<FLDecomposition> decompositions;  // per colour, host ids
  std::vector<Cell> cells;                       // signature order
  std::size_t chosen_cell = 0;
  long long x_size = 0;
  std::vector<long long> color_edges_in_x;  // index c-1
  long long edges_in_x = 0;

  Rational per_color_bound;  // n(|X|-1)/2
  Rational eq2_bound;        // kn(|X|-1)/2
  Rational eq3_bound;        // binom(|X|,2) - delta*binom(N,2)
  Rational slack;            // delta*N(N-1)/(|X|-1)
  Rational relaxed_slack;    // 2*delta*N^2/|X|
  Rational worst_slack;      // 2*delta*(k*2^(k+1)*n)^2/(kn)
  Rational epsilon_term;     // epsilon*kn/2
  Rational lower_end;        // (1+epsilon)kn
  Rational upper_end;        // kn + epsilon*kn/2

  std::vector<NamedCheck> checks;
  Lemma4Verdict verdict = Lemma4Verdict::InequalityFails;

  std::vector<std::string> failed_checks() const;
};

struct Lemma4Outcome {
  std::optional<StructureWitness> witness;
  std::optional<Lemma4Trace> trace;
};

/// Runs the odd-cycle pigeonhole argument on a concrete coloring. Returns a
/// witness if one exists; otherwise peels to N (when the host is large
/// enough), decomposes each colour class, picks the largest cell (smallest
/// signature on ties) and evaluates every inequality exactly. Precondition
/// failures are recorded, never thrown.
Lemma4Outcome lemma4_execute(const EdgeColoring& coloring, const PkParameters& params);

struct InequalityReport {
  int k = 0;
  int n = 0;
  Rational epsilon;
  Rational delta;
  BigInt N;
  BigInt kn;
  BigInt x_min;      // kn + 1, the least admissible |X|
  BigInt x_pigeon;   // ceil(N / 2^k)
  BigInt n_ceiling;  // k*2^(k+1)*n

  Rational slack;          // delta*N(N-1)/(x_min-1)
  Rational relaxed_slack;  // 2*delta*N^2/x_min
  Rational worst_slack;    // 2*delta*(k*2^(k+1)*n)^2/(kn)
  Rational epsilon_term;   // epsilon*kn/2
  Rational lower_end;
  Rational upper_end;
  // Coefficients of n in worst_slack and epsilon_term; equal as polynomials.
  Rational worst_slack_coefficient;
  Rational epsilon_term_coefficient;

  std::vector<NamedCheck> links;
  bool chain_holds = false;
  bool contradiction = false;
};

/// Exact-rational evaluation of the inequality chain closing the odd-cycle
/// argument. Requires k >= 4, 0 < epsilon < 1 and odd n >= 3; otherwise
/// throws ParamOutOfRange.
InequalityReport lemma4_inequality_check(int k, const Rational& epsilon, int n);

struct EvenReport {
  int n = 0;
  int order = 0;
  Rational epsilon;
  std::vector<NamedCheck> preconditions;
  Color majority_color = 0;
  long long majority_edges = 0;
  long long threshold = 0;  // eg_threshold(n+1, v)
  bool meets_threshold = false;
  Rational pigeonhole_lhs;  // (1/k)(1-epsilon/3)binom(v,2)
  Rational pigeonhole_rhs;  // n(v-1)/2 + 1
  bool pigeonhole_holds = false;
  std::optional<CycleCertificate> cycle;
  std::optional<StructureWitness> witness;
};

/// Even-cycle pigeonhole: the most popular colour, once it clears the
/// Erdos-Gallai threshold for n+1, carries a cycle of length at least n+1
/// and hence n/2 disjoint edges in one component. Throws OddCycleLength for
/// odd n.
EvenReport even_engine(const EdgeColoring& coloring, int n, const Rational& epsilon);

// Line-oriented text renderings, stable for fixed inputs.
std::string format_witness(const StructureWitness& witness);
std::string format_trace(const Lemma4Trace& trace);
std::string format_inequality_report(const InequalityReport& report);
std::string format_even_report(const EvenReport& report);

}  // namespace ramsey
