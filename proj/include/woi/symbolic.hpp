#pragma once

// Ordinary vs symbolic powers of edge ideals, two independent pipelines for
// the symbolic power, and per-family theorem predicates.
//
// Grouped pipeline: for each inclusion-maximal strong cover, intersect the
// irreducible ideals of every strong cover it contains, raise that to s, and
// intersect across the maximal covers.
// Localized pipeline: raise the edge ideal to s, contract it at each maximal
// strong cover (substitute 1 for the variables outside the cover), and
// intersect.  The two must always agree; their agreement is the central
// correctness gate.

#include <optional>
#include <string>
#include <vector>

#include "woi/covers.hpp"

namespace woi {

struct family_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// I(D) = (x_i x_j^{w_j} : (x_i, x_j) an edge).
MonomialIdeal edge_ideal(const WeightedOrientedGraph& g);

MonomialIdeal symbolic_power_grouped(const WeightedOrientedGraph& g,
                                     unsigned s,
                                     std::size_t cap = kEnumerationCap);
MonomialIdeal symbolic_power_localized(const WeightedOrientedGraph& g,
                                       unsigned s,
                                       std::size_t cap = kEnumerationCap);

struct EqualityReport {
  unsigned s = 0;
  std::size_t ordinary_gens = 0;
  std::size_t symbolic_gens = 0;
  bool equal = false;
  // Present iff !equal: the graded-lex-least minimal generator of I^(s)
  // outside I^s, re-verified by membership on both sides.
  std::optional<Monomial> witness;
  // Grouped and localized pipelines agreed.  False is a hard failure for
  // every caller; the report still carries the counts for diagnosis.
  bool methods_agree = false;
};

EqualityReport compare_powers(const WeightedOrientedGraph& g, unsigned s,
                              std::size_t cap = kEnumerationCap);

// Let U be the weighted sinks of D and D' the graph with their weights reset
// to 1.  Checks that the monomial map x_j -> x_j^{w_j} (j in U) carries both
// I(D')^s and I(D')^(s) onto I(D)^s and I(D)^(s).
bool phi_commutation_check(const WeightedOrientedGraph& g, unsigned s,
                           std::size_t cap = kEnumerationCap);

// Checks that clamping weights at 2 leaves the strong-cover sets unchanged
// and that both graphs' grouped/localized pipelines agree internally at s.
bool clamp_structure_check(const WeightedOrientedGraph& g, unsigned s,
                           std::size_t cap = kEnumerationCap);

enum class TheoremFamily {
  // Underlying odd cycle, any orientation:
  //   V(D) strong <=> I^(s) = I^s for all s >= 2 (reverse witness at n+1).
  OddCycle,
  // Two odd cycles glued at one vertex: same biconditional, witness n+m+1.
  CliqueSum,
  // Complete m-partite, m >= 3: same biconditional, witness at s = 2.
  Multipartite,
  // Underlying even cycle: V(D) strong or minimal-strong property =>
  // equality for all s >= 2 (implication only).
  EvenCycle,
  // Naturally oriented C_n, n not in {4, 6}, some weight >= 2:
  //   all weights >= 2 <=> I^(2) = I^2.  Tests s = 2 regardless of s_max.
  CycleAllNontrivial,
  // Naturally oriented C_6, some weight >= 2: all >= 2 <=> I^(3) = I^3.
  CycleC6,
  // Naturally oriented C_n, n != 4, some weight >= 2:
  //   all >= 2 <=> equality at both s = 2 and s = 3.
  NaturalCycle,
  // Any weighted oriented star: equality for all s >= 2, unconditional.
  Star,
  // Naturally oriented path, w(x) != 1 whenever deg(x) != 1: equality for
  // all s >= 2, unconditional.
  Path,
};

const char* family_name(TheoremFamily family);
std::optional<TheoremFamily> parse_family(std::string_view name);

struct TheoremVerdict {
  TheoremFamily family;
  bool hypothesis = false;
  std::vector<unsigned> tested_s;
  std::vector<bool> equal_by_s;
  enum class Outcome { Satisfied, Violated, Inconclusive } outcome =
      Outcome::Satisfied;
  // When the reverse direction of a biconditional would need a power beyond
  // the tested range, the verdict is Inconclusive and this names the power.
  std::optional<unsigned> required_witness_power;
  std::string detail;
};

// Validates that D matches the family's structural preconditions (error
// names the violated clause), then evaluates the theorem's claim over the
// family's tested range of s (2..s_max unless the family pins specific s).
TheoremVerdict theorem_predicate(const WeightedOrientedGraph& g,
                                 TheoremFamily family, unsigned s_max = 3,
                                 std::size_t cap = kEnumerationCap);

}  // namespace woi
