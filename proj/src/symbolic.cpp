#include "woi/symbolic.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace woi {

MonomialIdeal edge_ideal(const WeightedOrientedGraph& g) {
  std::vector<Monomial> gens;
  gens.reserve(g.edge_count());
  for (auto [tail, head] : g.edges())
    gens.push_back(mul_mono(
        Monomial::variable(g.universe(), tail),
        Monomial::variable(g.universe(), head, Exponent(g.weight(head)))));
  return MonomialIdeal::of(g.universe(), std::move(gens));
}

MonomialIdeal symbolic_power_grouped(const WeightedOrientedGraph& g,
                                     unsigned s, std::size_t cap) {
  if (s == 0) throw std::invalid_argument("symbolic power: s must be >= 1");
  StrongCoverCensus census = enumerate_strong_covers(g, cap);
  std::vector<MonomialIdeal> group_powers;
  group_powers.reserve(census.groups.size());
  for (const auto& group : census.groups) {
    MonomialIdeal acc = irreducible_ideal(g, census.strong_covers[group[0]]);
    for (std::size_t k = 1; k < group.size(); ++k)
      acc = intersect(acc,
                      irreducible_ideal(g, census.strong_covers[group[k]]));
    group_powers.push_back(power(acc, s));
  }
  return intersect_all(group_powers);
}

MonomialIdeal symbolic_power_localized(const WeightedOrientedGraph& g,
                                       unsigned s, std::size_t cap) {
  if (s == 0) throw std::invalid_argument("symbolic power: s must be >= 1");
  StrongCoverCensus census = enumerate_strong_covers(g, cap);
  MonomialIdeal ordinary = power(edge_ideal(g), s);
  std::vector<MonomialIdeal> contractions;
  contractions.reserve(census.maximal.size());
  for (std::size_t mi : census.maximal)
    contractions.push_back(
        localize_contract(ordinary, census.strong_covers[mi].cover));
  return intersect_all(contractions);
}

EqualityReport compare_powers(const WeightedOrientedGraph& g, unsigned s,
                              std::size_t cap) {
  EqualityReport report;
  report.s = s;
  MonomialIdeal ordinary = power(edge_ideal(g), s);
  MonomialIdeal symbolic = symbolic_power_grouped(g, s, cap);
  MonomialIdeal oracle = symbolic_power_localized(g, s, cap);
  report.methods_agree = (symbolic == oracle);
  report.ordinary_gens = ordinary.generator_count();
  report.symbolic_gens = symbolic.generator_count();
  report.equal = (symbolic == ordinary);
  if (!report.equal) {
    const Monomial* best = nullptr;
    for (const Monomial& m : symbolic.generators()) {
      if (contains_monomial(ordinary, m)) continue;
      if (!best || grlex_compare(m, *best) < 0) best = &m;
    }
    if (!best)
      throw std::logic_error(
          "compare_powers: ideals differ but every symbolic generator lies "
          "in the ordinary power");
    // Independent membership re-verification of the reported witness.
    if (!contains_monomial(symbolic, *best) ||
        contains_monomial(ordinary, *best))
      throw std::logic_error("compare_powers: witness failed re-verification");
    report.witness = *best;
  }
  return report;
}

bool phi_commutation_check(const WeightedOrientedGraph& g, unsigned s,
                           std::size_t cap) {
  auto [reduced, reset] = sink_weights_to_one(g);
  std::map<std::size_t, int> weights;
  for (std::size_t v : reset) weights.emplace(v, g.weight(v));
  auto apply = [&](const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.generator_count());
    for (const Monomial& m : ideal.generators())
      gens.push_back(phi_map(m, weights));
    return MonomialIdeal::of(ideal.universe(), std::move(gens));
  };
  bool ordinary_ok = apply(power(edge_ideal(reduced), s)) ==
                     power(edge_ideal(g), s);
  bool symbolic_ok = apply(symbolic_power_grouped(reduced, s, cap)) ==
                     symbolic_power_grouped(g, s, cap);
  return ordinary_ok && symbolic_ok;
}

namespace {

std::vector<std::vector<std::size_t>> cover_sets(
    const StrongCoverCensus& census) {
  std::vector<std::vector<std::size_t>> sets;
  sets.reserve(census.strong_covers.size());
  for (const CoverPartition& p : census.strong_covers) sets.push_back(p.cover);
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace

bool clamp_structure_check(const WeightedOrientedGraph& g, unsigned s,
                           std::size_t cap) {
  WeightedOrientedGraph clamped = clamp_weights_to_two(g);
  bool covers_match = cover_sets(enumerate_strong_covers(g, cap)) ==
                      cover_sets(enumerate_strong_covers(clamped, cap));
  bool original_agrees = symbolic_power_grouped(g, s, cap) ==
                         symbolic_power_localized(g, s, cap);
  bool clamped_agrees = symbolic_power_grouped(clamped, s, cap) ==
                        symbolic_power_localized(clamped, s, cap);
  return covers_match && original_agrees && clamped_agrees;
}

const char* family_name(TheoremFamily family) {
  switch (family) {
    case TheoremFamily::OddCycle: return "odd-cycle";
    case TheoremFamily::CliqueSum: return "clique-sum";
    case TheoremFamily::Multipartite: return "multipartite";
    case TheoremFamily::EvenCycle: return "even-cycle";
    case TheoremFamily::CycleAllNontrivial: return "cycle-s2";
    case TheoremFamily::CycleC6: return "cycle-c6";
    case TheoremFamily::NaturalCycle: return "natural-cycle";
    case TheoremFamily::Star: return "star";
    case TheoremFamily::Path: return "path";
  }
  return "?";
}

std::optional<TheoremFamily> parse_family(std::string_view name) {
  for (TheoremFamily f :
       {TheoremFamily::OddCycle, TheoremFamily::CliqueSum,
        TheoremFamily::Multipartite, TheoremFamily::EvenCycle,
        TheoremFamily::CycleAllNontrivial, TheoremFamily::CycleC6,
        TheoremFamily::NaturalCycle, TheoremFamily::Star, TheoremFamily::Path})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

namespace {

// --- underlying-shape validators ------------------------------------------

bool underlying_connected(const WeightedOrientedGraph& g) {
  if (g.vertex_count() == 0) return false;
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t count = 0;
  while (!todo.empty()) {
    std::size_t v = todo.front();
    todo.pop();
    ++count;
    for (std::size_t w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        todo.push(w);
      }
  }
  return count == g.vertex_count();
}

void require(bool ok, const char* clause) {
  if (!ok) throw family_error(std::string("family precondition violated: ") +
                              clause);
}

// Underlying cycle; returns its length.
std::size_t require_cycle(const WeightedOrientedGraph& g) {
  require(g.vertex_count() >= 3, "a cycle has at least 3 vertices");
  require(underlying_connected(g), "underlying graph must be connected");
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    require(g.degree(v) == 2, "every cycle vertex has degree 2");
  return g.vertex_count();
}

void require_naturally_oriented_cycle(const WeightedOrientedGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    require(g.out_neighbors(v).size() == 1 && g.in_neighbors(v).size() == 1,
            "cycle must be naturally oriented (one in- and one out-edge per "
            "vertex)");
}

void require_some_nontrivial_weight(const WeightedOrientedGraph& g) {
  require(!g.v_plus().empty(), "at least one vertex must have weight >= 2");
}

// Two odd cycles glued at a single vertex; returns their lengths.
std::pair<std::size_t, std::size_t> require_clique_sum(
    const WeightedOrientedGraph& g) {
  require(underlying_connected(g), "underlying graph must be connected");
  std::size_t joint = g.vertex_count();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 4) {
      require(joint == g.vertex_count(),
              "exactly one vertex is shared by the two cycles");
      joint = v;
    } else {
      require(g.degree(v) == 2,
              "every unshared vertex has degree 2 in a clique sum of two "
              "cycles");
    }
  }
  require(joint != g.vertex_count(),
          "exactly one vertex is shared by the two cycles");
  // Walk one cycle: leave the joint along one incident edge and follow
  // degree-2 vertices until returning.
  std::vector<std::size_t> nb = g.neighbors(joint);
  std::size_t first_len = 1;
  std::size_t prev = joint, cur = nb[0];
  while (cur != joint) {
    ++first_len;
    auto cn = g.neighbors(cur);
    require(cn.size() == 2, "cycle walk left the clique-sum structure");
    std::size_t next = cn[0] == prev ? cn[1] : cn[0];
    prev = cur;
    cur = next;
  }
  std::size_t second_len = g.vertex_count() + 1 - first_len;
  require(first_len >= 3 && second_len >= 3,
          "both glued cycles must have length >= 3");
  require(first_len % 2 == 1 && second_len % 2 == 1,
          "both glued cycles must be odd");
  return {first_len, second_len};
}

// Complete multipartite; returns part sizes.
std::vector<std::size_t> require_multipartite(const WeightedOrientedGraph& g) {
  const std::size_t n = g.vertex_count();
  require(n >= 3, "complete multipartite needs at least 3 vertices");
  // Parts are the connected components of the complement.
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [t, h] : g.edges()) adj[t][h] = adj[h][t] = true;
  std::vector<std::size_t> part(n, n);
  std::size_t parts = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (part[v] != n) continue;
    std::queue<std::size_t> todo;
    todo.push(v);
    part[v] = parts;
    while (!todo.empty()) {
      std::size_t u = todo.front();
      todo.pop();
      for (std::size_t w = 0; w < n; ++w)
        if (w != u && !adj[u][w] && part[w] == n) {
          part[w] = parts;
          todo.push(w);
        }
    }
    ++parts;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = u + 1; w < n; ++w)
      require(adj[u][w] == (part[u] != part[w]),
              "every cross-part pair adjacent, no edges inside a part");
  require(parts >= 3, "complete multipartite theorem needs m >= 3 parts");
  std::vector<std::size_t> sizes(parts, 0);
  for (std::size_t v = 0; v < n; ++v) ++sizes[part[v]];
  return sizes;
}

void require_star(const WeightedOrientedGraph& g) {
  const std::size_t n = g.vertex_count();
  require(n >= 3, "a star has at least 2 spokes");
  std::size_t hubs = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1)
      ++hubs;
    else
      require(g.degree(v) == 1, "every non-hub star vertex has degree 1");
  }
  require(hubs == 1, "a star has exactly one hub");
}

void require_natural_path(const WeightedOrientedGraph& g) {
  const std::size_t n = g.vertex_count();
  require(n >= 4, "path theorem needs length >= 3");
  require(underlying_connected(g), "underlying graph must be connected");
  std::size_t ends = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) == 1)
      ++ends;
    else
      require(g.degree(v) == 2, "every interior path vertex has degree 2");
    require(g.out_neighbors(v).size() <= 1 && g.in_neighbors(v).size() <= 1,
            "path must be naturally oriented (consistent direction)");
  }
  require(ends == 2, "a path has exactly two endpoints");
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) != 1)
      require(g.weight(v) >= 2,
              "interior path vertices must have weight >= 2");
}

bool all_weights_nontrivial(const WeightedOrientedGraph& g) {
  return g.v_plus().size() == g.vertex_count();
}

std::vector<unsigned> range_2_to(unsigned s_max) {
  if (s_max < 2)
    throw std::invalid_argument("theorem predicate needs s_max >= 2");
  std::vector<unsigned> out;
  for (unsigned s = 2; s <= s_max; ++s) out.push_back(s);
  return out;
}

}  // namespace

TheoremVerdict theorem_predicate(const WeightedOrientedGraph& g,
                                 TheoremFamily family, unsigned s_max,
                                 std::size_t cap) {
  TheoremVerdict verdict;
  verdict.family = family;

  std::optional<unsigned> witness_power;  // biconditional reverse direction
  bool biconditional = false;

  switch (family) {
    case TheoremFamily::OddCycle: {
      std::size_t len = require_cycle(g);
      require(len % 2 == 1, "cycle length must be odd");
      verdict.hypothesis = is_total_cover_strong(g);
      verdict.tested_s = range_2_to(s_max);
      biconditional = true;
      witness_power = unsigned((len + 1) / 2);  // n + 1 for C_{2n+1}
      break;
    }
    case TheoremFamily::CliqueSum: {
      auto [a, b] = require_clique_sum(g);
      verdict.hypothesis = is_total_cover_strong(g);
      verdict.tested_s = range_2_to(s_max);
      biconditional = true;
      witness_power = unsigned((a + b) / 2);  // n + m + 1
      break;
    }
    case TheoremFamily::Multipartite: {
      require_multipartite(g);
      verdict.hypothesis = is_total_cover_strong(g);
      verdict.tested_s = range_2_to(s_max);
      biconditional = true;
      witness_power = 2;
      break;
    }
    case TheoremFamily::EvenCycle: {
      std::size_t len = require_cycle(g);
      require(len % 2 == 0, "cycle length must be even");
      verdict.hypothesis =
          is_total_cover_strong(g) || has_minimal_strong_property(g, cap);
      verdict.tested_s = range_2_to(s_max);
      break;  // implication only
    }
    case TheoremFamily::CycleAllNontrivial: {
      std::size_t len = require_cycle(g);
      require(len != 4 && len != 6,
              "second-power cycle dichotomy excludes lengths 4 and 6");
      require_naturally_oriented_cycle(g);
      require_some_nontrivial_weight(g);
      verdict.hypothesis = all_weights_nontrivial(g);
      verdict.tested_s = {2};
      biconditional = true;
      witness_power = 2;
      break;
    }
    case TheoremFamily::CycleC6: {
      std::size_t len = require_cycle(g);
      require(len == 6, "this dichotomy is specific to C6");
      require_naturally_oriented_cycle(g);
      require_some_nontrivial_weight(g);
      verdict.hypothesis = all_weights_nontrivial(g);
      verdict.tested_s = {3};
      biconditional = true;
      witness_power = 3;
      break;
    }
    case TheoremFamily::NaturalCycle: {
      std::size_t len = require_cycle(g);
      require(len != 4, "the s in {2,3} cycle dichotomy excludes length 4");
      require_naturally_oriented_cycle(g);
      require_some_nontrivial_weight(g);
      verdict.hypothesis = all_weights_nontrivial(g);
      verdict.tested_s = {2, 3};
      biconditional = true;
      witness_power = 3;
      break;
    }
    case TheoremFamily::Star: {
      require_star(g);
      verdict.hypothesis = true;
      verdict.tested_s = range_2_to(s_max);
      break;
    }
    case TheoremFamily::Path: {
      require_natural_path(g);
      verdict.hypothesis = true;
      verdict.tested_s = range_2_to(s_max);
      break;
    }
  }

  bool all_equal = true;
  for (unsigned s : verdict.tested_s) {
    EqualityReport report = compare_powers(g, s, cap);
    if (!report.methods_agree)
      throw std::logic_error(
          "theorem_predicate: symbolic pipelines disagree");
    verdict.equal_by_s.push_back(report.equal);
    all_equal = all_equal && report.equal;
  }

  using Outcome = TheoremVerdict::Outcome;
  if (verdict.hypothesis) {
    verdict.outcome = all_equal ? Outcome::Satisfied : Outcome::Violated;
    verdict.detail = all_equal
                         ? "hypothesis holds and powers agree at every tested s"
                         : "hypothesis holds but powers differ";
  } else if (!biconditional) {
    verdict.outcome = Outcome::Satisfied;
    verdict.detail = "hypothesis fails; implication is vacuous";
  } else if (!all_equal) {
    verdict.outcome = Outcome::Satisfied;
    verdict.detail = "hypothesis fails and powers differ, as the theorem "
                     "demands";
  } else if (witness_power &&
             *witness_power > verdict.tested_s.back()) {
    verdict.outcome = Outcome::Inconclusive;
    verdict.required_witness_power = witness_power;
    verdict.detail = "powers agree on the tested range, but the reverse "
                     "direction's witness lives at a higher power";
  } else {
    verdict.outcome = Outcome::Violated;
    verdict.detail = "hypothesis fails yet powers agree on the tested range";
  }
  return verdict;
}

}  // namespace woi
