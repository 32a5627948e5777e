#pragma once

// Monomial ideals, represented by their unique minimal generating set.
// Generators are kept in descending graded-lex order, so two ideals are equal
// iff their generator vectors are equal.  The zero ideal has no generators;
// the unit ideal is generated by 1 and absorbs nothing in intersections
// (unit ∩ J = J falls out of the lcm construction).

#include <cstddef>
#include <span>
#include <vector>

#include "woi/monomial.hpp"

namespace woi {

// Hard ceiling on generators per ideal (pre- and post-minimalization).
inline constexpr std::size_t kGeneratorCeiling = 200000;

struct generator_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class MonomialIdeal {
public:
  static MonomialIdeal zero(UniverseRef universe);
  static MonomialIdeal unit(UniverseRef universe);
  // Minimalizes: drops duplicates and any generator divisible by another.
  static MonomialIdeal of(UniverseRef universe, std::vector<Monomial> gens);

  const UniverseRef& universe() const noexcept { return universe_; }
  // Minimal generators, descending graded-lex.
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t generator_count() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept {
    return gens_.size() == 1 && gens_.front().is_one();
  }

  bool operator==(const MonomialIdeal& other) const;
  bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

private:
  MonomialIdeal(UniverseRef universe, std::vector<Monomial> gens)
      : universe_(std::move(universe)), gens_(std::move(gens)) {}

  UniverseRef universe_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(UniverseRef universe, std::vector<Monomial> gens);

bool contains_monomial(const MonomialIdeal& ideal, const Monomial& m);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
// Left fold with minimalization after every step; rejects an empty list
// (no universe to build the empty intersection in).
MonomialIdeal intersect_all(std::span<const MonomialIdeal> ideals);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
// s >= 1; s = 0 is rejected.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned s);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal radical(const MonomialIdeal& ideal);

bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b);
// Every generator of `a` lies in `b`.
bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b);

// Image of the ideal under substituting 1 for every variable outside `keep`,
// i.e. the contraction of its extension to the localization at those
// variables.  May return the unit ideal (some generator maps to 1).
MonomialIdeal localize_contract(const MonomialIdeal& ideal,
                                const std::vector<std::size_t>& keep);

// "(x1*x2^2, x3)"; zero is "(0)", unit is "(1)".  Round-trips bit-exactly.
std::string to_string(const MonomialIdeal& ideal);
MonomialIdeal parse_ideal(const UniverseRef& universe, std::string_view text);

}  // namespace woi
