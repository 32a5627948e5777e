#include <doctest.h>

#include <algorithm>
#include <set>

#include "woi/ideal.hpp"
#include "woi/rng.hpp"

using namespace woi;

namespace {

// Brute-force minimal generating set on raw exponent vectors, independent of
// the library's ordering and divisibility code.
std::set<std::vector<Exponent>> brute_minimal(
    std::set<std::vector<Exponent>> gens) {
  std::set<std::vector<Exponent>> keep;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& other : gens) {
      if (other == g) continue;
      bool div = true;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (other[i] > g[i]) { div = false; break; }
      if (div) { redundant = true; break; }
    }
    if (!redundant) keep.insert(g);
  }
  return keep;
}

std::set<std::vector<Exponent>> exps_of(const MonomialIdeal& ideal) {
  std::set<std::vector<Exponent>> out;
  for (const Monomial& g : ideal.generators()) out.insert(g.exponents());
  return out;
}

MonomialIdeal ideal_of(const UniverseRef& u,
                       std::initializer_list<const char*> gens) {
  std::vector<Monomial> ms;
  for (const char* g : gens) ms.push_back(parse_monomial(u, g));
  return MonomialIdeal::of(u, std::move(ms));
}

MonomialIdeal random_ideal(const UniverseRef& u, SeededRng& rng,
                           std::size_t count, Exponent max_exp = 4) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Exponent> e(u->size());
    for (auto& x : e) x = Exponent(rng.below(max_exp + 1));
    gens.push_back(Monomial(u, std::move(e)));
  }
  return MonomialIdeal::of(u, std::move(gens));
}

Monomial random_monomial(const UniverseRef& u, SeededRng& rng,
                         Exponent max_exp = 6) {
  std::vector<Exponent> e(u->size());
  for (auto& x : e) x = Exponent(rng.below(max_exp + 1));
  return Monomial(u, std::move(e));
}

}  // namespace

TEST_CASE("zero and unit ideals") {
  auto u = make_universe(2);
  CHECK(MonomialIdeal::zero(u).is_zero());
  CHECK(MonomialIdeal::unit(u).is_unit());
  CHECK(to_string(MonomialIdeal::zero(u)) == "(0)");
  CHECK(to_string(MonomialIdeal::unit(u)) == "(1)");
  // 1 absorbs every other generator
  CHECK(ideal_of(u, {"1", "x1", "x2^3"}).is_unit());
  // intersecting with the unit ideal changes nothing
  MonomialIdeal j = ideal_of(u, {"x1^2", "x2"});
  CHECK(intersect(MonomialIdeal::unit(u), j) == j);
  CHECK(intersect(MonomialIdeal::zero(u), j).is_zero());
  CHECK(product(MonomialIdeal::unit(u), j) == j);
}

TEST_CASE("minimal generating set matches a brute-force filter") {
  auto u = make_universe({"x2", "x3", "x4"});
  // a squared three-generator ideal, already minimal
  MonomialIdeal sq = ideal_of(
      u, {"x2^4", "x2^3*x3", "x2^2*x3^2", "x2^2*x4", "x2*x3*x4", "x4^2"});
  CHECK(sq.generator_count() == 6);
  CHECK(exps_of(sq) == brute_minimal(exps_of(sq)));
  // adding redundant multiples changes nothing
  MonomialIdeal padded =
      ideal_of(u, {"x2^4", "x2^3*x3", "x2^2*x3^2", "x2^2*x4", "x2*x3*x4",
                   "x4^2", "x2^5", "x2^2*x3^2*x4^2", "x2^4*x4^2"});
  CHECK(padded == sq);
}

TEST_CASE("minimalize agrees with brute force on random generator dumps") {
  auto u = make_universe(4);
  SeededRng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Monomial> dump;
    std::set<std::vector<Exponent>> raw;
    for (int i = 0; i < 12; ++i) {
      dump.push_back(random_monomial(u, rng, 4));
      raw.insert(dump.back().exponents());
    }
    MonomialIdeal ideal = MonomialIdeal::of(u, std::move(dump));
    CHECK(exps_of(ideal) == brute_minimal(raw));
    // generators are stored strictly descending in graded-lex
    const auto& gens = ideal.generators();
    for (std::size_t i = 1; i < gens.size(); ++i)
      CHECK(grlex_compare(gens[i - 1], gens[i]) > 0);
  }
}

TEST_CASE("membership distributes over intersection, product and sum") {
  auto u = make_universe(3);
  SeededRng rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal a = random_ideal(u, rng, 5);
    MonomialIdeal b = random_ideal(u, rng, 5);
    MonomialIdeal meet = intersect(a, b);
    MonomialIdeal join = sum(a, b);
    for (int probe = 0; probe < 25; ++probe) {
      Monomial m = random_monomial(u, rng);
      bool in_a = contains_monomial(a, m);
      bool in_b = contains_monomial(b, m);
      CHECK(contains_monomial(meet, m) == (in_a && in_b));
      CHECK(contains_monomial(join, m) == (in_a || in_b));
    }
    for (const Monomial& ga : a.generators())
      for (const Monomial& gb : b.generators())
        CHECK(contains_monomial(product(a, b), mul_mono(ga, gb)));
  }
}

TEST_CASE("a two-cover intersection computed by hand") {
  auto u = make_universe(4);
  for (int w = 2; w <= 3; ++w) {
    MonomialIdeal left = MonomialIdeal::of(
        u, {Monomial::variable(u, 1, Exponent(w)), Monomial::variable(u, 2),
            Monomial::variable(u, 3)});
    MonomialIdeal right =
        MonomialIdeal::of(u, {Monomial::variable(u, 1), Monomial::variable(u, 3)});
    MonomialIdeal expected = MonomialIdeal::of(
        u, {Monomial::variable(u, 1, Exponent(w)),
            mul_mono(Monomial::variable(u, 1), Monomial::variable(u, 2)),
            Monomial::variable(u, 3)});
    CHECK(intersect(left, right) == expected);
  }
}

TEST_CASE("powers fold repeated products") {
  auto u = make_universe(3);
  SeededRng rng(303);
  MonomialIdeal ideal = random_ideal(u, rng, 4, 3);
  CHECK(power(ideal, 1) == ideal);
  CHECK(power(ideal, 2) == product(ideal, ideal));
  CHECK(power(ideal, 3) == product(ideal, product(ideal, ideal)));
  CHECK_THROWS_AS(power(ideal, 0), std::invalid_argument);
}

TEST_CASE("intersect_all folds left and rejects emptiness") {
  auto u = make_universe(2);
  std::vector<MonomialIdeal> ideals{ideal_of(u, {"x1^2", "x2"}),
                                    ideal_of(u, {"x1", "x2^3"}),
                                    ideal_of(u, {"x2"})};
  MonomialIdeal folded = intersect_all(ideals);
  CHECK(folded == intersect(intersect(ideals[0], ideals[1]), ideals[2]));
  std::vector<MonomialIdeal> none;
  CHECK_THROWS_AS(intersect_all(none), std::invalid_argument);
}

TEST_CASE("radical strips exponents") {
  auto u = make_universe(3);
  CHECK(radical(ideal_of(u, {"x1^3*x2^2", "x3^4"})) ==
        ideal_of(u, {"x1*x2", "x3"}));
  CHECK(radical(MonomialIdeal::zero(u)).is_zero());
  CHECK(radical(MonomialIdeal::unit(u)).is_unit());
}

TEST_CASE("subset and equality checks") {
  auto u = make_universe(2);
  MonomialIdeal big = ideal_of(u, {"x1", "x2"});
  MonomialIdeal small = ideal_of(u, {"x1^2", "x1*x2^3"});
  CHECK(is_subset(small, big));
  CHECK(!is_subset(big, small));
  CHECK(ideal_equals(big, ideal_of(u, {"x2", "x1", "x1*x2"})));
}

TEST_CASE("localization keeps exactly the monomials seen through the cover") {
  auto u = make_universe(4);
  // a four-cycle edge ideal squared, contracted at an opposite pair
  MonomialIdeal edge =
      ideal_of(u, {"x1*x2^2", "x2^2*x3", "x3*x4", "x4*x1"});
  MonomialIdeal contracted = localize_contract(power(edge, 2), {0, 2});
  CHECK(contracted == ideal_of(u, {"x1^2", "x1*x3", "x3^2"}));
  // contraction via an independent membership characterization
  MonomialIdeal squared = power(edge, 2);
  SeededRng rng(404);
  for (int probe = 0; probe < 60; ++probe) {
    Monomial m = random_monomial(u, rng);
    bool by_defn = false;
    for (const Monomial& g : squared.generators())
      if (divides(subst_one(g, {0, 2}), subst_one(m, {0, 2}))) {
        by_defn = true;
        break;
      }
    CHECK(contains_monomial(contracted, subst_one(m, {0, 2})) == by_defn);
  }
}

TEST_CASE("localization commutes with intersection") {
  auto u = make_universe(4);
  SeededRng rng(505);
  for (int trial = 0; trial < 25; ++trial) {
    MonomialIdeal a = random_ideal(u, rng, 5);
    MonomialIdeal b = random_ideal(u, rng, 5);
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < 4; ++v)
      if (rng.coin()) keep.push_back(v);
    CHECK(localize_contract(intersect(a, b), keep) ==
          intersect(localize_contract(a, keep), localize_contract(b, keep)));
    CHECK(is_subset(a, localize_contract(a, keep)));
  }
}

TEST_CASE("generator ceiling stops oversized expansions up front") {
  auto u = make_universe(2);
  std::vector<Monomial> antichain;
  for (Exponent i = 0; i < 500; ++i)
    antichain.push_back(Monomial(u, {i, Exponent(499 - i)}));
  MonomialIdeal wide = MonomialIdeal::of(u, std::move(antichain));
  CHECK(wide.generator_count() == 500);
  CHECK_THROWS_AS(product(wide, wide), generator_limit_error);
  CHECK_THROWS_AS(intersect(wide, wide), generator_limit_error);
}

TEST_CASE("ideal text form round-trips") {
  auto u = make_universe(3);
  MonomialIdeal ideal = ideal_of(u, {"x1*x2^2", "x2*x3", "x3^4"});
  CHECK(to_string(ideal) == "(x3^4, x1*x2^2, x2*x3)");
  CHECK(parse_ideal(u, to_string(ideal)) == ideal);
  CHECK(parse_ideal(u, "(0)").is_zero());
  CHECK(parse_ideal(u, "(1)").is_unit());
  SeededRng rng(606);
  for (int trial = 0; trial < 30; ++trial) {
    MonomialIdeal r = random_ideal(u, rng, 6);
    CHECK(parse_ideal(u, to_string(r)) == r);
  }
  CHECK_THROWS_AS(parse_ideal(u, "x1, x2"), parse_error);
  CHECK_THROWS_AS(parse_ideal(u, "()"), parse_error);
}
