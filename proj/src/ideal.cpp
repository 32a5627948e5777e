#include "woi/ideal.hpp"

#include <algorithm>

namespace woi {

namespace {

void check_ceiling(std::size_t count, const char* where) {
  if (count > kGeneratorCeiling)
    throw generator_limit_error(std::string(where) + ": generator count " +
                                std::to_string(count) + " exceeds ceiling " +
                                std::to_string(kGeneratorCeiling));
}

void require_same_universe(const MonomialIdeal& a, const MonomialIdeal& b,
                           const char* op) {
  if (!same_universe(a.universe(), b.universe()))
    throw universe_mismatch(std::string(op) +
                            ": ideals from different universes");
}

std::vector<Monomial> minimalize_vec(const UniverseRef& universe,
                                     std::vector<Monomial> gens) {
  check_ceiling(gens.size(), "minimalize");
  for (const Monomial& g : gens)
    if (!same_universe(g.universe(), universe))
      throw universe_mismatch("minimalize: generator from a different universe");
  // Ascending degree so a potential divisor is always seen before the
  // monomials it divides.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return grlex_compare(a, b) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& k : kept) {
      if (k.degree() > g.degree()) break;  // kept is degree-sorted
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  std::reverse(kept.begin(), kept.end());  // descending canonical order
  return kept;
}

}  // namespace

MonomialIdeal MonomialIdeal::zero(UniverseRef universe) {
  return MonomialIdeal(std::move(universe), {});
}

MonomialIdeal MonomialIdeal::unit(UniverseRef universe) {
  Monomial one(universe);
  return MonomialIdeal(std::move(universe), {std::move(one)});
}

MonomialIdeal MonomialIdeal::of(UniverseRef universe,
                                std::vector<Monomial> gens) {
  auto minimal = minimalize_vec(universe, std::move(gens));
  return MonomialIdeal(std::move(universe), std::move(minimal));
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  return same_universe(universe_, other.universe_) && gens_ == other.gens_;
}

MonomialIdeal minimalize(UniverseRef universe, std::vector<Monomial> gens) {
  return MonomialIdeal::of(std::move(universe), std::move(gens));
}

bool contains_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  if (!same_universe(ideal.universe(), m.universe()))
    throw universe_mismatch("contains_monomial: universe mismatch");
  for (const Monomial& g : ideal.generators())
    if (divides(g, m)) return true;
  return false;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_universe(a, b, "intersect");
  std::vector<Monomial> gens;
  check_ceiling(a.generator_count() * b.generator_count(), "intersect");
  gens.reserve(a.generator_count() * b.generator_count());
  for (const Monomial& f : a.generators())
    for (const Monomial& g : b.generators())
      gens.push_back(lcm_mono(f, g));
  return MonomialIdeal::of(a.universe(), std::move(gens));
}

MonomialIdeal intersect_all(std::span<const MonomialIdeal> ideals) {
  if (ideals.empty())
    throw std::invalid_argument("intersect_all: empty ideal list");
  MonomialIdeal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i)
    acc = intersect(acc, ideals[i]);
  return acc;
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_universe(a, b, "product");
  std::vector<Monomial> gens;
  check_ceiling(a.generator_count() * b.generator_count(), "product");
  gens.reserve(a.generator_count() * b.generator_count());
  for (const Monomial& f : a.generators())
    for (const Monomial& g : b.generators())
      gens.push_back(mul_mono(f, g));
  return MonomialIdeal::of(a.universe(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned s) {
  if (s == 0) throw std::invalid_argument("power: s must be >= 1");
  MonomialIdeal acc = ideal;
  for (unsigned i = 1; i < s; ++i) acc = product(acc, ideal);
  return acc;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_universe(a, b, "sum");
  std::vector<Monomial> gens(a.generators());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::of(a.universe(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generator_count());
  for (const Monomial& g : ideal.generators()) {
    std::vector<Exponent> exps(g.exponents());
    for (Exponent& e : exps) e = e > 0 ? 1 : 0;
    gens.emplace_back(ideal.universe(), std::move(exps));
  }
  return MonomialIdeal::of(ideal.universe(), std::move(gens));
}

bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a == b;
}

bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_universe(a, b, "is_subset");
  for (const Monomial& g : a.generators())
    if (!contains_monomial(b, g)) return false;
  return true;
}

MonomialIdeal localize_contract(const MonomialIdeal& ideal,
                                const std::vector<std::size_t>& keep) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generator_count());
  for (const Monomial& g : ideal.generators())
    gens.push_back(subst_one(g, keep));
  return MonomialIdeal::of(ideal.universe(), std::move(gens));
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.generator_count(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.generators()[i]);
  }
  out += ')';
  return out;
}

MonomialIdeal parse_ideal(const UniverseRef& universe, std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw parse_error("ideal text must be parenthesized");
  std::string_view body = text.substr(1, text.size() - 2);
  if (body == "0") return MonomialIdeal::zero(universe);
  std::vector<Monomial> gens;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(", ", pos);
    std::string_view piece = body.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    gens.push_back(parse_monomial(universe, piece));
    if (comma == std::string_view::npos) break;
    pos = comma + 2;
  }
  return MonomialIdeal::of(universe, std::move(gens));
}

}  // namespace woi
