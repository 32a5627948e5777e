#pragma once

// Monomials over a fixed, ordered set of variables.  Exponent vectors are
// dense (one slot per variable of the universe) and bounded: any operation
// that would push an exponent to kExponentCap or beyond throws.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace woi {

struct universe_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct exponent_overflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ordered list of variable names; the order is the canonical variable order
// used everywhere (printing, graded-lex comparisons, JSON).
class VariableUniverse {
public:
  explicit VariableUniverse(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  // Throws std::out_of_range for unknown names.
  std::size_t index(std::string_view name) const;
  std::optional<std::size_t> find(std::string_view name) const noexcept;

  bool operator==(const VariableUniverse& other) const noexcept {
    return names_ == other.names_;
  }

private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

using UniverseRef = std::shared_ptr<const VariableUniverse>;

UniverseRef make_universe(std::vector<std::string> names);
// x1..xn (or <stem>1..<stem>n).
UniverseRef make_universe(std::size_t n, const std::string& stem = "x");

inline bool same_universe(const UniverseRef& a, const UniverseRef& b) {
  return a == b || (a && b && *a == *b);
}

using Exponent = std::uint32_t;
// Exponents live in [0, kExponentCap); reaching the cap is a hard error.
inline constexpr Exponent kExponentCap = 1u << 16;

class Monomial {
public:
  // The constant monomial 1.
  explicit Monomial(UniverseRef universe);
  Monomial(UniverseRef universe, std::vector<Exponent> exponents);

  static Monomial variable(const UniverseRef& universe, std::size_t var,
                           Exponent e = 1);

  const UniverseRef& universe() const noexcept { return universe_; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }
  Exponent exponent(std::size_t i) const { return exps_.at(i); }
  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;
  std::vector<std::size_t> support() const;

  bool operator==(const Monomial& other) const {
    return same_universe(universe_, other.universe_) && exps_ == other.exps_;
  }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

private:
  UniverseRef universe_;
  std::vector<Exponent> exps_;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm_mono(const Monomial& a, const Monomial& b);
Monomial mul_mono(const Monomial& a, const Monomial& b);

// Sets the exponents of all variables NOT in `keep` to zero (the image of the
// monomial under substituting 1 for the dropped variables).
Monomial subst_one(const Monomial& m, const std::vector<std::size_t>& keep);

// Multiplies the exponent of each mapped variable by its weight (w >= 1).
Monomial phi_map(const Monomial& m,
                 const std::map<std::size_t, int>& var_weights);

// Graded lexicographic order: total degree first; ties broken
// lexicographically with the earliest variable most significant.
// Returns <0, 0, >0.  Both arguments must share a universe.
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare(a, b) < 0;
  }
};

// "x1^2*x2*x5^4"; constant prints as "1".  Factors in variable order,
// exponent 1 elided.  parse_monomial round-trips this form bit-exactly.
std::string to_string(const Monomial& m);
Monomial parse_monomial(const UniverseRef& universe, std::string_view text);

}  // namespace woi
