#include "woi/monomial.hpp"

#include <algorithm>
#include <cctype>

namespace woi {

VariableUniverse::VariableUniverse(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty())
      throw std::invalid_argument("variable name must be non-empty");
    if (!index_.emplace(names_[i], i).second)
      throw std::invalid_argument("duplicate variable name: " + names_[i]);
  }
}

std::size_t VariableUniverse::index(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw std::out_of_range("unknown variable: " + std::string(name));
  return it->second;
}

std::optional<std::size_t> VariableUniverse::find(
    std::string_view name) const noexcept {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

UniverseRef make_universe(std::vector<std::string> names) {
  return std::make_shared<const VariableUniverse>(std::move(names));
}

UniverseRef make_universe(std::size_t n, const std::string& stem) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return make_universe(std::move(names));
}

namespace {

void check_universe(const UniverseRef& u) {
  if (!u) throw std::invalid_argument("null variable universe");
}

void check_exponent(Exponent e) {
  if (e >= kExponentCap)
    throw exponent_overflow("exponent " + std::to_string(e) +
                            " reaches cap " + std::to_string(kExponentCap));
}

void require_same_universe(const Monomial& a, const Monomial& b,
                           const char* op) {
  if (!same_universe(a.universe(), b.universe()))
    throw universe_mismatch(std::string(op) +
                            ": monomials from different universes");
}

}  // namespace

Monomial::Monomial(UniverseRef universe)
    : universe_(std::move(universe)) {
  check_universe(universe_);
  exps_.assign(universe_->size(), 0);
}

Monomial::Monomial(UniverseRef universe, std::vector<Exponent> exponents)
    : universe_(std::move(universe)), exps_(std::move(exponents)) {
  check_universe(universe_);
  if (exps_.size() != universe_->size())
    throw std::invalid_argument("exponent vector length mismatch");
  for (Exponent e : exps_) check_exponent(e);
}

Monomial Monomial::variable(const UniverseRef& universe, std::size_t var,
                            Exponent e) {
  check_universe(universe);
  if (var >= universe->size())
    throw std::out_of_range("variable index out of range");
  check_exponent(e);
  std::vector<Exponent> exps(universe->size(), 0);
  exps[var] = e;
  return Monomial(universe, std::move(exps));
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e == 0; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) s.push_back(i);
  return s;
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_universe(a, b, "divides");
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] > eb[i]) return false;
  return true;
}

Monomial lcm_mono(const Monomial& a, const Monomial& b) {
  require_same_universe(a, b, "lcm_mono");
  std::vector<Exponent> exps(a.exponents());
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < exps.size(); ++i)
    exps[i] = std::max(exps[i], eb[i]);
  return Monomial(a.universe(), std::move(exps));
}

Monomial mul_mono(const Monomial& a, const Monomial& b) {
  require_same_universe(a, b, "mul_mono");
  std::vector<Exponent> exps(a.exponents());
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    std::uint64_t s = std::uint64_t(exps[i]) + eb[i];
    if (s >= kExponentCap)
      throw exponent_overflow("mul_mono: exponent of " +
                              a.universe()->name(i) + " reaches cap");
    exps[i] = Exponent(s);
  }
  return Monomial(a.universe(), std::move(exps));
}

Monomial subst_one(const Monomial& m, const std::vector<std::size_t>& keep) {
  std::vector<bool> mask(m.universe()->size(), false);
  for (std::size_t v : keep) {
    if (v >= mask.size())
      throw std::out_of_range("subst_one: variable index out of range");
    mask[v] = true;
  }
  std::vector<Exponent> exps(m.exponents());
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (!mask[i]) exps[i] = 0;
  return Monomial(m.universe(), std::move(exps));
}

Monomial phi_map(const Monomial& m,
                 const std::map<std::size_t, int>& var_weights) {
  std::vector<Exponent> exps(m.exponents());
  for (auto [v, w] : var_weights) {
    if (v >= exps.size())
      throw std::out_of_range("phi_map: variable index out of range");
    if (w < 1) throw std::invalid_argument("phi_map: weight must be >= 1");
    std::uint64_t s = std::uint64_t(exps[v]) * std::uint64_t(w);
    if (s >= kExponentCap)
      throw exponent_overflow("phi_map: exponent of " + m.universe()->name(v) +
                              " reaches cap");
    exps[v] = Exponent(s);
  }
  return Monomial(m.universe(), std::move(exps));
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  require_same_universe(a, b, "grlex_compare");
  std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
  return 0;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  const auto& exps = m.exponents();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += m.universe()->name(i);
    if (exps[i] > 1) {
      out += '^';
      out += std::to_string(exps[i]);
    }
  }
  return out;
}

Monomial parse_monomial(const UniverseRef& universe, std::string_view text) {
  check_universe(universe);
  if (text.empty()) throw parse_error("empty monomial");
  if (text == "1") return Monomial(universe);
  std::vector<Exponent> exps(universe->size(), 0);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t star = text.find('*', pos);
    std::string_view factor = text.substr(
        pos, star == std::string_view::npos ? std::string_view::npos
                                            : star - pos);
    if (factor.empty()) throw parse_error("empty factor in monomial");
    std::string_view name = factor;
    Exponent e = 1;
    if (std::size_t caret = factor.find('^');
        caret != std::string_view::npos) {
      name = factor.substr(0, caret);
      std::string_view digits = factor.substr(caret + 1);
      if (digits.empty() ||
          !std::all_of(digits.begin(), digits.end(),
                       [](unsigned char c) { return std::isdigit(c); }))
        throw parse_error("bad exponent in factor: " + std::string(factor));
      unsigned long long value = std::stoull(std::string(digits));
      if (value == 0) throw parse_error("zero exponent in monomial text");
      if (value >= kExponentCap)
        throw exponent_overflow("parsed exponent reaches cap");
      e = Exponent(value);
    }
    auto idx = universe->find(name);
    if (!idx) throw parse_error("unknown variable: " + std::string(name));
    if (exps[*idx] != 0)
      throw parse_error("variable repeated in monomial: " + std::string(name));
    exps[*idx] = e;
    if (star == std::string_view::npos) break;
    pos = star + 1;
    if (pos == text.size()) throw parse_error("trailing '*' in monomial");
  }
  return Monomial(universe, std::move(exps));
}

}  // namespace woi
