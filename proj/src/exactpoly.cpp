#include "fibonomial/exactpoly.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fibonomial {

BiExponent BivariateTraits::product(const BiExponent& a, const BiExponent& b) {
  constexpr std::uint64_t limit = std::numeric_limits<std::uint32_t>::max();
  const std::uint64_t s = std::uint64_t{a.s} + b.s;
  const std::uint64_t t = std::uint64_t{a.t} + b.t;
  if (s > limit || t > limit) throw std::overflow_error("IntPoly2 exponent overflow");
  return {static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t)};
}

IntPoly2 st_monomial(std::uint32_t s_deg, std::uint32_t t_deg, const Integer& c) {
  return IntPoly2::monomial({s_deg, t_deg}, c);
}

namespace {

// powers[i] = base^i for i <= max_exp, built incrementally.
std::vector<QPoly> power_table(const QPoly& base, std::uint32_t max_exp) {
  std::vector<QPoly> powers;
  powers.reserve(max_exp + 1);
  powers.emplace_back(1L);
  for (std::uint32_t i = 1; i <= max_exp; ++i) powers.push_back(powers.back() * base);
  return powers;
}

Integer integer_power(const Integer& base, const Integer& exp) {
  if (exp == 0) return 1;
  if (base == 0 || base == 1) return base;
  if (base == -1) return mpz_even_p(exp.get_mpz_t()) ? Integer(1) : Integer(-1);
  if (!exp.fits_ulong_p()) throw std::overflow_error("evaluate: exponent too large");
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
  return r;
}

void append_term(std::ostringstream& out, bool first, const Integer& coeff, const std::string& monomial) {
  Integer magnitude = abs(coeff);
  if (first) {
    if (coeff < 0) out << "-";
  } else {
    out << (coeff < 0 ? " - " : " + ");
  }
  if (monomial.empty()) {
    out << magnitude.get_str();
  } else {
    if (magnitude != 1) out << magnitude.get_str() << "*";
    out << monomial;
  }
}

std::string power_text(const char* var, const std::string& exp) {
  if (exp == "1") return var;
  return std::string(var) + "^" + exp;
}

}  // namespace

QPoly substitute_st(const IntPoly2& p, const QPoly& s_img, const QPoly& t_img) {
  if (p.is_zero()) return {};
  std::uint32_t max_s = 0;
  std::uint32_t max_t = 0;
  for (const auto& [e, c] : p.terms()) {
    max_s = std::max(max_s, e.s);
    max_t = std::max(max_t, e.t);
  }
  const auto s_pow = power_table(s_img, max_s);
  const auto t_pow = power_table(t_img, max_t);
  QPoly result;
  for (const auto& [e, c] : p.terms()) {
    QPoly term = s_pow[e.s] * t_pow[e.t];
    result.add_scaled(term, Integer(0), c);
  }
  return result;
}

QPoly rescale(const QPoly& p, const Integer& a) {
  if (a < 1) throw std::invalid_argument("rescale: factor must be positive");
  QPoly result;
  for (const auto& [e, c] : p.terms()) result.add_term(e * a, c);
  return result;
}

Integer evaluate(const IntPoly2& p, const Integer& s, const Integer& t) {
  Integer total = 0;
  for (const auto& [e, c] : p.terms()) total += c * integer_power(s, e.s) * integer_power(t, e.t);
  return total;
}

Integer evaluate(const QPoly& p, const Integer& q) {
  Integer total = 0;
  for (const auto& [e, c] : p.terms()) total += c * integer_power(q, e);
  return total;
}

std::string to_string(const IntPoly2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string monomial;
    if (e.s > 0) monomial = power_text("s", std::to_string(e.s));
    if (e.t > 0) monomial += (monomial.empty() ? "" : "*") + power_text("t", std::to_string(e.t));
    append_term(out, first, c, monomial);
    first = false;
  }
  return out.str();
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    append_term(out, first, c, e == 0 ? std::string{} : power_text("q", e.get_str()));
    first = false;
  }
  return out.str();
}

}  // namespace fibonomial
