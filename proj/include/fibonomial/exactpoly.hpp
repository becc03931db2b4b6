#pragma once

// Exact sparse polynomials with unbounded integer coefficients.
//
// Two families share one implementation:
//   IntPoly2  - bivariate in s, t (Lucas polynomials, tiling weights s^m t^d)
//   QPoly     - univariate in q with unbounded exponents (q-analogs)
//
// Terms are kept in a std::map under a monomial order, zero coefficients are
// never stored, so equality of polynomials is equality of term maps.

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <string>
#include <utility>

#include "fibonomial/errors.hpp"

namespace fibonomial {

using Integer = mpz_class;

/// Exponent pair of a monomial s^s t^t.
struct BiExponent {
  std::uint32_t s = 0;
  std::uint32_t t = 0;

  friend bool operator==(const BiExponent&, const BiExponent&) = default;
};

/// Graded-lexicographic order with s > t, ascending.
struct GradedLex {
  bool operator()(const BiExponent& a, const BiExponent& b) const {
    const std::uint64_t da = std::uint64_t{a.s} + a.t;
    const std::uint64_t db = std::uint64_t{b.s} + b.t;
    if (da != db) return da < db;
    return a.s < b.s;
  }
};

struct BivariateTraits {
  using exponent_type = BiExponent;
  using order = GradedLex;

  static bool divides(const BiExponent& d, const BiExponent& e) { return d.s <= e.s && d.t <= e.t; }
  static BiExponent quotient(const BiExponent& e, const BiExponent& d) { return {e.s - d.s, e.t - d.t}; }
  static BiExponent product(const BiExponent& a, const BiExponent& b);
  static bool is_zero(const BiExponent& e) { return e.s == 0 && e.t == 0; }
};

struct UnivariateTraits {
  using exponent_type = Integer;
  using order = std::less<Integer>;

  static bool divides(const Integer& d, const Integer& e) { return d <= e; }
  static Integer quotient(const Integer& e, const Integer& d) { return e - d; }
  static Integer product(const Integer& a, const Integer& b) { return a + b; }
  static bool is_zero(const Integer& e) { return e == 0; }
};

template <class Traits>
class SparsePolynomial {
 public:
  using exponent_type = typename Traits::exponent_type;
  using term_map = std::map<exponent_type, Integer, typename Traits::order>;

  SparsePolynomial() = default;
  SparsePolynomial(const Integer& constant) { add_term(exponent_type{}, constant); }  // NOLINT
  SparsePolynomial(long constant) : SparsePolynomial(Integer(constant)) {}           // NOLINT

  static SparsePolynomial monomial(const exponent_type& e, const Integer& c = 1) {
    SparsePolynomial p;
    p.add_term(e, c);
    return p;
  }

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const exponent_type& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Largest term under the monomial order. Precondition: non-zero.
  const typename term_map::value_type& leading() const { return *terms_.rbegin(); }

  /// Adds c * x^e in place, dropping the term if it cancels.
  void add_term(const exponent_type& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// this += c * x^shift * other
  void add_scaled(const SparsePolynomial& other, const exponent_type& shift, const Integer& c) {
    for (const auto& [e, coeff] : other.terms_) add_term(Traits::product(e, shift), c * coeff);
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator-(SparsePolynomial a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    for (const auto& [e, c] : small.terms_) r.add_scaled(large, e, c);
    return r;
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) { return a.terms_ == b.terms_; }

 private:
  term_map terms_;
};

using IntPoly2 = SparsePolynomial<BivariateTraits>;
using QPoly = SparsePolynomial<UnivariateTraits>;

/// Exact quotient p / r. Throws NotDivisible when the long division by the
/// leading term of r leaves a non-zero remainder.
template <class Traits>
SparsePolynomial<Traits> exact_div(SparsePolynomial<Traits> p, const SparsePolynomial<Traits>& r) {
  if (r.is_zero()) throw std::invalid_argument("exact_div: divisor is the zero polynomial");
  SparsePolynomial<Traits> quotient;
  const auto& [lead_exp, lead_coeff] = r.leading();
  while (!p.is_zero()) {
    const auto [exp, coeff] = p.leading();
    if (!Traits::divides(lead_exp, exp) || !mpz_divisible_p(coeff.get_mpz_t(), lead_coeff.get_mpz_t()))
      throw NotDivisible("exact_div: non-zero remainder");
    const auto shift = Traits::quotient(exp, lead_exp);
    const Integer factor = coeff / lead_coeff;
    quotient.add_term(shift, factor);
    p.add_scaled(r, shift, -factor);
  }
  return quotient;
}

// Named forms of the ring operations.
inline IntPoly2 add(const IntPoly2& p, const IntPoly2& r) { return p + r; }
inline QPoly add(const QPoly& p, const QPoly& r) { return p + r; }
inline IntPoly2 mul(const IntPoly2& p, const IntPoly2& r) { return p * r; }
inline QPoly mul(const QPoly& p, const QPoly& r) { return p * r; }

// Convenience constructors.
inline IntPoly2 var_s() { return IntPoly2::monomial({1, 0}); }
inline IntPoly2 var_t() { return IntPoly2::monomial({0, 1}); }
inline QPoly var_q() { return QPoly::monomial(Integer(1)); }
inline QPoly q_power(const Integer& e) { return QPoly::monomial(e); }
IntPoly2 st_monomial(std::uint32_t s_deg, std::uint32_t t_deg, const Integer& c = 1);

/// p(s_img, t_img).
QPoly substitute_st(const IntPoly2& p, const QPoly& s_img, const QPoly& t_img);

/// q -> q^a. Throws std::invalid_argument unless a >= 1.
QPoly rescale(const QPoly& p, const Integer& a);

Integer evaluate(const IntPoly2& p, const Integer& s, const Integer& t);
/// Throws std::overflow_error if an exponent is too large to raise |q| > 1 to.
Integer evaluate(const QPoly& p, const Integer& q);

/// Text form: `s^3 + 2*s*t` (descending graded-lex), `1 + q + q^2` (ascending).
std::string to_string(const IntPoly2& p);
std::string to_string(const QPoly& p);

}  // namespace fibonomial
