#include "fibonomial/sequences.hpp"

#include <string>

namespace fibonomial {

namespace {

void require_k_le_n(const char* what, unsigned n, unsigned k) {
  if (k > n)
    throw IndexError(std::string(what) + ": k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
}

IntPoly2 lucas_recurrence(unsigned n, IntPoly2 first, IntPoly2 second) {
  if (n == 0) return first;
  const IntPoly2 s = var_s();
  const IntPoly2 t = var_t();
  IntPoly2 prev = std::move(first);
  IntPoly2 cur = std::move(second);
  for (unsigned i = 2; i <= n; ++i) {
    IntPoly2 next = s * cur + t * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly2 lucas_factorial(unsigned n) {
  IntPoly2 r(1L);
  for (unsigned i = 1; i <= n; ++i) r *= lucas_poly(i);
  return r;
}

}  // namespace

Integer fib(unsigned n) {
  Integer r;
  mpz_fib_ui(r.get_mpz_t(), n);
  return r;
}

Integer lucas(unsigned n) {
  Integer r;
  mpz_lucnum_ui(r.get_mpz_t(), n);
  return r;
}

IntPoly2 lucas_poly(unsigned n) { return lucas_recurrence(n, IntPoly2(), IntPoly2(1L)); }

IntPoly2 circ_lucas_poly(unsigned n) { return lucas_recurrence(n, IntPoly2(2L), var_s()); }

IntPoly2 lucasnomial(unsigned n, unsigned k) {
  require_k_le_n("lucasnomial", n, k);
  return exact_div(lucas_factorial(n), lucas_factorial(k) * lucas_factorial(n - k));
}

QPoly q_int(unsigned n, const Integer& base) {
  QPoly r;
  for (unsigned i = 0; i < n; ++i) r.add_term(base * i, 1);
  return r;
}

QPoly q_factorial(unsigned n) {
  QPoly r(1L);
  for (unsigned i = 1; i <= n; ++i) r *= q_int(i);
  return r;
}

QPoly gauss_binom(unsigned n, unsigned k) {
  require_k_le_n("gauss_binom", n, k);
  return exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

QPoly q_fib(unsigned n, const Integer& base) {
  QPoly r;
  const Integer count = fib(n);
  for (Integer i = 0; i < count; ++i) r.add_term(base * i, 1);
  return r;
}

QPoly q_fib_factorial(unsigned n) {
  QPoly r(1L);
  for (unsigned i = 1; i <= n; ++i) r *= q_fib(i);
  return r;
}

QPoly q_fibonomial(unsigned n, unsigned k) {
  require_k_le_n("q_fibonomial", n, k);
  return exact_div(q_fib_factorial(n), q_fib_factorial(k) * q_fib_factorial(n - k));
}

Integer fibonomial_int(unsigned n, unsigned k) {
  require_k_le_n("fibonomial_int", n, k);
  Integer num = 1;
  Integer den = 1;
  for (unsigned i = 1; i <= n; ++i) num *= fib(i);
  for (unsigned i = 1; i <= k; ++i) den *= fib(i);
  for (unsigned i = 1; i <= n - k; ++i) den *= fib(i);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw NotDivisible("fibonomial: non-integral ratio");
  return num / den;
}

}  // namespace fibonomial
