#pragma once

// Closed-form generators for the number and polynomial families.
//
// Conventions: F_0 = 0, F_1 = F_2 = 1; L_0 = 2, L_1 = 1; {0} = 0, {1} = 1;
// <0> = 2, <1> = s. Binomial-type values are exact quotients of factorial
// products, so a NotDivisible from exact_div signals an arithmetic defect.

#include "fibonomial/exactpoly.hpp"

namespace fibonomial {

Integer fib(unsigned n);
Integer lucas(unsigned n);

/// {n} = s{n-1} + t{n-2}.
IntPoly2 lucas_poly(unsigned n);
/// <n>, same recurrence as lucas_poly with <0> = 2, <1> = s.
IntPoly2 circ_lucas_poly(unsigned n);
/// {n}! / ({k}! {n-k}!). Throws IndexError if k > n.
IntPoly2 lucasnomial(unsigned n, unsigned k);

/// [n]_{q^base} = sum_{i<n} q^(base*i). q_int(0) = 0.
QPoly q_int(unsigned n, const Integer& base = 1);
/// [n]_q! = prod_{i=1..n} [i]_q.
QPoly q_factorial(unsigned n);
/// Gaussian binomial [n k]_q. Throws IndexError if k > n.
QPoly gauss_binom(unsigned n, unsigned k);

/// [F_n]_{q^base} = sum_{i<F_n} q^(base*i). q_fib(0) is the zero polynomial.
QPoly q_fib(unsigned n, const Integer& base = 1);
/// [F_n]_q^! = prod_{i=1..n} [F_i]_q.
QPoly q_fib_factorial(unsigned n);
/// q-Fibonomial [F_n]^! / ([F_k]^! [F_{n-k}]^!). Throws IndexError if k > n.
QPoly q_fibonomial(unsigned n, unsigned k);

/// Integer Fibonomial [n k]_F, computed as a ratio of Fibonacci products.
Integer fibonomial_int(unsigned n, unsigned k);

}  // namespace fibonomial
