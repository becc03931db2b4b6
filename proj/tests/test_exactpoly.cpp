#include "doctest.h"

#include <random>

#include "fibonomial/exactpoly.hpp"

using namespace fibonomial;

namespace {

const IntPoly2 s = var_s();
const IntPoly2 t = var_t();
const QPoly q = var_q();

IntPoly2 random_st(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> count(0, 4);
  IntPoly2 p;
  for (int i = count(rng); i > 0; --i)
    p.add_term({static_cast<std::uint32_t>(deg(rng)), static_cast<std::uint32_t>(deg(rng))}, coeff(rng));
  return p;
}

QPoly random_q(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 6);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> count(0, 5);
  QPoly p;
  for (int i = count(rng); i > 0; --i) p.add_term(deg(rng), coeff(rng));
  return p;
}

}  // namespace

TEST_CASE("add merges coefficients and drops cancelled terms") {
  CHECK(add(s + t, s) == IntPoly2(2L) * s + t);
  CHECK(add(QPoly(1L) + q, -q) == QPoly(1L));
  CHECK(add(IntPoly2(), s * t) == s * t);
  CHECK((q - q).is_zero());
  CHECK((q - q).terms().empty());
}

TEST_CASE("mul") {
  CHECK(mul(s, s * s + t) == s * s * s + s * t);
  CHECK(mul(QPoly(1L) + q, QPoly(1L) + q + q * q) == QPoly(1L) + QPoly(2L) * q + QPoly(2L) * q * q + q * q * q);
  CHECK(mul(s + t, IntPoly2()).is_zero());
}

TEST_CASE("exact_div") {
  const IntPoly2 p = s * s * s * s + IntPoly2(3L) * s * s * t + IntPoly2(2L) * t * t;
  const IntPoly2 quotient = exact_div(p, s * s + t);
  CHECK(quotient * (s * s + t) == p);
  CHECK(quotient == s * s + IntPoly2(2L) * t);
  CHECK(exact_div(p, IntPoly2(1L)) == p);
  CHECK_THROWS_AS(exact_div(QPoly(1L) + q + q * q, QPoly(1L) + q), NotDivisible);
  CHECK_THROWS_AS(exact_div(p, IntPoly2(2L)), NotDivisible);
  CHECK_THROWS_AS(exact_div(p, IntPoly2()), std::invalid_argument);
}

TEST_CASE("substitute_st at s=q+1, t=-q") {
  const QPoly sq = q + QPoly(1L);
  const QPoly tq = -q;
  CHECK(substitute_st(s * s + t, sq, tq) == QPoly(1L) + q + q * q);
  CHECK(substitute_st(s * s * s + IntPoly2(2L) * s * t, sq, tq) == QPoly(1L) + q + q * q + q * q * q);
  CHECK(substitute_st(IntPoly2(), sq, tq).is_zero());
}

TEST_CASE("rescale") {
  CHECK(rescale(QPoly(1L) + q, 3) == QPoly(1L) + q_power(3));
  const QPoly p = QPoly(1L) + q + q * q;
  CHECK(rescale(p, 1) == p);
  CHECK(rescale(p, 2) == QPoly(1L) + q_power(2) + q_power(4));
  QPoly six;
  for (int i = 0; i < 6; ++i) six += q_power(i);
  CHECK(mul(QPoly(1L) + q, rescale(p, 2)) == six);
  CHECK_THROWS_AS(rescale(p, 0), std::invalid_argument);
}

TEST_CASE("evaluate") {
  CHECK(evaluate(s * s * s * s + IntPoly2(3L) * s * s * t + IntPoly2(2L) * t * t, 1, 1) == 6);
  CHECK(evaluate(QPoly(1L) + q + q * q + q * q * q + q_power(4), 1) == 5);
  CHECK(evaluate(IntPoly2(), 7, 9) == 0);
  CHECK(evaluate(QPoly(), 7) == 0);
  CHECK(evaluate(s * s + t, 3, -1) == 8);
}

TEST_CASE("unbounded exponents") {
  const Integer huge("123456789012345678901234567890");
  const QPoly p = q_power(huge) + QPoly(1L);
  CHECK((p * p).coefficient(huge) == 2);
  CHECK((p * p).coefficient(huge * 2) == 1);
  CHECK(evaluate(p, 1) == 2);
  CHECK(evaluate(p, -1) == 2);
}

TEST_CASE("text form") {
  CHECK(to_string(s * s * s + IntPoly2(2L) * s * t) == "s^3 + 2*s*t");
  CHECK(to_string(QPoly(1L) + q + q * q) == "1 + q + q^2");
  CHECK(to_string(QPoly(1L) - q) == "1 - q");
  CHECK(to_string(-s) == "-s");
  CHECK(to_string(IntPoly2()) == "0");
  CHECK(to_string(QPoly(-3L)) == "-3");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly2 a = random_st(rng), b = random_st(rng), c = random_st(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);

    const QPoly x = random_q(rng), y = random_q(rng), z = random_q(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    if (!y.is_zero()) CHECK(exact_div(x * y, y) == x);
    CHECK(evaluate(rescale(x, 1 + trial % 5), 1) == evaluate(x, 1));
  }
}

TEST_CASE("substitute_st is a ring homomorphism") {
  std::mt19937 rng(7);
  const QPoly sq = q + QPoly(1L);
  const QPoly tq = -q;
  for (int trial = 0; trial < 100; ++trial) {
    const IntPoly2 a = random_st(rng), b = random_st(rng);
    CHECK(substitute_st(a * b, sq, tq) == substitute_st(a, sq, tq) * substitute_st(b, sq, tq));
    CHECK(substitute_st(a + b, sq, tq) == substitute_st(a, sq, tq) + substitute_st(b, sq, tq));
  }
}
