#include "fibonomial/identities.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "fibonomial/sequences.hpp"

namespace fibonomial {

namespace {

unsigned u(int v) { return static_cast<unsigned>(v); }

QPoly qi(int n, const Integer& base = 1) { return q_int(u(n), base); }
QPoly qf(int n, const Integer& base = 1) { return q_fib(u(n), base); }
Integer F(int n) { return fib(u(n)); }
QPoly qp(const Integer& e) { return q_power(e); }
QPoly gauss(int n, int k) { return gauss_binom(u(n), u(k)); }

// q-Fibonomial with the convention that k outside 0..n gives 0.
QPoly qfb(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  return q_fibonomial(u(n), u(k));
}

QPoly pow(const QPoly& p, int e) {
  QPoly r(1L);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), u(n), u(k));
  return r;
}

Integer two_pow(int e) { return Integer(1) << e; }

int at(const Params& p, const char* name) { return p.at(name); }

using Grid = std::vector<Params>;

Grid grid1(const char* name, int lo, int hi) {
  Grid g;
  for (int v = lo; v <= hi; ++v) g.push_back({{name, v}});
  return g;
}

// All (x, y) with x in x_lo..x_hi and y in y_lo(x)..y_hi(x).
Grid grid2(const char* x, int x_lo, int x_hi, const char* y, const std::function<int(int)>& y_lo,
           const std::function<int(int)>& y_hi) {
  Grid g;
  for (int a = x_lo; a <= x_hi; ++a)
    for (int b = y_lo(a); b <= y_hi(a); ++b) g.push_back({{x, a}, {y, b}});
  return g;
}

std::function<int(int)> constant(int c) {
  return [c](int) { return c; };
}

bool has(const Params& p, std::initializer_list<const char*> names) {
  if (p.size() != names.size()) return false;
  for (const char* n : names)
    if (!p.count(n)) return false;
  return true;
}

// ---- Gaussian binomials -------------------------------------------------

IdentityDescriptor g0() {
  IdentityDescriptor d;
  d.id = "G0";
  d.title = "q-integer recurrence";
  d.statement = "[n]_q = (q+1)[n-1]_q - q[n-2]_q, n >= 3";
  d.params = {"n"};
  d.valid = [](const Params& p) { return has(p, {"n"}) && at(p, "n") >= 3; };
  d.grid = [](int max) { return grid1("n", 3, max); };
  d.lhs = [](const Params& p) { return Values{qi(at(p, "n"))}; };
  d.rhs = [](const Params& p) {
    const int n = at(p, "n");
    return Values{(var_q() + QPoly(1L)) * qi(n - 1) - var_q() * qi(n - 2)};
  };
  d.reference_max = 6;
  return d;
}

IdentityDescriptor g1() {
  IdentityDescriptor d;
  d.id = "G1";
  d.title = "Gaussian binomial symmetry";
  d.statement = "[m+n, m]_q = [m+n, n]_q";
  d.params = {"m", "n"};
  d.valid = [](const Params& p) { return has(p, {"m", "n"}) && at(p, "m") >= 0 && at(p, "n") >= 0; };
  d.grid = [](int max) { return grid2("m", 0, max, "n", constant(0), constant(max)); };
  d.lhs = [](const Params& p) { return Values{gauss(at(p, "m") + at(p, "n"), at(p, "m"))}; };
  d.rhs = [](const Params& p) { return Values{gauss(at(p, "m") + at(p, "n"), at(p, "n"))}; };
  d.reference_max = 6;
  return d;
}

IdentityDescriptor g2() {
  IdentityDescriptor d;
  d.id = "G2";
  d.title = "Gaussian row/column recurrence";
  d.statement = "[m+n, m]_q = [n+1]_q [m+n-1, n]_q - q [m-1]_q [m+n-1, m]_q, m, n >= 1";
  d.params = {"m", "n"};
  d.valid = [](const Params& p) { return has(p, {"m", "n"}) && at(p, "m") >= 1 && at(p, "n") >= 1; };
  d.grid = [](int max) { return grid2("m", 1, max, "n", constant(1), constant(max)); };
  d.lhs = [](const Params& p) { return Values{gauss(at(p, "m") + at(p, "n"), at(p, "m"))}; };
  d.rhs = [](const Params& p) {
    const int m = at(p, "m");
    const int n = at(p, "n");
    return Values{qi(n + 1) * gauss(m + n - 1, n) - var_q() * qi(m - 1) * gauss(m + n - 1, m)};
  };
  d.reference_max = 6;
  return d;
}

IdentityDescriptor g3() {
  IdentityDescriptor d;
  d.id = "G3";
  d.title = "Gaussian circular recurrence";
  d.statement = "2[m+n, m]_q = (1+q^n)[m+n-1, n]_q + (1+q^m)[m+n-1, m]_q, m, n >= 1";
  d.params = {"m", "n"};
  d.valid = [](const Params& p) { return has(p, {"m", "n"}) && at(p, "m") >= 1 && at(p, "n") >= 1; };
  d.grid = [](int max) { return grid2("m", 1, max, "n", constant(1), constant(max)); };
  d.lhs = [](const Params& p) { return Values{QPoly(2L) * gauss(at(p, "m") + at(p, "n"), at(p, "m"))}; };
  d.rhs = [](const Params& p) {
    const int m = at(p, "m");
    const int n = at(p, "n");
    return Values{(QPoly(1L) + qp(n)) * gauss(m + n - 1, n) + (QPoly(1L) + qp(m)) * gauss(m + n - 1, m)};
  };
  d.reference_max = 6;
  return d;
}

IdentityDescriptor g4() {
  IdentityDescriptor d;
  d.id = "G4";
  d.title = "Gaussian complete-rows expansion";
  d.statement = "[m+n, m]_q = [n+1]_q^m - q sum_{i=0}^{m-2} [n+1]_q^i [m-i-1]_q [m+n-i-1, n-1]_q, n >= 1";
  d.params = {"m", "n"};
  d.valid = [](const Params& p) { return has(p, {"m", "n"}) && at(p, "m") >= 0 && at(p, "n") >= 1; };
  d.grid = [](int max) { return grid2("m", 0, max, "n", constant(1), constant(max)); };
  d.lhs = [](const Params& p) { return Values{gauss(at(p, "m") + at(p, "n"), at(p, "m"))}; };
  d.rhs = [](const Params& p) {
    const int m = at(p, "m");
    const int n = at(p, "n");
    QPoly sum;
    for (int i = 0; i <= m - 2; ++i) sum += pow(qi(n + 1), i) * qi(m - i - 1) * gauss(m + n - i - 1, n - 1);
    return Values{pow(qi(n + 1), m) - var_q() * sum};
  };
  d.reference_max = 6;
  return d;
}

IdentityDescriptor g5() {
  IdentityDescriptor d;
  d.id = "G5";
  d.title = "Gaussian alternating complete-columns sum";
  d.statement = "[m+n, m]_q = sum_{i=0}^{n} (-1)^i q^i [m-1]_q^i [n-i+1]_q [m+n-i-1, m-1]_q, m >= 1";
  d.params = {"m", "n"};
  d.valid = [](const Params& p) { return has(p, {"m", "n"}) && at(p, "m") >= 1 && at(p, "n") >= 0; };
  d.grid = [](int max) { return grid2("m", 1, max, "n", constant(0), constant(max)); };
  d.lhs = [](const Params& p) { return Values{gauss(at(p, "m") + at(p, "n"), at(p, "m"))}; };
  d.rhs = [](const Params& p) {
    const int m = at(p, "m");
    const int n = at(p, "n");
    QPoly sum;
    for (int i = 0; i <= n; ++i) {
      QPoly term = qp(i) * pow(qi(m - 1), i) * qi(n - i + 1) * gauss(m + n - i - 1, m - 1);
      if (i % 2) sum -= term;
      else sum += term;
    }
    return Values{sum};
  };
  d.reference_max = 6;
  return d;
}

IdentityDescriptor g6() {
  IdentityDescriptor d;
  d.id = "G6";
  d.title = "Gaussian circular expansion";
  d.statement =
      "2^{m+n}[m+n, m]_q = sum_{i=0}^{m} 2^{m+n-i-1} (1+q^n)^i (1+q^{m-i}) [m+n-i-1, n-1]_q, n >= 1";
  d.params = {"m", "n"};
  d.valid = [](const Params& p) { return has(p, {"m", "n"}) && at(p, "m") >= 0 && at(p, "n") >= 1; };
  d.grid = [](int max) { return grid2("m", 0, max, "n", constant(1), constant(max)); };
  d.lhs = [](const Params& p) {
    const int m = at(p, "m");
    const int n = at(p, "n");
    return Values{QPoly(two_pow(m + n)) * gauss(m + n, m)};
  };
  d.rhs = [](const Params& p) {
    const int m = at(p, "m");
    const int n = at(p, "n");
    QPoly sum;
    for (int i = 0; i <= m; ++i)
      sum += QPoly(two_pow(m + n - i - 1)) * pow(QPoly(1L) + qp(n), i) * (QPoly(1L) + qp(m - i)) *
             gauss(m + n - i - 1, n - 1);
    return Values{sum};
  };
  d.reference_max = 6;
  return d;
}

IdentityDescriptor g7() {
  IdentityDescriptor d;
  d.id = "G7";
  d.title = "q-integer as an alternating binomial sum";
  d.statement = "[m+1]_q = sum_{i=0}^{floor(m/2)} (-1)^i C(m-i, i) q^i (q+1)^{m-2i}";
  d.params = {"m"};
  d.valid = [](const Params& p) { return has(p, {"m"}) && at(p, "m") >= 0; };
  d.grid = [](int max) { return grid1("m", 0, max); };
  d.lhs = [](const Params& p) { return Values{qi(at(p, "m") + 1)}; };
  d.rhs = [](const Params& p) {
    const int m = at(p, "m");
    QPoly sum;
    for (int i = 0; 2 * i <= m; ++i) {
      const Integer sign = i % 2 ? -1 : 1;
      sum += QPoly(sign * binomial(m - i, i)) * qp(i) * pow(var_q() + QPoly(1L), m - 2 * i);
    }
    return Values{sum};
  };
  d.reference_max = 6;
  return d;
}

// ---- q-integers and q-Fibonacci numbers --------------------------------

IdentityDescriptor l1() {
  IdentityDescriptor d;
  d.id = "L1";
  d.title = "q-integer product and sum laws";
  d.statement = "[ab]_q = [a]_q [b]_{q^a};  [a+b]_q = [a]_q + q^a [b]_q";
  d.params = {"a", "b"};
  d.valid = [](const Params& p) { return has(p, {"a", "b"}) && at(p, "a") >= 1 && at(p, "b") >= 0; };
  d.grid = [](int max) { return grid2("a", 1, max, "b", constant(0), constant(max)); };
  d.lhs = [](const Params& p) {
    const int a = at(p, "a");
    const int b = at(p, "b");
    return Values{qi(a * b), qi(a + b)};
  };
  d.rhs = [](const Params& p) {
    const int a = at(p, "a");
    const int b = at(p, "b");
    return Values{qi(a) * qi(b, a), qi(a) + qp(a) * qi(b)};
  };
  d.reference_max = 20;
  return d;
}

IdentityDescriptor l2() {
  IdentityDescriptor d;
  d.id = "L2";
  d.title = "Fibonacci splitting at a bar";
  d.statement =
      "F_{n+1} = F_{n-k+1} F_{k+1} + F_{n-k} F_k;  "
      "[F_{n+1}]_q = [F_{k+1}]_{q^{F_{n-k+1}}} [F_{n-k+1}]_q + q^{F_{n-k+1} F_{k+1}} [F_{n-k}]_{q^{F_k}} [F_k]_q";
  d.params = {"n", "k"};
  d.valid = [](const Params& p) {
    return has(p, {"n", "k"}) && at(p, "k") >= 0 && at(p, "k") <= at(p, "n");
  };
  d.grid = [](int max) { return grid2("n", 0, max, "k", constant(0), [](int n) { return n; }); };
  d.lhs = [](const Params& p) {
    const int n = at(p, "n");
    return Values{F(n + 1), qf(n + 1)};
  };
  d.rhs = [](const Params& p) {
    const int n = at(p, "n");
    const int k = at(p, "k");
    const Integer count = F(n - k + 1) * F(k + 1) + F(n - k) * F(k);
    const QPoly poly = qf(k + 1, F(n - k + 1)) * qf(n - k + 1) +
                       qp(F(n - k + 1) * F(k + 1)) * qf(n - k, F(k)) * qf(k);
    return Values{count, poly};
  };
  d.reference_max = 20;
  return d;
}

IdentityDescriptor b1() {
  IdentityDescriptor d;
  d.id = "B1";
  d.title = "q-Fibonacci split at barrier point k";
  d.statement = "[F_n]_q = [F_{k+1}]_{q^{F_{n-k}}} [F_{n-k}]_q + q^{F_{n-k} F_{k+1}} [F_{n-k-1}]_{q^{F_k}} [F_k]_q, 0 <= k <= n-1";
  d.params = {"n", "k"};
  d.valid = [](const Params& p) {
    return has(p, {"n", "k"}) && at(p, "n") >= 1 && at(p, "k") >= 0 && at(p, "k") <= at(p, "n") - 1;
  };
  d.grid = [](int max) { return grid2("n", 1, max, "k", constant(0), [](int n) { return n - 1; }); };
  d.lhs = [](const Params& p) { return Values{qf(at(p, "n"))}; };
  d.rhs = [](const Params& p) {
    const int n = at(p, "n");
    const int k = at(p, "k");
    return Values{qf(k + 1, F(n - k)) * qf(n - k) + qp(F(n - k) * F(k + 1)) * qf(n - k - 1, F(k)) * qf(k)};
  };
  d.reference_max = 20;
  return d;
}

IdentityDescriptor b2() {
  IdentityDescriptor d;
  d.id = "B2";
  d.title = "q-Fibonacci recurrence";
  d.statement = "[F_n]_q = [F_{n-1}]_q + q^{F_{n-1}} [F_{n-2}]_q, n >= 2";
  d.params = {"n"};
  d.valid = [](const Params& p) { return has(p, {"n"}) && at(p, "n") >= 2; };
  d.grid = [](int max) { return grid1("n", 2, max); };
  d.lhs = [](const Params& p) { return Values{qf(at(p, "n"))}; };
  d.rhs = [](const Params& p) {
    const int n = at(p, "n");
    return Values{qf(n - 1) + qp(F(n - 1)) * qf(n - 2)};
  };
  d.reference_max = 20;
  return d;
}

IdentityDescriptor b3() {
  IdentityDescriptor d;
  d.id = "B3";
  d.title = "nested-barrier expansion with step a";
  d.statement =
      "A = a+1, N = floor(n/A): [F_{n+1}]_q = [F_{n-a+1}]_{q^{F_A}} [F_A]_q"
      " + [F_A]_q sum_{i=1}^{N-1} q^{F_A sum_{j<=i} F_{n-jA+2}} prod_{j<=i} [F_a]_{q^{F_{n-jA+1}}} [F_{n-(i+1)A+2}]_{q^{F_A}}"
      " + q^{F_A sum_{j<=N} F_{n-jA+2}} prod_{j<=N} [F_a]_{q^{F_{n-jA+1}}} [F_{n-NA+1}]_q, 1 <= a <= n-1";
  d.params = {"n", "a"};
  d.valid = [](const Params& p) {
    return has(p, {"n", "a"}) && at(p, "a") >= 1 && at(p, "a") <= at(p, "n") - 1;
  };
  d.grid = [](int max) {
    return grid2("n", 2, max, "a", constant(1), [](int n) { return std::min(4, n - 1); });
  };
  d.lhs = [](const Params& p) { return Values{qf(at(p, "n") + 1)}; };
  d.rhs = [](const Params& p) {
    const int n = at(p, "n");
    const int a = at(p, "a");
    const int A = a + 1;
    const int N = n / A;
    const Integer FA = F(A);
    QPoly first = qf(n - a + 1, FA) * qf(A);
    QPoly middle;
    Integer exponent = 0;
    QPoly product(1L);
    for (int i = 1; i <= N - 1; ++i) {
      exponent += F(n - i * A + 2);
      product *= qf(a, F(n - i * A + 1));
      middle += qp(FA * exponent) * product * qf(n - (i + 1) * A + 2, FA);
    }
    Integer last_exponent = 0;
    QPoly last_product(1L);
    for (int j = 1; j <= N; ++j) {
      last_exponent += F(n - j * A + 2);
      last_product *= qf(a, F(n - j * A + 1));
    }
    QPoly last = qp(FA * last_exponent) * last_product * qf(n - N * A + 1);
    return Values{first + qf(A) * middle + last};
  };
  d.reference_max = 14;
  return d;
}

IdentityDescriptor b4() {
  IdentityDescriptor d;
  d.id = "B4";
  d.title = "nested-barrier expansion with step 1";
  d.statement =
      "N = floor(n/2): [F_{n+1}]_q = [F_n]_q + sum_{i=1}^{N-1} q^{sum_{j<=i} F_{n-2j+2}} [F_{n-2i}]_q"
      " + q^{sum_{j<=N} F_{n-2j+2}}, n >= 2";
  d.params = {"n"};
  d.valid = [](const Params& p) { return has(p, {"n"}) && at(p, "n") >= 2; };
  d.grid = [](int max) { return grid1("n", 2, max); };
  d.lhs = [](const Params& p) { return Values{qf(at(p, "n") + 1)}; };
  d.rhs = [](const Params& p) {
    const int n = at(p, "n");
    const int N = n / 2;
    QPoly sum = qf(n);
    Integer exponent = 0;
    for (int i = 1; i <= N - 1; ++i) {
      exponent += F(n - 2 * i + 2);
      sum += qp(exponent) * qf(n - 2 * i);
    }
    if (N >= 1) exponent += F(n - 2 * N + 2);
    return Values{sum + qp(exponent)};
  };
  d.reference_max = 14;
  return d;
}

IdentityDescriptor b5() {
  IdentityDescriptor d;
  d.id = "B5";
  d.title = "Fibonacci number as a sum of alternate Fibonacci numbers";
  d.statement = "F_{n+1} = 1 + sum_{j=1}^{floor(n/2)} F_{n-2j+2}, n >= 1";
  d.params = {"n"};
  d.valid = [](const Params& p) { return has(p, {"n"}) && at(p, "n") >= 1; };
  d.grid = [](int max) { return grid1("n", 1, max); };
  d.lhs = [](const Params& p) { return Values{F(at(p, "n") + 1)}; };
  d.rhs = [](const Params& p) {
    const int n = at(p, "n");
    Integer sum = 1;
    for (int j = 1; 2 * j <= n; ++j) sum += F(n - 2 * j + 2);
    return Values{sum};
  };
  d.reference_max = 20;
  return d;
}

IdentityDescriptor b6() {
  IdentityDescriptor d;
  d.id = "B6";
  d.title = "q-Fibonacci divisibility";
  d.statement = "a | n implies [F_a]_q divides [F_n]_q (checked by exact division)";
  d.params = {"n", "a"};
  d.valid = [](const Params& p) {
    return has(p, {"n", "a"}) && at(p, "a") >= 1 && at(p, "n") >= 1 && at(p, "n") % at(p, "a") == 0;
  };
  d.grid = [](int max) {
    Grid g;
    for (int n = 1; n <= max; ++n)
      for (int a = 1; a <= n; ++a)
        if (n % a == 0) g.push_back({{"n", n}, {"a", a}});
    return g;
  };
  d.lhs = [](const Params& p) { return Values{qf(at(p, "n"))}; };
  d.rhs = [](const Params& p) {
    const QPoly divisor = qf(at(p, "a"));
    return Values{exact_div(qf(at(p, "n")), divisor) * divisor};
  };
  d.reference_max = 20;
  return d;
}

IdentityDescriptor b7() {
  IdentityDescriptor d;
  d.id = "B7";
  d.title = "dual nested-barrier expansion";
  d.statement =
      "N = floor(n/a): [F_{n+1}]_q = q^{F_{a+1} F_{n-a+1}} [F_{n-a}]_{q^{F_a}} [F_a]_q"
      " + [F_a]_q sum_{i=1}^{N-1} q^{F_{a+1} F_{n-(i+1)a+1}} prod_{j<=i} [F_{a+1}]_{q^{F_{n-ja+1}}} [F_{n-(i+1)a}]_{q^{F_a}}"
      " + prod_{j<=N} [F_{a+1}]_{q^{F_{n-ja+1}}} [F_{n-Na+1}]_q, 1 <= a <= n";
  d.params = {"n", "a"};
  d.valid = [](const Params& p) { return has(p, {"n", "a"}) && at(p, "a") >= 1 && at(p, "a") <= at(p, "n"); };
  d.grid = [](int max) { return grid2("n", 1, max, "a", constant(1), [](int n) { return std::min(4, n); }); };
  d.lhs = [](const Params& p) { return Values{qf(at(p, "n") + 1)}; };
  d.rhs = [](const Params& p) {
    const int n = at(p, "n");
    const int a = at(p, "a");
    const int N = n / a;
    QPoly first = qp(F(a + 1) * F(n - a + 1)) * qf(n - a, F(a)) * qf(a);
    QPoly middle;
    QPoly product(1L);
    for (int i = 1; i <= N - 1; ++i) {
      product *= qf(a + 1, F(n - i * a + 1));
      middle += qp(F(a + 1) * F(n - (i + 1) * a + 1)) * product * qf(n - (i + 1) * a, F(a));
    }
    QPoly last_product(1L);
    for (int j = 1; j <= N; ++j) last_product *= qf(a + 1, F(n - j * a + 1));
    return Values{first + qf(a) * middle + last_product * qf(n - N * a + 1)};
  };
  d.reference_max = 14;
  return d;
}

// ---- q-Fibonomials --------------------------------------------------------

IdentityDescriptor q1() {
  IdentityDescriptor d;
  d.id = "Q1";
  d.title = "q-Fibonomial two-term recurrence";
  d.statement =
      "[n, k]_F = [F_{k+1}]_{q^{F_{n-k}}} [n-1, k]_F + q^{F_{n-k} F_{k+1}} [F_{n-k-1}]_{q^{F_k}} [n-1, k-1]_F, 0 <= k <= n-1";
  d.params = {"n", "k"};
  d.valid = [](const Params& p) {
    return has(p, {"n", "k"}) && at(p, "n") >= 1 && at(p, "k") >= 0 && at(p, "k") <= at(p, "n") - 1;
  };
  d.grid = [](int max) { return grid2("n", 1, max, "k", constant(0), [](int n) { return n - 1; }); };
  d.lhs = [](const Params& p) { return Values{qfb(at(p, "n"), at(p, "k"))}; };
  d.rhs = [](const Params& p) {
    const int n = at(p, "n");
    const int k = at(p, "k");
    return Values{qf(k + 1, F(n - k)) * qfb(n - 1, k) +
                  qp(F(n - k) * F(k + 1)) * qf(n - k - 1, F(k)) * qfb(n - 1, k - 1)};
  };
  d.reference_max = 8;
  return d;
}

IdentityDescriptor q2() {
  IdentityDescriptor d;
  d.id = "Q2";
  d.title = "q-Fibonomial first-I-step expansion";
  d.statement =
      "[n, k]_F = sum_{i=0}^{k} q^{F_{n-k} sum_{j<=i} F_{k-j+2}} prod_{j<=i} [F_{n-k-1}]_{q^{F_{k-j+1}}}"
      " [F_{k-i+1}]_{q^{F_{n-k}}} [n-i-1, k-i]_F, 0 <= k <= n-1";
  d.params = {"n", "k"};
  d.valid = [](const Params& p) {
    return has(p, {"n", "k"}) && at(p, "n") >= 1 && at(p, "k") >= 0 && at(p, "k") <= at(p, "n") - 1;
  };
  d.grid = [](int max) { return grid2("n", 1, max, "k", constant(0), [](int n) { return n - 1; }); };
  d.lhs = [](const Params& p) { return Values{qfb(at(p, "n"), at(p, "k"))}; };
  d.rhs = [](const Params& p) {
    const int n = at(p, "n");
    const int k = at(p, "k");
    QPoly sum;
    Integer exponent = 0;
    QPoly product(1L);
    for (int i = 0; i <= k; ++i) {
      if (i > 0) {
        exponent += F(k - i + 2);
        product *= qf(n - k - 1, F(k - i + 1));
      }
      sum += qp(F(n - k) * exponent) * product * qf(k - i + 1, F(n - k)) * qfb(n - i - 1, k - i);
    }
    return Values{sum};
  };
  d.reference_max = 8;
  return d;
}

IdentityDescriptor q3() {
  IdentityDescriptor d;
  d.id = "Q3";
  d.title = "q-Fibonomial first-L-step expansion";
  d.statement =
      "[n, k]_F = sum_{i=0}^{n-k-2} q^{F_{k+1} F_{n-k-i}} [F_{n-k-i-1}]_{q^{F_k}} prod_{j<=i} [F_{k+1}]_{q^{F_{n-k-j+1}}}"
      " [n-i-1, k-1]_F + prod_{j=1}^{n-k} [F_{k+1}]_{q^{F_{n-k-j+1}}}, 0 <= k <= n";
  d.params = {"n", "k"};
  d.valid = [](const Params& p) {
    return has(p, {"n", "k"}) && at(p, "k") >= 0 && at(p, "k") <= at(p, "n");
  };
  d.grid = [](int max) { return grid2("n", 0, max, "k", constant(0), [](int n) { return n; }); };
  d.lhs = [](const Params& p) { return Values{qfb(at(p, "n"), at(p, "k"))}; };
  d.rhs = [](const Params& p) {
    const int n = at(p, "n");
    const int k = at(p, "k");
    QPoly sum;
    QPoly product(1L);
    for (int i = 0; i <= n - k - 2; ++i) {
      if (i > 0) product *= qf(k + 1, F(n - k - i + 1));
      sum += qp(F(k + 1) * F(n - k - i)) * qf(n - k - i - 1, F(k)) * product * qfb(n - i - 1, k - 1);
    }
    QPoly tail(1L);
    for (int j = 1; j <= n - k; ++j) tail *= qf(k + 1, F(n - k - j + 1));
    return Values{sum + tail};
  };
  d.reference_max = 8;
  return d;
}

// ---- Lucasnomials at s = 3, t = -1 ----------------------------------------

IdentityDescriptor x1() {
  IdentityDescriptor d;
  d.id = "X1";
  d.title = "Lucasnomial at s=3, t=-1 as Lucas ratio times Fibonomial";
  d.statement = "{n, l}(3, -1) = (prod_{i<=n} L_i / (prod_{j<=l} L_j prod_{k<=n-l} L_k)) [n, l]_F";
  d.params = {"n", "l"};
  d.valid = [](const Params& p) {
    return has(p, {"n", "l"}) && at(p, "l") >= 0 && at(p, "l") <= at(p, "n");
  };
  d.grid = [](int max) { return grid2("n", 0, max, "l", constant(0), [](int n) { return n; }); };
  d.lhs = [](const Params& p) {
    return Values{evaluate(lucasnomial(u(at(p, "n")), u(at(p, "l"))), Integer(3), Integer(-1))};
  };
  d.rhs = [](const Params& p) {
    const int n = at(p, "n");
    const int l = at(p, "l");
    mpq_class ratio(1);
    for (int i = 1; i <= n; ++i) ratio *= mpq_class(lucas(u(i)));
    for (int j = 1; j <= l; ++j) ratio /= mpq_class(lucas(u(j)));
    for (int k = 1; k <= n - l; ++k) ratio /= mpq_class(lucas(u(k)));
    const mpq_class value = ratio * mpq_class(fibonomial_int(u(n), u(l)));
    if (value.get_den() != 1) throw NotDivisible("Lucas ratio times Fibonomial is " + value.get_str());
    return Values{Integer(value.get_num())};
  };
  d.reference_max = 10;
  return d;
}

std::string join(const Values& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "; " : "") + to_string(vs[i]);
  return out;
}

std::string difference(const Values& a, const Values& b) {
  if (a.size() != b.size()) return "arity mismatch";
  Values diff;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].index() != b[i].index()) return "type mismatch";
    if (const auto* x = std::get_if<Integer>(&a[i])) diff.emplace_back(Integer(*x - std::get<Integer>(b[i])));
    else diff.emplace_back(std::get<QPoly>(a[i]) - std::get<QPoly>(b[i]));
  }
  return join(diff);
}

}  // namespace

const std::vector<IdentityDescriptor>& catalog() {
  static const std::vector<IdentityDescriptor> entries = {
      g0(), g1(), g2(), g3(), g4(), g5(), g6(), g7(), l1(), l2(), b1(),
      b2(), b3(), b4(), b5(), b6(), b7(), q1(), q2(), q3(), x1()};
  return entries;
}

const IdentityDescriptor& find_identity(const std::string& id) {
  for (const auto& d : catalog())
    if (d.id == id) return d;
  throw UnknownIdentity("unknown identity '" + id + "'");
}

VerificationReport verify(const std::string& id, const std::vector<Params>& grid) {
  return verify(find_identity(id), grid);
}

VerificationReport verify(const IdentityDescriptor& identity, const std::vector<Params>& grid) {
  for (const auto& point : grid)
    if (!identity.valid(point))
      throw InvalidParams(identity.id + ": parameters " + to_string(point, identity.params) +
                          " are outside the domain");

  const auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  report.id = identity.id;
  report.param_names = identity.params;
  for (const auto& point : grid) {
    PointResult result{point, false};
    std::string lhs_text;
    std::string rhs_text;
    std::string diff;
    try {
      const Values lhs = identity.lhs(point);
      const Values rhs = identity.rhs(point);
      result.pass = lhs == rhs;
      if (!result.pass) {
        lhs_text = join(lhs);
        rhs_text = join(rhs);
        diff = difference(lhs, rhs);
      }
    } catch (const std::exception& e) {
      diff = std::string("error: ") + e.what();
    }
    if (!result.pass) {
      report.pass = false;
      if (!report.counterexample) report.counterexample = Counterexample{point, lhs_text, rhs_text, diff};
    }
    report.points.push_back(std::move(result));
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

SuiteReport verify_suite(int max_size) {
  SuiteReport suite;
  suite.label = "max=" + std::to_string(max_size);
  for (const auto& d : catalog()) {
    suite.reports.push_back(verify(d, d.grid(max_size)));
    suite.pass = suite.pass && suite.reports.back().pass;
  }
  return suite;
}

SuiteReport verify_reference_suite() {
  SuiteReport suite;
  suite.label = "reference";
  for (const auto& d : catalog()) {
    suite.reports.push_back(verify(d, d.grid(d.reference_max)));
    suite.pass = suite.pass && suite.reports.back().pass;
  }
  return suite;
}

bool divisibility_fails(unsigned n, unsigned a) {
  try {
    exact_div(q_fib(n), q_fib(a));
  } catch (const NotDivisible&) {
    return true;
  }
  return false;
}

std::string to_string(const Value& v) {
  if (const auto* i = std::get_if<Integer>(&v)) return i->get_str();
  return to_string(std::get<QPoly>(v));
}

std::string to_string(const Params& p, const std::vector<std::string>& order) {
  std::string out;
  for (const auto& name : order) {
    const auto it = p.find(name);
    if (it == p.end()) continue;
    out += (out.empty() ? "" : ",") + name + "=" + std::to_string(it->second);
  }
  for (const auto& [name, value] : p)
    if (std::find(order.begin(), order.end(), name) == order.end())
      out += (out.empty() ? "" : ",") + name + "=" + std::to_string(value);
  return out;
}

}  // namespace fibonomial
