#pragma once

// Registry of identities between Gaussian binomials, q-Fibonacci numbers,
// q-Fibonomials and Lucasnomials, each with separate left and right
// evaluators, plus a verifier producing exact per-point reports.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fibonomial/exactpoly.hpp"

namespace fibonomial {

using Value = std::variant<Integer, QPoly>;
/// Compound identities (several laws under one id) return one value per law.
using Values = std::vector<Value>;
using Params = std::map<std::string, int>;

struct IdentityDescriptor {
  std::string id;
  std::string title;
  std::string statement;            ///< plain-text formula
  std::vector<std::string> params;  ///< names, in reporting order
  std::function<bool(const Params&)> valid;
  /// Every valid point with all parameters at most `max`.
  std::function<std::vector<Params>(int max)> grid;
  std::function<Values(const Params&)> lhs;
  std::function<Values(const Params&)> rhs;
  int reference_max = 0;  ///< bound used by the reference suite
};

struct PointResult {
  Params params;
  bool pass = false;
};

struct Counterexample {
  Params params;
  std::string lhs;
  std::string rhs;
  std::string diff;  ///< lhs - rhs, or the error raised while evaluating
};

struct VerificationReport {
  std::string id;
  std::vector<std::string> param_names;
  std::vector<PointResult> points;
  std::optional<Counterexample> counterexample;  ///< first failing point
  bool pass = true;
  double wall_ms = 0.0;
};

struct SuiteReport {
  std::string label;  ///< "max=5" or "reference"
  std::vector<VerificationReport> reports;
  bool pass = true;
};

const std::vector<IdentityDescriptor>& catalog();
/// Throws UnknownIdentity.
const IdentityDescriptor& find_identity(const std::string& id);

/// Throws UnknownIdentity, or InvalidParams if a point fails the predicate.
VerificationReport verify(const std::string& id, const std::vector<Params>& grid);
VerificationReport verify(const IdentityDescriptor& identity, const std::vector<Params>& grid);
/// Every identity over grid(max_size).
SuiteReport verify_suite(int max_size);
/// Every identity over grid(reference_max).
SuiteReport verify_reference_suite();

/// exact_div([F_n]_q, [F_a]_q) raises NotDivisible.
bool divisibility_fails(unsigned n, unsigned a);

std::string to_string(const Value& v);
std::string to_string(const Params& p, const std::vector<std::string>& order);

}  // namespace fibonomial
