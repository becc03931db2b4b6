#pragma once

// JSON forms of polynomials, tilings and verification reports. Integers that
// may exceed 64 bits (coefficients, q-exponents) are written as decimal
// strings; everything else uses JSON numbers.

#include <string>

#include "json.hpp"

#include "fibonomial/barrier.hpp"
#include "fibonomial/graphs.hpp"
#include "fibonomial/identities.hpp"
#include "fibonomial/staircase.hpp"
#include "fibonomial/tilings.hpp"

namespace fibonomial {

using Json = nlohmann::ordered_json;

Json as_json(const IntPoly2& p);
Json as_json(const QPoly& p);
IntPoly2 int_poly_from_json(const Json& j);
QPoly qpoly_from_json(const Json& j);

Json as_json(const StripTiling& t);
StripTiling strip_from_json(const Json& j);
Json as_json(const Partition& p);
Json as_json(const PartitionTiling& t);
Json as_json(const TilingGraph& g);
TilingGraph graph_from_json(const Json& j);
Json as_json(const AnnotatedDomino& d);
Json as_json(const BarrierTiling& t);
Json as_json(const StaircaseTiling& t);
Json as_json(const FullStaircaseTiling& t);
FullStaircaseTiling full_staircase_from_json(const Json& j);

/// Wall time is written only when `timing` is set, so default output is
/// byte-identical across runs.
Json as_json(const VerificationReport& r, bool timing = false);
Json as_json(const SuiteReport& r, bool timing = false);
std::string report_text(const VerificationReport& r, bool timing = false);
std::string report_text(const SuiteReport& r, bool timing = false);

}  // namespace fibonomial
