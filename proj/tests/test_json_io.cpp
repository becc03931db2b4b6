#include "doctest.h"

#include "fibonomial/graphs.hpp"
#include "fibonomial/identities.hpp"
#include "fibonomial/json_io.hpp"
#include "fibonomial/render.hpp"
#include "fibonomial/sequences.hpp"
#include "fibonomial/staircase.hpp"

using namespace fibonomial;

TEST_CASE("polynomial json") {
  const IntPoly2 p = st_monomial(3, 0) + st_monomial(1, 1, 2);
  CHECK(as_json(p).dump() ==
        R"({"vars":["s","t"],"terms":[{"exp":["1","1"],"coeff":"2"},{"exp":["3","0"],"coeff":"1"}]})");
  CHECK(as_json(QPoly(1L) + var_q()).dump() ==
        R"({"vars":["q"],"terms":[{"exp":["0"],"coeff":"1"},{"exp":["1"],"coeff":"1"}]})");
  CHECK(as_json(IntPoly2()).dump() == R"({"vars":["s","t"],"terms":[]})");

  for (unsigned n = 0; n <= 12; ++n) {
    const IntPoly2 l = lucasnomial(n, n / 2);
    CHECK(int_poly_from_json(as_json(l)) == l);
    const QPoly f = q_fibonomial(n, n / 3);
    CHECK(qpoly_from_json(as_json(f)) == f);
  }
  const QPoly huge = q_power(Integer("123456789012345678901234567890")) * Integer("-98765432109876543210");
  CHECK(qpoly_from_json(Json::parse(as_json(huge).dump())) == huge);
}

TEST_CASE("tiling and graph round trips") {
  for (Mode mode : {Mode::Linear, Mode::Circular})
    for (int n = 0; n <= 7; ++n) {
      for (const auto& t : enum_strip(n, mode)) CHECK(strip_from_json(Json::parse(as_json(t).dump())) == t);
      for (const auto& g : enum_tiling_graphs(n == 0 ? 1 : n, mode)) {
        const auto back = graph_from_json(Json::parse(as_json(g).dump()));
        CHECK(back.n == g.n);
        CHECK(back.mode == g.mode);
        CHECK(back.edges == g.edges);
      }
    }
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& full : enum_staircase_full(n, k)) {
        const auto back = full_staircase_from_json(Json::parse(as_json(full).dump()));
        CHECK(encode(back) == encode(full));
        CHECK(induced_path(back) == induced_path(full));
        CHECK(full_weight(back) == full_weight(full));
      }
}

TEST_CASE("structured tiling json") {
  const auto barriers = enum_barrier(3, 1);
  REQUIRE(!barriers.empty());
  const Json b = as_json(barriers.back());
  CHECK(b["kind"] == "L");
  CHECK(b.contains("dominos"));
  const auto st = enum_staircase(3, 1);
  const Json s = as_json(st[1]);
  CHECK(s["path"] == "LII");
  CHECK(qpoly_from_json(s["weight"]) == var_q());
  CHECK(s["rows"].size() == 3);
}

TEST_CASE("reports") {
  const auto r = verify("G0", find_identity("G0").grid(5));
  const Json j = as_json(r);
  CHECK(!j.contains("wall_ms"));
  CHECK(as_json(r, true).contains("wall_ms"));
  CHECK(j["pass"] == true);
  CHECK(j["points"] == 3);
  CHECK(j["counterexample"].is_null());
  const std::string text = report_text(r);
  CHECK(text.find("G0") == 0);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("ms") == std::string::npos);
  CHECK(as_json(verify_suite(2)).dump() == as_json(verify_suite(2)).dump());
}

TEST_CASE("render glyphs") {
  const auto strips = enum_strip(3, Mode::Linear);
  // m1,m2,m3 comes first
  CHECK(render(strips.front()).find("• • •") == 0);
  const StripTiling dm{3, 0, {{TileKind::Domino, 1}, {TileKind::Monomino, 3}}};
  CHECK(render(dm).find("─── • ") == 0);
  CHECK(render(StripTiling{0, 0, {{TileKind::Empty, 1}}}) == "(empty)\n");
  const TilingGraph wrap{3, Mode::Circular, {{3, 1}}};
  CHECK(render(wrap).find("(edge v3-v1)") != std::string::npos);
  const TilingGraph line{3, Mode::Linear, {{1, 2}}};
  CHECK(render(line).find("o──o  o") == 0);
  const auto st = enum_staircase(3, 1);
  CHECK(render(st[0]).find("path IIL") == 0);
  CHECK(render(enum_barrier(4, 2).front()).find("‖") != std::string::npos);
}
