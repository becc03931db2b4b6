#include "fibonomial/json_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fibonomial {

namespace {

Integer parse_integer(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long>());
  throw std::invalid_argument("expected an integer or decimal string");
}

TileKind kind_from(const std::string& s) {
  for (TileKind k : {TileKind::Monomino, TileKind::Domino, TileKind::CircularDomino, TileKind::Empty})
    if (s == to_string(k)) return k;
  throw std::invalid_argument("unknown tile kind '" + s + "'");
}

Mode mode_from(const std::string& s) {
  if (s == "linear") return Mode::Linear;
  if (s == "circular") return Mode::Circular;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

Json params_json(const Params& p, const std::vector<std::string>& order) {
  Json j = Json::object();
  for (const auto& name : order)
    if (auto it = p.find(name); it != p.end()) j[name] = it->second;
  return j;
}

}  // namespace

Json as_json(const IntPoly2& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"exp", {std::to_string(e.s), std::to_string(e.t)}}, {"coeff", c.get_str()}});
  return {{"vars", {"s", "t"}}, {"terms", terms}};
}

Json as_json(const QPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", {e.get_str()}}, {"coeff", c.get_str()}});
  return {{"vars", {"q"}}, {"terms", terms}};
}

IntPoly2 int_poly_from_json(const Json& j) {
  IntPoly2 p;
  for (const auto& term : j.at("terms")) {
    const auto& exp = term.at("exp");
    const Integer s = parse_integer(exp.at(0));
    const Integer t = parse_integer(exp.at(1));
    if (s < 0 || t < 0 || !s.fits_uint_p() || !t.fits_uint_p())
      throw std::invalid_argument("IntPoly2 exponent out of range");
    p.add_term({static_cast<std::uint32_t>(s.get_ui()), static_cast<std::uint32_t>(t.get_ui())},
               parse_integer(term.at("coeff")));
  }
  return p;
}

QPoly qpoly_from_json(const Json& j) {
  QPoly p;
  for (const auto& term : j.at("terms")) {
    const Integer e = parse_integer(term.at("exp").at(0));
    if (e < 0) throw std::invalid_argument("negative QPoly exponent");
    p.add_term(e, parse_integer(term.at("coeff")));
  }
  return p;
}

Json as_json(const StripTiling& t) {
  Json tiles = Json::array();
  for (const Tile& tile : t.tiles) tiles.push_back({{"kind", to_string(tile.kind)}, {"start", tile.start}});
  return {{"length", t.length}, {"offset", t.offset}, {"tiles", tiles}};
}

StripTiling strip_from_json(const Json& j) {
  StripTiling t;
  t.length = j.at("length").get<int>();
  t.offset = j.value("offset", 0);
  for (const auto& tile : j.at("tiles"))
    t.tiles.push_back({kind_from(tile.at("kind").get<std::string>()), tile.at("start").get<int>()});
  return t;
}

Json as_json(const Partition& p) { return {{"parts", p.parts()}, {"cols", p.cols()}}; }

Json as_json(const PartitionTiling& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    Json row = as_json(t.rows[i]);
    row["part"] = i + 1;
    rows.push_back(row);
  }
  Json cols = Json::array();
  for (std::size_t i = 0; i < t.cols.size(); ++i) {
    Json col = as_json(t.cols[i]);
    col["part"] = i + 1;
    cols.push_back(col);
  }
  return {{"lambda", t.lambda.parts()}, {"complement", t.complement.parts()}, {"rows", rows}, {"cols", cols}};
}

Json as_json(const TilingGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  return {{"n", g.n}, {"mode", to_string(g.mode)}, {"edges", edges}};
}

TilingGraph graph_from_json(const Json& j) {
  TilingGraph g;
  g.n = j.at("n").get<int>();
  g.mode = mode_from(j.at("mode").get<std::string>());
  for (const auto& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

Json as_json(const AnnotatedDomino& d) {
  return {{"cells", {d.start, d.start + 1}},
          {"side", to_string(d.side)},
          {"floor", d.geometry.floor},
          {"height", d.geometry.height},
          {"weight_exp", d.exponent.get_str()}};
}

Json as_json(const BarrierTiling& t) {
  Json dominos = Json::array();
  for (const auto& d : annotate(t)) dominos.push_back(as_json(d));
  return {{"n", t.n},
          {"k", t.k},
          {"kind", to_string(t.kind)},
          {"left", as_json(t.left)},
          {"right", as_json(t.right)},
          {"dominos", dominos},
          {"weight", as_json(barrier_weight(t))}};
}

Json as_json(const StaircaseTiling& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json dominos = Json::array();
    for (const auto& d : annotate(row)) dominos.push_back(as_json(d));
    rows.push_back({{"row", row.row},
                    {"length", row.length},
                    {"point", row.point},
                    {"step", to_string(row.step)},
                    {"tiles", as_json(row.tiled)},
                    {"dominos", dominos}});
  }
  return {{"n", t.n}, {"k", t.k}, {"path", path_string(t)}, {"rows", rows}, {"weight", as_json(staircase_weight(t))}};
}

Json as_json(const FullStaircaseTiling& t) {
  Json rows = Json::array();
  const auto induced = induced_rows(t);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    Json dominos = Json::array();
    for (const auto& d : annotate(induced[i])) dominos.push_back(as_json(d));
    rows.push_back({{"row", i + 1},
                    {"point", induced[i].k},
                    {"step", to_string(induced[i].kind)},
                    {"tiles", as_json(t.rows[i])},
                    {"dominos", dominos}});
  }
  return {{"n", t.n}, {"k", t.k}, {"path", induced_path(t)}, {"rows", rows}, {"weight", as_json(full_weight(t))}};
}

FullStaircaseTiling full_staircase_from_json(const Json& j) {
  FullStaircaseTiling t;
  t.n = j.at("n").get<int>();
  t.k = j.at("k").get<int>();
  for (const auto& row : j.at("rows")) t.rows.push_back(strip_from_json(row.at("tiles")));
  return t;
}

Json as_json(const VerificationReport& r, bool timing) {
  Json grid = Json::array();
  for (const auto& point : r.points) {
    Json entry = params_json(point.params, r.param_names);
    entry["pass"] = point.pass;
    grid.push_back(entry);
  }
  Json counterexample = nullptr;
  if (r.counterexample) {
    counterexample = {{"params", params_json(r.counterexample->params, r.param_names)},
                      {"lhs", r.counterexample->lhs},
                      {"rhs", r.counterexample->rhs},
                      {"diff", r.counterexample->diff}};
  }
  Json j = {{"id", r.id},
            {"pass", r.pass},
            {"points", r.points.size()},
            {"params", r.param_names},
            {"grid", grid},
            {"counterexample", counterexample}};
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

Json as_json(const SuiteReport& r, bool timing) {
  Json reports = Json::array();
  for (const auto& v : r.reports) reports.push_back(as_json(v, timing));
  return {{"suite", r.label}, {"pass", r.pass}, {"identities", reports}};
}

std::string report_text(const VerificationReport& r, bool timing) {
  std::size_t passed = 0;
  for (const auto& p : r.points) passed += p.pass ? 1 : 0;
  std::ostringstream out;
  out << r.id << "  " << (r.pass ? "PASS" : "FAIL") << "  " << passed << "/" << r.points.size() << " points";
  if (timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", r.wall_ms);
    out << "  " << buf << " ms";
  }
  out << "\n";
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out << "    counterexample " << to_string(c.params, r.param_names) << "\n";
    if (!c.lhs.empty()) out << "    lhs  " << c.lhs << "\n";
    if (!c.rhs.empty()) out << "    rhs  " << c.rhs << "\n";
    out << "    diff " << c.diff << "\n";
  }
  return out.str();
}

std::string report_text(const SuiteReport& r, bool timing) {
  std::string out = "suite " + r.label + "\n";
  for (const auto& v : r.reports) out += report_text(v, timing);
  out += std::string("overall ") + (r.pass ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace fibonomial
