// fibonomial: closed forms, tiling enumeration, weight sums, identity
// verification and ASCII rendering from the command line.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fibonomial/barrier.hpp"
#include "fibonomial/graphs.hpp"
#include "fibonomial/identities.hpp"
#include "fibonomial/json_io.hpp"
#include "fibonomial/render.hpp"
#include "fibonomial/sequences.hpp"
#include "fibonomial/staircase.hpp"
#include "fibonomial/tilings.hpp"

namespace {

using namespace fibonomial;

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelOptions {
  std::string model;
  int n = 0;
  int m = 0;
  int k = 0;
  std::string mode = "linear";
  std::string restriction = "none";
  std::string rows;
  std::string cols;
  std::string weight;
};

Mode parse_mode(const std::string& s) { return s == "circular" ? Mode::Circular : Mode::Linear; }

Restriction parse_restriction(const std::string& s) {
  if (s == "none") return Restriction::None;
  if (s == "first-domino") return Restriction::FirstDomino;
  if (s == "first-monomino") return Restriction::FirstMonomino;
  if (s == "last-domino") return Restriction::LastDomino;
  throw UsageError("unknown restriction '" + s + "'");
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void require_point(const ModelOptions& o) {
  require(o.n >= 0 && o.k >= 0 && o.k <= o.n, "--k must satisfy 0 <= k <= n");
}

std::pair<Restriction, Restriction> partition_restrictions(const ModelOptions& o) {
  const bool linear = parse_mode(o.mode) == Mode::Linear;
  const Restriction rows = o.rows.empty() ? Restriction::None : parse_restriction(o.rows);
  const Restriction cols =
      o.cols.empty() ? (linear ? Restriction::FirstDomino : Restriction::None) : parse_restriction(o.cols);
  return {rows, cols};
}

// Calls visit(json, art) for each object of the model, in enumeration order.
using ItemVisitor = std::function<bool(const std::function<Json()>&, const std::function<std::string()>&)>;

void for_each_item(const ModelOptions& o, const ItemVisitor& visit) {
  require(o.n >= 0 && o.m >= 0, "sizes must be nonnegative");
  const Mode mode = parse_mode(o.mode);
  if (o.model == "strip") {
    const Restriction r = parse_restriction(o.restriction);
    require(mode == Mode::Linear || r == Restriction::None, "circular strips take no restriction");
    for_each_strip(o.n, mode, r, [&](const StripTiling& t) {
      return visit([&] { return as_json(t); }, [&] { return render(t); });
    });
  } else if (o.model == "partition") {
    const auto [rows, cols] = partition_restrictions(o);
    require(mode == Mode::Linear || (rows == Restriction::None && cols == Restriction::None),
            "circular partition tilings take no restriction");
    for_each_partition_tiling(o.m, o.n, mode, rows, cols, [&](const PartitionTiling& t) {
      return visit([&] { return as_json(t); }, [&] { return render(t); });
    });
  } else if (o.model == "barrier") {
    require_point(o);
    for_each_barrier(o.n, o.k, [&](const BarrierTiling& t) {
      return visit([&] { return as_json(t); }, [&] { return render(t); });
    });
  } else if (o.model == "staircase") {
    require_point(o);
    for_each_staircase(o.n, o.k, [&](const StaircaseTiling& t) {
      return visit([&] { return as_json(t); }, [&] { return render(t); });
    });
  } else if (o.model == "staircase-full") {
    require_point(o);
    for_each_full_staircase(o.n, o.k, [&](const FullStaircaseTiling& t) {
      return visit([&] { return as_json(t); }, [&] { return render(t); });
    });
  } else if (o.model == "graph") {
    require(o.n >= 1, "graphs need --n >= 1");
    for_each_tiling_graph(o.n, mode, [&](const TilingGraph& g) {
      return visit([&] { return as_json(g); }, [&] { return render(g); });
    });
  } else {
    throw UsageError("unknown model '" + o.model + "'");
  }
}

template <class Poly>
void print_poly(const Poly& p, const std::string& format) {
  if (format == "json") std::cout << as_json(p).dump() << "\n";
  else std::cout << to_string(p) << "\n";
}

int run_poly(const std::string& family, int n, int k, int base, const std::string& format, bool has_k) {
  require(n >= 0, "--n must be nonnegative");
  require(base >= 1, "--base must be positive");
  const auto un = static_cast<unsigned>(n);
  auto need_k = [&] {
    require(has_k, "--family " + family + " needs --k");
    require(k >= 0 && k <= n, "--k must satisfy 0 <= k <= n");
    return static_cast<unsigned>(k);
  };
  if (family == "lucas") print_poly(lucas_poly(un), format);
  else if (family == "circ") print_poly(circ_lucas_poly(un), format);
  else if (family == "lucasnomial") print_poly(lucasnomial(un, need_k()), format);
  else if (family == "qint") print_poly(q_int(un, base), format);
  else if (family == "gauss") print_poly(gauss_binom(un, need_k()), format);
  else if (family == "qfib") print_poly(q_fib(un, base), format);
  else if (family == "qfibonomial") print_poly(q_fibonomial(un, need_k()), format);
  else throw UsageError("unknown family '" + family + "'");
  return 0;
}

int run_sum(const ModelOptions& o, const std::string& format) {
  require(o.n >= 0 && o.m >= 0, "sizes must be nonnegative");
  const Mode mode = parse_mode(o.mode);
  if (o.model == "strip") {
    const std::string weight = o.weight.empty() ? "st" : o.weight;
    const Restriction r = parse_restriction(o.restriction);
    require(mode == Mode::Linear || r == Restriction::None, "circular strips take no restriction");
    if (weight == "qfib") {
      require(mode == Mode::Linear, "--weight qfib needs linear mode");
      QPoly total;
      for_each_strip(o.n, mode, r, [&](const StripTiling& t) {
        total += strip_weight_qfib(t);
        return true;
      });
      print_poly(total, format);
    } else {
      require(weight == "st", "strip weights are st or qfib");
      IntPoly2 total;
      for_each_strip(o.n, mode, r, [&](const StripTiling& t) {
        total += strip_weight_st(t, mode);
        return true;
      });
      print_poly(total, format);
    }
  } else if (o.model == "partition") {
    const std::string weight = o.weight.empty() ? "st" : o.weight;
    if (weight == "coord") {
      require(mode == Mode::Linear, "--weight coord needs linear mode");
      print_poly(coord_partition_sum(o.m, o.n), format);
    } else {
      require(weight == "st", "partition weights are st or coord");
      const auto [rows, cols] = partition_restrictions(o);
      require(mode == Mode::Linear || (rows == Restriction::None && cols == Restriction::None),
              "circular partition tilings take no restriction");
      IntPoly2 total;
      for_each_partition_tiling(o.m, o.n, mode, rows, cols, [&](const PartitionTiling& t) {
        total += partition_weight_st(t, mode);
        return true;
      });
      print_poly(total, format);
    }
  } else if (o.model == "barrier") {
    require_point(o);
    print_poly(barrier_sum(o.n, o.k), format);
  } else if (o.model == "staircase") {
    require_point(o);
    print_poly(staircase_sum(o.n, o.k), format);
  } else if (o.model == "staircase-full") {
    require_point(o);
    print_poly(full_sum(o.n, o.k), format);
  } else if (o.model == "graph") {
    require(o.n >= 1, "graphs need --n >= 1");
    IntPoly2 total;
    for_each_tiling_graph(o.n, mode, [&](const TilingGraph& g) {
      total += graph_weight(g);
      return true;
    });
    print_poly(total, format);
  } else {
    throw UsageError("unknown model '" + o.model + "'");
  }
  return 0;
}

int run_enum(const ModelOptions& o, long long limit) {
  require(limit >= 0, "--limit must be nonnegative");
  long long emitted = 0;
  bool truncated = false;
  for_each_item(o, [&](const std::function<Json()>& json, const std::function<std::string()>&) {
    if (emitted == limit) {
      truncated = true;
      return false;
    }
    std::cout << json().dump() << "\n";
    ++emitted;
    return true;
  });
  if (truncated) std::cerr << "fibonomial: output stopped at --limit " << limit << "\n";
  return 0;
}

int run_render(const ModelOptions& o, long long index) {
  require(index >= 0, "--index must be nonnegative");
  long long seen = 0;
  bool found = false;
  for_each_item(o, [&](const std::function<Json()>&, const std::function<std::string()>& art) {
    if (seen++ == index) {
      std::cout << art();
      found = true;
      return false;
    }
    return true;
  });
  if (!found) throw UsageError("--index " + std::to_string(index) + " is past the last item");
  return 0;
}

int run_verify(const std::string& id, bool all, int max, bool reference, const std::string& format,
               const std::string& seed_report, bool timing) {
  require(all != !id.empty(), "pass exactly one of --id or --all");
  require(reference || max >= 0, "--max must be given (and nonnegative) unless --reference is set");
  SuiteReport suite;
  if (all) {
    suite = reference ? verify_reference_suite() : verify_suite(max);
  } else {
    const IdentityDescriptor& d = find_identity(id);
    const int bound = reference ? d.reference_max : max;
    suite.label = reference ? "reference" : "max=" + std::to_string(max);
    suite.reports.push_back(verify(d, d.grid(bound)));
    suite.pass = suite.reports.back().pass;
  }
  if (format == "json") std::cout << as_json(suite, timing).dump(2) << "\n";
  else std::cout << report_text(suite, timing);
  if (!seed_report.empty()) {
    std::ofstream file(seed_report);
    if (!file) throw std::runtime_error("cannot write " + seed_report);
    file << as_json(suite, timing).dump(2) << "\n";
  }
  return suite.pass ? 0 : 1;
}

void add_model_options(CLI::App* cmd, ModelOptions& o, bool with_weight) {
  cmd->add_option("--model", o.model, "strip | partition | barrier | staircase | staircase-full | graph")
      ->required()
      ->check(CLI::IsMember({"strip", "partition", "barrier", "staircase", "staircase-full", "graph"}));
  cmd->add_option("--n", o.n, "strip length, box columns, or staircase size")->required();
  cmd->add_option("--m", o.m, "box rows (partition)");
  cmd->add_option("--k", o.k, "barrier point or start abscissa");
  cmd->add_option("--mode", o.mode, "linear | circular")->check(CLI::IsMember({"linear", "circular"}));
  cmd->add_option("--restriction", o.restriction, "strip restriction")
      ->check(CLI::IsMember({"none", "first-domino", "first-monomino", "last-domino"}));
  cmd->add_option("--rows", o.rows, "partition row restriction (default none)")
      ->check(CLI::IsMember({"none", "first-domino", "first-monomino", "last-domino"}));
  cmd->add_option("--cols", o.cols, "partition column restriction (default first-domino, linear)")
      ->check(CLI::IsMember({"none", "first-domino", "first-monomino", "last-domino"}));
  if (with_weight)
    cmd->add_option("--weight", o.weight, "strip: st | qfib; partition: st | coord")
        ->check(CLI::IsMember({"st", "qfib", "coord"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibonomial tilings, q-analogs and identity checks"};
  app.require_subcommand(1);

  std::string family;
  std::string format = "text";
  int n = 0;
  int k = 0;
  int base = 1;
  auto* poly = app.add_subcommand("poly", "print a closed-form polynomial");
  poly->add_option("--family", family, "lucas | circ | lucasnomial | qint | gauss | qfib | qfibonomial")
      ->required()
      ->check(CLI::IsMember({"lucas", "circ", "lucasnomial", "qint", "gauss", "qfib", "qfibonomial"}));
  poly->add_option("--n", n)->required();
  auto* k_opt = poly->add_option("--k", k);
  poly->add_option("--base", base, "q-analog base b for [n]_{q^b}");
  poly->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  ModelOptions enum_opts;
  long long limit = 1000000;
  auto* enumerate = app.add_subcommand("enum", "stream tilings as JSON lines");
  add_model_options(enumerate, enum_opts, false);
  enumerate->add_option("--limit", limit, "stop after this many items (default 1000000)");

  ModelOptions sum_opts;
  std::string sum_format = "text";
  auto* sum = app.add_subcommand("sum", "print the total weight polynomial of a model");
  add_model_options(sum, sum_opts, true);
  sum->add_option("--format", sum_format)->check(CLI::IsMember({"text", "json"}));

  ModelOptions render_opts;
  long long index = 0;
  auto* rend = app.add_subcommand("render", "draw one tiling as ASCII art");
  add_model_options(rend, render_opts, false);
  rend->add_option("--index", index, "0-based position in enumeration order");

  std::string id;
  bool all = false;
  int max = -1;
  bool reference = false;
  bool timing = false;
  std::string verify_format = "text";
  std::string seed_report;
  auto* ver = app.add_subcommand("verify", "check identities exactly over a parameter grid");
  auto* id_opt = ver->add_option("--id", id, "identity id, e.g. G2");
  auto* all_opt = ver->add_flag("--all", all, "every identity in the catalog");
  id_opt->excludes(all_opt);
  ver->add_option("--max", max, "bound on every parameter");
  ver->add_flag("--reference", reference, "use each identity's reference bound instead of --max");
  ver->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
  ver->add_option("--seed-report", seed_report, "also write the JSON report to this file");
  ver->add_flag("--timing", timing, "include wall time (output is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*poly) return run_poly(family, n, k, base, format, k_opt->count() > 0);
    if (*enumerate) return run_enum(enum_opts, limit);
    if (*sum) return run_sum(sum_opts, sum_format);
    if (*rend) return run_render(render_opts, index);
    if (*ver) return run_verify(id, all, max, reference, verify_format, seed_report, timing);
  } catch (const UsageError& e) {
    std::cerr << "fibonomial: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "fibonomial: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    std::cerr << "fibonomial: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "fibonomial: " << e.what() << "\n";
    return 1;
  }
  return kUsageError;
}
