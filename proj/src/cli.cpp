#include "wiener/cli.hpp"

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wiener/blocks.hpp"
#include "wiener/canonical.hpp"
#include "wiener/checks.hpp"
#include "wiener/enumerate.hpp"
#include "wiener/families.hpp"
#include "wiener/graph.hpp"
#include "wiener/graph6.hpp"
#include "wiener/search.hpp"

namespace wiener {

namespace {

std::string vlist(const std::vector<int>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += 'v';
    s += std::to_string(vs[i]);
  }
  return s;
}

const char* kind_str(BlockKind k) {
  switch (k) {
    case BlockKind::kNonPendant:
      return "non-pendant";
    case BlockKind::kPendant:
      return "pendant";
    case BlockKind::kSPendant:
      return "s-pendant";
  }
  return "?";
}

// Reads graph6 lines (blank lines skipped) and hands each decoded connected
// graph to fn. Returns 0, or 3 after reporting a bad line.
int for_each_input_graph(std::istream& in, std::ostream& err,
                         const std::function<void(int, const Graph&)>& fn) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      Graph g = graph6_decode(line);
      if (!is_connected(g)) {
        err << "line " << lineno << ": the graph is disconnected\n";
        return 3;
      }
      fn(lineno, g);
    } catch (const Graph6Error& e) {
      err << "line " << lineno << ": " << e.what() << "\n";
      return 3;
    }
  }
  return 0;
}

int do_wiener(std::istream& in, std::ostream& out, std::ostream& err) {
  return for_each_input_graph(in, err, [&](int, const Graph& g) {
    std::vector<int> per = peripherian_vertices(g);
    out << "W=" << wiener_index(g) << " Dmax=" << vertex_distance(g, per.front())
        << " peripherian=" << vlist(per) << "\n";
  });
}

int do_analyze(std::istream& in, std::ostream& out, std::ostream& err) {
  int idx = 0;
  return for_each_input_graph(in, err, [&](int, const Graph& g) {
    BlockCutDecomposition bc = decompose(g);
    std::vector<int> per = peripherian_vertices(g);
    out << "graph " << ++idx << ": n=" << g.order() << " m=" << g.edge_count()
        << " W=" << wiener_index(g) << " Dmax=" << vertex_distance(g, per.front())
        << " peripherian=" << vlist(per) << " k=" << bc.cut_vertices.size() << "\n";
    if (!bc.cut_vertices.empty())
      out << "  cut vertices: " << vlist(bc.cut_vertices) << "\n";
    for (const Block& b : bc.blocks) {
      const char* shape = b.vertices.size() == 2 ? "edge"
                          : b.is_cycle()         ? "cycle"
                                                 : "2-connected";
      out << "  block " << vlist(b.vertices) << ": " << b.edge_count << " edge"
          << (b.edge_count == 1 ? "" : "s") << ", " << shape << ", "
          << kind_str(b.kind) << "\n";
    }
  });
}

int do_family(const std::string& kind, const std::vector<int>& params,
              std::ostream& out, std::ostream& err) {
  auto need = [&](std::size_t c, const char* usage) {
    if (params.size() != c) throw ParamError(std::string("expected ") + usage);
  };
  Graph g(1);
  if (kind == "path") {
    need(1, "family path <n>");
    g = build_path(params[0]);
  } else if (kind == "cycle") {
    need(1, "family cycle <n>");
    g = build_cycle(params[0]);
  } else if (kind == "star") {
    need(1, "family star <n>");
    g = build_star(params[0]);
  } else if (kind == "lollipop") {
    need(2, "family lollipop <n> <g>");
    g = build_lollipop(params[0], params[1]);
  } else if (kind == "dumbbell") {
    need(3, "family dumbbell <m1> <m2> <n>");
    g = build_dumbbell(params[0], params[1], params[2]);
  } else {
    err << "error: unknown family: " << kind
        << " (expected path, cycle, star, lollipop, or dumbbell)\n";
    return 2;
  }
  out << graph6_encode(g) << "\n";
  return 0;
}

int do_formula(const std::string& name, const std::vector<std::int64_t>& a,
               std::ostream& out, std::ostream& err) {
  using Fn = std::function<std::int64_t(const std::vector<std::int64_t>&)>;
  struct Spec {
    std::size_t argc;
    const char* usage;
    Fn fn;
  };
  static const std::map<std::string, Spec> table = {
      {"path-distance",
       {2, "<n> <i>",
        [](const auto& v) { return formula_path_vertex_distance(int(v[0]), int(v[1])); }}},
      {"path-wiener",
       {1, "<n>", [](const auto& v) { return formula_wiener_path(int(v[0])); }}},
      {"cycle-distance",
       {1, "<n>", [](const auto& v) { return formula_cycle_vertex_distance(int(v[0])); }}},
      {"cycle-wiener",
       {1, "<n>", [](const auto& v) { return formula_wiener_cycle(int(v[0])); }}},
      {"lollipop-wiener",
       {2, "<n> <g>",
        [](const auto& v) { return formula_wiener_lollipop(int(v[0]), int(v[1])); }}},
      {"lollipop-pendant-distance",
       {2, "<n> <g>",
        [](const auto& v) {
          return formula_lollipop_pendant_distance(int(v[0]), int(v[1]));
        }}},
      {"dumbbell-wiener",
       {3, "<m1> <m2> <n>",
        [](const auto& v) {
          return formula_wiener_dumbbell(int(v[0]), int(v[1]), int(v[2]));
        }}},
      {"lollipop-k-wiener",
       {2, "<n> <k>",
        [](const auto& v) { return formula_wiener_lollipop_k(int(v[0]), int(v[1])); }}},
  };
  auto it = table.find(name);
  if (it == table.end()) {
    err << "error: unknown formula: " << name << " (formulas:";
    for (const auto& [key, spec] : table) err << ' ' << key;
    err << ")\n";
    return 2;
  }
  if (a.size() != it->second.argc)
    throw ParamError("formula " + name + " expects " + it->second.usage);
  out << it->second.fn(a) << "\n";
  return 0;
}

struct SearchArgs {
  int n = 0;
  int k = 0;
  int workers = 1;
  bool from_stdin = false;
  std::string objective = "wiener";
};

int do_search(const SearchArgs& a, std::istream& in, std::ostream& out) {
  const Objective obj =
      a.objective == "distance" ? Objective::kVertexDistance : Objective::kWiener;
  ExtremalRecord rec =
      a.from_stdin ? search_stream(obj, in, a.n, a.k)
      : obj == Objective::kWiener
          ? search_max_wiener(a.n, a.k, a.workers)
          : search_max_vertex_distance(a.n, a.k, a.workers);
  out << "max " << (obj == Objective::kWiener ? "W" : "D") << " = " << rec.optimum
      << ", " << rec.witnesses.size()
      << (rec.witnesses.size() == 1 ? " witness" : " witnesses") << "\n";
  for (const Certificate& cert : rec.witnesses)
    out << graph6_encode(graph_from_certificate(cert)) << "\n";
  return 0;
}

struct VerifyArgs {
  int table = 0;
  std::vector<std::string> selectors;  // --check and --lemma, in order given
  int max_n = 9;
  int workers = 1;
  std::uint64_t seed = 0;
  std::string format = "markdown";
  bool timings = false;
};

int do_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  CheckOptions co;
  co.max_n = a.max_n;
  co.workers = a.workers;
  co.seed = a.seed;
  std::vector<CheckReport> reports;
  if (a.table != 0) reports = table_checks(a.table, co);
  for (const std::string& sel : a.selectors) {
    const std::string name = resolve_check(sel);
    if (name.empty()) {
      err << "error: unknown check: " << sel << "\n";
      return 2;
    }
    std::vector<CheckReport> part = run_check(name, co);
    reports.insert(reports.end(), part.begin(), part.end());
  }
  if (a.table == 0 && a.selectors.empty()) reports = run_all_checks(co);

  if (a.format == "csv")
    render_csv(reports, out, a.timings);
  else
    render_markdown(reports, out, a.timings);
  for (const CheckReport& r : reports)
    if (r.status == CheckStatus::kFail && !r.counterexample.empty())
      err << "counterexample " << r.id << ": " << r.counterexample << "\n";
  return all_passed(reports) ? 0 : 1;
}

int do_report(int max_n, int workers, std::ostream& out) {
  CheckOptions co;
  co.max_n = max_n;
  co.workers = workers;
  out << "# Maximum Wiener index by number of cut vertices\n";
  struct Range {
    int k, lo, hi;
  };
  const Range ranges[] = {{1, 4, 6}, {2, 5, 9}, {3, 6, 13}};
  for (const Range& rg : ranges) {
    const int hi = std::min(rg.hi, max_n);
    out << "\n## graphs with " << rg.k << " cut vert"
        << (rg.k == 1 ? "ex" : "ices") << "\n\n";
    if (hi < rg.lo) {
      out << "(nothing within --max-n " << max_n << ")\n";
      continue;
    }
    out << "| n | max W | witnesses |\n| ---: | ---: | --- |\n";
    for (int n = rg.lo; n <= hi; ++n) {
      const ClassExtremes& ce = class_sweep(n, workers).by_k[std::size_t(rg.k)];
      out << "| " << n << " | " << ce.max_wiener << " | ";
      for (std::size_t i = 0; i < ce.wiener_witnesses.size(); ++i) {
        if (i) out << ", ";
        out << '`' << graph6_encode(graph_from_certword(ce.wiener_witnesses[i], n))
            << '`';
      }
      out << " |\n";
    }
  }
  return 0;
}

struct ExploreArgs {
  int n = -1, k = -1;
  int n_lo = -1, n_hi = -1, k_lo = -1, k_hi = -1;
  int max_n = 9;
  int workers = 1;
};

int do_explore(ExploreArgs a, std::ostream& out) {
  if (a.n >= 0) a.n_lo = a.n_hi = a.n;
  if (a.k >= 0) a.k_lo = a.k_hi = a.k;
  if (a.n_lo < 0 || a.n_hi < 0 || a.k_lo < 0 || a.k_hi < 0)
    throw ParamError("explore needs --n/--k or all of --n-lo --n-hi --k-lo --k-hi");
  CheckOptions co;
  co.max_n = a.max_n;
  co.workers = a.workers;
  for (const ExploreRow& row :
       explore_wiener_conjecture(a.n_lo, a.n_hi, a.k_lo, a.k_hi, co)) {
    out << "n=" << row.n << " k=" << row.k << ": ";
    if (row.skipped) {
      out << "skipped (" << row.note << ")\n";
      continue;
    }
    out << "max W = " << row.optimum << " over " << row.class_size << " graphs, "
        << row.witnesses.size()
        << (row.witnesses.size() == 1 ? " witness" : " witnesses") << "; ";
    const std::string lname =
        "L(" + std::to_string(row.n) + "," + std::to_string(row.n - row.k) + ")";
    if (!row.lollipop_defined)
      out << "no lollipop exists for this pair";
    else if (row.lollipop_unique)
      out << "lollipop " << lname << " is the unique maximizer";
    else if (row.lollipop_extremal)
      out << "lollipop " << lname << " is among the maximizers";
    else
      out << "lollipop " << lname << " is not a maximizer";
    out << "\n";
    for (const std::string& w : row.witnesses) out << "  " << w << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{
      "wienermax: vertex-distance and Wiener-index extremes over connected\n"
      "graphs with a fixed number of cut vertices"};
  app.name("wienermax");
  app.require_subcommand(1);
  app.footer(
      "exit codes: 0 success, 1 failed checks, 2 usage error, 3 input error");

  CLI::App* c_wiener = app.add_subcommand(
      "wiener", "read graph6 lines, print W, max vertex distance, peripherian");
  CLI::App* c_analyze = app.add_subcommand(
      "analyze", "read graph6 lines, print block and cut-vertex structure");

  std::string fam_kind;
  std::vector<int> fam_params;
  CLI::App* c_family = app.add_subcommand(
      "family", "emit a named graph as graph6 (path/cycle/star <n>, "
                "lollipop <n> <g>, dumbbell <m1> <m2> <n>)");
  c_family->add_option("kind", fam_kind, "family name")->required();
  c_family->add_option("params", fam_params, "integer parameters");

  std::string formula_name;
  std::vector<std::int64_t> formula_args;
  CLI::App* c_formula = app.add_subcommand(
      "formula", "evaluate a closed form (path-distance, path-wiener, "
                 "cycle-distance, cycle-wiener, lollipop-wiener, "
                 "lollipop-pendant-distance, dumbbell-wiener, lollipop-k-wiener)");
  c_formula->add_option("name", formula_name, "formula name")->required();
  c_formula->add_option("args", formula_args, "integer arguments");

  SearchArgs sa;
  CLI::App* c_search = app.add_subcommand(
      "search", "exhaustive extremal search over the class (n, k)");
  c_search->add_option("--n", sa.n, "number of vertices")->required();
  c_search->add_option("--k", sa.k, "number of cut vertices")->required();
  c_search
      ->add_option("--objective", sa.objective, "wiener or distance")
      ->check(CLI::IsMember({"wiener", "distance"}))
      ->capture_default_str();
  c_search->add_flag("--stdin", sa.from_stdin,
                     "search the graph6 stream on stdin instead of enumerating");
  c_search->add_option("--workers", sa.workers, "enumeration threads")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();

  VerifyArgs va;
  CLI::App* c_verify = app.add_subcommand(
      "verify", "run verification checks; CSV columns: "
                "check_id,status,n,k,optimum,witness_count,elapsed_ms");
  c_verify->add_option("--table", va.table, "table checks only: 1, 2, or 3")
      ->check(CLI::Range(1, 3));
  c_verify->add_option("--check", va.selectors,
                       "check to run, by name (repeatable; see --list)");
  c_verify->add_option("--lemma", va.selectors,
                       "check to run, by short id, e.g. 4.7 or c-cmn (repeatable)");
  c_verify->add_option("--max-n", va.max_n, "exhaustive-enumeration ceiling")
      ->check(CLI::Range(3, 10))
      ->capture_default_str();
  c_verify->add_option("--workers", va.workers, "enumeration threads")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  c_verify->add_option("--seed", va.seed, "seed for randomized-instance checks")
      ->capture_default_str();
  c_verify->add_option("--format", va.format, "markdown or csv")
      ->check(CLI::IsMember({"markdown", "csv"}))
      ->capture_default_str();
  c_verify->add_flag("--timings", va.timings, "include wall-clock milliseconds");
  bool list_checks = false;
  c_verify->add_flag("--list", list_checks, "list check names and exit");

  int report_max_n = 9, report_workers = 1;
  CLI::App* c_report = app.add_subcommand(
      "report", "render the exhaustively confirmed extremal tables as Markdown");
  c_report->add_option("--max-n", report_max_n, "exhaustive-enumeration ceiling")
      ->check(CLI::Range(3, 10))
      ->capture_default_str();
  c_report->add_option("--workers", report_workers, "enumeration threads")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();

  ExploreArgs ea;
  CLI::App* c_explore = app.add_subcommand(
      "explore", "scan classes with k >= 4 cut vertices for extremal records");
  c_explore->add_option("--n", ea.n, "single order");
  c_explore->add_option("--k", ea.k, "single cut-vertex count (>= 4)");
  c_explore->add_option("--n-lo", ea.n_lo, "order range start");
  c_explore->add_option("--n-hi", ea.n_hi, "order range end");
  c_explore->add_option("--k-lo", ea.k_lo, "cut-vertex range start (>= 4)");
  c_explore->add_option("--k-hi", ea.k_hi, "cut-vertex range end");
  c_explore->add_option("--max-n", ea.max_n, "exhaustive-enumeration ceiling")
      ->check(CLI::Range(3, 10))
      ->capture_default_str();
  c_explore->add_option("--workers", ea.workers, "enumeration threads")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_wiener->parsed()) return do_wiener(in, out, err);
    if (c_analyze->parsed()) return do_analyze(in, out, err);
    if (c_family->parsed()) return do_family(fam_kind, fam_params, out, err);
    if (c_formula->parsed()) return do_formula(formula_name, formula_args, out, err);
    if (c_search->parsed()) return do_search(sa, in, out);
    if (c_verify->parsed()) {
      if (list_checks) {
        for (const std::string& name : check_names()) out << name << "\n";
        return 0;
      }
      return do_verify(va, out, err);
    }
    if (c_report->parsed()) return do_report(report_max_n, report_workers, out);
    if (c_explore->parsed()) return do_explore(ea, out);
  } catch (const Graph6Error& e) {
    if (e.line > 0)
      err << "line " << e.line << ": " << e.what() << "\n";
    else
      err << "error: " << e.what() << "\n";
    return 3;
  } catch (const DisconnectedError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParamError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}

}  // namespace wiener
