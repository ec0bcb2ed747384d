// Command-line front end: verify, construct, search, cases, table, graph.
//
// Exit codes: 0 success / property holds, 1 property violated,
// 2 input error, 3 budget exhausted.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bowtie/constructions.hpp"
#include "bowtie/error.hpp"
#include "bowtie/exact_search.hpp"
#include "bowtie/hypergraph.hpp"
#include "bowtie/johnson.hpp"
#include "bowtie/json_io.hpp"
#include "bowtie/lemma_cases.hpp"
#include "bowtie/saturation.hpp"

using namespace bowtie;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

int default_threads() {
  if (const char* env = std::getenv("BOWTIE_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Hypergraph load_hypergraph(const std::string& path) {
  if (path == "-") return parse_hypergraph(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_hypergraph(in);
}

std::string set_string(const std::vector<int>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string file;
  std::string property = "saturated";
  bool json_out = false;
};

int run_verify(const VerifyArgs& a) {
  const Hypergraph h = load_hypergraph(a.file);
  const SaturationReport r = check_saturation(h);
  bool holds = false;
  if (a.property == "saturated") {
    holds = r.saturated();
  } else if (a.property == "semi-saturated") {
    holds = r.semi_saturated();
  } else if (a.property == "bowtie-free") {
    holds = r.bowtie_free();
  } else {
    throw InputError("unknown property '" + a.property + "'");
  }
  if (a.json_out) {
    json out = to_json(r);
    out["n"] = h.order();
    out["k"] = h.uniformity();
    out["edges"] = h.size();
    out["property"] = a.property;
    out["holds"] = holds;
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "n=" << h.order() << " k=" << h.uniformity() << " edges=" << h.size() << '\n';
    std::cout << "bowtie-free:    " << (r.bowtie_free() ? "true" : "false");
    if (r.bowtie) std::cout << "  (" << r.bowtie->first.to_string() << " meets " << r.bowtie->second.to_string() << " in one vertex)";
    std::cout << "\nsemi-saturated: " << (r.semi_saturated() ? "true" : "false");
    if (r.counterexample) std::cout << "  (adding " << r.counterexample->to_string() << " creates no bow tie)";
    std::cout << "\nsaturated:      " << (r.saturated() ? "true" : "false") << '\n';
  }
  return holds ? kOk : kViolated;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::string family;
  std::vector<int> params;
  std::string output;
  std::string graph_file;
  std::string fixtures;
  std::string emit_graph;
  std::vector<int> v_part;
  std::vector<int> w_part;
  std::vector<int> centres;
  int k = 0;
  bool check = false;
};

int param(const ConstructArgs& a, std::size_t i, const char* name) {
  if (a.params.size() <= i) throw InputError("family '" + a.family + "' needs parameter " + name);
  return a.params[i];
}

int run_construct(const ConstructArgs& a) {
  std::optional<Hypergraph> h;
  std::string comment;
  bool wants_saturated = true;
  if (a.family == "complete") {
    h = complete(param(a, 0, "m"), param(a, 1, "k"));
    comment = "complete " + std::to_string(a.params[0]) + " " + std::to_string(a.params[1]);
  } else if (a.family == "fano") {
    h = fano_complement();
    comment = "complements of the Fano lines";
  } else if (a.family == "sat2") {
    h = sat2_construction(param(a, 0, "n"));
  } else if (a.family == "sat3") {
    h = sat3_construction(param(a, 0, "n"));
  } else if (a.family == "sat4") {
    std::optional<SatSplit> split;
    if (!a.v_part.empty() || !a.w_part.empty()) split = SatSplit{a.v_part, a.w_part};
    h = sat4_construction(param(a, 0, "n"), split);
  } else if (a.family == "dual") {
    if (a.graph_file.empty() || a.k == 0) throw InputError("dual needs --graph and --k");
    h = dual_hypergraph(load_graph(a.graph_file), a.k);
    wants_saturated = false;
  } else if (a.family == "sharpcon") {
    if (a.graph_file.empty()) throw InputError("sharpcon needs --graph");
    std::optional<std::vector<int>> centres;
    if (!a.centres.empty()) centres = a.centres;
    auto built = sharpcon(load_graph(a.graph_file), centres);
    if (!a.emit_graph.empty()) {
      std::ofstream g(a.emit_graph);
      if (!g) throw InputError("cannot write '" + a.emit_graph + "'");
      write_edge_list(g, built.modified, "modified graph G' (centres " + set_string(built.centres) + " split)");
    }
    comment = "sharp construction from " + a.graph_file + ", centres " + set_string(built.centres);
    h = std::move(built.hypergraph);
    wants_saturated = false;
  } else if (a.family == "wsat4") {
    h = wsat4_construction(param(a, 0, "n"), a.fixtures.empty() ? default_fixtures() : fixture_directory(a.fixtures));
    wants_saturated = false;
  } else {
    throw InputError("unknown family '" + a.family + "'");
  }
  if (comment.empty()) comment = a.family + " " + std::to_string(a.params.empty() ? 0 : a.params[0]);

  if (a.output.empty() || a.output == "-") {
    write_hypergraph(std::cout, *h, comment);
  } else {
    std::ofstream out(a.output);
    if (!out) throw InputError("cannot write '" + a.output + "'");
    write_hypergraph(out, *h, comment);
  }
  if (!a.check) return kOk;
  const SaturationReport r = check_saturation(*h);
  const bool ok = wants_saturated ? r.saturated() : r.semi_saturated();
  std::cerr << "check: " << (wants_saturated ? "saturated" : "semi-saturated") << " = " << (ok ? "true" : "false")
            << " (" << h->size() << " edges)\n";
  return ok ? kOk : kViolated;
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  std::vector<std::string> positional;
  std::string problem_file;
  std::optional<int> max_size;
  std::size_t witness_cap = 16;
  std::uint64_t node_budget = 4'000'000'000ULL;
  int threads = 1;
  bool oracle = false;
};

int run_search(const SearchArgs& a) {
  ProblemSpec spec;
  if (!a.problem_file.empty()) {
    json j;
    try {
      j = json::parse(read_file(a.problem_file));
    } catch (const json::parse_error& e) {
      throw InputError(std::string("problem JSON: ") + e.what());
    }
    spec = problem_from_json(j);
  } else {
    if (a.positional.size() != 4 || a.positional[0] != "johnson") {
      throw InputError("usage: search johnson N K MODE  or  search --problem FILE");
    }
    json j = {{"graph", {{"johnson", {std::stoi(a.positional[1]), std::stoi(a.positional[2])}}}},
              {"mode", a.positional[3]}};
    spec = problem_from_json(j);
    spec.problem.witness_cap = a.witness_cap;
    spec.problem.node_budget = a.node_budget;
    spec.problem.threads = a.threads;
  }
  if (a.max_size) spec.problem.max_size = a.max_size;

  const auto start = std::chrono::steady_clock::now();
  const SearchResult r = solve(spec.problem);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json out = to_json(r, spec.johnson);
  out["mode"] = to_string(spec.problem.mode);
  out["wall_time_s"] = seconds;
  int code = kOk;
  if (a.oracle) {
    const SearchResult o = brute_force_oracle(spec.problem);
    const bool agree = o.optimum == r.optimum && o.count == r.count;
    out["oracle"] = {{"optimum", o.optimum ? json(*o.optimum) : json(nullptr)}, {"count", o.count}, {"agrees", agree}};
    if (!agree) code = kViolated;
  }
  std::cout << out.dump(2) << '\n';
  return code;
}

// ---------------------------------------------------------------------------
// cases

struct CasesArgs {
  std::string which = "all";
  bool json_out = false;
  bool diagnostics = false;
  int threads = 1;
};

void print_reports(const std::vector<CaseReport>& reports, const CasesArgs& a, std::vector<CaseSummary>& summaries) {
  for (const auto& r : reports) {
    if (a.json_out) {
      std::cout << to_json(r).dump() << '\n';
      continue;
    }
    if (r.id != CaseId::p3) {
      std::string ys;
      for (const auto& y : r.sets) ys += (ys.empty() ? "" : " ") + y.to_string();
      std::cout << std::left << std::setw(4) << to_string(r.id) << std::setw(9) << r.variant << " Y=[" << ys << "] ";
      if (r.vacuous) {
        std::cout << "vacuous (" << r.vacuous_reason << ")\n";
      } else {
        std::cout << "optimum=" << (r.optimum ? std::to_string(*r.optimum) : "inf") << " count=" << r.optimum_count
                  << (r.pass ? "  pass" : "  FAIL") << '\n';
      }
    } else if (!r.pass) {
      std::string ss;
      for (const auto& s : r.sets) ss += s.to_string();
      std::cout << "P3 " << r.variant << " FAIL S=" << ss << " y=" << r.y << " z=" << r.z << " x_min=" << r.x_min << '\n';
    }
  }
  summaries.push_back(summarise(reports));
}

int run_cases(const CasesArgs& a) {
  if (a.which != "p3" && a.which != "p4" && a.which != "s4" && a.which != "all") {
    throw InputError("cases: expected p3, p4, s4 or all");
  }
  std::vector<CaseSummary> primary;
  std::vector<CaseSummary> diagnostic;
  if (a.which == "p3" || a.which == "all") {
    print_reports(p3_verify(), a, primary);
    if (a.diagnostics) {
      print_reports(p3_verify({.base_filter = false}), a, diagnostic);
      print_reports(p3_verify({.base_filter = true, .alternative_bound = true}), a, diagnostic);
      print_reports(p3_verify({.base_filter = false, .alternative_bound = true}), a, diagnostic);
    }
  }
  if (a.which == "p4" || a.which == "all") print_reports(p4_verify(a.threads), a, primary);
  if (a.which == "s4" || a.which == "all") print_reports(s4_verify(a.threads), a, primary);

  bool all_pass = true;
  auto show = [&](const CaseSummary& s, const char* tag) {
    if (a.json_out) {
      json j = to_json(s);
      j["summary"] = tag;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "[" << tag << "] " << to_string(s.id) << " " << s.variant << ": " << s.cases << " cases, "
                << s.passed << " pass, " << s.vacuous << " vacuous, " << s.failed << " fail, min value "
                << (s.min_value ? std::to_string(*s.min_value) : "-") << " -> " << (s.pass() ? "PASS" : "FAIL") << '\n';
    }
  };
  for (const auto& s : primary) {
    show(s, "primary");
    all_pass = all_pass && s.pass();
  }
  for (const auto& s : diagnostic) show(s, "diagnostic");
  if (!a.json_out) std::cout << "overall: " << (all_pass ? "PASS" : "FAIL") << '\n';
  return all_pass ? kOk : kViolated;
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
  int k = 4;
  int from = 4;
  int to = 9;
  std::string kind = "sat";
  bool json_out = false;
  int threads = 1;
  std::uint64_t node_budget = 50'000'000ULL;
};

/// Search size up to which the table runs a full optimisation.
constexpr std::uint64_t kFullSearchVertices = 100;

std::optional<Hypergraph> reference_construction(int n, int k, SatKind kind) {
  if (kind != SatKind::sat) return std::nullopt;
  if (k == 2 && n >= 2) return sat2_construction(n);
  if (k == 3 && n >= 3) return sat3_construction(n);
  if (k == 4 && n >= 4) return sat4_construction(n);
  return std::nullopt;
}

int run_table(const TableArgs& a) {
  const SatKind kind = parse_sat_kind(a.kind);
  const SearchMode mode = kind == SatKind::sat ? SearchMode::independent_dominating : SearchMode::dominating;
  bool all_match = true;
  if (!a.json_out) {
    std::cout << std::left << std::setw(5) << "n" << std::setw(16) << "closed form" << std::setw(26) << "search"
              << "verdict\n";
  }
  for (int n = a.from; n <= a.to; ++n) {
    json row = {{"n", n}, {"k", a.k}, {"kind", a.kind}};
    std::string cf_text;
    std::string search_text;
    std::string verdict;
    std::optional<ClosedForm> cf;
    try {
      cf = closed_form(n, a.k, kind);
      row["closed_form"] = to_json(*cf);
      cf_text = cf->exact ? std::to_string(cf->lower)
                          : "[" + std::to_string(cf->lower) + "," + std::to_string(cf->upper) + "]";
    } catch (const Unsupported& e) {
      row["closed_form"] = nullptr;
      cf_text = "unsupported";
      verdict = "UNSUPPORTED";
    }
    if (cf && n >= a.k) {
      try {
        const auto j = JohnsonGraph::build(n, a.k, kMaterialiseLimit);
        SearchProblem p;
        p.graph = j.graph();
        p.mode = mode;
        p.witness_cap = 1;
        p.threads = a.threads;
        p.node_budget = a.node_budget;
        // No wsat construction is tight below the sharp range, so wsat rows
        // always attempt a full search within the node budget.
        if (j.vertex_count() <= kFullSearchVertices || kind == SatKind::wsat) {
          const SearchResult r = solve(p);
          const int value = r.optimum.value_or(-1);
          row["search"] = {{"optimum", value}, {"count", r.count}, {"method", "full"}};
          search_text = std::to_string(value) + " (" + std::to_string(r.count) + " optima)";
          verdict = value >= cf->lower && value <= cf->upper ? "MATCH" : "MISMATCH";
        } else {
          // Certify the lower bound by infeasibility, the upper by a construction.
          p.max_size = static_cast<int>(cf->lower) - 1;
          const SearchResult r = p.max_size >= 0 ? solve(p) : SearchResult{};
          const auto h = reference_construction(n, a.k, kind);
          const bool upper_ok =
              h && static_cast<long long>(h->size()) == cf->upper && (kind == SatKind::sat ? is_saturated(*h) : is_semi_saturated(*h));
          row["search"] = {{"method", "bounded"}, {"none_below", !r.feasible()}, {"construction_verified", upper_ok}};
          search_text = std::string(r.feasible() ? "smaller set found" : "none <= " + std::to_string(cf->lower - 1)) +
                        (upper_ok ? ", constr. ok" : ", no constr.");
          verdict = !r.feasible() && upper_ok ? "MATCH" : (!r.feasible() ? "LOWER-ONLY" : "MISMATCH");
        }
      } catch (const BudgetExceeded& e) {
        search_text = "budget exhausted";
        verdict = "BUDGET";
      }
    } else if (cf) {
      search_text = "no k-sets";
      verdict = cf->lower == 0 ? "MATCH" : "MISMATCH";
    }
    all_match = all_match && (verdict == "MATCH");
    row["verdict"] = verdict;
    if (a.json_out) {
      std::cout << row.dump() << '\n';
    } else {
      std::cout << std::left << std::setw(5) << n << std::setw(16) << cf_text << std::setw(26) << search_text << verdict
                << '\n';
    }
  }
  return all_match ? kOk : kViolated;
}

// ---------------------------------------------------------------------------
// graph utilities

struct GraphArgs {
  std::string action;
  std::string file;
  std::size_t cap = 1;
  std::string format = "auto";
};

int run_graph(const GraphArgs& a) {
  SimpleGraph g;
  if (a.format == "auto") {
    g = load_graph(a.file);
  } else {
    g = parse_graph(read_file(a.file), a.format == "graph6" ? GraphFormat::graph6 : GraphFormat::edge_list);
  }
  if (a.action == "info") {
    const auto gg = girth(g);
    const auto d = g.regular_degree();
    json out = {{"vertices", g.order()},
                {"edges", g.edge_count()},
                {"regular_degree", d ? json(*d) : json(nullptr)},
                {"girth", gg ? json(*gg) : json(nullptr)},
                {"graph6", to_graph6(g)}};
    std::cout << out.dump(2) << '\n';
  } else if (a.action == "girth") {
    const auto gg = girth(g);
    std::cout << (gg ? std::to_string(*gg) : "inf") << '\n';
  } else if (a.action == "square") {
    write_edge_list(std::cout, square(g), "square graph");
  } else if (a.action == "eds") {
    const auto sets = efficient_dominating_sets(g, a.cap);
    for (const auto& s : sets) std::cout << set_string(s) << '\n';
    return sets.empty() ? kViolated : kOk;
  } else if (a.action == "alpha") {
    std::cout << independence_number(g) << '\n';
  } else if (a.action == "graph6") {
    std::cout << to_graph6(g) << '\n';
  } else {
    throw InputError("graph: unknown action '" + a.action + "'");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact search and verification for bow-tie saturation of uniform hypergraphs"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check bow-tie-freeness and (semi-)saturation of a hypergraph file");
  v->add_option("file", verify.file, "Hypergraph text file ('-' for stdin)")->required();
  v->add_option("--property", verify.property, "saturated | semi-saturated | bowtie-free");
  v->add_flag("--json", verify.json_out, "Emit a JSON record");

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Emit a hypergraph from one of the constructions");
  c->add_option("family", construct.family, "complete | fano | sat2 | sat3 | sat4 | dual | sharpcon | wsat4")->required();
  c->add_option("params", construct.params, "Numeric parameters (n, or m k for complete)");
  c->add_option("-o,--output", construct.output, "Output file (default stdout)");
  c->add_option("--graph", construct.graph_file, "Graph file for dual / sharpcon");
  c->add_option("--k", construct.k, "Uniformity for dual");
  c->add_option("--fixtures", construct.fixtures, "Fixture directory for wsat4");
  c->add_option("--emit-graph", construct.emit_graph, "sharpcon: write the modified graph G' here");
  c->add_option("--centres", construct.centres, "sharpcon: efficient dominating set to use");
  c->add_option("--V", construct.v_part, "sat4, n >= 12: labels joined to {1,2,3}")->delimiter(',');
  c->add_option("--W", construct.w_part, "sat4, n >= 12: labels joined to {8,9,10}")->delimiter(',');
  c->add_flag("--check", construct.check, "Verify the emitted hypergraph");

  SearchArgs search;
  search.threads = default_threads();
  auto* s = app.add_subcommand("search", "Exact minimum (independent) dominating set search");
  s->add_option("spec", search.positional, "johnson N K MODE");
  s->add_option("--problem", search.problem_file, "JSON problem description");
  s->add_option("--max-size", search.max_size, "Only accept solutions of at most this size");
  s->add_option("--witness-cap", search.witness_cap, "Maximum witnesses reported");
  s->add_option("--node-budget", search.node_budget, "Abort after this many search nodes");
  s->add_option("--threads", search.threads, "Worker threads (result is independent of this)");
  s->add_flag("--oracle", search.oracle, "Cross-check with the brute-force oracle");

  CasesArgs cases;
  cases.threads = default_threads();
  auto* cs = app.add_subcommand("cases", "Run the finite case checks P3, P4, S4");
  cs->add_option("which", cases.which, "p3 | p4 | s4 | all");
  cs->add_flag("--json", cases.json_out, "JSON lines instead of a table");
  cs->add_flag("--diagnostics", cases.diagnostics, "Also report the weaker P3 enumerations");
  cs->add_option("--threads", cases.threads, "Worker threads");

  TableArgs table;
  table.threads = default_threads();
  auto* t = app.add_subcommand("table", "Closed forms next to exact search values");
  t->add_option("--k", table.k, "Uniformity")->required();
  t->add_option("--from", table.from, "First n")->required();
  t->add_option("--to", table.to, "Last n")->required();
  t->add_option("--kind", table.kind, "sat | wsat");
  t->add_flag("--json", table.json_out, "JSON lines");
  t->add_option("--threads", table.threads, "Worker threads");
  t->add_option("--node-budget", table.node_budget, "Per-row node budget");

  GraphArgs graph;
  auto* g = app.add_subcommand("graph", "Graph utilities: info, girth, square, eds, alpha, graph6");
  g->add_option("action", graph.action, "info | girth | square | eds | alpha | graph6")->required();
  g->add_option("file", graph.file, "Graph file (.g6 or edge list)")->required();
  g->add_option("--cap", graph.cap, "eds: maximum number of sets");
  g->add_option("--format", graph.format, "auto | graph6 | edge-list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*v) return run_verify(verify);
    if (*c) return run_construct(construct);
    if (*s) return run_search(search);
    if (*cs) return run_cases(cases);
    if (*t) return run_table(table);
    if (*g) return run_graph(graph);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
