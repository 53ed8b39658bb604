// Command-line front end: property checks, ideal structure and K-theory for
// ultragraphs given in the DSL or as 0/1 matrices.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ultra/ultra.hpp"

namespace fs = std::filesystem;
using namespace ultra;

namespace {

enum Exit { kHolds = 0, kFails = 1, kInconclusive = 2, kInputError = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<std::int64_t> horizon;
  std::optional<std::size_t> budget;
  bool verify = false;
  std::string json_path;
  std::string suite;

  std::string command;
  std::string property;
  std::string file;
  std::string seed;
  std::string sizes = "12,24,36,48";
  bool use_graph = false;
  std::vector<std::size_t> ideal{0, 0}, quotient{0, 0};
};

struct Outcome {
  int code = kHolds;
  Json report;
};

std::size_t default_budget() {
  if (const char* env = std::getenv("ULTRA_BUDGET")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw InputError(std::string("ULTRA_BUDGET is not a number: ") + env);
    }
  }
  return Budget{}.limit;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool is_matrix_path(const std::string& path) { return fs::path(path).extension() == ".mat"; }

MatrixDocument load_matrix(const std::string& path) {
  if (!is_matrix_path(path)) throw InputError(path + ": expected a .mat matrix file");
  return parse_matrix(read_file(path));
}

// Every input becomes a symbolic ultragraph; finite ones simply have no tail.
SymbolicUltragraph load_graph(const Options& o) {
  if (!is_matrix_path(o.file)) return parse_ultragraph(read_file(o.file));
  MatrixDocument m = load_matrix(o.file);
  if (const auto* a = std::get_if<ZeroOneMatrix>(&m)) {
    Ultragraph g = o.use_graph ? graph_from_matrix(*a) : ultragraph_from_matrix(*a);
    return parse_ultragraph(render(g));
  }
  const auto& a = std::get<SymbolicZeroOneMatrix>(m);
  return o.use_graph ? graph_from_matrix(a) : ultragraph_from_matrix(a);
}

int verdict_code(const Verdict& v) { return !v.decided() ? kInconclusive : v.value ? kHolds : kFails; }

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : "; ") + x;
  return out;
}

void print_verdict(const std::string& label, const Verdict& v) {
  std::cout << label << ": " << (!v.decided() ? "inconclusive" : v.value ? "holds" : "fails") << "\n";
  if (v.failed_condition) std::cout << "  failed condition: (" << v.failed_condition << ")\n";
  if (!std::holds_alternative<std::monostate>(v.witness)) std::cout << "  witness: " << witness_json(v.witness).dump() << "\n";
  if (v.horizon) std::cout << "  horizon: " << *v.horizon << "\n";
  if (!v.citations.empty()) std::cout << "  cites: " << join(v.citations) << "\n";
  if (!v.flags.empty()) std::cout << "  flags: " << join(v.flags) << "\n";
}

// A failed recheck means the verdict cannot be trusted.
int recheck(const Options& o, const SymbolicUltragraph& g, const Verdict& v, Json& report) {
  if (!o.verify || !v.decided()) return verdict_code(v);
  auto problem = verify_witness(g, v);
  report["witness_verified"] = !problem;
  if (problem) {
    std::cout << "  witness check FAILED: " << *problem << "\n";
    return kInconclusive;
  }
  std::cout << "  witness check: ok\n";
  return verdict_code(v);
}

Outcome run_check(const Options& o, Budget& budget) {
  SymbolicUltragraph g = load_graph(o);
  const auto& p = o.property;
  Outcome out;
  if (p == "dichotomy") {
    DichotomyResult d = dichotomy(g, budget, o.horizon);
    out.report = dichotomy_json(d);
    std::cout << "dichotomy: " << (d.status == Status::Decided ? to_string(d.kind) : "inconclusive") << "\n";
    print_verdict("  simplicity", d.simple);
    if (d.af) print_verdict("  af", *d.af);
    if (d.purely_infinite) print_verdict("  purely-infinite", *d.purely_infinite);
    out.code = d.status != Status::Decided ? kInconclusive : d.kind == Dichotomy::NotSimple ? kFails : kHolds;
    return out;
  }
  Verdict v;
  if (p == "simplicity") {
    v = is_simple(g, budget, o.horizon);
  } else if (p == "simple-lattice") {
    v = is_simple_lattice(g, budget, o.horizon);
  } else if (p == "simple-reach") {
    v = is_simple_reach(g, budget, o.horizon);
  } else if (p == "condition-l") {
    v = condition_L(g, budget, o.horizon);
  } else if (p == "cofinal") {
    v = is_cofinal(g, o.horizon);
  } else if (p == "af") {
    v = is_af(g, budget, o.horizon);
  } else if (p == "purely-infinite") {
    v = is_purely_infinite(g, budget, o.horizon);
  } else {
    throw InputError("unknown property " + p);
  }
  out.report = verdict_json(p, v);
  print_verdict(p, v);
  out.code = recheck(o, g, v, out.report);
  return out;
}

Ultragraph finite_graph(const SymbolicUltragraph& g, const std::string& what) {
  if (!g.is_finite()) throw InputError(what + " needs a finite ultragraph");
  return g.to_finite();
}

Outcome run_ideals(const Options& o, Budget& budget) {
  Ultragraph g = finite_graph(load_graph(o), "ideals");
  std::vector<VertexSet> ks = enumerate_saturated_hereditary(g, budget);
  Json sets = Json::array();
  std::cout << "saturated hereditary subsets: " << ks.size() << "\n";
  for (const auto& k : ks) {
    std::string d = describe_set(g, k);
    std::cout << "  " << d << "\n";
    sets.push_back(d);
  }
  return {kHolds, {{"schema", kReportSchema}, {"property", "ideals"}, {"sets", sets}}};
}

VertexSet parse_seed(const SymbolicUltragraph& g, const std::string& text) {
  std::vector<VertexKey> keys;
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  for (std::string name; in >> name;) {
    auto k = g.find_vertex(name);
    if (!k) throw InputError("unknown vertex " + name);
    keys.push_back(*k);
  }
  if (keys.empty()) throw InputError("--seed needs at least one vertex");
  return VertexSet::of(g.universe(), std::move(keys));
}

Outcome run_closure(const Options& o) {
  SymbolicUltragraph g = load_graph(o);
  VertexSet seed = parse_seed(g, o.seed);
  SetResult h = hereditary_closure(g, seed, o.horizon);
  SetResult s = h.decided() ? saturate(g, *h.value, o.horizon) : h;
  Outcome out;
  std::string hd = h.value ? describe_set(g, *h.value) : "";
  std::string sd = s.value ? describe_set(g, *s.value) : "";
  std::cout << "hereditary closure: " << (h.decided() ? hd : "inconclusive") << "\n";
  std::cout << "saturation: " << (s.decided() ? sd : "inconclusive") << "\n";
  out.report = set_result_json("closure", s, sd);
  out.report["hereditary"] = set_result_json("hereditary-closure", h, hd);
  out.code = s.decided() ? kHolds : kInconclusive;
  return out;
}

Outcome run_singular(const Options& o) {
  SymbolicUltragraph g = load_graph(o);
  VertexSet s = singular_vertices(g);
  std::string d = describe_set(g, s);
  std::cout << "singular vertices: " << d << "\n";
  return {kHolds, {{"schema", kReportSchema}, {"property", "singular"}, {"set", d}}};
}

Outcome run_regular_support(const Options& o) {
  SymbolicUltragraph g = load_graph(o);
  VertexSet s = regular_ideal_support(g);
  std::string d = describe_set(g, s);
  std::cout << "regular ideal support: " << d << "\n";
  return {kHolds, {{"schema", kReportSchema}, {"property", "regular-support"}, {"set", d}}};
}

Outcome run_lattice(const Options& o) {
  Ultragraph g = finite_graph(load_graph(o), "lattice");
  Json elems = Json::array();
  auto lat = generate_lattice(g);
  std::cout << "generated lattice: " << lat.size() << " sets\n";
  for (const auto& x : lat) {
    Json inter = Json::array();
    for (const auto& xi : x.intersections) {
      std::vector<std::string> ids;
      for (std::size_t e : xi) ids.push_back(g.edge(e).id);
      inter.push_back(ids);
    }
    std::string d = describe_set(g, x.value);
    std::cout << "  " << d << "\n";
    elems.push_back({{"set", d}, {"range_intersections", inter}, {"finite_part", describe_set(g, x.finite_part)}});
  }
  return {kHolds, {{"schema", kReportSchema}, {"property", "lattice"}, {"elements", elems}}};
}

Outcome run_compare(Options o, Budget& budget) {
  o.use_graph = false;
  SymbolicUltragraph ug = load_graph(o);
  o.use_graph = true;
  SymbolicUltragraph gr = load_graph(o);
  Verdict a = is_simple(ug, budget, o.horizon);
  Verdict b = is_simple(gr, budget, o.horizon);
  print_verdict("ultragraph simplicity", a);
  print_verdict("graph simplicity", b);
  Outcome out;
  out.report = {{"schema", kReportSchema},
                {"property", "compare-matrix"},
                {"ultragraph", verdict_json("simplicity", a)},
                {"graph", verdict_json("simplicity", b)}};
  int ca = recheck(o, ug, a, out.report["ultragraph"]);
  int cb = recheck(o, gr, b, out.report["graph"]);
  out.code = (ca == kInconclusive || cb == kInconclusive) ? kInconclusive : kHolds;
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  for (long long n; in >> n;) {
    if (n <= 0) throw InputError("sizes must be positive");
    out.push_back(static_cast<std::size_t>(n));
  }
  if (!in.eof() || out.empty()) throw InputError("bad --sizes list: " + text);
  return out;
}

Outcome run_ktheory(const Options& o) {
  MatrixDocument m = load_matrix(o.file);
  Outcome out;
  if (const auto* a = std::get_if<ZeroOneMatrix>(&m)) {
    KGroups k = k_groups(*a);
    std::cout << "K0 = " << k.k0_string() << "\nK1 = " << k.k1_string() << "\n";
    out.report = {{"schema", kReportSchema}, {"property", "ktheory"}, {"groups", k_groups_json(k)}};
    return out;
  }
  const auto& a = std::get<SymbolicZeroOneMatrix>(m);
  KernelStabilization s = truncated_kernel_stabilization(a, parse_sizes(o.sizes));
  for (const auto& st : s.steps) std::cout << "N = " << st.size << ": kernel rank " << st.rank << "\n";
  std::cout << (s.stabilized ? "stabilized" : "not stabilized") << "\n";
  std::cout << "note: kernel side only; the cokernel of an infinite matrix is not computed\n";
  out.report = {{"schema", kReportSchema},
                {"property", "ktheory"},
                {"kernel", kernel_json(s)},
                {"flags", Json::array({"kernel_only"})}};
  out.code = s.stabilized ? kHolds : kInconclusive;
  return out;
}

Outcome run_six_term(const Options& o) {
  if (o.ideal.size() != 2 || o.quotient.size() != 2) throw InputError("--ideal and --quotient take two ranks");
  SixTermReport r = six_term_report({o.ideal[0], o.ideal[1]}, {o.quotient[0], o.quotient[1]});
  std::cout << "rank K1 - rank K0 = " << r.rank_difference << "\n";
  std::cout << "graph algebra possible: " << (r.graph_algebra_possible ? "yes" : "no") << "\n";
  return {r.graph_algebra_possible ? kHolds : kFails,
          {{"schema", kReportSchema}, {"property", "six-term"}, {"report", six_term_json(r)}}};
}

Outcome run_render(const Options& o) {
  SymbolicUltragraph g = load_graph(o);
  std::string text = render(g);
  std::cout << text;
  return {kHolds, {{"schema", kReportSchema}, {"property", "render"}, {"text", text}}};
}

// Builds the parser; `o` receives every option.
void configure(CLI::App& app, Options& o) {
  app.require_subcommand(0, 1);
  app.fallthrough();
  app.add_option("--horizon", o.horizon, "Window horizon for symbolic ultragraphs");
  app.add_option("--budget", o.budget, "Enumeration budget (default: ULTRA_BUDGET or 1000000)");
  app.add_flag("--verify-witness", o.verify, "Re-check every decided witness");
  app.add_option("--json", o.json_path, "Write the machine-readable report here");
  app.add_option("--suite", o.suite, "Run one command per line of this file");

  auto file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Ultragraph (.ug) or matrix (.mat) file")->required();
    sub->add_flag("--graph", o.use_graph, "Read a matrix as its directed graph rather than its ultragraph");
  };
  auto* check = app.add_subcommand("check", "Decide a property");
  check->add_option("property", o.property, "Property to check")
      ->required()
      ->check(CLI::IsMember({"simplicity", "simple-lattice", "simple-reach", "condition-l", "cofinal", "af",
                             "purely-infinite", "dichotomy"}));
  file(check);
  file(app.add_subcommand("ideals", "List saturated hereditary subsets"));
  auto* closure = app.add_subcommand("closure", "Hereditary closure and saturation of a seed");
  file(closure);
  closure->add_option("--seed", o.seed, "Seed vertices")->required();
  file(app.add_subcommand("singular", "Sinks and infinite emitters"));
  file(app.add_subcommand("regular-support", "Vertex support of the gauge-invariant ideal of regular vertices"));
  file(app.add_subcommand("lattice", "Generated lattice of a finite ultragraph"));
  file(app.add_subcommand("render", "Canonical DSL text"));
  file(app.add_subcommand("from-matrix", "Ultragraph of a matrix, as DSL text"));
  auto* cmp = app.add_subcommand("compare-matrix", "Simplicity of a matrix's ultragraph and of its graph");
  cmp->add_option("file", o.file, "Matrix file")->required();
  auto* kt = app.add_subcommand("ktheory", "K-groups of a matrix algebra");
  kt->add_option("file", o.file, "Matrix file")->required();
  kt->add_option("--sizes", o.sizes, "Truncation sizes for infinite matrices");
  auto* six = app.add_subcommand("six-term", "Rank bookkeeping for an extension");
  six->add_option("--ideal", o.ideal, "K0 and K1 ranks of the ideal")->expected(2)->required();
  six->add_option("--quotient", o.quotient, "K0 and K1 ranks of the quotient")->expected(2)->required();
  app.final_callback([&] {
    if (!app.get_subcommands().empty()) o.command = app.get_subcommands().front()->get_name();
  });
}

Outcome dispatch(const Options& o) {
  Budget budget;
  budget.limit = o.budget.value_or(default_budget());
  const auto& c = o.command;
  if (c == "check") return run_check(o, budget);
  if (c == "ideals") return run_ideals(o, budget);
  if (c == "closure") return run_closure(o);
  if (c == "singular") return run_singular(o);
  if (c == "regular-support") return run_regular_support(o);
  if (c == "lattice") return run_lattice(o);
  if (c == "compare-matrix") return run_compare(o, budget);
  if (c == "ktheory") return run_ktheory(o);
  if (c == "six-term") return run_six_term(o);
  if (c == "render" || c == "from-matrix") return run_render(o);
  throw InputError("no command given");
}

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UndeclaredVertex:
    case ErrorKind::EmptyRange:
    case ErrorKind::DuplicateId:
    case ErrorKind::UniverseMismatch:
    case ErrorKind::NotHereditary:
    case ErrorKind::NotSaturatedHereditary:
    case ErrorKind::HasSinks:
    case ErrorKind::NoUnit:
    case ErrorKind::NotEventuallyConstant:
    case ErrorKind::NotRepresentable:
    case ErrorKind::InvalidArgument:
      return true;
    case ErrorKind::BudgetExceeded:
    case ErrorKind::InternalDisagreement:
      return false;
  }
  return false;
}

Json error_report(const std::string& kind, const std::string& message) {
  return {{"schema", kReportSchema}, {"status", "error"}, {"error", kind}, {"message", message}};
}

// Runs one command, turning library errors into exit codes.
Outcome guarded(const Options& o) {
  try {
    return dispatch(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return {kInputError, error_report("InputError", e.what())};
  } catch (const Error& e) {
    std::cerr << (o.file.empty() ? "" : o.file + ": ") << e.what() << "\n";
    int code = is_input_error(e.kind()) ? kInputError : kInconclusive;
    return {code, error_report(std::string(to_string(e.kind())), e.what())};
  }
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// One command per line; paths are relative to the suite file. The exit code is
// the largest of the individual codes.
int run_suite(const Options& top) {
  std::istringstream lines(read_file(top.suite));
  const fs::path dir = fs::path(top.suite).parent_path();
  Json reports = Json::array();
  int worst = kHolds;
  int lineno = 0;
  for (std::string line; std::getline(lines, line);) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::vector<std::string> words = split_words(line);
    if (words.empty()) continue;
    Options o;
    o.horizon = top.horizon;
    o.budget = top.budget;
    o.verify = top.verify;
    CLI::App app;
    configure(app, o);
    std::reverse(words.begin(), words.end());
    std::cout << "== " << line << "\n";
    Outcome r;
    try {
      app.parse(words);
      if (!o.file.empty() && fs::path(o.file).is_relative()) o.file = (dir / o.file).string();
      r = guarded(o);
    } catch (const CLI::ParseError& e) {
      std::cerr << top.suite << ":" << lineno << ": " << e.what() << "\n";
      r = {kInputError, error_report("UsageError", e.what())};
    }
    r.report["command"] = line;
    r.report["exit_code"] = r.code;
    reports.push_back(r.report);
    worst = std::max(worst, r.code);
  }
  if (!top.json_path.empty()) write_json(top.json_path, {{"schema", kReportSchema}, {"suite", reports}});
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app("Exact ultragraph C*-algebra invariants", "ultra");
  configure(app, o);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  try {
    if (!o.suite.empty()) return run_suite(o);
    if (o.command.empty()) {
      std::cerr << app.help();
      return kInputError;
    }
    Outcome r = guarded(o);
    if (!o.json_path.empty()) write_json(o.json_path, r.report);
    return r.code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
