#include "cluster/cli.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cluster/compat.hpp"
#include "cluster/error.hpp"
#include "cluster/explorer.hpp"
#include "cluster/io.hpp"
#include "cluster/parallel.hpp"
#include "cluster/pattern.hpp"
#include "cluster/rank2.hpp"
#include "cluster/rootsys.hpp"
#include "cluster/verify.hpp"

namespace cluster {

namespace {

using json = nlohmann::json;

/// Raised for failed property checks; maps to exit code 1.
struct VerificationFailed {};

struct Options {
  int threads = 0;
  std::string format = "table";

  std::string matrix;
  std::string word;
  std::size_t max_terms = 0;

  // mutate
  std::string coefficients = "principal";
  std::string tropical;

  // vectors
  std::string show = "c,g,d,f";

  // compat
  std::string ref_a, ref_b;
  bool use_d = false, dual = false, sym = false;
  std::string embed;

  // classical
  std::string cartan, alpha, beta;

  // explore
  std::size_t max_seeds = 100000;
  std::size_t max_depth = 64;
  bool complex = false;
  std::string graphviz;

  // rank2
  Int b = 2, c = 2;
  std::int64_t n = 0;
  bool check_recursion = false;

  // verify
  std::string suite = "all";
  std::string corpus;
  bool list = false;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  std::string names;
  for (const char* f : allowed) names += (names.empty() ? "" : ", ") + std::string(f);
  throw InvalidArgument("--format " + o.format + " is not available here (use " + names + ")");
}

ExchangeMatrix read_matrix(const std::string& source) {
  if (source.empty()) throw InvalidArgument("--matrix is required");
  return ExchangeMatrix(parse_matrix(source));
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void print_section(std::ostream& out, const std::string& name, const IntMat& m) {
  out << name << ":\n" << format_matrix(m, "  ");
}

// --- mutate ------------------------------------------------------------------

void cmd_mutate(const Options& o, std::ostream& out) {
  require_format(o, {"json", "table"});
  const ExchangeMatrix b0 = read_matrix(o.matrix);
  const MutationWord w = parse_word(o.word);
  check_word(w, b0.size());
  CoefficientSpec spec = CoefficientSpec::principal(b0.size());
  if (!o.tropical.empty())
    spec = CoefficientSpec::tropical(parse_matrix(o.tropical));
  else if (o.coefficients == "trivial")
    spec = CoefficientSpec::trivial(b0.size());
  else if (o.coefficients != "principal")
    throw InvalidArgument("--coefficients must be principal or trivial (or give --tropical P)");

  const Seed s = mutate_seed_along(initial_seed(b0, spec), w);
  const auto names = s.variable_names();
  std::vector<std::string> gens = spec.generator_names();

  auto y_text = [&](const IntVec& e) {
    Exponent ex(e.begin(), e.end());
    return LaurentPoly::monomial(ex).to_string(gens);
  };
  if (o.format == "json") {
    json x = json::array(), xs = json::array(), y = json::array();
    for (const auto& v : s.x) {
      x.push_back(poly_to_json(v));
      xs.push_back(v.to_string(names));
    }
    for (const auto& e : s.y) y.push_back(e);
    emit_json(out, {{"word", word_to_string(w)},
                    {"B", matrix_to_json(s.b.matrix())},
                    {"variables", names},
                    {"generators", gens},
                    {"x", x},
                    {"x_text", xs},
                    {"y", y}});
    return;
  }
  out << "word: " << (w.empty() ? "(root)" : word_to_string(w)) << "\n";
  print_section(out, "B", s.b.matrix());
  for (std::size_t i = 0; i < s.rank(); ++i) out << "x" << i + 1 << " = " << s.x[i].to_string(names) << "\n";
  if (spec.kind() != CoefficientSpec::Kind::trivial)
    for (std::size_t i = 0; i < s.rank(); ++i) out << "y" << i + 1 << " = " << y_text(s.y[i]) << "\n";
}

// --- vectors -----------------------------------------------------------------

void cmd_vectors(const Options& o, std::ostream& out) {
  require_format(o, {"json", "table"});
  const ExchangeMatrix b0 = read_matrix(o.matrix);
  const MutationWord w = parse_word(o.word);
  check_word(w, b0.size());
  std::vector<std::string> show;
  {
    std::stringstream ss(o.show);
    std::string item;
    const std::set<std::string> known = {"c", "g", "d", "f", "F", "H", "fpolys"};
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      if (!known.count(item)) throw InvalidArgument("unknown --show item '" + item + "' (use c,g,d,f,F,H,fpolys)");
      if (item == "F") item = "f";
      if (std::find(show.begin(), show.end(), item) == show.end()) show.push_back(item);
    }
  }
  const bool polys = std::find(show.begin(), show.end(), "fpolys") != show.end();
  const PatternState s = evolve(b0, w, {.polynomials = polys, .max_terms = o.max_terms});

  auto matrix_of = [&](const std::string& k) -> IntMat {
    if (k == "c") return s.c;
    if (k == "g") return s.g;
    if (k == "d") return s.d;
    if (k == "f") return s.f;
    return h_matrix(s);
  };
  auto label = [](const std::string& k) { return k == "H" ? std::string("H") : std::string(1, std::toupper(k[0])); };

  if (o.format == "json") {
    json j = {{"word", word_to_string(w)}, {"B", matrix_to_json(s.b.matrix())}};
    for (const auto& k : show) {
      if (k == "fpolys") {
        json p = json::array();
        for (const auto& f : s.fpolys) p.push_back(poly_to_json(f));
        j["fpolys"] = p;
      } else {
        j[label(k)] = matrix_to_json(matrix_of(k));
      }
    }
    emit_json(out, j);
    return;
  }
  out << "word: " << (w.empty() ? "(root)" : word_to_string(w)) << "\n";
  print_section(out, "B", s.b.matrix());
  for (const auto& k : show) {
    if (k == "fpolys") {
      for (std::size_t i = 0; i < s.fpolys.size(); ++i) out << "F" << i + 1 << " = " << s.fpolys[i].to_string() << "\n";
    } else {
      print_section(out, label(k), matrix_of(k));
    }
  }
}

// --- compat ------------------------------------------------------------------

void cmd_compat(const Options& o, std::ostream& out) {
  require_format(o, {"json", "table"});
  const ExchangeMatrix b0 = read_matrix(o.matrix);
  if (o.ref_a.empty() || o.ref_b.empty()) throw InvalidArgument("--a and --b are required");
  const VariableRef a = parse_ref(o.ref_a), b = parse_ref(o.ref_b);
  json j = {{"a", to_string(a)},
            {"b", to_string(b)},
            {"degree_ab", compatibility_degree(b0, a, b)},
            {"degree_ba", compatibility_degree(b0, b, a)}};
  if (o.use_d) {
    j["d_degree_ab"] = d_compatibility_degree(b0, a, b);
    j["d_degree_ba"] = d_compatibility_degree(b0, b, a);
  }
  std::vector<PropertyReport> checks;
  if (o.dual) checks.push_back(check_duality(b0, a, b));
  if (o.sym) checks.push_back(check_symmetry_ratio(b0, a, b));
  if (!o.embed.empty()) {
    std::vector<std::size_t> subset;
    for (Int v : parse_int_list(o.embed)) {
      if (v < 1 || static_cast<std::size_t>(v) > b0.size()) throw InvalidArgument("--embed index out of range");
      subset.push_back(static_cast<std::size_t>(v - 1));
    }
    std::sort(subset.begin(), subset.end());
    checks.push_back(check_embedding(b0, subset, a, b));
  }
  bool ok = true;
  if (!checks.empty()) {
    j["checks"] = checks;
    for (const auto& r : checks) ok = ok && r.holds;
  }
  if (o.format == "json") {
    emit_json(out, j);
  } else {
    out << "(" << j["a"].get<std::string>() << " || " << j["b"].get<std::string>() << ") = " << j["degree_ab"] << "\n";
    out << "(" << j["b"].get<std::string>() << " || " << j["a"].get<std::string>() << ") = " << j["degree_ba"] << "\n";
    if (o.use_d) {
      out << "d-degrees: " << j["d_degree_ab"] << " " << j["d_degree_ba"] << "\n";
    }
    for (const auto& r : checks) out << r.property << ": " << (r.holds ? "holds" : "FAILS") << " " << r.details.dump() << "\n";
  }
  if (!ok) throw VerificationFailed{};
}

// --- classical ---------------------------------------------------------------

void cmd_classical(const Options& o, std::ostream& out) {
  require_format(o, {"json", "table"});
  if (o.cartan.empty() || o.alpha.empty() || o.beta.empty())
    throw InvalidArgument("--cartan, --alpha and --beta are required");
  const CartanData cd(parse_matrix(o.cartan));
  const Root alpha = parse_int_list(o.alpha), beta = parse_int_list(o.beta);
  const Int cl = classical_degree(cd, alpha, beta);
  const ExchangeGraph g = explore(cd.exchange_matrix());
  const VariableRef ra = g.variables[root_to_variable(g, alpha)].ref;
  const VariableRef rb = g.variables[root_to_variable(g, beta)].ref;
  const Int f = compatibility_degree(cd.exchange_matrix(), ra, rb);
  const json j = {{"alpha", alpha},
                  {"beta", beta},
                  {"classical", cl},
                  {"f_degree", f},
                  {"variables", {to_string(ra), to_string(rb)}},
                  {"B", matrix_to_json(cd.exchange_matrix().matrix())},
                  {"agree", cl == f}};
  if (o.format == "json") {
    emit_json(out, j);
  } else {
    out << "classical degree: " << cl << "\n";
    out << "f-degree of " << to_string(ra) << ", " << to_string(rb) << ": " << f << "\n";
  }
  if (cl != f) throw VerificationFailed{};
}

// --- explore -----------------------------------------------------------------

void cmd_explore(const Options& o, std::ostream& out) {
  require_format(o, {"json", "table", "dot"});
  const ExchangeMatrix b0 = read_matrix(o.matrix);
  const ExchangeGraph g = explore(b0, {.max_seeds = o.max_seeds, .max_depth = o.max_depth, .max_terms = o.max_terms});
  std::optional<ClusterComplex> cx;
  if (o.complex) cx = cluster_complex(g);
  if (!o.graphviz.empty()) {
    std::ofstream f(o.graphviz);
    if (!f) throw InvalidArgument("cannot write " + o.graphviz);
    f << to_dot(g);
  }
  if (o.format == "dot") {
    out << to_dot(g);
  } else if (o.format == "json") {
    json j = to_json(g);
    if (cx) j["complex"] = to_json(*cx);
    emit_json(out, j);
  } else {
    out << "status: " << (g.complete ? "complete" : "truncated") << "\n";
    out << "seeds: " << g.seeds.size() << "\nvariables: " << g.variables.size() << "\nedges: " << g.edges.size()
        << "\n";
    for (std::size_t i = 0; i < g.variables.size(); ++i)
      out << "  x[" << i << "] g=" << json(g.variables[i].g).dump() << " F=" << g.variables[i].f.to_string() << "\n";
    if (cx)
      for (const auto& facet : cx->facets) out << "  facet " << json(facet).dump() << "\n";
  }
}

// --- rank2 -------------------------------------------------------------------

void cmd_rank2(const Options& o, std::ostream& out) {
  require_format(o, {"json", "table"});
  const ExchangeMatrix b0 = rank2_matrix(o.b, o.c);
  const MutationWord w = rank2_word(o.n);
  const PatternState s = evolve(b0, w, {.polynomials = false});
  json j = {{"b", o.b}, {"c", o.c}, {"n", o.n}, {"word", word_to_string(w)}, {"recursion", matrix_to_json(s.f)}};
  bool ok = true;
  if (o.b * o.c >= 4) {
    const IntMat closed = closed_form_F(o.b, o.c, o.n);
    j["closed_form"] = matrix_to_json(closed);
    if (o.check_recursion) {
      ok = closed == s.f;
      j["agree"] = ok;
    }
  } else if (o.check_recursion) {
    throw BadParameters("closed forms need bc >= 4");
  }
  if (o.format == "json") {
    emit_json(out, j);
  } else {
    out << "B = " << b0.matrix().to_string() << ", t_" << o.n << " = [" << word_to_string(w) << "]\n";
    if (j.contains("closed_form")) print_section(out, "F (closed form)", matrix_from_json(j["closed_form"]));
    print_section(out, "F (recursion)", s.f);
    if (o.check_recursion) out << (ok ? "closed form matches the recursion\n" : "MISMATCH\n");
  }
  if (!ok) throw VerificationFailed{};
}

// --- verify ------------------------------------------------------------------

void cmd_verify(const Options& o, std::ostream& out) {
  require_format(o, {"json", "junit", "table"});
  if (o.list) {
    json j = {{"suites", json::array()}, {"corpora", corpus_names()}};
    for (const auto& s : suite_catalog())
      j["suites"].push_back({{"name", s.name},
                             {"description", s.description},
                             {"corpora", s.default_corpora},
                             {"expected_failures", s.expected_failures}});
    if (o.format == "json") {
      emit_json(out, j);
    } else {
      for (const auto& s : suite_catalog()) out << s.name << ": " << s.description << "\n";
      out << "corpora:";
      for (const auto& c : corpus_names()) out << " " << c;
      out << "\n";
    }
    return;
  }
  const std::optional<std::string> corpus = o.corpus.empty() ? std::nullopt : std::optional(o.corpus);
  const VerifyReport r = run_suite(o.suite, corpus);
  if (o.format == "json") {
    emit_json(out, to_json(r));
  } else if (o.format == "junit") {
    out << to_junit(r);
  } else {
    for (const auto& run : r.runs)
      out << (run.met() ? "ok    " : "UNMET ") << run.suite << " on " << run.corpus << ": " << run.outcome()
          << " (expected " << (run.expect_pass ? "pass" : "fail") << "; " << run.passed << " passed, " << run.failed
          << " failed, " << run.skipped << " skipped)\n";
  }
  if (!r.ok()) throw VerificationFailed{};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cluster algebra laboratory: seeds, F-matrices, compatibility degrees"};
  app.name("cluster-lab");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", o.threads, "OpenMP threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", o.format, "json, table, dot (explore) or junit (verify)")
      ->check(CLI::IsMember({"json", "table", "dot", "junit"}));

  auto* mutate = app.add_subcommand("mutate", "Mutate the initial seed along a word");
  auto* vectors = app.add_subcommand("vectors", "C, G, D, F, H matrices and F-polynomials at a vertex");
  auto* compat = app.add_subcommand("compat", "Compatibility degree of two cluster variables");
  auto* classical = app.add_subcommand("classical", "Classical compatibility degree of almost positive roots");
  auto* explore_cmd = app.add_subcommand("explore", "Exchange graph and cluster complex");
  auto* rank2 = app.add_subcommand("rank2", "Rank-2 closed forms");
  auto* verify = app.add_subcommand("verify", "Run property suites");

  for (auto* sub : {mutate, vectors, compat, explore_cmd}) {
    sub->add_option("--matrix", o.matrix, "exchange matrix: JSON, \"0 1; -1 0\" or a file")->required();
  }
  for (auto* sub : {mutate, vectors}) sub->add_option("--word", o.word, "1-based mutation word, e.g. 2,1,2");
  for (auto* sub : {vectors, explore_cmd})
    sub->add_option("--max-terms", o.max_terms, "F-polynomial size budget (0 = unlimited)");

  mutate->add_option("--coefficients", o.coefficients, "principal or trivial");
  mutate->add_option("--tropical", o.tropical, "l x n matrix P; column j is the initial y_j in Trop(u1..ul)");

  vectors->add_option("--show", o.show, "comma list of c,g,d,f,F,H,fpolys");

  compat->add_option("--a", o.ref_a, "variable as word:index, e.g. 2,1:1")->required();
  compat->add_option("--b", o.ref_b, "variable as word:index")->required();
  compat->add_flag("--d", o.use_d, "also report d-compatibility degrees");
  compat->add_flag("--dual", o.dual, "check the duality with -B^T");
  compat->add_flag("--sym", o.sym, "check the symmetrizer ratio");
  compat->add_option("--embed", o.embed, "check agreement with the principal submatrix on these indices");

  classical->add_option("--cartan", o.cartan, "Cartan matrix: JSON, text or file")->required();
  classical->add_option("--alpha", o.alpha, "root in simple-root coordinates")->required();
  classical->add_option("--beta", o.beta, "root in simple-root coordinates")->required();

  explore_cmd->add_option("--max-seeds", o.max_seeds, "stop after this many seeds");
  explore_cmd->add_option("--max-depth", o.max_depth, "stop at this distance from the root");
  explore_cmd->add_flag("--complex", o.complex, "include the cluster complex");
  explore_cmd->add_option("--graphviz", o.graphviz, "write the exchange graph in DOT format");

  rank2->add_option("--b", o.b, "b >= 0")->required();
  rank2->add_option("--c", o.c, "c >= 0")->required();
  rank2->add_option("--n", o.n, "vertex index of t_n")->required();
  rank2->add_flag("--check-recursion", o.check_recursion, "compare the closed form with the recursion");

  verify->add_option("--suite", o.suite, "suite name or all");
  verify->add_option("--corpus", o.corpus, "restrict to one corpus");
  verify->add_flag("--list", o.list, "list suites and corpora");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "Run with --help for more information.\n";
    return 2;
  }

  try {
    set_thread_count(o.threads);
    if (*mutate) cmd_mutate(o, out);
    if (*vectors) cmd_vectors(o, out);
    if (*compat) cmd_compat(o, out);
    if (*classical) cmd_classical(o, out);
    if (*explore_cmd) cmd_explore(o, out);
    if (*rank2) cmd_rank2(o, out);
    if (*verify) cmd_verify(o, out);
  } catch (const VerificationFailed&) {
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace cluster
