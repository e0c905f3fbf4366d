// Command-line surface for the binomial edge ideal toolkit:
//
//   bei hs          exact reduced Hilbert series, coefficients, dimension
//   bei invariants  clique/free-clique degrees, cut sets, minimal primes
//   bei construct   realize a (regularity, Hilbert-coefficient) pair
//   bei check       property suites (lemma31 | thm33 | ohtani | oracle)
//
// Exit codes: 0 success, 1 failed checks, 2 parse error, 3 size guard,
// 4 infeasible request.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bei/io.hpp"

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;
constexpr int kExitInfeasible = 4;

int env_override(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  try {
    return std::stoi(v);
  } catch (...) {
    throw bei::error(std::string("environment variable ") + name +
                     " is not an integer");
  }
}

struct GuardedInput {
  std::string expr;
  std::string graph_path;
  int max_pipeline_n = 12;
  int max_oracle_vars = 16;

  void attach(CLI::App* cmd, bool need_input = true) {
    auto* e = cmd->add_option("--expr", expr, "construction expression (DSL)");
    auto* g = cmd->add_option("--graph", graph_path, "path to a graph JSON file");
    if (need_input) {
      e->excludes(g);
      g->excludes(e);
    }
    // environment supplies the defaults; explicit flags win
    max_pipeline_n = env_override("BEI_PIPELINE_MAX_N", max_pipeline_n);
    max_oracle_vars = env_override("BEI_ORACLE_MAX_VARS", max_oracle_vars);
    cmd->add_option("--max-n", max_pipeline_n,
                    "pipeline guard: largest vertex count (env BEI_PIPELINE_MAX_N)");
    cmd->add_option("--max-oracle-vars", max_oracle_vars,
                    "oracle guard: largest variable count (env BEI_ORACLE_MAX_VARS)");
  }

  bei::Graph load_graph() const {
    if (!expr.empty()) {
      bei::Graph g = bei::expr_to_graph(bei::parse_expr(expr));
      if (g.n() > max_pipeline_n)
        throw bei::size_limit_error("graph has " + std::to_string(g.n()) +
                                    " vertices, pipeline guard is " +
                                    std::to_string(max_pipeline_n));
      return g;
    }
    std::ifstream in(graph_path);
    if (!in) throw bei::error("cannot open " + graph_path);
    std::stringstream buf;
    buf << in.rdbuf();
    bei::Graph g = bei::read_graph_json(buf.str());
    if (g.n() > max_pipeline_n)
      throw bei::size_limit_error("graph has " + std::to_string(g.n()) +
                                  " vertices, pipeline guard is " +
                                  std::to_string(max_pipeline_n));
    return g;
  }
};

std::string coeff_list(const std::vector<bei::Int>& e) {
  std::string out = "[";
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k) out += ", ";
    out += e[k].str();
  }
  return out + "]";
}

int cmd_hs(const GuardedInput& input, const std::string& format) {
  bei::ReducedSeries r;
  if (!input.expr.empty()) {
    bei::ExprPtr e = bei::parse_expr(input.expr);
    bool has_pendants = false;
    try {
      r = bei::reduce(bei::hs_by_rules(e));
    } catch (const bei::rule_error&) {
      has_pendants = true;
    }
    if (has_pendants) {
      bei::Graph g = bei::expr_to_graph(e);
      if (g.n() > input.max_pipeline_n)
        throw bei::size_limit_error("expression needs the pipeline but has " +
                                    std::to_string(g.n()) + " vertices");
      r = bei::reduced_pipeline(g);
    }
  } else {
    r = bei::reduced_pipeline(input.load_graph());
  }
  auto e = bei::hilbert_coefficients(r);
  if (format == "json") {
    auto j = bei::series_to_json(r);
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : e) coeffs.push_back(bei::int_to_json(c));
    j["e"] = coeffs;
    j["dim"] = bei::dimension(r);
    j["mult"] = bei::int_to_json(bei::multiplicity(r));
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "Q = " << r.q.str() << ", d = " << r.d
              << ", e = " << coeff_list(e) << "\n";
    std::cout << "dim = " << bei::dimension(r)
              << ", mult = " << bei::multiplicity(r) << "\n";
  }
  return 0;
}

int cmd_invariants(const GuardedInput& input, int vertex,
                   const std::string& format) {
  bei::Graph g = input.load_graph();
  auto cut = bei::cut_sets(g);
  auto primes = bei::minimal_primes(g);
  int dim = bei::dimension_via_cutsets(g);
  if (format == "json") {
    nlohmann::json verts = nlohmann::json::array();
    for (int v = 1; v <= g.n(); ++v) {
      if (vertex != 0 && v != vertex) continue;
      verts.push_back({{"v", v},
                       {"cdeg", bei::clique_degree(g, v)},
                       {"fcdeg", bei::free_clique_degree(g, v)},
                       {"free", bei::is_free_vertex(g, v)}});
    }
    nlohmann::json cuts = nlohmann::json::array();
    for (const auto& t : cut) cuts.push_back(t.to_list());
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& p : primes) ps.push_back(bei::prime_component_to_json(p));
    std::cout << nlohmann::json{{"n", g.n()},
                                {"vertices", verts},
                                {"cut_sets", cuts},
                                {"minimal_primes", ps},
                                {"dim", dim}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "n = " << g.n() << ", edges = " << g.edge_count() << "\n";
  std::cout << "v\tcdeg\tfcdeg\tfree\n";
  for (int v = 1; v <= g.n(); ++v) {
    if (vertex != 0 && v != vertex) continue;
    std::cout << v << "\t" << bei::clique_degree(g, v) << "\t"
              << bei::free_clique_degree(g, v) << "\t"
              << (bei::is_free_vertex(g, v) ? "yes" : "no") << "\n";
  }
  std::cout << "cut sets:";
  for (const auto& t : cut) {
    std::cout << " {";
    auto l = t.to_list();
    for (std::size_t k = 0; k < l.size(); ++k)
      std::cout << (k ? "," : "") << l[k];
    std::cout << "}";
  }
  std::cout << "\nminimal primes (T, components, height):\n";
  for (const auto& p : primes)
    std::cout << "  " << bei::prime_component_to_json(p).dump() << "\n";
  std::cout << "dim = " << dim << "\n";
  return 0;
}

int cmd_construct(int i, int r, long long s, bool verify,
                  const std::string& out_path, const GuardedInput& input,
                  const std::string& format) {
  bei::Certificate cert = bei::realize({i, r, s});
  if (verify) {
    auto result = bei::verify_certificate(cert, input.max_pipeline_n);
    if (!result.ok) throw bei::error("verification failed: " + result.detail);
    cert.verified = true;
    if (result.detail.find("pipeline") != std::string::npos)
      cert.method = "pipeline";
  }
  nlohmann::json j = bei::certificate_to_json(cert);
  if (format == "json") {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "expr: " << bei::expr_str(cert.expr) << "\n";
    std::cout << "reg = " << cert.reg.reg << ", e_" << cert.i << " = "
              << cert.s << (cert.verified ? " (verified)" : "") << "\n";
    std::cout << j.dump(2) << "\n";
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw bei::error("cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_check(const std::string& suite, int cases, std::uint64_t seed,
              const GuardedInput& input) {
  std::vector<bei::CheckReport> reports;
  if (suite == "lemma31") {
    reports = bei::run_lemma31_suite(cases, seed);
  } else if (suite == "thm33") {
    reports = bei::run_thm33_suite(cases, seed, std::min(8, input.max_pipeline_n));
  } else if (suite == "ohtani") {
    reports = bei::run_ohtani_suite(cases, seed, std::min(7, input.max_pipeline_n));
  } else if (suite == "oracle") {
    reports = bei::run_oracle_suite(cases, seed, input.max_oracle_vars);
  } else {
    throw bei::error("unknown suite: " + suite);
  }
  int failures = 0;
  for (const auto& rep : reports) {
    std::cout << bei::check_report_to_json(rep).dump() << "\n";
    if (rep.applicable && !rep.pass) ++failures;
  }
  std::cerr << suite << ": " << (reports.size() - failures) << "/"
            << reports.size() << " passed\n";
  return failures == 0 ? 0 : kExitChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hilbert series and regularity toolkit for binomial edge ideals"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format: text | json")
      ->check(CLI::IsMember({"text", "json"}));

  GuardedInput hs_input;
  auto* hs = app.add_subcommand("hs", "reduced Hilbert series and coefficients");
  hs->fallthrough();
  hs_input.attach(hs);

  GuardedInput inv_input;
  int inv_vertex = 0;
  auto* inv = app.add_subcommand("invariants",
                                 "clique data, cut sets, minimal primes, dimension");
  inv->fallthrough();
  inv_input.attach(inv);
  inv->add_option("--vertex", inv_vertex, "restrict the table to one vertex");

  GuardedInput con_input;
  int con_i = 0, con_r = 1;
  long long con_s = 0;
  bool con_verify = false;
  std::string con_out;
  auto* con = app.add_subcommand("construct",
                                 "realize a (regularity, e_i) pair with a certificate");
  con->fallthrough();
  con->add_option("--i", con_i, "coefficient index")->required();
  con->add_option("--reg", con_r, "target regularity")->required();
  con->add_option("--ei", con_s, "target coefficient value")->required();
  con->add_flag("--verify", con_verify, "re-derive every claim before printing");
  con->add_option("--out", con_out, "also write the certificate JSON to a file");
  con_input.attach(con, false);

  GuardedInput chk_input;
  std::string chk_suite;
  int chk_cases = 25;
  std::uint64_t chk_seed = 1;
  auto* chk = app.add_subcommand("check", "seeded property suites");
  chk->fallthrough();
  chk->add_option("--suite", chk_suite, "lemma31 | thm33 | ohtani | oracle")
      ->required()
      ->check(CLI::IsMember({"lemma31", "thm33", "ohtani", "oracle"}));
  chk->add_option("--cases", chk_cases, "number of cases");
  chk->add_option("--seed", chk_seed, "random seed");
  chk_input.attach(chk, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (hs->parsed()) {
      if (hs_input.expr.empty() && hs_input.graph_path.empty())
        throw bei::error("hs needs --expr or --graph");
      return cmd_hs(hs_input, format);
    }
    if (inv->parsed()) {
      if (inv_input.expr.empty() && inv_input.graph_path.empty())
        throw bei::error("invariants needs --expr or --graph");
      return cmd_invariants(inv_input, inv_vertex, format);
    }
    if (con->parsed()) {
      return cmd_construct(con_i, con_r, con_s, con_verify, con_out, con_input,
                           format);
    }
    if (chk->parsed()) {
      return cmd_check(chk_suite, chk_cases, chk_seed, chk_input);
    }
  } catch (const bei::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const bei::size_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const bei::infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
