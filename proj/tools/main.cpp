#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tdopt/decomp.hpp"
#include "tdopt/errors.hpp"
#include "tdopt/graph.hpp"
#include "tdopt/ipsolve.hpp"
#include "tdopt/json_io.hpp"
#include "tdopt/limits.hpp"
#include "tdopt/matroid.hpp"
#include "tdopt/rowtransform.hpp"
#include "tdopt/treedepth.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tdopt::ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Matrix files are either the plain text format ("rows cols" then entries) or
// a JSON artifact carrying a "matrix" block.
tdopt::RatMatrix load_matrix(const std::string& path) {
  std::string text = read_file(path);
  std::size_t k = text.find_first_not_of(" \t\r\n");
  if (k != std::string::npos && text[k] == '{') return tdopt::matrix_from_json(text);
  return tdopt::RatMatrix::parse(text);
}

tdopt::Limits make_limits(int max_rank, int max_vertices) {
  tdopt::Limits lim;
  if (const char* env = std::getenv("TDOPT_LIMITS")) lim = tdopt::Limits::parse(env);
  if (max_rank > 0) lim.bd_max_rank = max_rank;
  if (max_vertices > 0) lim.td_max_vertices = max_vertices;
  return lim;
}

tdopt::TransformMode transform_mode(const std::string& mode) {
  if (mode == "exact") return tdopt::TransformMode::Exact;
  if (mode == "heuristic") return tdopt::TransformMode::Heuristic;
  if (mode == "auto" || mode.empty()) return tdopt::TransformMode::Auto;
  throw tdopt::ParseError("unknown mode " + mode);
}

int run_analyze(const std::string& path, const tdopt::Limits& lim, bool as_json, bool pretty) {
  tdopt::RatMatrix a = load_matrix(path);
  int r = tdopt::rank(a);
  long ec = tdopt::entry_complexity(a);
  tdopt::TreedepthResult tdp = tdopt::treedepth(tdopt::primal_graph(a), lim);
  tdopt::TreedepthResult tdd = tdopt::treedepth(tdopt::dual_graph(a), lim);

  int bd = 0;
  bool bd_exact = true;
  tdopt::VectorMatroid m = tdopt::VectorMatroid::column_matroid(a, lim.rank_cache_capacity);
  try {
    bd = tdopt::branch_depth_exact(m, lim).depth;
  } catch (const tdopt::SizeLimit&) {
    bd_exact = false;
    bd = tdopt::transform_pipeline(a, 0, tdopt::TransformMode::Heuristic, lim).reported_depth;
  }

  if (as_json) {
    std::ostringstream out;
    const char* q = "\"";
    out << "{" << q << "kind" << q << ":" << q << "analysis" << q;
    out << "," << q << "rows" << q << ":" << a.rows();
    out << "," << q << "cols" << q << ":" << a.cols();
    out << "," << q << "rank" << q << ":" << r;
    out << "," << q << "ec" << q << ":" << ec;
    out << "," << q << "td_primal" << q << ":{" << q << "value" << q << ":" << tdp.value << ","
        << q << "exact" << q << ":" << (tdp.exact ? "true" : "false") << "}";
    out << "," << q << "td_dual" << q << ":{" << q << "value" << q << ":" << tdd.value << "," << q
        << "exact" << q << ":" << (tdd.exact ? "true" : "false") << "}";
    out << "," << q << "branch_depth" << q << ":{" << q << "value" << q << ":" << bd << "," << q
        << "exact" << q << ":" << (bd_exact ? "true" : "false") << "}";
    out << "}";
    std::cout << out.str() << "\n";
    (void)pretty;
  } else {
    auto tag = [](bool exact) { return exact ? "" : " (heuristic bound)"; };
    std::cout << "rows          " << a.rows() << "\n"
              << "cols          " << a.cols() << "\n"
              << "rank          " << r << "\n"
              << "ec            " << ec << "\n"
              << "td primal     " << tdp.value << tag(tdp.exact) << "\n"
              << "td dual       " << tdd.value << tag(tdd.exact) << "\n"
              << "branch-depth  " << bd << tag(bd_exact) << "\n";
  }
  return 0;
}

int run_transform(const std::string& path, int depth, const std::string& mode,
                  const tdopt::Limits& lim, bool pretty) {
  tdopt::RatMatrix a = load_matrix(path);
  tdopt::TransformResult r = tdopt::transform_pipeline(a, depth, transform_mode(mode), lim);
  std::cout << tdopt::to_json(a, r, pretty) << "\n";
  return 0;
}

int run_solve(const std::string& path, int depth, const std::string& mode, bool oracle,
              const tdopt::Limits& lim, bool pretty) {
  tdopt::IPInstance inst = tdopt::instance_from_json(read_file(path));
  tdopt::SolveMode sm = tdopt::SolveMode::Exact;
  if (mode == "heuristic") sm = tdopt::SolveMode::Heuristic;
  else if (mode == "none") sm = tdopt::SolveMode::None;
  else if (!mode.empty() && mode != "exact" && mode != "auto")
    throw tdopt::ParseError("unknown mode " + mode);

  tdopt::IPSolution sol = tdopt::solve(inst, depth, sm, lim);
  std::optional<tdopt::IPSolution> check;
  if (oracle) {
    try {
      check = tdopt::solve_bruteforce(inst, lim);
    } catch (const tdopt::SizeLimit& e) {
      std::cerr << "oracle skipped: " << e.what() << "\n";
    }
  }
  std::cout << tdopt::to_json(sol, pretty, check ? &*check : nullptr) << "\n";
  return sol.status == tdopt::SolveStatus::Infeasible ? 2 : 0;
}

int run_verify(const std::string& path, const tdopt::Limits& lim) {
  tdopt::VerifyReport rep = tdopt::verify_artifact(read_file(path), lim);
  for (const tdopt::VerifyCheck& c : rep.checks)
    std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << "\n";
  std::cout << (rep.all_ok() ? "verified" : "verification failed") << " (" << rep.kind << ")\n";
  return rep.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dual tree-depth matrix transformer and integer program solver"};
  app.require_subcommand(1);

  std::string path, mode;
  int depth = 0, max_rank = 0, max_vertices = 0;
  bool as_json = false, pretty = false, oracle = false;

  CLI::App* analyze = app.add_subcommand("analyze", "report rank, entry complexity, tree-depths");
  analyze->add_option("file", path)->required();
  analyze->add_flag("--json", as_json, "machine-readable output");
  analyze->add_option("--max-rank", max_rank);
  analyze->add_option("--max-vertices", max_vertices);

  CLI::App* transform = app.add_subcommand("transform", "emit B and A' with small dual tree-depth");
  transform->add_option("file", path)->required();
  transform->add_option("--depth", depth, "reject when branch-depth provably exceeds this");
  transform->add_option("--mode", mode)->check(CLI::IsMember({"auto", "exact", "heuristic"}));
  transform->add_option("--max-rank", max_rank);
  transform->add_option("--max-vertices", max_vertices);
  transform->add_flag("--pretty", pretty);

  CLI::App* solve = app.add_subcommand("solve", "solve an integer program instance");
  solve->add_option("file", path)->required();
  solve->add_option("--depth", depth);
  solve->add_option("--mode", mode)->check(CLI::IsMember({"auto", "exact", "heuristic", "none"}));
  solve->add_flag("--oracle", oracle, "cross-check against brute force");
  solve->add_option("--max-rank", max_rank);
  solve->add_option("--max-vertices", max_vertices);
  solve->add_flag("--pretty", pretty);

  CLI::App* verify = app.add_subcommand("verify", "re-check a serialized artifact");
  verify->add_option("file", path)->required();
  verify->add_option("--max-rank", max_rank);
  verify->add_option("--max-vertices", max_vertices);

  CLI11_PARSE(app, argc, argv);

  try {
    tdopt::Limits lim = make_limits(max_rank, max_vertices);
    if (analyze->parsed()) return run_analyze(path, lim, as_json, pretty);
    if (transform->parsed()) return run_transform(path, depth, mode, lim, pretty);
    if (solve->parsed()) return run_solve(path, depth, mode, oracle, lim, pretty);
    if (verify->parsed()) return run_verify(path, lim);
  } catch (const tdopt::BranchDepthExceeded& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const tdopt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const tdopt::SizeLimit& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return 4;
  } catch (const tdopt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
