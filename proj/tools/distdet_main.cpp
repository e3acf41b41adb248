// Command-line front end: exact distance-matrix determinants, closed-form
// evaluation, seeded verification suites, graph generation, and timing.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "distdet/distdet.hpp"

namespace {

using namespace distdet;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_det(const std::string& path, const std::string& dot_path) {
  const Graph g = from_edge_list(read_file(path));
  require_connected(g, "det");
  if (!dot_path.empty()) write_file(dot_path, to_dot(g));
  std::cout << det_bareiss(distance_matrix(g)) << "\n";
  return 0;
}

int cmd_formula(const std::string& family,
                const std::vector<long long>& values) {
  const auto expect = [&](std::size_t arity, const char* usage) {
    if (values.size() != arity)
      throw CLI::ValidationError("formula", std::string("expected ") + usage);
  };
  bool warn = false;
  if (family == "tree") {
    expect(1, "formula tree <n>");
    std::cout << tree_det(values[0]) << "\n";
  } else if (family == "unicyclic") {
    expect(2, "formula unicyclic <p> <n>");
    std::cout << unicyclic_det(values[0], values[1], &warn) << "\n";
  } else if (family == "bicyclic") {
    expect(3, "formula bicyclic <p> <q> <n>");
    std::cout << bicyclic_det(values[0], values[1], values[2], &warn) << "\n";
    std::cout << "order " << values[0] + values[1] - 1 + values[2] << "\n";
  } else {
    throw CLI::ValidationError("formula", "unknown family: " + family);
  }
  if (warn)
    std::cerr << "warning: cycle length 2 describes no simple graph; "
                 "value reported as 0\n";
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts,
               const std::string& csv_path) {
  std::vector<VerificationReport> reports;
  if (suite == "all") {
    for (const auto& name : suite_names())
      reports.push_back(run_suite(name, opts));
  } else {
    reports.push_back(run_suite(suite, opts));
  }

  if (reports.size() == 1) {
    std::cout << report_to_json(reports.front()).dump(2) << "\n";
  } else {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rep : reports) arr.push_back(report_to_json(rep));
    std::cout << arr.dump(2) << "\n";
  }

  if (!csv_path.empty()) {
    std::string csv;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::string part = report_to_csv(reports[i]);
      if (i > 0) part.erase(0, part.find('\n') + 1);  // keep one header
      csv += part;
    }
    write_file(csv_path, csv);
  }

  long long mismatches = 0;
  for (const auto& rep : reports) mismatches += rep.mismatches();
  return mismatches == 0 ? 0 : 1;
}

int cmd_gen(const std::string& family, const std::vector<int>& values, int k,
            int extra, std::uint64_t seed, const std::string& dot_path) {
  const auto expect = [&](std::size_t arity, const char* usage) {
    if (values.size() != arity)
      throw CLI::ValidationError("gen", std::string("expected ") + usage);
  };
  Graph g = single_vertex();
  if (family == "cycle") {
    expect(1, "gen cycle <p>");
    g = generate_cycle(values[0]);
  } else if (family == "path") {
    expect(1, "gen path <n>");
    g = generate_path(values[0]);
  } else if (family == "infinity") {
    expect(3, "gen infinity <p> <k> <q>");
    g = generate_infinity(values[0], values[1], values[2]);
  } else if (family == "gpqn") {
    expect(3, "gen gpqn <p> <q> <n>");
    g = generate_gpqn(values[0], values[1], values[2]);
  } else if (family == "random-bicyclic") {
    expect(2, "gen random-bicyclic <p> <q> [--k K] [--extra E] [--seed S]");
    g = plant_random_trees(generate_infinity(values[0], k, values[1]), extra,
                           seed);
  } else {
    throw CLI::ValidationError("gen", "unknown family: " + family);
  }
  std::cout << to_edge_list(g);
  if (!dot_path.empty()) write_file(dot_path, to_dot(g));
  return 0;
}

int cmd_bench(int max_order, int reps) {
  if (max_order < 5)
    throw DomainError("bench: max-order must be >= 5");
  if (reps < 1) throw DomainError("bench: reps must be >= 1");
  std::cout << "order,p,q,n,det,median_micros\n";
  for (int order = 5; order <= max_order; ++order) {
    const int p = 3, q = 3, n = order - 5;
    const IntMatrix D = distance_matrix(generate_gpqn(p, q, n));
    BigInt det;
    std::vector<long long> micros;
    for (int r = 0; r < reps; ++r) {
      const auto start = std::chrono::steady_clock::now();
      det = det_bareiss(D);
      micros.push_back(std::chrono::duration_cast<std::chrono::microseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count());
    }
    std::sort(micros.begin(), micros.end());
    std::cout << order << ',' << p << ',' << q << ',' << n << ',' << det << ','
              << micros[micros.size() / 2] << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for graph distance-matrix determinants"};
  app.require_subcommand(1);
  int rc = 0;

  auto* det = app.add_subcommand("det", "Determinant of an edge-list file");
  std::string det_path, det_dot;
  det->add_option("file", det_path, "edge-list file")->required();
  det->add_option("--dot", det_dot, "also write the graph as DOT");
  det->callback([&] { rc = cmd_det(det_path, det_dot); });

  auto* formula = app.add_subcommand(
      "formula", "Evaluate a closed-form determinant: tree <n> | "
                 "unicyclic <p> <n> | bicyclic <p> <q> <n>");
  std::string formula_family;
  std::vector<long long> formula_values;
  formula->add_option("family", formula_family, "tree, unicyclic or bicyclic")
      ->required();
  formula->add_option("values", formula_values, "family parameters")
      ->expected(-1);
  formula->callback([&] { rc = cmd_formula(formula_family, formula_values); });

  auto* verify = app.add_subcommand(
      "verify", "Run a seeded oracle-vs-formula suite; exit 0 iff no "
                "mismatches");
  std::string verify_suite, verify_csv;
  SuiteOptions opts;
  std::string suite_help = "all";
  for (const auto& name : suite_names()) suite_help += ", " + name;
  verify->add_option("suite", verify_suite, "one of: " + suite_help)
      ->required();
  verify->add_option("--seed", opts.seed, "RNG seed (default 0)");
  verify->add_option("--count", opts.count, "instances to run (default 100)");
  verify->add_option("--max-order", opts.max_order,
                     "largest graph order sampled (default 20)");
  verify->add_option("--csv", verify_csv, "also write instances as CSV");
  verify->callback([&] { rc = cmd_verify(verify_suite, opts, verify_csv); });

  auto* gen = app.add_subcommand(
      "gen", "Emit a graph as an edge list: cycle <p> | path <n> | "
             "infinity <p> <k> <q> | gpqn <p> <q> <n> | "
             "random-bicyclic <p> <q>");
  std::string gen_family, gen_dot;
  std::vector<int> gen_values;
  int gen_k = 1, gen_extra = 0;
  std::uint64_t gen_seed = 0;
  gen->add_option("family", gen_family, "graph family")->required();
  gen->add_option("values", gen_values, "family parameters")->expected(-1);
  gen->add_option("--k", gen_k, "path length between the cycles (default 1)");
  gen->add_option("--extra", gen_extra,
                  "random tree vertices to plant (default 0)");
  gen->add_option("--seed", gen_seed, "RNG seed (default 0)");
  gen->add_option("--dot", gen_dot, "also write the graph as DOT");
  gen->callback([&] {
    rc = cmd_gen(gen_family, gen_values, gen_k, gen_extra, gen_seed, gen_dot);
  });

  auto* bench = app.add_subcommand(
      "bench", "Time the determinant kernel on pendant-path graphs");
  int bench_max_order = 20, bench_reps = 5;
  bench->add_option("--max-order", bench_max_order,
                    "largest order to time (default 20, minimum 5)");
  bench->add_option("--reps", bench_reps,
                    "repetitions per order; the median is reported");
  bench->callback([&] { rc = cmd_bench(bench_max_order, bench_reps); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
