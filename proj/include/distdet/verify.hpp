#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "distdet/classify.hpp"
#include "distdet/cycle_reduction.hpp"
#include "distdet/determinant.hpp"
#include "distdet/error.hpp"
#include "distdet/formulas.hpp"
#include "distdet/generators.hpp"
#include "distdet/graph.hpp"
#include "distdet/graph_io.hpp"
#include "distdet/numeric.hpp"
#include "distdet/report.hpp"
#include "distdet/transforms.hpp"

namespace distdet {

/// Shared knobs for every verification suite. Identical options produce an
/// identical instance stream, independent of platform.
struct SuiteOptions {
  std::uint64_t seed = 0;
  long long count = 100;
  long long max_order = 20;
};

/// Whether the bicyclic suite samples cycle lengths freely or forces at
/// least one even length (the determinant-vanishing branch).
enum class CycleParity { any, force_even };

namespace detail {

using SuiteClock = std::chrono::steady_clock;

inline long long elapsed_micros(SuiteClock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(
             SuiteClock::now() - start)
      .count();
}

/// Uniform draw from the inclusive range [lo, hi].
inline int draw_range(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(
                  uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline VerificationReport start_report(const char* suite,
                                       const SuiteOptions& opts) {
  VerificationReport report;
  report.suite = suite;
  report.seed = opts.seed;
  report.count = opts.count;
  report.max_order = opts.max_order;
  return report;
}

inline void finish_instance(SuiteInstance& inst, const BigInt& oracle,
                            const BigInt& formula, const Graph* witness) {
  inst.oracle = oracle.str();
  inst.formula = formula.str();
  inst.match = oracle == formula;
  if (!inst.match && witness) inst.edge_list = to_edge_list(*witness);
}

}  // namespace detail

/// Random trees: distance-matrix determinant against the closed form that
/// depends only on the order.
inline VerificationReport run_tree_suite(const SuiteOptions& opts) {
  if (opts.max_order < 2)
    throw DomainError("trees suite: max_order must be >= 2");
  auto report = detail::start_report("trees", opts);
  Rng rng(opts.seed);
  for (long long i = 0; i < opts.count; ++i) {
    SuiteInstance inst;
    inst.index = i;
    const auto start = detail::SuiteClock::now();
    const int order =
        detail::draw_range(rng, 2, static_cast<int>(opts.max_order));
    const Graph g = random_connected_graph(order, 0, rng);
    const BigInt oracle = det_bareiss(distance_matrix(g));
    const BigInt formula = tree_det(order);
    inst.params = "order=" + std::to_string(order);
    detail::finish_instance(inst, oracle, formula, &g);
    inst.micros = detail::elapsed_micros(start);
    report.instances.push_back(std::move(inst));
  }
  return report;
}

/// Random tree-planted unicyclic graphs: determinant against the cycle-length
/// and tree-mass formula (zero for even cycles).
inline VerificationReport run_unicyclic_suite(const SuiteOptions& opts) {
  if (opts.max_order < 3)
    throw DomainError("unicyclic suite: max_order must be >= 3");
  auto report = detail::start_report("unicyclic", opts);
  Rng rng(opts.seed);
  const int p_hi = static_cast<int>(std::min<long long>(8, opts.max_order));
  for (long long i = 0; i < opts.count; ++i) {
    SuiteInstance inst;
    inst.index = i;
    const auto start = detail::SuiteClock::now();
    const int p = detail::draw_range(rng, 3, p_hi);
    const int n =
        detail::draw_range(rng, 0, static_cast<int>(opts.max_order) - p);
    const Graph g = plant_random_trees(generate_cycle(p), n, rng);
    const BigInt oracle = det_bareiss(distance_matrix(g));
    const BigInt formula = unicyclic_det(p, n);
    inst.params = "p=" + std::to_string(p) + " n=" + std::to_string(n);
    detail::finish_instance(inst, oracle, formula, &g);
    inst.micros = detail::elapsed_micros(start);
    report.instances.push_back(std::move(inst));
  }
  return report;
}

/// Random tree-planted bicyclic graphs with edge-disjoint cycles. Each graph
/// is classified from scratch and the classified shape drives the formula,
/// so the suite exercises classification and the closed form at once.
inline VerificationReport run_bicyclic_suite(const SuiteOptions& opts,
                                             CycleParity parity) {
  if (opts.max_order < 5)
    throw DomainError("bicyclic suite: max_order must be >= 5");
  auto report = detail::start_report("bicyclic", opts);
  Rng rng(opts.seed);
  const int max_order = static_cast<int>(opts.max_order);
  for (long long i = 0; i < opts.count; ++i) {
    SuiteInstance inst;
    inst.index = i;
    const auto start = detail::SuiteClock::now();
    int p = 0, q = 0, k = 0;
    for (;;) {
      p = detail::draw_range(rng, 3, 9);
      q = detail::draw_range(rng, 3, 9);
      k = detail::draw_range(rng, 1, 5);
      if (p + q + k - 2 > max_order) continue;
      if (parity == CycleParity::force_even && p % 2 != 0 && q % 2 != 0)
        continue;
      break;
    }
    const Graph base = generate_infinity(p, k, q);
    const int extra =
        detail::draw_range(rng, 0, max_order - base.order());
    const Graph g = plant_random_trees(base, extra, rng);
    const BicyclicShape shape = classify_bicyclic(g);
    const BigInt oracle = det_bareiss(distance_matrix(g));
    const BigInt formula = bicyclic_det(shape.p, shape.q, shape.n);
    inst.params = "p=" + std::to_string(shape.p) +
                  " q=" + std::to_string(shape.q) +
                  " k=" + std::to_string(shape.k) +
                  " n=" + std::to_string(shape.n) +
                  " order=" + std::to_string(g.order());
    detail::finish_instance(inst, oracle, formula, &g);
    inst.micros = detail::elapsed_micros(start);
    report.instances.push_back(std::move(inst));
  }
  return report;
}

inline VerificationReport run_bicyclic_suite(const SuiteOptions& opts) {
  return run_bicyclic_suite(opts, CycleParity::any);
}

/// Three consecutive pendant-path determinants, computed from the graphs
/// themselves, plugged into the order-two recurrence; the residual must be 0.
inline VerificationReport run_recurrence_suite(const SuiteOptions& opts) {
  if (opts.max_order < 7)
    throw DomainError("recurrence suite: max_order must be >= 7");
  auto report = detail::start_report("recurrence", opts);
  Rng rng(opts.seed);
  for (long long i = 0; i < opts.count; ++i) {
    SuiteInstance inst;
    inst.index = i;
    const auto start = detail::SuiteClock::now();
    int p = 0, q = 0, n_hi = 0;
    for (;;) {
      p = 3 + 2 * detail::draw_range(rng, 0, 2);
      q = 3 + 2 * detail::draw_range(rng, 0, 2);
      n_hi = static_cast<int>(
          std::min<long long>(10, opts.max_order - (p + q - 1)));
      if (n_hi >= 2) break;
    }
    const int n = detail::draw_range(rng, 2, n_hi);
    const Graph g = generate_gpqn(p, q, n);
    const BigInt d_nm2 =
        det_bareiss(distance_matrix(generate_gpqn(p, q, n - 2)));
    const BigInt d_nm1 =
        det_bareiss(distance_matrix(generate_gpqn(p, q, n - 1)));
    const BigInt d_n = det_bareiss(distance_matrix(g));
    const BigInt residual = recurrence_residual(d_nm2, d_nm1, d_n);
    inst.params = "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                  " n=" + std::to_string(n);
    detail::finish_instance(inst, residual, BigInt(0), &g);
    inst.micros = detail::elapsed_micros(start);
    report.instances.push_back(std::move(inst));
  }
  return report;
}

/// The three cycle-reduction identities, one instance per size k = 1..count:
/// the reduced core determinant, the border bilinear form, and the
/// second-difference determinant, each computed by exact elimination and
/// compared with its closed form.
inline VerificationReport run_cycle_core_suite(const SuiteOptions& opts) {
  if (opts.count < 1)
    throw DomainError("cycle-core suite: count must be >= 1");
  auto report = detail::start_report("cycle-core", opts);
  for (long long i = 0; i < opts.count; ++i) {
    const int k = static_cast<int>(i) + 1;
    SuiteInstance inst;
    inst.index = i;
    const auto start = detail::SuiteClock::now();
    const CoreInvariants inv = core_invariants(k);
    const BigInt hdet = det_bareiss(second_difference(k));
    inst.params = "k=" + std::to_string(k);
    inst.oracle = "core=" + inv.core_det.str() +
                  " border=" + inv.border_form.str() +
                  " second_diff=" + hdet.str();
    inst.formula = "core=" + core_det_closed(k).str() +
                   " border=" + border_form_closed(k).str() +
                   " second_diff=" + second_difference_det(k).str();
    inst.match = inst.oracle == inst.formula;
    inst.micros = detail::elapsed_micros(start);
    report.instances.push_back(std::move(inst));
  }
  return report;
}

/// Pendant invariance: for each sampled connected graph, attaching a pendant
/// vertex gives the same determinant no matter which vertex it hangs from.
/// One instance per (graph, vertex); the vertex-0 value is the reference.
inline VerificationReport run_pendant_suite(const SuiteOptions& opts) {
  if (opts.max_order < 2)
    throw DomainError("pendant suite: max_order must be >= 2");
  auto report = detail::start_report("pendant", opts);
  Rng rng(opts.seed);
  const int order_hi = static_cast<int>(std::min<long long>(12, opts.max_order));
  long long index = 0;
  for (long long i = 0; i < opts.count; ++i) {
    const int order = detail::draw_range(rng, 2, order_hi);
    const int extra = detail::draw_range(rng, 0, order - 1);
    const Graph g = random_connected_graph(order, extra, rng);
    const BigInt reference =
        det_bareiss(distance_matrix(attach_pendant(g, 0)));
    for (int v = 0; v < order; ++v) {
      SuiteInstance inst;
      inst.index = index++;
      const auto start = detail::SuiteClock::now();
      const Graph attached = attach_pendant(g, v);
      const BigInt oracle = det_bareiss(distance_matrix(attached));
      inst.params = "graph=" + std::to_string(i) +
                    " order=" + std::to_string(order) +
                    " v=" + std::to_string(v);
      detail::finish_instance(inst, oracle, reference, &attached);
      inst.micros = detail::elapsed_micros(start);
      report.instances.push_back(std::move(inst));
    }
  }
  return report;
}

/// Join invariance: bridging two graphs with an edge and gluing them at a
/// vertex plus a pendant give equal determinants, for random pairs of
/// connected graphs and random contact vertices.
inline VerificationReport run_join_suite(const SuiteOptions& opts) {
  if (opts.max_order < 2)
    throw DomainError("join suite: max_order must be >= 2");
  auto report = detail::start_report("join", opts);
  Rng rng(opts.seed);
  const int side_hi = static_cast<int>(
      std::min<long long>(8, std::max<long long>(1, opts.max_order / 2)));
  for (long long i = 0; i < opts.count; ++i) {
    SuiteInstance inst;
    inst.index = i;
    const auto start = detail::SuiteClock::now();
    const int left_order = detail::draw_range(rng, 1, side_hi);
    const int left_extra = detail::draw_range(rng, 0, left_order - 1);
    const int right_order = detail::draw_range(rng, 1, side_hi);
    const int right_extra = detail::draw_range(rng, 0, right_order - 1);
    JoinSpec spec{random_connected_graph(left_order, left_extra, rng),
                  detail::draw_range(rng, 0, left_order - 1),
                  random_connected_graph(right_order, right_extra, rng),
                  detail::draw_range(rng, 0, right_order - 1)};
    const Graph joined = edge_join(spec);
    const BigInt oracle = det_bareiss(distance_matrix(joined));
    const BigInt formula =
        det_bareiss(distance_matrix(identify_plus_pendant(spec)));
    inst.params = "left=" + std::to_string(left_order) +
                  " right=" + std::to_string(right_order) +
                  " lv=" + std::to_string(spec.left_vertex) +
                  " rv=" + std::to_string(spec.right_vertex);
    detail::finish_instance(inst, oracle, formula, &joined);
    inst.micros = detail::elapsed_micros(start);
    report.instances.push_back(std::move(inst));
  }
  return report;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "cycle-core", "pendant",   "join",    "recurrence",
      "trees",      "unicyclic", "bicyclic"};
  return names;
}

/// Dispatch by suite name; throws DomainError for unknown names.
inline VerificationReport run_suite(const std::string& name,
                                    const SuiteOptions& opts) {
  if (name == "cycle-core") return run_cycle_core_suite(opts);
  if (name == "pendant") return run_pendant_suite(opts);
  if (name == "join") return run_join_suite(opts);
  if (name == "recurrence") return run_recurrence_suite(opts);
  if (name == "trees") return run_tree_suite(opts);
  if (name == "unicyclic") return run_unicyclic_suite(opts);
  if (name == "bicyclic") return run_bicyclic_suite(opts);
  throw DomainError("unknown suite: " + name);
}

}  // namespace distdet
