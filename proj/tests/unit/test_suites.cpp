#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "distdet/verify.hpp"

using namespace distdet;

namespace {

SuiteOptions small_opts() {
  SuiteOptions opts;
  opts.seed = 41;
  opts.count = 12;
  opts.max_order = 16;
  return opts;
}

nlohmann::ordered_json stripped(const VerificationReport& report) {
  auto j = report_to_json(report);
  j.erase("timing");
  return j;
}

}  // namespace

TEST_CASE("every suite runs clean on a small budget") {
  for (const auto& name : suite_names()) {
    const VerificationReport report = run_suite(name, small_opts());
    INFO("suite " << name);
    REQUIRE(report.suite == name);
    REQUIRE(report.total() >= small_opts().count);
    REQUIRE(report.mismatches() == 0);
  }
}

TEST_CASE("suites are deterministic given identical options") {
  for (const auto& name : suite_names()) {
    const auto a = stripped(run_suite(name, small_opts()));
    const auto b = stripped(run_suite(name, small_opts()));
    INFO("suite " << name);
    REQUIRE(a.dump() == b.dump());
  }
}

TEST_CASE("different seeds sample different instances") {
  SuiteOptions other = small_opts();
  other.seed = 42;
  const auto a = stripped(run_tree_suite(small_opts()));
  const auto b = stripped(run_tree_suite(other));
  REQUIRE(a.dump() != b.dump());
}

TEST_CASE("suite parameters land inside the requested bounds") {
  const SuiteOptions opts = small_opts();
  for (const auto& inst : run_tree_suite(opts).instances) {
    const int order = std::stoi(inst.params.substr(inst.params.find('=') + 1));
    REQUIRE(order >= 2);
    REQUIRE(order <= opts.max_order);
  }
}

TEST_CASE("forced even cycles always produce zero determinants") {
  const VerificationReport report =
      run_bicyclic_suite(small_opts(), CycleParity::force_even);
  REQUIRE(report.total() == small_opts().count);
  REQUIRE(report.mismatches() == 0);
  for (const auto& inst : report.instances) REQUIRE(inst.oracle == "0");
}

TEST_CASE("one record per size in the identity suite") {
  SuiteOptions opts;
  opts.count = 50;
  const VerificationReport report = run_cycle_core_suite(opts);
  REQUIRE(report.total() == 50);
  REQUIRE(report.mismatches() == 0);
  REQUIRE(report.instances.front().params == "k=1");
  REQUIRE(report.instances.back().params == "k=50");
}

TEST_CASE("unknown suites and impossible bounds are rejected") {
  REQUIRE_THROWS_AS(run_suite("nope", small_opts()), DomainError);
  SuiteOptions tiny;
  tiny.max_order = 4;
  REQUIRE_THROWS_AS(run_bicyclic_suite(tiny), DomainError);
  tiny.max_order = 1;
  REQUIRE_THROWS_AS(run_tree_suite(tiny), DomainError);
  REQUIRE_THROWS_AS(run_recurrence_suite(tiny), DomainError);
}
