#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "distdet/error.hpp"

namespace distdet {

/// One oracle-vs-formula comparison inside a verification suite.
struct SuiteInstance {
  long long index = 0;
  std::string params;
  std::string oracle;
  std::string formula;
  bool match = false;
  long long micros = 0;
  std::string edge_list;  // populated only when the instance mismatches

  friend bool operator==(const SuiteInstance&, const SuiteInstance&) = default;
};

/// Result of running one suite: the inputs that determine it plus every
/// instance. With equal seed, count and max_order the instance data is
/// reproducible bit for bit; only the micros fields vary between runs.
struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  long long count = 0;
  long long max_order = 0;
  std::vector<SuiteInstance> instances;

  long long total() const { return static_cast<long long>(instances.size()); }

  long long mismatches() const {
    long long m = 0;
    for (const auto& inst : instances)
      if (!inst.match) ++m;
    return m;
  }
};

/// Serializes a report with a fixed key order. All timing data lives under
/// the top-level "timing" key, so stripping that one key leaves output that
/// is byte-identical across runs with the same seed, count and max_order.
inline nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["args"] = {{"count", report.count}, {"max_order", report.max_order}};
  j["summary"] = {{"total", report.total()},
                  {"mismatches", report.mismatches()},
                  {"seed", report.seed}};
  j["instances"] = nlohmann::ordered_json::array();
  long long total_micros = 0;
  nlohmann::ordered_json per_instance = nlohmann::ordered_json::array();
  for (const auto& inst : report.instances) {
    nlohmann::ordered_json ji;
    ji["index"] = inst.index;
    ji["params"] = inst.params;
    ji["oracle"] = inst.oracle;
    ji["formula"] = inst.formula;
    ji["match"] = inst.match;
    if (!inst.edge_list.empty()) ji["edge_list"] = inst.edge_list;
    j["instances"].push_back(std::move(ji));
    total_micros += inst.micros;
    per_instance.push_back(inst.micros);
  }
  j["timing"] = {{"total_micros", total_micros},
                 {"per_instance_micros", std::move(per_instance)}};
  return j;
}

/// Parses a report back, checking that the stored summary is consistent
/// with the instance list.
inline VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  VerificationReport report;
  try {
    report.suite = j.at("suite").get<std::string>();
    report.count = j.at("args").at("count").get<long long>();
    report.max_order = j.at("args").at("max_order").get<long long>();
    report.seed = j.at("summary").at("seed").get<std::uint64_t>();
    for (const auto& ji : j.at("instances")) {
      SuiteInstance inst;
      inst.index = ji.at("index").get<long long>();
      inst.params = ji.at("params").get<std::string>();
      inst.oracle = ji.at("oracle").get<std::string>();
      inst.formula = ji.at("formula").get<std::string>();
      inst.match = ji.at("match").get<bool>();
      inst.edge_list = ji.value("edge_list", std::string());
      report.instances.push_back(std::move(inst));
    }
    const auto total = j.at("summary").at("total").get<long long>();
    const auto mismatches = j.at("summary").at("mismatches").get<long long>();
    if (total != report.total())
      throw ParseError("report: summary total disagrees with instance list");
    if (mismatches != report.mismatches())
      throw ParseError("report: summary mismatches disagree with instance list");
    if (j.contains("timing")) {
      const auto& per = j.at("timing").at("per_instance_micros");
      if (per.size() == report.instances.size())
        for (std::size_t i = 0; i < report.instances.size(); ++i)
          report.instances[i].micros = per[i].get<long long>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  return report;
}

/// CSV rendering, one row per instance. Parameter and value strings never
/// contain commas, so no quoting is needed.
inline std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "suite,index,params,oracle,formula,match,micros\n";
  for (const auto& inst : report.instances) {
    out << report.suite << ',' << inst.index << ',' << inst.params << ','
        << inst.oracle << ',' << inst.formula << ','
        << (inst.match ? "true" : "false") << ',' << inst.micros << '\n';
  }
  return out.str();
}

}  // namespace distdet
