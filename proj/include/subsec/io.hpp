// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBSEC_IO_HPP_
#define SUBSEC_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "subsec/bounds.hpp"
#include "subsec/harness.hpp"
#include "subsec/instance.hpp"
#include "subsec/online.hpp"

namespace subsec {

inline constexpr const char* kCodeVersion = "0.1.0";
inline constexpr int kInstanceSchemaVersion = 1;

// All persisted doubles are rounded to 12 significant digits; the decimal
// form re-parses to within 1 ulp and the rounding is idempotent, so
// save -> load -> save is byte identical.
double round_sig12(double v);

Variant parse_variant(const std::string& name);

nlohmann::ordered_json oracle_spec_to_json(const OracleSpec& spec);
OracleSpec oracle_spec_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::ordered_json& j);

void save_instance(const Instance& instance, const std::string& path);
Instance load_instance(const std::string& path);

// Experiment report: everything needed to replay the estimate exactly.
struct Report {
  std::string code_version = kCodeVersion;
  std::uint64_t master_seed = 0;
  long trials = 0;
  AlgoConfig algo;
  Instance instance;
  Benchmark benchmark;
  TrialStats stats;
  std::vector<RoundRates> rates;
  std::vector<BoundReport> bounds;
  std::optional<RateAudit> collision_audit;
  std::optional<RateAudit> packing_audit;
};

// Assembles the report for an estimate run: statistics, per-round rates,
// the variant's closed-form bounds, and the applicable lemma audits.
Report make_report(const Instance& instance, const AlgoConfig& algo,
                   long trials, std::uint64_t master_seed,
                   const EstimateResult& result);

nlohmann::ordered_json report_to_json(const Report& report);
Report report_from_json(const nlohmann::ordered_json& j);
std::string report_to_csv(const Report& report);

void save_text(const std::string& text, const std::string& path);
std::string load_text(const std::string& path);

nlohmann::ordered_json run_record_to_json(const RunRecord& record);

nlohmann::ordered_json trial_stats_to_json(const TrialStats& stats);

}  // namespace subsec

#endif  // SUBSEC_IO_HPP_
