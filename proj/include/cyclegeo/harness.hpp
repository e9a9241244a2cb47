#ifndef CYCLEGEO_HARNESS_HPP_
#define CYCLEGEO_HARNESS_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyclegeo/cycle_type.hpp"
#include "cyclegeo/geometry.hpp"
#include "cyclegeo/rng.hpp"

namespace cyclegeo::harness {

using json = nlohmann::json;

// How each trial obtains its cycle type.
struct TypeSpec {
  std::string kind;                // "type", "all_p_cycles", "involution", "ewens"
  std::vector<long long> counts;   // kind == "type"
  long long p = 0;                 // all_p_cycles
  long long fixed = 0;             // involution
  double theta = 0;                // ewens
};

struct ExperimentConfig {
  std::string name;
  TypeSpec type_spec;
  long long n = 0;
  long long trials = 1;
  std::uint64_t seed = 0;
  json params = json::object();
  json tolerances = json::object();
  std::string out_dir;  // empty: no files written
};

// Unknown fields are rejected (exit-code-2 class of error).
ExperimentConfig parse_config(const json& j);

CycleType make_cycle_type(const TypeSpec& spec, long long n, Rng& rng);

struct ExperimentReport {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> raw;  // [trial][column]
  json summary;
  bool pass = true;
};

// Deterministic parallel map over trial indices.
void parallel_trials(long long trials, int threads,
                     const std::function<void(long long)>& fn);

ExperimentReport run_lds_experiment(const ExperimentConfig& cfg, int threads = 1);
ExperimentReport run_shape_experiment(const ExperimentConfig& cfg, int threads = 1);
ExperimentReport run_records_experiment(const ExperimentConfig& cfg, int threads = 1);
ExperimentReport run_pattern_experiment(const ExperimentConfig& cfg, int threads = 1);

// Writes raw.csv, summary.json and (when the report carries plot data)
// plot.svg into cfg.out_dir.
void write_report(const ExperimentReport& report, const std::string& out_dir);

// Full acceptance suite with fixed sub-seeds derived from `seed`.
// Prints one pass/fail line per criterion; returns 0 iff all pass.
int run_all_acceptance(std::uint64_t seed, int threads, const std::string& out_dir);

}  // namespace cyclegeo::harness

#endif  // CYCLEGEO_HARNESS_HPP_
