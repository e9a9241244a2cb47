#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "cyclegeo/harness.hpp"
#include "cyclegeo/oracle.hpp"
#include "cyclegeo/stats.hpp"
#include "cyclegeo/theory.hpp"

using namespace cyclegeo;
using namespace cyclegeo::harness;

TEST_CASE("config parsing") {
  const json good = {{"name", "x"},
                     {"type_spec", {{"kind", "all_p_cycles"}, {"params", {{"p", 2}}}}},
                     {"n", 100},
                     {"trials", 4},
                     {"seed", 7}};
  const ExperimentConfig cfg = parse_config(good);
  CHECK(cfg.name == "x");
  CHECK(cfg.n == 100);
  CHECK(cfg.type_spec.p == 2);

  json unknown = good;
  unknown["bogus"] = 1;
  CHECK_THROWS(parse_config(unknown));

  json bad_kind = good;
  bad_kind["type_spec"] = {{"kind", "martian"}, {"params", json::object()}};
  CHECK_THROWS(parse_config(bad_kind));

  json missing = good;
  missing.erase("seed");
  CHECK_THROWS(parse_config(missing));

  json stray = good;
  stray["type_spec"]["params"]["theta"] = 1.0;  // wrong key for this kind
  CHECK_THROWS(parse_config(stray));
}

TEST_CASE("trial rng streams") {
  Rng a1 = derive_trial_rng(123, 0);
  Rng a2 = derive_trial_rng(123, 0);
  Rng b = derive_trial_rng(123, 1);
  bool all_equal = true, any_equal_cross = false;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = a1.next_u64();
    all_equal = all_equal && x == a2.next_u64();
    any_equal_cross = any_equal_cross || x == b.next_u64();
  }
  CHECK(all_equal);
  CHECK_FALSE(any_equal_cross);

  // Cross-stream correlation over 10^5 paired draws.
  Rng s0 = derive_trial_rng(2024, 10), s1 = derive_trial_rng(2024, 11);
  double sx = 0, sy = 0, sxy = 0, sxx = 0, syy = 0;
  const int m = 100000;
  for (int i = 0; i < m; ++i) {
    const double x = s0.next_double(), y = s1.next_double();
    sx += x, sy += y, sxy += x * y, sxx += x * x, syy += y * y;
  }
  const double cov = sxy / m - sx / m * sy / m;
  const double vx = sxx / m - sx / m * sx / m, vy = syy / m - sy / m * sy / m;
  CHECK(std::fabs(cov / std::sqrt(vx * vy)) < 0.01);
}

TEST_CASE("lds experiment report") {
  ExperimentConfig cfg;
  cfg.name = "small";
  cfg.type_spec.kind = "all_p_cycles";
  cfg.type_spec.p = 2;
  cfg.n = 400;
  cfg.trials = 32;
  cfg.seed = 5;
  cfg.tolerances = {{"lds_lo", 1.0}, {"lds_hi", 3.0}};
  const ExperimentReport rep = run_lds_experiment(cfg, 2);
  CHECK(rep.raw.size() == 32);
  CHECK(rep.columns.size() == 2);
  CHECK(rep.pass);
  // Determinism across worker counts.
  CHECK(run_lds_experiment(cfg, 1).raw == rep.raw);
  // Byte-identical summaries on repeat runs.
  CHECK(run_lds_experiment(cfg, 3).summary.dump() == rep.summary.dump());
}

TEST_CASE("shape experiment high r saturates") {
  ExperimentConfig cfg;
  cfg.name = "sat";
  cfg.type_spec.kind = "all_p_cycles";
  cfg.type_spec.p = 3;
  cfg.n = 900;
  cfg.trials = 5;
  cfg.seed = 6;
  cfg.params = {{"r_grid", {2.5}}};
  cfg.tolerances = {{"max_abs_err", 1.0}};
  const ExperimentReport rep = run_shape_experiment(cfg, 1);
  CHECK(rep.summary.at("mean_profile").get<std::vector<double>>()[0] >= 0.99);
}

TEST_CASE("ewens shape rescaling stays near the limit") {
  ExperimentConfig cfg;
  cfg.name = "ewens_shape";
  cfg.type_spec.kind = "ewens";
  cfg.type_spec.theta = 1.0;
  cfg.n = 9999;
  cfg.trials = 10;
  cfg.seed = 8;
  cfg.tolerances = {{"max_abs_err", 0.05}};
  const ExperimentReport rep = run_shape_experiment(cfg, 1);
  CHECK(rep.pass);
}

TEST_CASE("pattern experiment mean under random types") {
  // Ewens theta=2, r=2: the empirical occurrence frequency of (1,2) matches
  // the average of mu over realized fixed-point fractions.
  Rng rng(44);
  const long long n = 500, trials = 400;
  double freq_sum = 0, mu_sum = 0, freq_sq = 0;
  for (long long i = 0; i < trials; ++i) {
    Rng tr = derive_trial_rng(77, static_cast<std::uint64_t>(i));
    const CycleType t = ewens_type(n, 2.0, tr);
    const Perm tau = sample_t_cyclic(t, tr);
    const double f =
        static_cast<double>(pattern_count(tau, Perm{1, 2})) /
        static_cast<double>(binomial(n, 2));
    const double m = mu_pattern(Perm{1, 2}, static_cast<double>(t.count(1)) / n);
    freq_sum += f;
    mu_sum += m;
    freq_sq += (f - m) * (f - m);
  }
  const double diff = (freq_sum - mu_sum) / trials;
  const double se = std::sqrt(freq_sq / trials / trials);
  CHECK(std::fabs(diff) <= 3.0 * std::max(se, 1e-4));
}

TEST_CASE("report files") {
  ExperimentConfig cfg;
  cfg.name = "files";
  cfg.type_spec.kind = "all_p_cycles";
  cfg.type_spec.p = 3;
  cfg.n = 300;
  cfg.trials = 4;
  cfg.seed = 9;
  const ExperimentReport rep = run_shape_experiment(cfg, 1);
  const std::string dir = std::filesystem::temp_directory_path() / "cyclegeo_report_test";
  std::filesystem::remove_all(dir);
  write_report(rep, dir);
  CHECK(std::filesystem::exists(dir + "/raw.csv"));
  CHECK(std::filesystem::exists(dir + "/summary.json"));
  CHECK(std::filesystem::exists(dir + "/plot.svg"));
  std::ifstream raw(dir + "/raw.csv");
  std::string header;
  std::getline(raw, header);
  CHECK(header.rfind("trial,", 0) == 0);
  std::ifstream sum(dir + "/summary.json");
  const json parsed = json::parse(sum);
  CHECK(parsed.at("trials").get<long long>() == 4);
  std::filesystem::remove_all(dir);
}

TEST_CASE("a broken sampler is caught by the uniformity test") {
  // The canonical permutation without random conjugation is a point mass;
  // the chi-square machinery the suite gates on must reject it.
  const CycleType t = from_counts({1, 0, 1});
  std::vector<Perm> degenerate(5000, Perm{1, 3, 4, 2});
  CHECK(cycle_type_of(degenerate[0]) == t);
  CHECK(chi_square_uniformity(degenerate, t) < 1e-9);
}
