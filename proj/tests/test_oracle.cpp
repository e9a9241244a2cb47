#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "cyclegeo/oracle.hpp"
#include "cyclegeo/stats.hpp"

using namespace cyclegeo;

TEST_CASE("enumerate_class") {
  CHECK(enumerate_class(from_counts({3})) ==
        std::vector<Perm>{Perm{1, 2, 3}});
  CHECK(enumerate_class(from_counts({1, 0, 1})).size() == 8);
  CHECK(enumerate_class(from_counts({0, 0, 0, 0, 1})).size() == 24);
  // Lexicographic output order.
  const auto cls = enumerate_class(from_counts({0, 2}));
  REQUIRE(cls.size() == 3);
  CHECK(std::is_sorted(cls.begin(), cls.end()));
  CHECK_THROWS(enumerate_class(all_p_cycles(10, 2)));
}

TEST_CASE("class_size") {
  CHECK(class_size(from_counts({3})) == 1);
  CHECK(class_size(from_counts({1, 0, 1})) == 8);
  CHECK(class_size(from_counts({0, 0, 0, 0, 1})) == 24);
  CHECK(class_size(all_p_cycles(8, 2)) == 105);
}

TEST_CASE("brute_lds_k") {
  Perm id(6), rev(6);
  std::iota(id.begin(), id.end(), 1);
  for (int i = 0; i < 6; ++i) rev[static_cast<std::size_t>(i)] = 6 - i;
  CHECK(brute_lds_k(id, 3) == 3);
  for (long long k = 1; k <= 4; ++k) CHECK(brute_lds_k(rev, k) == 6);
  CHECK(brute_lds_k(Perm{2, 1, 4, 3}, 1) == 2);
  CHECK(brute_lds_k(Perm{2, 1, 4, 3}, 2) == 4);
  CHECK(brute_lds_k(id, 0) == 0);
}

TEST_CASE("exact_statistic_distribution") {
  const ExactDistribution hrec = exact_statistic_distribution(from_counts({4}), "hrec");
  REQUIRE(hrec.support.size() == 1);
  CHECK(hrec.support[0].first == 4);
  CHECK(hrec.support[0].second == 1);

  const ExactDistribution lis2 = exact_statistic_distribution(from_counts({0, 1}), "lis");
  REQUIRE(lis2.support.size() == 1);
  CHECK(lis2.support[0].first == 1);

  const ExactDistribution lds3 =
      exact_statistic_distribution(from_counts({0, 0, 1}), "lds");
  REQUIRE(lds3.support.size() == 1);
  CHECK(lds3.support[0].first == 2);

  // Probabilities always sum to exactly 1.
  for (const char* stat : {"lis", "lds", "hrec", "lrec", "lds_k:2", "pattern:21"}) {
    const ExactDistribution d =
        exact_statistic_distribution(from_counts({1, 0, 1}), stat);
    Rational total = 0;
    for (const auto& [v, p] : d.support) total += p;
    CHECK(total == 1);
  }
  CHECK_THROWS(exact_statistic_distribution(from_counts({4}), "nonsense"));
}

TEST_CASE("chi_square_uniformity calibration") {
  // Fisher-Yates over the enumerated class is uniform by construction;
  // the test should reject at p < 1e-3 in well under 1% of meta-trials.
  const CycleType t = from_counts({1, 1});
  const auto cls = enumerate_class(t);
  Rng rng(99);
  int rejects = 0;
  for (int meta = 0; meta < 200; ++meta) {
    std::vector<Perm> samples;
    samples.reserve(3000);
    for (int i = 0; i < 3000; ++i)
      samples.push_back(cls[rng.next_below(cls.size())]);
    if (chi_square_uniformity(samples, t) < 1e-3) ++rejects;
  }
  CHECK(rejects <= 1);

  // Constant samples are rejected outright.
  std::vector<Perm> constant(2000, cls[0]);
  CHECK(chi_square_uniformity(constant, t) < 1e-9);

  // Size-1 class: p = 1 by convention.
  std::vector<Perm> ids(100, Perm{1, 2, 3});
  CHECK(chi_square_uniformity(ids, from_counts({3})) == 1.0);
}

TEST_CASE("two sample chi square") {
  const CycleType t = from_counts({0, 2});
  const auto cls = enumerate_class(t);
  Rng rng(101);
  std::vector<Perm> a, b, c;
  for (int i = 0; i < 20000; ++i) a.push_back(cls[rng.next_below(cls.size())]);
  for (int i = 0; i < 20000; ++i) b.push_back(cls[rng.next_below(cls.size())]);
  for (int i = 0; i < 20000; ++i) c.push_back(cls[rng.next_below(2)]);  // biased
  CHECK(chi_square_two_sample(a, b, t) > 1e-3);
  CHECK(chi_square_two_sample(a, c, t) < 1e-6);
}

TEST_CASE("ks statistic") {
  auto uniform01 = [](double x) { return x < 0 ? 0.0 : x > 1 ? 1.0 : x; };
  CHECK(ks_statistic({0.5}, uniform01) == doctest::Approx(0.5).epsilon(1e-12));
  Rng rng(103);
  std::vector<double> samples;
  samples.reserve(10000);
  for (int i = 0; i < 10000; ++i) samples.push_back(rng.next_double());
  CHECK(ks_statistic(samples, uniform01) < 1.95 / 100.0);
  // Degenerate step cdf against its own point mass.
  auto step = [](double x) { return x < 2.0 ? 0.0 : 1.0; };
  CHECK(ks_statistic(std::vector<double>(50, 2.0), step) == 0.0);
}
