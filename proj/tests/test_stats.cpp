#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "cyclegeo/stats.hpp"

using namespace cyclegeo;

namespace {
Perm identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}
Perm reversal(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - i;
  return p;
}
}  // namespace

TEST_CASE("lis and lds") {
  CHECK(lis(identity(7)) == 7);
  CHECK(lis(reversal(7)) == 1);
  CHECK(lis(Perm{3, 1, 2, 5, 4}) == 3);
  CHECK(lds(reversal(6)) == 6);
  CHECK(lds(identity(6)) == 1);
  CHECK(lds(Perm{3, 1, 2, 5, 4}) == 2);
}

TEST_CASE("rs_shape") {
  CHECK(rs_shape(identity(3)).rows == std::vector<int>{3});
  CHECK(rs_shape(reversal(3)).rows == std::vector<int>{1, 1, 1});
  CHECK(rs_shape(Perm{2, 1, 3}).rows == std::vector<int>{2, 1});
  CHECK(column_lengths(YoungDiagram{{3, 1}}) == std::vector<int>{2, 1, 1});
}

TEST_CASE("lds_k") {
  CHECK(lds_k(identity(5), 2) == 2);
  CHECK(lds_k(reversal(5), 1) == 5);
  CHECK(lds_k(Perm{2, 1, 4, 3}, 0) == 0);
  CHECK(lds_k(Perm{2, 1, 4, 3}, 1) == 2);
  CHECK(lds_k(Perm{2, 1, 4, 3}, 2) == 4);
  CHECK(lds_k(identity(5), 99) == 5);
}

TEST_CASE("shape_profile") {
  const Perm p = Perm{2, 1, 4, 3, 6, 5, 8, 7, 9};
  const auto prof = shape_profile(p, {0.0, 5.0});
  CHECK(prof[0] == 0.0);
  CHECK(prof[1] == 1.0);
  // Monotone nondecreasing in r.
  const auto grid = shape_profile(p, {0.2, 0.4, 0.6, 0.8, 1.0, 1.5, 2.0});
  for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] >= grid[i - 1]);
}

TEST_CASE("records") {
  CHECK(records(identity(5)).high == 5);
  CHECK(records(identity(5)).low == 1);
  CHECK(records(reversal(5)).high == 1);
  CHECK(records(reversal(5)).low == 5);
  CHECK(records(Perm{2, 1, 3}).high == 2);
  CHECK(records(Perm{2, 1, 3}).low == 2);
}

TEST_CASE("pattern_of_subset") {
  const Perm tau = {3, 1, 4, 2};
  CHECK(pattern_of_subset(tau, {1, 2, 3, 4}) == tau);
  CHECK(pattern_of_subset(tau, {2}) == Perm{1});
  CHECK(pattern_of_subset(tau, {1, 3}) == Perm{1, 2});
  CHECK_THROWS(pattern_of_subset(tau, {3, 1}));
  CHECK_THROWS(pattern_of_subset(tau, {1, 5}));
}

TEST_CASE("pattern_count") {
  CHECK(pattern_count(identity(10), Perm{1, 2}) == binomial(10, 2));
  CHECK(pattern_count(reversal(10), Perm{2, 1}) == binomial(10, 2));
  CHECK(pattern_count(Perm{2, 3, 1}, Perm{2, 3, 1}) == 1);
  CHECK(pattern_count(Perm{2, 3, 1}, Perm{3, 2, 1}) == 0);
  // Inversions of a known small case: (3,1,4,2) has inversions {31,32,42}.
  CHECK(pattern_count(Perm{3, 1, 4, 2}, Perm{2, 1}) == 3);
  CHECK(pattern_count(identity(3), Perm{1, 2, 3}) == 1);
  // C(n,r) leaves the 64-bit range at n = 10^6, r = 3.
  CHECK(binomial(1000000, 3) == BigInt(1000000) * 999999 * 999998 / 6);
  CHECK_THROWS(pattern_count(identity(300), Perm{2, 1, 4, 3}));
  CHECK(pattern_count(identity(300), Perm{1, 2, 3, 4}, true) == binomial(300, 4));
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(52, 26) == BigInt("495918532948104"));
}
