#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclegeo/cycle_type.hpp"

using namespace cyclegeo;

TEST_CASE("from_counts sizes") {
  CHECK(from_counts({2, 1}).n() == 4);
  CHECK(from_counts({2, 1}).count(1) == 2);
  CHECK(from_counts({2, 1}).count(2) == 1);
  CHECK(from_counts({0, 0, 2}).n() == 6);
  CHECK(from_counts({1, 2, 1, 1}).n() == 12);
  CHECK(from_counts({1, 0, 0, 0}).counts.size() == 1);  // trailing zeros trimmed
  CHECK_THROWS(from_counts({-1}));
}

TEST_CASE("remove_fixed_points") {
  const CycleType a = remove_fixed_points(from_counts({2, 1}));
  CHECK(a == from_counts({0, 1}));
  CHECK(a.n() == 2);
  CHECK(remove_fixed_points(from_counts({0, 3})) == from_counts({0, 3}));
  const CycleType b = remove_fixed_points(from_counts({1, 2, 1, 1}));
  CHECK(b == from_counts({0, 2, 1, 1}));
  CHECK(b.n() == 11);
  CHECK(remove_fixed_points(b) == b);
}

TEST_CASE("all_p_cycles") {
  CHECK(all_p_cycles(6, 2) == from_counts({0, 3}));
  CHECK(all_p_cycles(6, 3) == from_counts({0, 0, 2}));
  CHECK(all_p_cycles(6, 6).count(6) == 1);
  CHECK(all_p_cycles(6, 6).n() == 6);
  CHECK_THROWS(all_p_cycles(7, 2));
}

TEST_CASE("involution_type") {
  CHECK(involution_type(10, 0) == from_counts({0, 5}));
  CHECK(involution_type(10, 4) == from_counts({4, 3}));
  CHECK_THROWS(involution_type(9, 4));
}

TEST_CASE("ewens_type basics") {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    CHECK(ewens_type(1, 0.5 + rng.next_double(), rng) == from_counts({1}));
  }
  // P(identity type) = theta^3 / ((theta+1)(theta+2)(theta+3)) at n = 4,
  // monotone increasing to 1 in theta.
  const CycleType id4 = from_counts({4});
  double prev = 0.0;
  for (double theta : {1.0, 10.0, 100.0}) {
    int hits = 0;
    const int trials = 20000;
    for (int i = 0; i < trials; ++i)
      if (ewens_type(4, theta, rng) == id4) ++hits;
    const double freq = static_cast<double>(hits) / trials;
    const double exact =
        theta * theta * theta / ((theta + 1) * (theta + 2) * (theta + 3));
    CHECK(freq == doctest::Approx(exact).epsilon(0.15));
    CHECK(freq > prev);
    prev = freq;
  }
}

TEST_CASE("parse and format round trip") {
  const CycleType t = parse_cycle_type("1,2,1,1");
  CHECK(t == from_counts({1, 2, 1, 1}));
  CHECK(format_cycle_type(t) == "1,2,1,1");
  CHECK(parse_cycle_type(format_cycle_type(all_p_cycles(12, 3))) == all_p_cycles(12, 3));
  CHECK_THROWS(parse_cycle_type("1,x"));
}
