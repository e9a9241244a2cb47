#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cyclegeo/geometry.hpp"
#include "cyclegeo/oracle.hpp"

using namespace cyclegeo;

TEST_CASE("canonical_shift") {
  const CycleType t = from_counts({2, 0, 1, 0, 2});
  CHECK(canonical_shift(t, {3, 1, 3}) == IndexV{3, 1, 1});
  CHECK(canonical_shift(t, {1, 2, 1}) == IndexV{1, 2, 1});
  CHECK(canonical_shift(t, {5, 2, 2}) == IndexV{5, 2, 3});
  CHECK_THROWS(canonical_shift(t, {4, 1, 1}));
}

TEST_CASE("sample_point_set geometry") {
  Rng rng(7);
  // All-fixed-point type puts every point on the diagonal.
  const PointSet diag = sample_point_set(from_counts({5}), rng);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag.point(i).x == diag.point(i).y);
  }
  // A single 2-cycle gives two mirror points.
  const PointSet two = sample_point_set(from_counts({0, 1}), rng);
  REQUIRE(two.size() == 2);
  CHECK(two.point(0).x == two.point(1).y);
  CHECK(two.point(0).y == two.point(1).x);
  CHECK(two.point(0).x != two.point(0).y);
  // A single n-cycle avoids the diagonal.
  const PointSet cyc = sample_point_set(all_p_cycles(6, 6), rng);
  for (std::size_t i = 0; i < cyc.size(); ++i) CHECK(cyc.point(i).x != cyc.point(i).y);
}

TEST_CASE("standardize") {
  CHECK(standardize({3.1, 0.2, 7.7}) == Perm{2, 1, 3});
  CHECK(standardize({1.0, 2.0, 3.0, 4.0}) == Perm{1, 2, 3, 4});
  CHECK(standardize({4.0, 3.0, 2.0, 1.0}) == Perm{4, 3, 2, 1});
  CHECK_THROWS(standardize({1.0, 1.0}));
}

TEST_CASE("perm_of_points") {
  CHECK(perm_of_points({{0.1, 0.9}, {0.5, 0.2}, {0.8, 0.6}}) == Perm{3, 1, 2});
  CHECK(perm_of_points({{0.3, 0.3}, {0.7, 0.7}}) == Perm{1, 2});
  CHECK(perm_of_points({{0.2, 0.8}, {0.8, 0.2}}) == Perm{2, 1});
}

TEST_CASE("samplers hit the class; identity type is deterministic") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    CHECK(sample_t_cyclic(from_counts({4}), rng) == Perm{1, 2, 3, 4});
    CHECK(conjugate_uniform_sampler(from_counts({4}), rng) == Perm{1, 2, 3, 4});
  }
  for (int i = 0; i < 500; ++i) {
    const CycleType t = ewens_type(1 + static_cast<long long>(rng.next_below(40)),
                                   1.0, rng);
    CHECK(cycle_type_of(sample_t_cyclic(t, rng)) == t);
    CHECK(cycle_type_of(conjugate_uniform_sampler(t, rng)) == t);
  }
}

TEST_CASE("sampler uniformity on a small class") {
  // t = (1,0,1): one fixed point and one 3-cycle, 8 class members.
  const CycleType t = from_counts({1, 0, 1});
  CHECK(enumerate_class(t).size() == 8);
  Rng rng(13);
  std::vector<Perm> a, b;
  for (int i = 0; i < 40000; ++i) a.push_back(sample_t_cyclic(t, rng));
  for (int i = 0; i < 40000; ++i) b.push_back(conjugate_uniform_sampler(t, rng));
  CHECK(chi_square_uniformity(a, t) > 1e-3);
  CHECK(chi_square_uniformity(b, t) > 1e-3);
  CHECK(chi_square_two_sample(a, b, t) > 1e-3);
}

TEST_CASE("split_diagonal") {
  Rng rng(17);
  const CycleType t = from_counts({2, 1});
  for (int i = 0; i < 200; ++i) {
    const auto [diag, rest] = split_diagonal(sample_point_set(t, rng));
    CHECK(diag.size() == 2);
    CHECK(rest.size() == 2);
    CHECK(rest.type() == from_counts({0, 1}));
    CHECK(cycle_type_of(perm_of_point_set(rest)) == from_counts({0, 1}));
  }
  const auto [empty_diag, all] = split_diagonal(sample_point_set(from_counts({0, 3}), rng));
  CHECK(empty_diag.empty());
  CHECK(all.size() == 6);
}

TEST_CASE("tripartition sizes") {
  Rng rng(19);
  for (int i = 0; i < 100; ++i) {
    const auto parts = tripartition(sample_point_set(all_p_cycles(12, 3), rng));
    CHECK(parts[0].size() == 4);
    CHECK(parts[1].size() == 4);
    CHECK(parts[2].size() == 4);
  }
  for (int i = 0; i < 100; ++i) {
    const auto parts = tripartition(sample_point_set(from_counts({0, 2, 1}), rng));
    std::vector<std::size_t> sizes = {parts[0].size(), parts[1].size(), parts[2].size()};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{2, 2, 3});
  }
  CHECK_THROWS(tripartition(sample_point_set(from_counts({1, 0, 1}), rng)));
}

TEST_CASE("tripartition parts are uniform on the square") {
  // 2D chi-square on a 4x4 grid for each part, all-3-cycles, n = 3*10^4.
  Rng rng(23);
  const PointSet ps = sample_point_set(all_p_cycles(30000, 3), rng);
  const auto parts = tripartition(ps);
  for (int q = 0; q < 3; ++q) {
    std::vector<double> observed(16, 0.0);
    for (const Point& z : parts[static_cast<std::size_t>(q)]) {
      const int cx = std::min(3, static_cast<int>(z.x * 4));
      const int cy = std::min(3, static_cast<int>(z.y * 4));
      observed[static_cast<std::size_t>(4 * cx + cy)] += 1;
    }
    const std::vector<double> expected(
        16, static_cast<double>(parts[static_cast<std::size_t>(q)].size()) / 16.0);
    CHECK(chi_square_pvalue(observed, expected) > 1e-3);
  }
}

TEST_CASE("restrict_box") {
  Rng rng(29);
  const PointSet ps = sample_point_set(all_p_cycles(40, 2), rng);
  CHECK(restrict_box(ps, 0, 1, 0, 1).size() == 40);
  CHECK(restrict_box(ps, 0.3, 0.3, 0, 1).empty());
  const auto box = restrict_box(ps, 0.0, 0.5, 0.5, 1.0);
  for (std::size_t i = 0; i < box.size(); ++i) {
    CHECK(box[i].x <= 0.5);
    CHECK(box[i].y >= 0.5);
    if (i > 0) CHECK(box[i - 1].x < box[i].x);
  }

  // Mean count over the quarter box is n/4 (within sampling error).
  const long long n = 10000, trials = 1000;
  double sum = 0, sumsq = 0;
  for (long long i = 0; i < trials; ++i) {
    const PointSet big = sample_point_set(all_p_cycles(n, 2), rng);
    const double c = static_cast<double>(restrict_box(big, 0.0, 0.5, 0.5, 1.0).size());
    sum += c;
    sumsq += c * c;
  }
  const double mean = sum / trials;
  const double sd = std::sqrt((sumsq / trials - mean * mean) * trials / (trials - 1));
  CHECK(std::fabs(mean - n / 4.0) <= 3.0 * sd / std::sqrt(static_cast<double>(trials)));
}

TEST_CASE("dependency graph") {
  const DependencyGraph fig = build_dependency_graph(from_counts({2, 1, 2, 0, 1}));
  CHECK(fig.num_vertices == 15);
  CHECK(fig.edges.size() == 12);  // one pair edge + two triangles + one pentagon
  const DependencyGraph id = build_dependency_graph(from_counts({6}));
  CHECK(id.num_vertices == 6);
  CHECK(id.edges.empty());
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const CycleType t = ewens_type(2 + static_cast<long long>(rng.next_below(30)), 1.5, rng);
    const DependencyGraph g = build_dependency_graph(t);
    std::vector<int> deg(g.num_vertices, 0);
    for (const auto& [a, b] : g.edges) {
      CHECK(a != b);
      ++deg[a];
      ++deg[b];
    }
    for (int d : deg) CHECK(d <= 2);
  }
}
