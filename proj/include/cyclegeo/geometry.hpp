#ifndef CYCLEGEO_GEOMETRY_HPP_
#define CYCLEGEO_GEOMETRY_HPP_

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "cyclegeo/cycle_type.hpp"
#include "cyclegeo/rng.hpp"

namespace cyclegeo {

// One-line notation: perm[i] is the image of position i+1, values in [1,n].
using Perm = std::vector<int>;

struct Point {
  double x;
  double y;
};

// Index (p,k,l): l-th position of the k-th p-cycle, all 1-based.
struct IndexV {
  long long p;
  long long k;
  long long l;
  bool operator==(const IndexV& o) const { return p == o.p && k == o.k && l == o.l; }
};

// The canonical shift s : (p,k,l) -> (p,k,l+1 mod p).
IndexV canonical_shift(const CycleType& t, const IndexV& idx);

// Planar point set of a cycle type: one uniform value per index,
// point i = (U_i, U_{s(i)}). Flat order: p ascending, then k, then l.
class PointSet {
 public:
  PointSet(CycleType t, std::vector<double> u);

  std::size_t size() const { return u_.size(); }
  const CycleType& type() const { return type_; }
  double value(std::size_t i) const { return u_[i]; }
  std::size_t shift(std::size_t i) const { return shift_[i]; }
  Point point(std::size_t i) const { return {u_[i], u_[shift_[i]]}; }
  IndexV index_of(std::size_t i) const;
  std::size_t flat_of(const IndexV& idx) const;
  // Cycle length p of the cycle containing flat index i.
  long long cycle_len(std::size_t i) const { return cycle_len_[i]; }

 private:
  CycleType type_;
  std::vector<double> u_;
  std::vector<std::size_t> shift_;
  std::vector<long long> cycle_len_;
};

PointSet sample_point_set(const CycleType& t, Rng& rng);

// st(y_1,...,y_n): tau(i) < tau(j) iff y_i < y_j. Throws on duplicates.
Perm standardize(const std::vector<double>& values);

// Reading permutation of a planar point family: tau(i) = j when the i-th
// point from the left is the j-th from the bottom.
Perm perm_of_points(const std::vector<Point>& points);
Perm perm_of_point_set(const PointSet& ps);

// Uniform t-cyclic permutation via the planar construction.
Perm sample_t_cyclic(const CycleType& t, Rng& rng);

// Independent sampler: sigma from Fisher-Yates, then sigma o s o sigma^-1
// with s the canonical t-cyclic permutation on [n].
Perm conjugate_uniform_sampler(const CycleType& t, Rng& rng);

CycleType cycle_type_of(const Perm& perm);

// P_Delta (the p = 1 points) and the off-diagonal construction of ť.
std::pair<std::vector<Point>, PointSet> split_diagonal(const PointSet& ps);

// Lemma-style balanced 3-coloring: no part contains two cyclically
// adjacent points, sizes within [n/3 - 1, n/3 + 1]. Requires t_1 = 0.
std::array<std::vector<Point>, 3> tripartition(const PointSet& ps);

// Points of ps inside [x0,x1] x [y0,y1], sorted by x.
std::vector<Point> restrict_box(const PointSet& ps, double x0, double x1,
                                double y0, double y1);

struct DependencyGraph {
  std::size_t num_vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // unordered pairs
};

DependencyGraph build_dependency_graph(const CycleType& t);

}  // namespace cyclegeo

#endif  // CYCLEGEO_GEOMETRY_HPP_
