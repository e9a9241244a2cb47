#include "cyclegeo/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclegeo {

IndexV canonical_shift(const CycleType& t, const IndexV& idx) {
  if (idx.p < 1 || idx.l < 1 || idx.l > idx.p || idx.k < 1 || idx.k > t.count(idx.p))
    throw std::invalid_argument("canonical_shift: index out of range for cycle type");
  return IndexV{idx.p, idx.k, idx.l % idx.p + 1};
}

PointSet::PointSet(CycleType t, std::vector<double> u)
    : type_(std::move(t)), u_(std::move(u)) {
  const long long n = type_.n();
  if (static_cast<long long>(u_.size()) != n)
    throw std::invalid_argument("PointSet: value count does not match cycle type size");
  shift_.resize(u_.size());
  cycle_len_.resize(u_.size());
  std::size_t base = 0;
  for (long long p = 1; p <= static_cast<long long>(type_.counts.size()); ++p) {
    for (long long k = 0; k < type_.count(p); ++k) {
      for (long long l = 0; l < p; ++l) {
        shift_[base + l] = base + (l + 1) % p;
        cycle_len_[base + l] = p;
      }
      base += static_cast<std::size_t>(p);
    }
  }
}

IndexV PointSet::index_of(std::size_t i) const {
  std::size_t base = 0;
  for (long long p = 1; p <= static_cast<long long>(type_.counts.size()); ++p) {
    const std::size_t block = static_cast<std::size_t>(p * type_.count(p));
    if (i < base + block) {
      const std::size_t off = i - base;
      return IndexV{p, static_cast<long long>(off / p) + 1,
                    static_cast<long long>(off % p) + 1};
    }
    base += block;
  }
  throw std::out_of_range("PointSet::index_of");
}

std::size_t PointSet::flat_of(const IndexV& idx) const {
  if (idx.p < 1 || idx.k < 1 || idx.k > type_.count(idx.p) || idx.l < 1 || idx.l > idx.p)
    throw std::out_of_range("PointSet::flat_of");
  std::size_t base = 0;
  for (long long p = 1; p < idx.p; ++p)
    base += static_cast<std::size_t>(p * type_.count(p));
  return base + static_cast<std::size_t>((idx.k - 1) * idx.p + (idx.l - 1));
}

PointSet sample_point_set(const CycleType& t, Rng& rng) {
  const std::size_t n = static_cast<std::size_t>(t.n());
  std::vector<double> u(n), sorted(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) u[i] = rng.next_double();
    sorted = u;
    std::sort(sorted.begin(), sorted.end());
    // Collision: resample the whole set so the law stays exchangeable.
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) break;
  }
  return PointSet(t, std::move(u));
}

Perm standardize(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values[a] < values[b]; });
  Perm result(n);
  for (std::size_t rank = 0; rank < n; ++rank) {
    if (rank > 0 && values[order[rank]] == values[order[rank - 1]])
      throw std::invalid_argument("standardize: duplicate values");
    result[order[rank]] = static_cast<int>(rank) + 1;
  }
  return result;
}

Perm perm_of_points(const std::vector<Point>& points) {
  const std::size_t n = points.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return points[a].x < points[b].x; });
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && points[order[i]].x == points[order[i - 1]].x)
      throw std::invalid_argument("perm_of_points: duplicate x-coordinate");
    ys[i] = points[order[i]].y;
  }
  return standardize(ys);
}

Perm perm_of_point_set(const PointSet& ps) {
  const std::size_t n = ps.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return ps.value(a) < ps.value(b); });
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = ps.value(ps.shift(order[i]));
  return standardize(ys);
}

Perm sample_t_cyclic(const CycleType& t, Rng& rng) {
  return perm_of_point_set(sample_point_set(t, rng));
}

Perm conjugate_uniform_sampler(const CycleType& t, Rng& rng) {
  const std::size_t n = static_cast<std::size_t>(t.n());
  // Canonical t-cyclic permutation on [n]: cycles laid out consecutively.
  std::vector<std::size_t> shift(n);
  std::size_t base = 0;
  for (long long p = 1; p <= static_cast<long long>(t.counts.size()); ++p) {
    for (long long k = 0; k < t.count(p); ++k) {
      for (long long l = 0; l < p; ++l)
        shift[base + l] = base + (l + 1) % p;
      base += static_cast<std::size_t>(p);
    }
  }
  // Fisher-Yates sigma.
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  for (std::size_t i = n; i > 1; --i)
    std::swap(sigma[i - 1], sigma[rng.next_below(i)]);
  Perm tau(n);
  for (std::size_t i = 0; i < n; ++i)
    tau[sigma[i]] = static_cast<int>(sigma[shift[i]]) + 1;
  return tau;
}

CycleType cycle_type_of(const Perm& perm) {
  const std::size_t n = perm.size();
  std::vector<long long> counts(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t j = i;
    long long len = 0;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(perm[j] - 1);
      ++len;
    }
    ++counts[static_cast<std::size_t>(len - 1)];
  }
  return from_counts(std::move(counts));
}

std::pair<std::vector<Point>, PointSet> split_diagonal(const PointSet& ps) {
  const long long t1 = ps.type().count(1);
  std::vector<Point> diagonal;
  diagonal.reserve(static_cast<std::size_t>(t1));
  // Flat order is p ascending, so fixed points occupy the prefix.
  for (long long i = 0; i < t1; ++i)
    diagonal.push_back(ps.point(static_cast<std::size_t>(i)));
  std::vector<double> rest(ps.size() - static_cast<std::size_t>(t1));
  for (std::size_t i = static_cast<std::size_t>(t1); i < ps.size(); ++i)
    rest[i - static_cast<std::size_t>(t1)] = ps.value(i);
  return {std::move(diagonal), PointSet(remove_fixed_points(ps.type()), std::move(rest))};
}

std::array<std::vector<Point>, 3> tripartition(const PointSet& ps) {
  const CycleType& t = ps.type();
  if (t.count(1) != 0)
    throw std::invalid_argument("tripartition: cycle type must be fixed-point-free");
  std::array<std::vector<Point>, 3> parts;
  std::array<long long, 3> sizes = {0, 0, 0};

  auto smallest = [&]() {
    return static_cast<int>(std::min_element(sizes.begin(), sizes.end()) - sizes.begin());
  };
  auto largest = [&]() {
    return static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  };

  // Cycles in decreasing p; points of each cycle assigned by alternation
  // so no part ever holds two cyclically adjacent points.
  std::size_t base_of_p = 0;
  std::vector<std::size_t> bases(t.counts.size() + 1, 0);
  for (std::size_t p = 1; p <= t.counts.size(); ++p) {
    bases[p] = base_of_p;
    base_of_p += static_cast<std::size_t>(p) * static_cast<std::size_t>(t.count(static_cast<long long>(p)));
  }
  for (long long p = static_cast<long long>(t.counts.size()); p >= 2; --p) {
    for (long long k = 0; k < t.count(p); ++k) {
      const std::size_t base = bases[static_cast<std::size_t>(p)] +
                               static_cast<std::size_t>(k * p);
      std::array<int, 3> label;  // label[j] = part receiving alternation slot j
      if (p % 3 == 1) {
        // Positions 1..p-1 alternate, position p goes to the surplus
        // part label[1]; route the surplus to the smallest part.
        const int surplus = smallest();
        label = {(surplus + 1) % 3, surplus, (surplus + 2) % 3};
        for (long long l = 0; l < p - 1; ++l) {
          const int part = label[static_cast<std::size_t>(l % 3)];
          parts[part].push_back(ps.point(base + static_cast<std::size_t>(l)));
          ++sizes[part];
        }
        parts[label[1]].push_back(ps.point(base + static_cast<std::size_t>(p - 1)));
        ++sizes[label[1]];
      } else if (p % 3 == 2) {
        // Plain alternation; slot 2 is short by one, so point the
        // deficit at the largest part.
        const int deficit = largest();
        label = {(deficit + 1) % 3, (deficit + 2) % 3, deficit};
        for (long long l = 0; l < p; ++l) {
          const int part = label[static_cast<std::size_t>(l % 3)];
          parts[part].push_back(ps.point(base + static_cast<std::size_t>(l)));
          ++sizes[part];
        }
      } else {
        label = {0, 1, 2};
        for (long long l = 0; l < p; ++l) {
          const int part = label[static_cast<std::size_t>(l % 3)];
          parts[part].push_back(ps.point(base + static_cast<std::size_t>(l)));
          ++sizes[part];
        }
      }
    }
  }
  return parts;
}

std::vector<Point> restrict_box(const PointSet& ps, double x0, double x1,
                                double y0, double y1) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Point z = ps.point(i);
    if (z.x >= x0 && z.x <= x1 && z.y >= y0 && z.y <= y1) out.push_back(z);
  }
  std::sort(out.begin(), out.end(),
            [](const Point& a, const Point& b) { return a.x < b.x; });
  return out;
}

DependencyGraph build_dependency_graph(const CycleType& t) {
  DependencyGraph g;
  g.num_vertices = static_cast<std::size_t>(t.n());
  std::size_t base = 0;
  for (long long p = 1; p <= static_cast<long long>(t.counts.size()); ++p) {
    for (long long k = 0; k < t.count(p); ++k) {
      for (long long l = 0; l < p && p >= 2; ++l) {
        std::size_t a = base + static_cast<std::size_t>(l);
        std::size_t b = base + static_cast<std::size_t>((l + 1) % p);
        if (a > b) std::swap(a, b);
        g.edges.emplace_back(a, b);
      }
      base += static_cast<std::size_t>(p);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

}  // namespace cyclegeo
