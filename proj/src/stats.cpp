#include "cyclegeo/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cyclegeo {

namespace {

bool is_permutation_of_range(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 1 || static_cast<std::size_t>(v) > p.size() || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

int lis_of_values(const std::vector<int>& values) {
  std::vector<int> tails;
  for (int v : values) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end())
      tails.push_back(v);
    else
      *it = v;
  }
  return static_cast<int>(tails.size());
}

// Merge-sort inversion count.
BigInt count_inversions(std::vector<int>& a, std::vector<int>& buf, std::size_t lo,
                        std::size_t hi) {
  if (hi - lo <= 1) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  BigInt inv = count_inversions(a, buf, lo, mid) + count_inversions(a, buf, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[i] <= a[j])
      buf[k++] = a[i++];
    else {
      inv += static_cast<long long>(mid - i);
      buf[k++] = a[j++];
    }
  }
  while (i < mid) buf[k++] = a[i++];
  while (j < hi) buf[k++] = a[j++];
  std::copy(buf.begin() + static_cast<long long>(lo), buf.begin() + static_cast<long long>(hi),
            a.begin() + static_cast<long long>(lo));
  return inv;
}

}  // namespace

int lis(const Perm& perm) { return lis_of_values(perm); }

int lds(const Perm& perm) {
  std::vector<int> reversed(perm.rbegin(), perm.rend());
  return lis_of_values(reversed);
}

YoungDiagram rs_shape(const Perm& perm) {
  std::vector<std::vector<int>> rows;
  for (int x : perm) {
    int v = x;
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({v});
        break;
      }
      auto it = std::upper_bound(rows[r].begin(), rows[r].end(), v);
      if (it == rows[r].end()) {
        rows[r].push_back(v);
        break;
      }
      std::swap(*it, v);  // bump
    }
  }
  YoungDiagram shape;
  shape.rows.reserve(rows.size());
  for (const auto& row : rows) shape.rows.push_back(static_cast<int>(row.size()));
  return shape;
}

std::vector<int> column_lengths(const YoungDiagram& shape) {
  std::vector<int> cols;
  if (shape.rows.empty()) return cols;
  cols.resize(static_cast<std::size_t>(shape.rows.front()), 0);
  for (int row_len : shape.rows)
    for (int c = 0; c < row_len; ++c) ++cols[static_cast<std::size_t>(c)];
  return cols;
}

long long lds_k(const YoungDiagram& shape, long long k) {
  const std::vector<int> cols = column_lengths(shape);
  long long total = 0;
  for (long long c = 0; c < k && c < static_cast<long long>(cols.size()); ++c)
    total += cols[static_cast<std::size_t>(c)];
  return total;
}

long long lds_k(const Perm& perm, long long k) {
  if (k < 0) throw std::invalid_argument("lds_k: k must be non-negative");
  if (k == 0) return 0;
  return lds_k(rs_shape(perm), k);
}

std::vector<double> shape_profile(const Perm& perm, const std::vector<double>& r_grid) {
  const double n = static_cast<double>(perm.size());
  const YoungDiagram shape = rs_shape(perm);
  std::vector<double> out;
  out.reserve(r_grid.size());
  for (double r : r_grid) {
    const long long k = static_cast<long long>(std::floor(r * std::sqrt(n)));
    out.push_back(n > 0 ? static_cast<double>(lds_k(shape, k)) / n : 0.0);
  }
  return out;
}

RecordCounts records(const Perm& perm) {
  RecordCounts rc{0, 0};
  int max_seen = 0, min_seen = static_cast<int>(perm.size()) + 1;
  for (int v : perm) {
    if (v > max_seen) {
      max_seen = v;
      ++rc.high;
    }
    if (v < min_seen) {
      min_seen = v;
      ++rc.low;
    }
  }
  return rc;
}

Perm pattern_of_subset(const Perm& perm, const std::vector<int>& indices) {
  std::vector<int> values;
  values.reserve(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const int idx = indices[i];
    if (idx < 1 || static_cast<std::size_t>(idx) > perm.size() ||
        (i > 0 && indices[i - 1] >= idx))
      throw std::invalid_argument("pattern_of_subset: indices must be sorted and in [1,n]");
    values.push_back(perm[idx - 1]);
  }
  // Rank the extracted values.
  Perm result(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    int rank = 1;
    for (std::size_t j = 0; j < values.size(); ++j)
      if (values[j] < values[i]) ++rank;
    result[i] = rank;
  }
  return result;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt result = 1;
  for (long long i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

BigInt pattern_count(const Perm& perm, const Perm& pattern, bool allow_large) {
  const std::size_t n = perm.size();
  const std::size_t r = pattern.size();
  if (r > n) throw std::invalid_argument("pattern_count: pattern longer than permutation");
  if (!is_permutation_of_range(pattern))
    throw std::invalid_argument("pattern_count: invalid pattern");
  if (r == 0) return 1;
  if (r == 1) return static_cast<long long>(n);
  if (r == 2) {
    std::vector<int> a = perm, buf(n);
    const BigInt inversions = count_inversions(a, buf, 0, n);
    return pattern[0] == 2 ? inversions : binomial(static_cast<long long>(n), 2) - inversions;
  }
  if (r >= 4 && n > 200 && !allow_large)
    throw std::invalid_argument(
        "pattern_count: n > 200 with r >= 4; pass allow_large to override");

  // Subset enumeration over sorted index tuples.
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  BigInt count = 0;
  std::vector<int> values(r);
  for (;;) {
    for (std::size_t i = 0; i < r; ++i) values[i] = perm[idx[i]];
    bool match = true;
    for (std::size_t i = 0; match && i < r; ++i)
      for (std::size_t j = i + 1; match && j < r; ++j)
        if ((values[i] < values[j]) != (pattern[i] < pattern[j])) match = false;
    if (match) ++count;
    // Next combination.
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return count;
}

}  // namespace cyclegeo
