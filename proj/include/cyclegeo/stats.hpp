#ifndef CYCLEGEO_STATS_HPP_
#define CYCLEGEO_STATS_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "cyclegeo/geometry.hpp"

namespace cyclegeo {

using BigInt = boost::multiprecision::cpp_int;

// Weakly decreasing row lengths of the Robinson-Schensted shape.
struct YoungDiagram {
  std::vector<int> rows;
};

// Patience sorting, O(n log n).
int lis(const Perm& perm);
int lds(const Perm& perm);

// Shape only (no recording tableau): row 1 = LIS, column 1 = LDS.
YoungDiagram rs_shape(const Perm& perm);

// Conjugate partition: column lengths.
std::vector<int> column_lengths(const YoungDiagram& shape);

// Greene: total size of the first k columns of the RS shape.
long long lds_k(const Perm& perm, long long k);
long long lds_k(const YoungDiagram& shape, long long k);

// For each r in the grid, LDS_{floor(r*sqrt(n))}(perm) / n.
std::vector<double> shape_profile(const Perm& perm, const std::vector<double>& r_grid);

struct RecordCounts {
  int high;
  int low;
};

RecordCounts records(const Perm& perm);

// Standardized restriction of perm to the sorted index set (1-based).
Perm pattern_of_subset(const Perm& perm, const std::vector<int>& indices);

// Exact occurrence count of the pattern. r = 2 uses inversion counting;
// r >= 3 enumerates r-subsets. For r >= 4 the size cap can be lifted
// with allow_large.
BigInt pattern_count(const Perm& perm, const Perm& pattern, bool allow_large = false);

BigInt binomial(long long n, long long k);

}  // namespace cyclegeo

#endif  // CYCLEGEO_STATS_HPP_
