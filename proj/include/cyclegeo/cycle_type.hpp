#ifndef CYCLEGEO_CYCLE_TYPE_HPP_
#define CYCLEGEO_CYCLE_TYPE_HPP_

#include <string>
#include <vector>

#include "cyclegeo/rng.hpp"

namespace cyclegeo {

// Conjugacy-class label: counts[p-1] is the number of p-cycles.
// Trailing zeros are trimmed; the size n is always sum of p * t_p.
struct CycleType {
  std::vector<long long> counts;

  long long n() const {
    long long total = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
      total += static_cast<long long>(i + 1) * counts[i];
    return total;
  }

  long long count(long long p) const {
    if (p < 1 || static_cast<std::size_t>(p) > counts.size()) return 0;
    return counts[static_cast<std::size_t>(p - 1)];
  }

  bool operator==(const CycleType& other) const { return counts == other.counts; }
};

CycleType from_counts(std::vector<long long> counts);

// ť: same counts with t_1 zeroed, size ň = n - t_1.
CycleType remove_fixed_points(const CycleType& t);

// t_p = n/p; requires p | n.
CycleType all_p_cycles(long long n, long long p);

// t_1 = fixed, t_2 = (n - fixed)/2; requires matching parity.
CycleType involution_type(long long n, long long fixed);

// Cycle type of an Ewens(theta) permutation of [n], sampled by the
// sequential Chinese-restaurant construction.
CycleType ewens_type(long long n, double theta, Rng& rng);

// "1,2,1,1" <-> CycleType, used by the CLI and file formats.
CycleType parse_cycle_type(const std::string& spec);
std::string format_cycle_type(const CycleType& t);

}  // namespace cyclegeo

#endif  // CYCLEGEO_CYCLE_TYPE_HPP_
