#include "cyclegeo/cycle_type.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclegeo {

namespace {

void trim_trailing_zeros(std::vector<long long>& counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
}

}  // namespace

CycleType from_counts(std::vector<long long> counts) {
  for (long long c : counts)
    if (c < 0) throw std::invalid_argument("cycle counts must be non-negative");
  trim_trailing_zeros(counts);
  return CycleType{std::move(counts)};
}

CycleType remove_fixed_points(const CycleType& t) {
  std::vector<long long> counts = t.counts;
  if (!counts.empty()) counts[0] = 0;
  trim_trailing_zeros(counts);
  return CycleType{std::move(counts)};
}

CycleType all_p_cycles(long long n, long long p) {
  if (p < 1 || n < 0 || n % p != 0)
    throw std::invalid_argument("all_p_cycles: p must divide n");
  std::vector<long long> counts(static_cast<std::size_t>(p), 0);
  if (n > 0) counts[static_cast<std::size_t>(p - 1)] = n / p;
  return from_counts(std::move(counts));
}

CycleType involution_type(long long n, long long fixed) {
  if (fixed < 0 || fixed > n || (n - fixed) % 2 != 0)
    throw std::invalid_argument("involution_type: n - fixed must be even and 0 <= fixed <= n");
  std::vector<long long> counts = {fixed, (n - fixed) / 2};
  return from_counts(std::move(counts));
}

CycleType ewens_type(long long n, double theta, Rng& rng) {
  if (theta <= 0) throw std::invalid_argument("ewens_type: theta must be positive");
  if (n < 0) throw std::invalid_argument("ewens_type: n must be non-negative");
  // Chinese restaurant process: customer i+1 opens a new table with
  // probability theta/(theta+i), otherwise joins a table proportionally
  // to its occupancy.
  std::vector<long long> tables;
  long long seated = 0;
  for (long long i = 0; i < n; ++i) {
    const double u = rng.next_double() * (theta + static_cast<double>(seated));
    if (u < theta || tables.empty()) {
      tables.push_back(1);
    } else {
      double acc = theta;
      std::size_t j = 0;
      for (; j + 1 < tables.size(); ++j) {
        acc += static_cast<double>(tables[j]);
        if (u < acc) break;
      }
      ++tables[j];
    }
    ++seated;
  }
  std::vector<long long> counts(static_cast<std::size_t>(n), 0);
  for (long long size : tables) ++counts[static_cast<std::size_t>(size - 1)];
  return from_counts(std::move(counts));
}

CycleType parse_cycle_type(const std::string& spec) {
  std::vector<long long> counts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    counts.push_back(std::stoll(item));
  }
  return from_counts(std::move(counts));
}

std::string format_cycle_type(const CycleType& t) {
  std::string out;
  for (std::size_t i = 0; i < t.counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t.counts[i]);
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace cyclegeo
