#ifndef CYCLEGEO_ORACLE_HPP_
#define CYCLEGEO_ORACLE_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <string>
#include <vector>

#include "cyclegeo/cycle_type.hpp"
#include "cyclegeo/geometry.hpp"

namespace cyclegeo {

using Rational = boost::multiprecision::cpp_rational;

// All permutations of [n] with cycle type t, lexicographic one-line
// order. Enumeration over S_n, so n <= 9.
std::vector<Perm> enumerate_class(const CycleType& t);

// n! / prod_p p^{t_p} t_p!.
boost::multiprecision::cpp_int class_size(const CycleType& t);

// Max size of a subset whose induced pattern has LIS <= k (Dilworth
// formulation of a union of k decreasing subsequences). n <= 15.
long long brute_lds_k(const Perm& perm, long long k);

// Exact law of a statistic under the uniform measure on the class.
// Supported names: lis, lds, hrec, lrec, lds_k:K, pattern:ONELINE.
struct ExactDistribution {
  std::vector<std::pair<long long, Rational>> support;  // (value, probability)
};

ExactDistribution exact_statistic_distribution(const CycleType& t,
                                               const std::string& statistic);

// Pearson chi-square of the samples against uniform over the class.
double chi_square_uniformity(const std::vector<Perm>& samples, const CycleType& t);

// Two-sample chi-square over class cells; tests equality of laws.
double chi_square_two_sample(const std::vector<Perm>& a, const std::vector<Perm>& b,
                             const CycleType& t);

// Generic Pearson test helper: observed counts vs expected counts.
double chi_square_pvalue(const std::vector<double>& observed,
                         const std::vector<double>& expected);

// sup |empirical CDF - cdf| over sample points (both one-sided gaps).
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

}  // namespace cyclegeo

#endif  // CYCLEGEO_ORACLE_HPP_
