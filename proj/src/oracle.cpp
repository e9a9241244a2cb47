#include "cyclegeo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cyclegeo/numerics.hpp"
#include "cyclegeo/stats.hpp"

namespace cyclegeo {

std::vector<Perm> enumerate_class(const CycleType& t) {
  const long long n = t.n();
  if (n > 9) throw std::invalid_argument("enumerate_class: n must be <= 9");
  Perm perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Perm> out;
  do {
    if (cycle_type_of(perm) == t) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

boost::multiprecision::cpp_int class_size(const CycleType& t) {
  boost::multiprecision::cpp_int size = 1;
  for (long long i = 2; i <= t.n(); ++i) size *= i;
  for (long long p = 1; p <= static_cast<long long>(t.counts.size()); ++p) {
    for (long long k = 0; k < t.count(p); ++k) size /= p;
    for (long long k = 2; k <= t.count(p); ++k) size /= k;
  }
  return size;
}

long long brute_lds_k(const Perm& perm, long long k) {
  const std::size_t n = perm.size();
  if (n > 15) throw std::invalid_argument("brute_lds_k: n must be <= 15");
  if (k <= 0) return 0;
  long long best = 0;
  std::vector<int> values;
  values.reserve(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    values.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) values.push_back(perm[i]);
    // Union of k decreasing subsequences iff induced LIS <= k (Dilworth).
    std::vector<int> tails;
    for (int v : values) {
      auto it = std::lower_bound(tails.begin(), tails.end(), v);
      if (it == tails.end())
        tails.push_back(v);
      else
        *it = v;
    }
    if (static_cast<long long>(tails.size()) <= k) best = size;
  }
  return best;
}

namespace {

long long evaluate_statistic(const Perm& perm, const std::string& statistic) {
  if (statistic == "lis") return lis(perm);
  if (statistic == "lds") return lds(perm);
  if (statistic == "hrec") return records(perm).high;
  if (statistic == "lrec") return records(perm).low;
  if (statistic.rfind("lds_k:", 0) == 0)
    return lds_k(perm, std::stoll(statistic.substr(6)));
  if (statistic.rfind("pattern:", 0) == 0) {
    const std::string one_line = statistic.substr(8);
    Perm pattern;
    for (char c : one_line) pattern.push_back(c - '0');
    return static_cast<long long>(pattern_count(perm, pattern));
  }
  throw std::invalid_argument("unknown statistic: " + statistic);
}

}  // namespace

ExactDistribution exact_statistic_distribution(const CycleType& t,
                                               const std::string& statistic) {
  const std::vector<Perm> members = enumerate_class(t);
  std::map<long long, long long> counts;
  for (const Perm& perm : members) ++counts[evaluate_statistic(perm, statistic)];
  ExactDistribution dist;
  const long long total = static_cast<long long>(members.size());
  for (const auto& [value, count] : counts)
    dist.support.emplace_back(value, Rational(count, total));
  return dist;
}

double chi_square_pvalue(const std::vector<double>& observed,
                         const std::vector<double>& expected) {
  if (observed.size() != expected.size() || observed.empty())
    throw std::invalid_argument("chi_square_pvalue: size mismatch");
  double chi2 = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double d = observed[i] - expected[i];
    chi2 += d * d / expected[i];
  }
  return chi_square_tail(chi2, static_cast<double>(observed.size() - 1));
}

namespace {

std::map<Perm, std::size_t> class_cells(const CycleType& t) {
  const std::vector<Perm> members = enumerate_class(t);
  std::map<Perm, std::size_t> cells;
  for (std::size_t i = 0; i < members.size(); ++i) cells[members[i]] = i;
  return cells;
}

}  // namespace

double chi_square_uniformity(const std::vector<Perm>& samples, const CycleType& t) {
  if (t.n() > 7) throw std::invalid_argument("chi_square_uniformity: n must be <= 7");
  const std::map<Perm, std::size_t> cells = class_cells(t);
  if (cells.size() <= 1) return 1.0;
  const double expected =
      static_cast<double>(samples.size()) / static_cast<double>(cells.size());
  if (expected < 5.0)
    throw std::invalid_argument("chi_square_uniformity: expected cell count below 5");
  std::vector<double> observed(cells.size(), 0.0);
  for (const Perm& s : samples) {
    auto it = cells.find(s);
    if (it == cells.end())
      throw std::invalid_argument("chi_square_uniformity: sample outside the class");
    observed[it->second] += 1.0;
  }
  return chi_square_pvalue(observed, std::vector<double>(cells.size(), expected));
}

double chi_square_two_sample(const std::vector<Perm>& a, const std::vector<Perm>& b,
                             const CycleType& t) {
  const std::map<Perm, std::size_t> cells = class_cells(t);
  if (cells.size() <= 1) return 1.0;
  std::vector<double> ca(cells.size(), 0.0), cb(cells.size(), 0.0);
  for (const Perm& s : a) ca[cells.at(s)] += 1.0;
  for (const Perm& s : b) cb[cells.at(s)] += 1.0;
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  const double ka = std::sqrt(nb / na), kb = std::sqrt(na / nb);
  double chi2 = 0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const double total = ca[i] + cb[i];
    if (total == 0) continue;
    const double d = ka * ca[i] - kb * cb[i];
    chi2 += d * d / total;
    ++used;
  }
  return chi_square_tail(chi2, static_cast<double>(used - 1));
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double sup = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    // The lower gap evaluates the cdf just left of the sample, so a jump
    // sitting exactly on a sample point is not counted against the fit.
    const double f_minus =
        cdf(std::nextafter(samples[i], -std::numeric_limits<double>::infinity()));
    sup = std::max(sup, std::max(static_cast<double>(i + 1) / n - f,
                                 f_minus - static_cast<double>(i) / n));
  }
  return sup;
}

}  // namespace cyclegeo
