#include "cyclegeo/theory.hpp"

#include <algorithm>
#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cyclegeo {

namespace {

using Rational = boost::multiprecision::cpp_rational;

long long factorial_ll(int m) {
  long long f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// Lexicographic index of a pattern in S_r via the Lehmer code.
int lehmer_index(const int* vals, int r) {
  int idx = 0;
  for (int i = 0; i < r; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j < r; ++j)
      if (vals[j] < vals[i]) ++smaller_later;
    idx = idx * (r - i) + smaller_later;
  }
  return idx;
}

// Pattern index of points given as (x-rank-ish, y-rank-ish) integer pairs.
int pattern_index_of_points(const std::array<std::pair<int, int>, 8>& pts, int r) {
  std::array<int, 8> order{};
  for (int i = 0; i < r; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.begin() + r, [&](int a, int b) {
    return pts[static_cast<std::size_t>(a)].first < pts[static_cast<std::size_t>(b)].first;
  });
  std::array<int, 8> yvals{};
  for (int i = 0; i < r; ++i)
    yvals[static_cast<std::size_t>(i)] = pts[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])].second;
  std::array<int, 8> ranks{};
  for (int i = 0; i < r; ++i) {
    int rank = 1;
    for (int j = 0; j < r; ++j)
      if (yvals[static_cast<std::size_t>(j)] < yvals[static_cast<std::size_t>(i)]) ++rank;
    ranks[static_cast<std::size_t>(i)] = rank;
  }
  return lehmer_index(ranks.data(), r);
}

// Occurrence counts over all patterns of S_r for r points of which q lie
// on the diagonal, by enumerating the (2r-q)! linear orders of the
// underlying uniforms. counts[pattern index] / (2r-q)! is the probability.
struct MuCounts {
  std::vector<long long> counts;
  long long total;
};

const MuCounts& mu_q_counts(int r, int q) {
  static std::map<std::pair<int, int>, MuCounts> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({r, q});
  if (it != cache.end()) return it->second;

  const int m = 2 * r - q;
  MuCounts mc;
  mc.counts.assign(static_cast<std::size_t>(factorial_ll(r)), 0);
  mc.total = factorial_ll(m);
  // Variables: [0,q) diagonal values, [q, r) x-coords, [r, 2r-q) y-coords.
  std::vector<int> assign(static_cast<std::size_t>(m));
  std::iota(assign.begin(), assign.end(), 0);
  std::array<std::pair<int, int>, 8> pts{};
  do {
    for (int i = 0; i < q; ++i)
      pts[static_cast<std::size_t>(i)] = {assign[static_cast<std::size_t>(i)],
                                          assign[static_cast<std::size_t>(i)]};
    for (int j = 0; j < r - q; ++j)
      pts[static_cast<std::size_t>(q + j)] = {assign[static_cast<std::size_t>(q + j)],
                                              assign[static_cast<std::size_t>(r + j)]};
    ++mc.counts[static_cast<std::size_t>(pattern_index_of_points(pts, r))];
  } while (std::next_permutation(assign.begin(), assign.end()));
  return cache.emplace(std::make_pair(r, q), std::move(mc)).first->second;
}

double binom_weight(int n, int k, double p) {
  double w = 1;
  for (int i = 0; i < k; ++i) w *= p * static_cast<double>(n - i) / static_cast<double>(i + 1);
  for (int i = 0; i < n - k; ++i) w *= 1.0 - p;
  return w;
}

}  // namespace

std::vector<Perm> all_patterns(int r) {
  Perm base(static_cast<std::size_t>(r));
  std::iota(base.begin(), base.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

int pattern_index(const Perm& pattern) {
  std::vector<int> vals(pattern.begin(), pattern.end());
  return lehmer_index(vals.data(), static_cast<int>(vals.size()));
}

double vkls_omega(double x) {
  if (std::fabs(x) >= 2.0) return std::fabs(x);
  return (2.0 / M_PI) * (x * std::asin(x / 2.0) + std::sqrt(4.0 - x * x));
}

double f_lskv(double r) {
  if (r < 0) throw std::invalid_argument("f_lskv: r must be non-negative");
  if (r == 0) return 0.0;
  const double x_max = std::min(r, 2.0);
  // Boundary parametrized by u in [-2,2]: x(u) = (Omega(u)+u)/2 is
  // increasing from 0 to 2; y(u) = (Omega(u)-u)/2; dx = (Omega'(u)+1)/2 du.
  auto x_of = [](double u) { return 0.5 * (vkls_omega(u) + u); };
  double lo = -2.0, hi = 2.0;
  if (x_max >= 2.0) {
    lo = hi = 2.0;
  } else {
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (x_of(mid) < x_max ? lo : hi) = mid;
    }
  }
  const double u_max = 0.5 * (lo + hi);
  auto integrand = [](double u) {
    const double y = 0.5 * (vkls_omega(u) - u);
    const double dx = 0.5 * ((2.0 / M_PI) * std::asin(u / 2.0) + 1.0);
    return y * dx;
  };
  return adaptive_simpson(integrand, -2.0, u_max, 1e-8);
}

double mu_pattern(const Perm& pattern, double p1) {
  const int r = static_cast<int>(pattern.size());
  if (r < 1 || r > 5)
    throw std::invalid_argument("mu_pattern: exact mode requires 1 <= r <= 5");
  if (p1 < 0 || p1 > 1) throw std::invalid_argument("mu_pattern: p1 must lie in [0,1]");
  const int idx = pattern_index(pattern);
  double mu = 0;
  for (int q = 0; q <= r; ++q) {
    const double w = binom_weight(r, q, p1);
    if (w == 0) continue;
    const MuCounts& mc = mu_q_counts(r, q);
    mu += w * static_cast<double>(mc.counts[static_cast<std::size_t>(idx)]) /
          static_cast<double>(mc.total);
  }
  return mu;
}

double psi_closed_form(const Perm& pattern, double u, double v) {
  const int r = static_cast<int>(pattern.size());
  auto g = [r](int j, double w) {
    double b = 1;
    for (int i = 0; i < j - 1; ++i)
      b *= static_cast<double>(r - 1 - i) / static_cast<double>(i + 1);
    return b * std::pow(w, j - 1) * std::pow(1.0 - w, r - j);
  };
  double sum = 0;
  for (int i = 1; i <= r; ++i)
    sum += g(i, u) * g(pattern[static_cast<std::size_t>(i - 1)], v);
  return sum / static_cast<double>(factorial_ll(r - 1));
}

McEstimate psi_monte_carlo(const Perm& pattern, double p1, Point z, long long trials,
                           Rng& rng) {
  if (trials < 1) throw std::invalid_argument("psi_monte_carlo: trials must be >= 1");
  const int r = static_cast<int>(pattern.size());
  const int target = pattern_index(pattern);
  long long hits = 0;
  std::vector<Point> pts(static_cast<std::size_t>(r));
  for (long long trial = 0; trial < trials; ++trial) {
    for (int i = 0; i + 1 < r; ++i) {
      const double x = rng.next_double();
      const double y = rng.next_double() < p1 ? x : rng.next_double();
      pts[static_cast<std::size_t>(i)] = {x, y};
    }
    pts[static_cast<std::size_t>(r - 1)] = z;
    // Rank-based pattern index on doubles.
    std::array<std::pair<int, int>, 8> ranked{};
    for (int i = 0; i < r; ++i) {
      int rx = 0, ry = 0;
      for (int j = 0; j < r; ++j) {
        if (pts[static_cast<std::size_t>(j)].x < pts[static_cast<std::size_t>(i)].x) ++rx;
        if (pts[static_cast<std::size_t>(j)].y < pts[static_cast<std::size_t>(i)].y) ++ry;
      }
      ranked[static_cast<std::size_t>(i)] = {rx, ry};
    }
    if (pattern_index_of_points(ranked, r) == target) ++hits;
  }
  const double p_hat = static_cast<double>(hits) / static_cast<double>(trials);
  return {p_hat, std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials))};
}

SigmaMatrix sigma_matrix_p2(int r, double p2) {
  if (r < 2 || r > 6) throw std::invalid_argument("sigma_matrix_p2: requires 2 <= r <= 6");
  const int nfact = static_cast<int>(factorial_ll(r));
  const std::vector<Perm> patterns = all_patterns(r);

  // Bernstein integrals G[i][k] = int_0^1 g_i g_k, exact rationals.
  auto big_factorial = [](int m) {
    boost::multiprecision::cpp_int f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  auto choose = [&](int n, int k) {
    return big_factorial(n) / (big_factorial(k) * big_factorial(n - k));
  };
  std::vector<std::vector<Rational>> G(static_cast<std::size_t>(r + 1),
                                       std::vector<Rational>(static_cast<std::size_t>(r + 1)));
  for (int i = 1; i <= r; ++i)
    for (int k = 1; k <= r; ++k)
      G[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          Rational(choose(r - 1, i - 1) * choose(r - 1, k - 1) *
                       big_factorial(i + k - 2) * big_factorial(2 * r - i - k),
                   big_factorial(2 * r - 1));

  const Rational fr1 = Rational(big_factorial(r - 1));
  const Rational mu2 = Rational(1) / (big_factorial(r) * big_factorial(r));
  const Rational p2_rat(p2);

  SigmaMatrix sigma;
  sigma.r = r;
  sigma.p1 = 0;
  sigma.p2 = p2;
  sigma.entries = Matrix(static_cast<std::size_t>(nfact), static_cast<std::size_t>(nfact));
  for (int a = 0; a < nfact; ++a) {
    const Perm& pi = patterns[static_cast<std::size_t>(a)];
    for (int b = a; b < nfact; ++b) {
      const Perm& rho = patterns[static_cast<std::size_t>(b)];
      Rational e_same = 0, e_swap = 0;
      for (int i = 1; i <= r; ++i) {
        for (int k = 1; k <= r; ++k) {
          const int pi_i = pi[static_cast<std::size_t>(i - 1)];
          const int rho_k = rho[static_cast<std::size_t>(k - 1)];
          e_same += G[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                    G[static_cast<std::size_t>(pi_i)][static_cast<std::size_t>(rho_k)];
          e_swap += G[static_cast<std::size_t>(i)][static_cast<std::size_t>(rho_k)] *
                    G[static_cast<std::size_t>(pi_i)][static_cast<std::size_t>(k)];
        }
      }
      e_same /= fr1 * fr1;
      e_swap /= fr1 * fr1;
      const Rational entry = ((e_same - mu2) + p2_rat * (e_swap - mu2)) / (fr1 * fr1);
      const double value = static_cast<double>(entry);
      sigma.entries.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = value;
      sigma.entries.at(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = value;
    }
  }
  return sigma;
}

namespace {

// Covariance blocks of Theorem-style four-term variance formula.
enum class Block { kDiagDiag, kSameSame, kSwap, kChain };

struct BlockSpec {
  int shared;                 // number of shared uniforms
  std::array<int, 2> a_coord; // A = (shared[a0], shared[a1])
  std::array<int, 2> b_coord;
};

BlockSpec block_spec(Block b) {
  switch (b) {
    case Block::kDiagDiag: return {1, {0, 0}, {0, 0}};
    case Block::kSameSame: return {2, {0, 1}, {0, 1}};
    case Block::kSwap:     return {2, {0, 1}, {1, 0}};
    case Block::kChain:    return {3, {0, 1}, {1, 2}};
  }
  throw std::logic_error("block_spec");
}

// Joint occurrence counts E-numerator for all pattern pairs: batch1 of
// r-1 points (q1 diagonal) plus point A, batch2 (q2 diagonal) plus B,
// over all linear orders of the distinct underlying uniforms.
struct JointCounts {
  std::vector<long long> counts;  // [idx1 * r! + idx2]
  long long total;
};

const JointCounts& joint_counts(int r, Block block, int q1, int q2) {
  static std::map<std::tuple<int, int, int, int>, JointCounts> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(r, static_cast<int>(block), q1, q2);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const BlockSpec spec = block_spec(block);
  const int m1 = 2 * (r - 1) - q1;
  const int m2 = 2 * (r - 1) - q2;
  const int m = m1 + m2 + spec.shared;
  const int nfact = static_cast<int>(factorial_ll(r));

  JointCounts jc;
  jc.counts.assign(static_cast<std::size_t>(nfact) * static_cast<std::size_t>(nfact), 0);
  jc.total = factorial_ll(m);

  // Variable layout: batch1 [0,m1) as (q1 diag, r-1-q1 x's, r-1-q1 y's),
  // batch2 [m1, m1+m2) likewise, shared uniforms at the end.
  std::vector<int> assign(static_cast<std::size_t>(m));
  std::iota(assign.begin(), assign.end(), 0);
  std::array<std::pair<int, int>, 8> pts1{}, pts2{};
  const int off2 = m1;
  const int offs = m1 + m2;
  do {
    for (int i = 0; i < q1; ++i)
      pts1[static_cast<std::size_t>(i)] = {assign[static_cast<std::size_t>(i)],
                                           assign[static_cast<std::size_t>(i)]};
    for (int j = 0; j < r - 1 - q1; ++j)
      pts1[static_cast<std::size_t>(q1 + j)] = {
          assign[static_cast<std::size_t>(q1 + j)],
          assign[static_cast<std::size_t>(r - 1 + j)]};
    pts1[static_cast<std::size_t>(r - 1)] = {
        assign[static_cast<std::size_t>(offs + spec.a_coord[0])],
        assign[static_cast<std::size_t>(offs + spec.a_coord[1])]};
    for (int i = 0; i < q2; ++i)
      pts2[static_cast<std::size_t>(i)] = {assign[static_cast<std::size_t>(off2 + i)],
                                           assign[static_cast<std::size_t>(off2 + i)]};
    for (int j = 0; j < r - 1 - q2; ++j)
      pts2[static_cast<std::size_t>(q2 + j)] = {
          assign[static_cast<std::size_t>(off2 + q2 + j)],
          assign[static_cast<std::size_t>(off2 + r - 1 + j)]};
    pts2[static_cast<std::size_t>(r - 1)] = {
        assign[static_cast<std::size_t>(offs + spec.b_coord[0])],
        assign[static_cast<std::size_t>(offs + spec.b_coord[1])]};
    const int i1 = pattern_index_of_points(pts1, r);
    const int i2 = pattern_index_of_points(pts2, r);
    ++jc.counts[static_cast<std::size_t>(i1) * static_cast<std::size_t>(nfact) +
                static_cast<std::size_t>(i2)];
  } while (std::next_permutation(assign.begin(), assign.end()));
  return cache.emplace(key, std::move(jc)).first->second;
}

// E[psi^{p1}(z)] over z off-diagonal (diag=false) or on the diagonal.
double psi_marginal_mean(int r, double p1, int pattern_idx, bool diag) {
  double mean = 0;
  for (int q = 0; q <= r - 1; ++q) {
    const double w = binom_weight(r - 1, q, p1);
    if (w == 0) continue;
    const MuCounts& mc = mu_q_counts(r, diag ? q + 1 : q);
    mean += w * static_cast<double>(mc.counts[static_cast<std::size_t>(pattern_idx)]) /
            static_cast<double>(mc.total);
  }
  return mean;
}

Matrix cov_block(int r, double p1, Block block) {
  const int nfact = static_cast<int>(factorial_ll(r));
  const BlockSpec spec = block_spec(block);
  const bool a_diag = spec.a_coord[0] == spec.a_coord[1];
  const bool b_diag = spec.b_coord[0] == spec.b_coord[1];
  Matrix joint(static_cast<std::size_t>(nfact), static_cast<std::size_t>(nfact));
  for (int q1 = 0; q1 <= r - 1; ++q1) {
    const double w1 = binom_weight(r - 1, q1, p1);
    if (w1 == 0) continue;
    for (int q2 = 0; q2 <= r - 1; ++q2) {
      const double w2 = binom_weight(r - 1, q2, p1);
      if (w2 == 0) continue;
      const JointCounts& jc = joint_counts(r, block, q1, q2);
      const double scale = w1 * w2 / static_cast<double>(jc.total);
      for (std::size_t a = 0; a < static_cast<std::size_t>(nfact); ++a)
        for (std::size_t b = 0; b < static_cast<std::size_t>(nfact); ++b)
          joint.at(a, b) += scale *
              static_cast<double>(jc.counts[a * static_cast<std::size_t>(nfact) + b]);
    }
  }
  Matrix cov(static_cast<std::size_t>(nfact), static_cast<std::size_t>(nfact));
  for (int a = 0; a < nfact; ++a) {
    const double ma = psi_marginal_mean(r, p1, a, a_diag);
    for (int b = 0; b < nfact; ++b) {
      const double mb = psi_marginal_mean(r, p1, b, b_diag);
      cov.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) =
          joint.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) - ma * mb;
    }
  }
  return cov;
}

}  // namespace

SigmaMatrix sigma_matrix_general_exact(int r, double p1, double p2) {
  if (r < 2 || r > 3)
    throw std::invalid_argument("sigma_matrix_general_exact: requires 2 <= r <= 3");
  const int nfact = static_cast<int>(factorial_ll(r));
  const double fr1 = static_cast<double>(factorial_ll(r - 1));

  const Matrix diag_block = cov_block(r, p1, Block::kDiagDiag);
  const Matrix same_block = cov_block(r, p1, Block::kSameSame);
  const Matrix swap_block = cov_block(r, p1, Block::kSwap);
  const Matrix chain_block = cov_block(r, p1, Block::kChain);

  SigmaMatrix sigma;
  sigma.r = r;
  sigma.p1 = p1;
  sigma.p2 = p2;
  sigma.entries = Matrix(static_cast<std::size_t>(nfact), static_cast<std::size_t>(nfact));
  for (std::size_t a = 0; a < static_cast<std::size_t>(nfact); ++a)
    for (std::size_t b = 0; b < static_cast<std::size_t>(nfact); ++b)
      sigma.entries.at(a, b) =
          (p1 * diag_block.at(a, b) + (1.0 - p1) * same_block.at(a, b) +
           p2 * swap_block.at(a, b) +
           2.0 * (1.0 - p1 - p2) * chain_block.at(a, b)) /
          (fr1 * fr1);
  return sigma;
}

SigmaMatrix sigma_matrix_general_mc(int r, double p1, double p2, long long trials,
                                    Rng& rng) {
  if (r < 2 || r > 5) throw std::invalid_argument("sigma_matrix_general_mc: 2 <= r <= 5");
  if (trials < 1) throw std::invalid_argument("sigma_matrix_general_mc: trials >= 1");
  const int nfact = static_cast<int>(factorial_ll(r));
  const double fr1 = static_cast<double>(factorial_ll(r - 1));

  // Common random numbers: one (U,V,W) plus two independent mixed-law
  // batches per trial feed all four blocks and all pattern pairs.
  const std::array<BlockSpec, 4> specs = {block_spec(Block::kDiagDiag),
                                          block_spec(Block::kSameSame),
                                          block_spec(Block::kSwap),
                                          block_spec(Block::kChain)};
  std::array<std::vector<long long>, 4> joint;
  std::array<std::vector<long long>, 4> marg1, marg2;
  for (auto& j : joint)
    j.assign(static_cast<std::size_t>(nfact) * static_cast<std::size_t>(nfact), 0);
  for (auto& v : marg1) v.assign(static_cast<std::size_t>(nfact), 0);
  for (auto& v : marg2) v.assign(static_cast<std::size_t>(nfact), 0);

  std::vector<Point> batch1(static_cast<std::size_t>(r - 1)), batch2(static_cast<std::size_t>(r - 1));
  auto pattern_with = [&](const std::vector<Point>& batch, Point z) {
    std::array<std::pair<int, int>, 8> ranked{};
    std::array<Point, 8> pts{};
    for (int i = 0; i + 1 < r; ++i) pts[static_cast<std::size_t>(i)] = batch[static_cast<std::size_t>(i)];
    pts[static_cast<std::size_t>(r - 1)] = z;
    for (int i = 0; i < r; ++i) {
      int rx = 0, ry = 0;
      for (int j = 0; j < r; ++j) {
        if (pts[static_cast<std::size_t>(j)].x < pts[static_cast<std::size_t>(i)].x) ++rx;
        if (pts[static_cast<std::size_t>(j)].y < pts[static_cast<std::size_t>(i)].y) ++ry;
      }
      ranked[static_cast<std::size_t>(i)] = {rx, ry};
    }
    return pattern_index_of_points(ranked, r);
  };

  for (long long trial = 0; trial < trials; ++trial) {
    const double u = rng.next_double(), v = rng.next_double(), w = rng.next_double();
    const std::array<double, 3> shared = {u, v, w};
    for (int i = 0; i + 1 < r; ++i) {
      double x = rng.next_double();
      batch1[static_cast<std::size_t>(i)] = {x, rng.next_double() < p1 ? x : rng.next_double()};
      x = rng.next_double();
      batch2[static_cast<std::size_t>(i)] = {x, rng.next_double() < p1 ? x : rng.next_double()};
    }
    for (std::size_t blk = 0; blk < 4; ++blk) {
      const BlockSpec& s = specs[blk];
      const Point a{shared[static_cast<std::size_t>(s.a_coord[0])],
                    shared[static_cast<std::size_t>(s.a_coord[1])]};
      const Point b{shared[static_cast<std::size_t>(s.b_coord[0])],
                    shared[static_cast<std::size_t>(s.b_coord[1])]};
      const int i1 = pattern_with(batch1, a);
      const int i2 = pattern_with(batch2, b);
      ++joint[blk][static_cast<std::size_t>(i1) * static_cast<std::size_t>(nfact) +
                   static_cast<std::size_t>(i2)];
      ++marg1[blk][static_cast<std::size_t>(i1)];
      ++marg2[blk][static_cast<std::size_t>(i2)];
    }
  }

  const double inv_trials = 1.0 / static_cast<double>(trials);
  const std::array<double, 4> weight = {p1, 1.0 - p1, p2, 2.0 * (1.0 - p1 - p2)};
  SigmaMatrix sigma;
  sigma.r = r;
  sigma.p1 = p1;
  sigma.p2 = p2;
  sigma.entries = Matrix(static_cast<std::size_t>(nfact), static_cast<std::size_t>(nfact));
  for (std::size_t a = 0; a < static_cast<std::size_t>(nfact); ++a) {
    for (std::size_t b = 0; b < static_cast<std::size_t>(nfact); ++b) {
      double entry = 0;
      for (std::size_t blk = 0; blk < 4; ++blk) {
        const double e_joint =
            static_cast<double>(joint[blk][a * static_cast<std::size_t>(nfact) + b]) * inv_trials;
        const double ma = static_cast<double>(marg1[blk][a]) * inv_trials;
        const double mb = static_cast<double>(marg2[blk][b]) * inv_trials;
        entry += weight[blk] * (e_joint - ma * mb);
      }
      sigma.entries.at(a, b) = entry / (fr1 * fr1);
    }
  }
  return sigma;
}

double stein_bound(long long n, int r, double variance) {
  if (variance <= 0) throw std::invalid_argument("stein_bound: variance must be positive");
  const double fr1 = static_cast<double>(factorial_ll(r - 1));
  const double nd = static_cast<double>(n);
  return 42.0 * static_cast<double>(r) / (fr1 * fr1) * std::pow(nd, 2.0 * r - 1.5) / variance +
         72.0 * static_cast<double>(r) / (fr1 * fr1 * fr1) * std::pow(nd, 3.0 * r - 2.0) /
             std::pow(variance, 1.5);
}

double janson_ld_bound(long long n, int r, double t) {
  const double fr1 = static_cast<double>(factorial_ll(r - 1));
  const double nd = static_cast<double>(n);
  return 2.0 * std::exp(-2.0 * fr1 / 3.0 * t * t / std::pow(nd, 2.0 * r - 1.0));
}

double high_record_limit_cdf(std::optional<double> alpha, double x) {
  if (!alpha.has_value()) return normal_cdf(x);  // alpha = infinity
  const double a = *alpha;
  if (a < 0) throw std::invalid_argument("high_record_limit_cdf: alpha must be >= 0");
  if (a == 0) return gamma_cdf(2.0, x);
  const double c_norm = a / (a + 1.0);
  const double c_gamma = 1.0 / (a + 1.0);
  // Convolve the Gamma(2,1) density against the scaled normal CDF.
  auto integrand = [&](double s) {
    return normal_cdf((x - c_gamma * s) / c_norm) * s * std::exp(-s);
  };
  // Integrate panel by panel so the quadrature cannot skip the mass near 0;
  // the gamma weight makes the tail beyond 40 smaller than 1e-15.
  double total = 0.0;
  for (int k = 0; k < 40; ++k)
    total += adaptive_simpson(integrand, k, k + 1.0, 1e-9);
  return std::min(1.0, total);
}

}  // namespace cyclegeo
