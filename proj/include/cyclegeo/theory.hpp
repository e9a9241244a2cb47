#ifndef CYCLEGEO_THEORY_HPP_
#define CYCLEGEO_THEORY_HPP_

#include <optional>
#include <vector>

#include "cyclegeo/geometry.hpp"
#include "cyclegeo/numerics.hpp"
#include "cyclegeo/rng.hpp"

namespace cyclegeo {

// Patterns of S_r in lexicographic one-line order; the canonical index
// used by SigmaMatrix rows/columns.
std::vector<Perm> all_patterns(int r);
int pattern_index(const Perm& pattern);

// Vershik-Kerov / Logan-Shepp limit curve in rotated coordinates.
double vkls_omega(double x);

// Asymptotic fraction of boxes in the first r*sqrt(n) columns of the
// limit shape; quadrature over the VKLS boundary to 1e-8.
double f_lskv(double r);

// Occurrence probability of the pattern under the mixed diagonal/uniform
// point law with diagonal weight p1. Exact enumeration, r <= 5.
double mu_pattern(const Perm& pattern, double p1);

// One-point conditional occurrence probability at p1 = 0 (polynomial
// closed form in Bernstein basis).
double psi_closed_form(const Perm& pattern, double u, double v);

struct McEstimate {
  double value;
  double std_error;
};

McEstimate psi_monte_carlo(const Perm& pattern, double p1, Point z, long long trials,
                           Rng& rng);

// Asymptotic covariance matrix of normalized pattern counts, r! x r!,
// indexed by the canonical pattern order.
struct SigmaMatrix {
  int r = 0;
  double p1 = 0;
  double p2 = 0;
  Matrix entries;
};

// Exact entries at p1 = 0 via rational Bernstein-basis integrals. r <= 6.
SigmaMatrix sigma_matrix_p2(int r, double p2);

// Full four-block covariance. Exact mode enumerates linear orders of all
// underlying uniforms (r <= 3); MC mode uses common random numbers
// across blocks and pattern pairs.
SigmaMatrix sigma_matrix_general_exact(int r, double p1, double p2);
SigmaMatrix sigma_matrix_general_mc(int r, double p1, double p2, long long trials,
                                    Rng& rng);

// Two-term Kolmogorov-distance bound for normalized pattern counts.
double stein_bound(long long n, int r, double variance);

// Large-deviation tail bound for |X_pi - E X_pi| >= t.
double janson_ld_bound(long long n, int r, double t);

// CDF of (alpha/(alpha+1)) N(0,1) + (1/(alpha+1)) Gamma(2,1);
// alpha = nullopt means the degenerate normal limit.
double high_record_limit_cdf(std::optional<double> alpha, double x);

}  // namespace cyclegeo

#endif  // CYCLEGEO_THEORY_HPP_
