#include "cyclegeo/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cyclegeo {

namespace {

// Series expansion of P(a,x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a,x), valid for x >= a + 1 (Lentz).
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_p(double a, double x) {
  if (a <= 0 || x < 0) throw std::invalid_argument("gamma_p: bad arguments");
  if (x == 0) return 0.0;
  return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
  if (a <= 0 || x < 0) throw std::invalid_argument("gamma_q: bad arguments");
  if (x == 0) return 1.0;
  return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double gamma_cdf(double k, double x) { return x <= 0 ? 0.0 : gamma_p(k, x); }

double chi_square_tail(double chi2, double df) {
  if (chi2 <= 0) return 1.0;
  return gamma_q(df / 2.0, chi2 / 2.0);
}

namespace {

double simpson_rule(const std::function<double(double)>& f, double a, double fa,
                    double b, double fb, double& fm) {
  const double m = 0.5 * (a + b);
  fm = f(m);
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, double a, double fa,
                   double b, double fb, double fm, double whole, double tol,
                   int depth) {
  const double m = 0.5 * (a + b);
  double flm, frm;
  const double left = simpson_rule(f, a, fa, m, fm, flm);
  const double right = simpson_rule(f, m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_rec(f, a, fa, m, fm, flm, left, tol / 2.0, depth - 1) +
         simpson_rec(f, m, fm, b, fb, frm, right, tol / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b);
  double fm;
  const double whole = simpson_rule(f, a, fa, b, fb, fm);
  return simpson_rec(f, a, fa, b, fb, fm, whole, tol, 48);
}

std::vector<double> singular_values(Matrix m) {
  // Work on the tall orientation so columns are the short dimension.
  if (m.rows < m.cols) {
    Matrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    m = std::move(t);
  }
  const std::size_t n = m.cols;
  auto col_dot = [&](std::size_t p, std::size_t q) {
    double s = 0;
    for (std::size_t i = 0; i < m.rows; ++i) s += m.at(i, p) * m.at(i, q);
    return s;
  };
  // One-sided Jacobi: rotate column pairs until pairwise orthogonal.
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double app = col_dot(p, p), aqq = col_dot(q, q), apq = col_dot(p, q);
        off = std::max(off, std::fabs(apq) / std::max(1e-300, std::sqrt(app * aqq)));
        if (std::fabs(apq) < 1e-30) continue;
        const double theta = 0.5 * std::atan2(2.0 * apq, app - aqq);
        const double c = std::cos(theta), s = std::sin(theta);
        for (std::size_t i = 0; i < m.rows; ++i) {
          const double vp = m.at(i, p), vq = m.at(i, q);
          m.at(i, p) = c * vp + s * vq;
          m.at(i, q) = -s * vp + c * vq;
        }
      }
    }
    if (off < 1e-15) break;
  }
  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) sv[j] = std::sqrt(std::max(0.0, col_dot(j, j)));
  std::sort(sv.rbegin(), sv.rend());
  return sv;
}

int matrix_rank(const Matrix& m, double tol) {
  if (tol <= 0) throw std::invalid_argument("matrix_rank: tol must be positive");
  const std::vector<double> sv = singular_values(m);
  if (sv.empty() || sv.front() == 0.0) return 0;
  int rank = 0;
  for (double s : sv)
    if (s > tol * sv.front()) ++rank;
  return rank;
}

}  // namespace cyclegeo
