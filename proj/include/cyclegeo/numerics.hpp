#ifndef CYCLEGEO_NUMERICS_HPP_
#define CYCLEGEO_NUMERICS_HPP_

#include <functional>
#include <vector>

namespace cyclegeo {

// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

double normal_cdf(double x);

// CDF of Gamma(shape k, rate 1).
double gamma_cdf(double k, double x);

// Upper tail of the chi-square distribution with df degrees of freedom.
double chi_square_tail(double chi2, double df);

// Adaptive Simpson quadrature to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol);

// Row-major rows x cols real matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Singular values by one-sided Jacobi orthogonalization, descending.
std::vector<double> singular_values(Matrix m);

// Number of singular values above tol * largest.
int matrix_rank(const Matrix& m, double tol = 1e-9);

}  // namespace cyclegeo

#endif  // CYCLEGEO_NUMERICS_HPP_
