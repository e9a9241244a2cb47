#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "cyclegeo/numerics.hpp"

using namespace cyclegeo;

TEST_CASE("incomplete gamma") {
  // P(1,x) = 1 - e^{-x}.
  for (double x : {0.1, 0.5, 1.0, 3.0, 10.0}) {
    CHECK(gamma_p(1.0, x) == doctest::Approx(1.0 - std::exp(-x)).epsilon(1e-12));
    CHECK(gamma_q(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
  }
  // P(0.5, x) = erf(sqrt(x)).
  CHECK(gamma_p(0.5, 2.0) == doctest::Approx(std::erf(std::sqrt(2.0))).epsilon(1e-12));
  CHECK(gamma_p(3.0, 0.0) == 0.0);
}

TEST_CASE("normal and gamma cdfs") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-10));
  CHECK(normal_cdf(-6.0) < 1e-8);
  // Gamma(2,1): F(x) = 1 - (1+x)e^{-x}.
  for (double x : {0.5, 1.0, 2.0, 5.0}) {
    CHECK(gamma_cdf(2.0, x) ==
          doctest::Approx(1.0 - (1.0 + x) * std::exp(-x)).epsilon(1e-12));
  }
}

TEST_CASE("chi-square tail") {
  // df=2: tail = exp(-x/2).
  CHECK(chi_square_tail(3.0, 2.0) == doctest::Approx(std::exp(-1.5)).epsilon(1e-12));
  // df=1: tail = 2(1 - Phi(sqrt(x))).
  CHECK(chi_square_tail(4.0, 1.0) ==
        doctest::Approx(2.0 * (1.0 - normal_cdf(2.0))).epsilon(1e-10));
  CHECK(chi_square_tail(0.0, 5.0) == doctest::Approx(1.0));
}

TEST_CASE("adaptive simpson") {
  CHECK(adaptive_simpson([](double x) { return x * x; }, 0, 1, 1e-10) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0, M_PI, 1e-10) ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(adaptive_simpson([](double x) { return std::sqrt(1 - x * x); }, -1, 1, 1e-9) ==
        doctest::Approx(M_PI / 2).epsilon(1e-7));
}

TEST_CASE("singular values and rank") {
  Matrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1.0;
  CHECK(matrix_rank(id) == 3);

  Matrix ones(3, 3);
  for (auto& v : ones.data) v = 1.0;
  CHECK(matrix_rank(ones) == 1);
  const auto sv = singular_values(ones);
  CHECK(sv[0] == doctest::Approx(3.0).epsilon(1e-10));

  // Known 2x2: [[1,2],[3,4]] has singular values sqrt((15±sqrt(221))/... ).
  Matrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 3;
  m.at(1, 1) = 4;
  const auto s = singular_values(m);
  CHECK(s[0] * s[1] == doctest::Approx(2.0).epsilon(1e-10));          // |det|
  CHECK(s[0] * s[0] + s[1] * s[1] == doctest::Approx(30.0).epsilon(1e-10));  // frobenius^2

  Matrix rect(2, 4);
  rect.at(0, 0) = 1;
  rect.at(1, 2) = 5;
  CHECK(matrix_rank(rect) == 2);
  CHECK(matrix_rank(Matrix(3, 3)) == 0);
}
