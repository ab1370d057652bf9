#include <cmath>
#include <vector>

#include "convpoly/asymptotics.hpp"
#include "convpoly/family.hpp"
#include "convpoly/triangle.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace convpoly;

namespace {

const MultiPoly f2 = MultiPoly::variable(0);
const MultiPoly f3 = MultiPoly::variable(1);
const MultiPoly f4 = MultiPoly::variable(2);

double rel(double a, double b) { return std::fabs(a / b - 1.0); }

}  // namespace

TEST_CASE("saddle points with closed forms") {
  const auto exp_f = catalog_series("exp", 40), tree = catalog_series("tree", 60), bin = catalog_series("binomial", 80);
  for (double x : {50.0, 100.0, 400.0}) {
    const unsigned n = 10;
    const double y = n / x;
    CHECK(saddle_solve(exp_f, n, x) == doctest::Approx(y).epsilon(1e-12));
    CHECK(saddle_solve(tree, n, x) == doctest::Approx(y / (1 + y) * std::exp(-y / (1 + y))).epsilon(1e-11));
    CHECK(saddle_solve(bin, n, x) == doctest::Approx(y / (1 - y)).epsilon(1e-11));
  }
  const auto b2 = catalog_series("catalan-t", 60);
  const double y = 0.1;
  CHECK(saddle_solve(b2, 10, 100) == doctest::Approx(y * (1 + y) / ((1 + 2 * y) * (1 + 2 * y))).epsilon(1e-11));
}

TEST_CASE("approximation closed forms") {
  const unsigned n = 10;
  const double x = 100;
  const double lf = std::lgamma(n + 1.0);
  CHECK(log_approx(catalog_series("exp", 40), n, x) == doctest::Approx(n * std::log(x) - lf).epsilon(1e-12));
  CHECK(log_approx(catalog_series("tree", 60), n, x) == doctest::Approx(n * std::log(x + n) - lf).epsilon(1e-12));
  CHECK(log_approx(catalog_series("binomial", 80), n, x) ==
        doctest::Approx(x * std::log(x) - n - (x - n) * std::log(x - n) - lf).epsilon(1e-12));
  const double t = 2;
  CHECK(log_approx(catalog_series("catalan-t", 60), n, x) ==
        doctest::Approx((x + t * n) * std::log(x + t * n) - n - (x + (t - 1) * n) * std::log(x + (t - 1) * n) - lf)
            .epsilon(1e-12));
}

TEST_CASE("saddle failure reports the last iterate") {
  // s f'(s) = s - s^2 never reaches 1
  const TruncatedSeries f({0, 1, Rational(-1, 2)});
  try {
    saddle_solve(f, 10, 10);
    FAIL("expected SaddleError");
  } catch (const SaddleError& e) {
    CHECK(std::isfinite(e.last_iterate()));
  }
  CHECK_THROWS_AS(saddle_solve(TruncatedSeries({0, 2, 1}), 1, 10), std::domain_error);
}

TEST_CASE("s/y as a power series") {
  const auto e = generic_exponential_coeffs(5);
  const auto u = saddle_quotient_series(e, 3);
  CHECK(u[0] == MultiPoly(1));
  CHECK(u[1] == -f2);
  CHECK(u[2] == (4 * f2 * f2 - f3) * Rational(1, 2));
  CHECK(u[3] == (15 * f2 * f3 - 30 * f2 * f2 * f2 - f4) * Rational(1, 6));
}

TEST_CASE("P_1/n as a series in y") {
  // (1/2)(s/y) s f''(s) = f2 y/2 + (f3 - 2 f2^2) y^2/2 + ...
  const auto e = generic_exponential_coeffs(5);
  const auto u = saddle_quotient_series(e, 3);
  std::vector<MultiPoly> s_c{MultiPoly(0)};
  for (unsigned k = 0; k < 3; ++k) s_c.push_back(u[k]);
  const BasicSeries<MultiPoly> s(s_c);
  const BasicSeries<MultiPoly> f2nd(std::vector<MultiPoly>{f2, f3, f4 * Rational(1, 2), MultiPoly(0)});
  const auto p1 = ps_mul(ps_mul(u, s), ps_compose(f2nd, s)) * Rational(1, 2);
  CHECK(p1[0] == MultiPoly(0));
  CHECK(p1[1] == f2 * Rational(1, 2));
  CHECK(p1[2] == (f3 - 2 * f2 * f2) * Rational(1, 2));
}

TEST_CASE("ratio series leading terms") {
  const auto c = ratio_series_symbolic(2, 1);
  CHECK(c.c[0][0] == MultiPoly(1));
  CHECK(c.c[1][0] == f2 * Rational(-1, 2));
  CHECK(c.c[2][0] == (11 * f2 * f2 - 4 * f3) * Rational(1, 8));
  CHECK_THROWS_AS(ratio_series_symbolic(5, 0), std::invalid_argument);

  const auto tree = ratio_series(catalog_series("tree", 10), 4, 0);
  for (unsigned i = 0; i <= 4; ++i) CHECK(tree.c[i][0] == (i % 2 ? -1 : 1));
  const auto ex = ratio_series(catalog_series("exp", 10), 3, 2);
  for (unsigned i = 0; i <= 3; ++i)
    for (unsigned j = 0; j <= 2; ++j) CHECK(ex.c[i][j] == (i == 0 && j == 0 ? 1 : 0));
}

TEST_CASE("tree ratio 1/(1+y) holds in every order of 1/x") {
  const auto r = ratio_series(catalog_series("tree", 12), 3, 3);
  for (unsigned i = 0; i <= 3; ++i)
    for (unsigned j = 1; j <= 3; ++j) CHECK(is_zero(r.c[i][j]));
}

TEST_CASE("binomial ratio matches Stirling's series") {
  // x!/(x-n)! against x^x e^-n/(x-n)^(x-n): (1-y)^{-1/2} (1 + O(1/x))
  const auto r = ratio_series(catalog_series("binomial", 10), 3, 1);
  CHECK(r.c[0][0] == 1);
  CHECK(r.c[1][0] == Rational(1, 2));
  CHECK(r.c[2][0] == Rational(3, 8));
  CHECK(r.c[3][0] == Rational(5, 16));
  // 1/x terms from the Stirling series: (1/12)(1/x - 1/(x-n)) + ... so c_01 = 0, c_11 = -1/12
  CHECK(r.c[0][1] == 0);
  CHECK(r.c[1][1] == Rational(-1, 12));
}

TEST_CASE("intermediate coefficients vanish above the diagonal") {
  const unsigned J = 6;
  const auto a = ratio_expansion(generic_exponential_coeffs(J + 1), J);
  unsigned checked = 0;
  for (unsigned j = 0; j <= J; ++j)
    for (unsigned i = j + 1; i < a.size(); ++i, ++checked) CHECK(a[i][j].is_zero());
  CHECK(checked > 0);
  CHECK_FALSE(a[1][1].is_zero());
}

TEST_CASE("p_ji triangle") {
  const auto p = p_triangle(5);
  const std::vector<std::vector<long>> printed{{1}, {2, 3}, {6, 20, 15}, {24, 130, 210, 105}, {120, 924, 2380, 2520, 945}};
  for (unsigned j = 1; j <= 5; ++j)
    for (unsigned i = 1; i <= j; ++i) CHECK(p.at(j, i) == printed[j - 1][i - 1]);

  const auto S1 = oracle::stirling_cycle(12);
  for (unsigned j = 1; j <= 5; ++j)
    for (unsigned k = j; k <= 12; ++k) {
      Integer sum = 0;
      for (unsigned i = 1; i <= j; ++i) sum += p.at(j, i) * binomial(k, j + i);
      CHECK(sum == S1[k][k - j]);
    }

  std::vector<Rational> c{0};
  for (unsigned k = 1; k <= 5; ++k) c.push_back(Rational(1, k + 1));
  const auto T = triangle_from(TruncatedSeries(c), 5);
  for (unsigned j = 1; j <= 5; ++j)
    for (unsigned i = 1; i <= j; ++i)
      CHECK(T.at(j, i) == Rational(factorial(j) * p.at(j, i)) / Rational(factorial(i + j)));
  CHECK(T.at(3, 1) == Rational(3, 2));
  CHECK(T.at(5, 3) == Rational(85, 12));
}

TEST_CASE("correction factor") {
  CHECK(correction_factor(catalog_series("exp", 30), 10, 100) == doctest::Approx(1.0).epsilon(1e-14));
  // binomial: d2 = -1/(1+s)^2 and s = y/(1-y) give (1 + s^2 d2 / y)^{-1/2} = (1-y)^{-1/2}
  const auto bin = catalog_series("binomial", 80);
  const double s = saddle_solve(bin, 10, 200), y = 0.05;
  const double d2 = -1 / ((1 + s) * (1 + s));
  CHECK(std::pow(1 + s * s * d2 / y, -0.5) == doctest::Approx(1 / std::sqrt(1 - y)).epsilon(1e-12));

  const auto tree = catalog_series("tree", 64);
  const double exact = std::exp(log_abs(family_value(tree, 32, Rational(1024))));
  CHECK(rel(corrected_approx(tree, 32, 1024), exact) < rel(approx(tree, 32, 1024), exact));
}

TEST_CASE("corrected error shrinks like 1/x^2 for the binomial family") {
  const auto bin = catalog_series("binomial", 160);
  std::vector<double> errors;
  for (unsigned x : {256u, 512u, 1024u}) {
    const unsigned n = x / 8;
    const double exact = std::exp(log_abs(family_value(bin, n, Rational(x))) - log_approx(bin, n, x));
    errors.push_back(std::fabs(correction_factor(bin, n, x) - exact));
  }
  CHECK(errors[0] / errors[1] == doctest::Approx(4.0).epsilon(0.15));
  CHECK(errors[1] / errors[2] == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("compare reports") {
  const auto r1 = compare(catalog_series("exp", 40), 10, 100);
  CHECK(r1.ratio == doctest::Approx(1.0).epsilon(1e-13));
  const auto r2 = compare(catalog_series("tree", 60), 10, 100);
  CHECK(r2.ratio == doctest::Approx(100.0 / 110.0).epsilon(1e-12));
  CHECK(r2.ratio_series_estimate == doctest::Approx(0.91).epsilon(1e-12));
  double sf = 0;
  const auto tree = catalog_series("tree", 60);
  for (unsigned k = 1; k <= 60; ++k) sf += k * tree[k].get_d() * std::pow(r2.s, k);
  CHECK(sf == doctest::Approx(r2.y).epsilon(1e-12));
  const auto r3 = compare(catalog_series("binomial", 80), 10, 100);
  CHECK(std::fabs(r3.ratio - 1 / std::sqrt(0.9)) < 0.01);
  CHECK_FALSE(r3.outside_validity);
  CHECK(compare(catalog_series("tree", 60), 10, 15).outside_validity);
  CHECK_THROWS_AS(compare(catalog_series("tree", 5), 10, 100), std::invalid_argument);
}
