#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "convpoly/mpoly.hpp"
#include "convpoly/series.hpp"

namespace convpoly {

/// Raised when Newton's method fails to locate the saddle point.
class SaddleError : public std::runtime_error {
 public:
  SaddleError(const std::string& what, double last_iterate)
      : std::runtime_error(what), last_iterate_(last_iterate) {}
  double last_iterate() const { return last_iterate_; }

 private:
  double last_iterate_;
};

/// Solves s f'(s) = n/x by damped Newton iteration seeded from the s/y
/// series. Requires f = z + O(z^2); relative tolerance 1e-12, at most 64 steps.
double saddle_solve(const TruncatedSeries& f, unsigned n, double x);

/// ln of F(s)^x (n/(e s))^n / n!.
double log_approx(const TruncatedSeries& f, unsigned n, double x);
double approx(const TruncatedSeries& f, unsigned n, double x);

/// Two-term estimate of F_n(x) / approx:
///   (1 + s^2 d2/y)^{-1/2} + (s/y)^3 A / (x (1 + s^2 d2/y)^{7/2}),  d_k = f^(k)(s).
double correction_factor(const TruncatedSeries& f, unsigned n, double x);
double corrected_approx(const TruncatedSeries& f, unsigned n, double x);

/// F_n(x)/approx = sum c[i][j] y^i x^{-j}.
struct RatioSeries {
  std::vector<std::vector<Rational>> c;
  double evaluate(double y, double x) const;
};

/// Same, with c[i][j] polynomials in f2, f3, ... (atom k stands for f_{k+2}).
struct SymbolicRatioSeries {
  std::vector<std::vector<MultiPoly>> c;
};

/// Exponential coefficients 0, 1, f2, f3, ..., f_{count} with f_k symbolic.
std::vector<MultiPoly> generic_exponential_coeffs(unsigned count);
/// "f2", "f3", ... matching generic_exponential_coeffs.
std::vector<std::string> atom_names(unsigned count);

/// s/y as a series in y, where s f'(s) = y. exp_coeffs[k] = f_k with f_0 = 0, f_1 = 1.
BasicSeries<MultiPoly> saddle_quotient_series(std::span<const MultiPoly> exp_coeffs, unsigned order);

/// The intermediate expansion F_n(x)/approx = sum a[i][j] n^i x^{-j} for
/// j <= max_inv_x (a[i][j] is zero for i > 2j by construction; the nontrivial
/// fact is that it also vanishes for i > j).
std::vector<std::vector<MultiPoly>> ratio_expansion(std::span<const MultiPoly> exp_coeffs, unsigned max_inv_x);

/// c[i][j] for i <= max_i, j <= max_j with f2, f3, ... symbolic; max_i <= 4.
SymbolicRatioSeries ratio_series_symbolic(unsigned max_i, unsigned max_j);

/// c[i][j] for a concrete rational f = z + O(z^2).
RatioSeries ratio_series(const TruncatedSeries& f, unsigned max_i, unsigned max_j);

/// p_{ji}, 1 <= i <= j <= j_max: permutations of i+j elements with i cycles
/// and no fixed points, so that [k brack k-j] = sum_i p_{ji} C(k, j+i).
struct PjiTriangle {
  std::vector<std::vector<Integer>> p;
  const Integer& at(unsigned j, unsigned i) const { return p.at(j - 1).at(i - 1); }
};
PjiTriangle p_triangle(unsigned j_max);

struct SaddleReport {
  unsigned n = 0;
  double x = 0;
  double y = 0;
  double s = 0;
  double approx = 0;
  double exact = 0;
  double ratio = 0;
  double ratio_series_estimate = 0;  // c_00 + c_10 y + c_20 y^2
  double corrected = 0;
  double log_exact = 0;
  double log_approx = 0;
  bool outside_validity = false;  // y > 1/2
};

/// Exact F_n(x) (evaluated exactly at the rational value of x, then
/// converted through logarithms) against the saddle-point estimates.
/// Needs f.order() >= n.
SaddleReport compare(const TruncatedSeries& f, unsigned n, double x);

}  // namespace convpoly
