#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "convpoly/poly.hpp"
#include "convpoly/series.hpp"

namespace convpoly {

/// Lower-triangular array with 1-based rows and columns, entry (n, k) for
/// 1 <= k <= n <= n_max. Row and column 0 are implicit: entry (0, 0) = 1 and
/// every other entry with a zero index is 0, matching F_0(x) = 1.
template <class T>
class LowerTriangle {
 public:
  LowerTriangle() = default;
  explicit LowerTriangle(unsigned n_max) : rows_(n_max) {
    for (unsigned n = 1; n <= n_max; ++n) rows_[n - 1].assign(n, T{});
  }
  explicit LowerTriangle(std::vector<std::vector<T>> rows) : rows_(std::move(rows)) {
    for (std::size_t n = 0; n < rows_.size(); ++n)
      if (rows_[n].size() != n + 1) throw std::invalid_argument("triangle row n must have exactly n entries");
  }

  unsigned n_max() const { return static_cast<unsigned>(rows_.size()); }
  const T& at(unsigned n, unsigned k) const { return rows_.at(n - 1).at(k - 1); }
  T& at(unsigned n, unsigned k) { return rows_.at(n - 1).at(k - 1); }
  const std::vector<T>& row(unsigned n) const { return rows_.at(n - 1); }
  const std::vector<std::vector<T>>& rows() const { return rows_; }

  friend bool operator==(const LowerTriangle& a, const LowerTriangle& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<std::vector<T>> rows_;
};

/// Entries f_{nk} = n! [x^k] F_n(x); for genuine convolution matrices.
using ConvolutionTriangle = LowerTriangle<Rational>;
/// Entries are polynomials in the iteration parameter q.
using QMatrix = LowerTriangle<XPolynomial>;

/// f_{y(y-k)} as a polynomial in y, valid for all integer and rational y.
struct ExtendedEntry {
  unsigned k = 0;
  XPolynomial poly;
};

ConvolutionTriangle identity_triangle(unsigned n_max);

/// Convolution matrix of e^{x f(z)}: first column f_n = n! [z^n] f, the rest
/// by f_{nk} = sum_j C(n-1, j-1) f_j f_{(n-j)(k-1)}.
ConvolutionTriangle triangle_from(const TruncatedSeries& f, unsigned n_max);

/// The series whose exponential coefficients are the first column.
TruncatedSeries first_column_series(const ConvolutionTriangle& F);

/// Ordinary matrix product; FG is the matrix of g(f(z)).
ConvolutionTriangle triangle_mul(const ConvolutionTriangle& F, const ConvolutionTriangle& G);

/// F^q = sum_l C(q, l) (F - I)^l for unit-diagonal F (finite: (F-I)^l vanishes
/// below the (n-k)th power). Throws std::domain_error otherwise.
ConvolutionTriangle triangle_power(const ConvolutionTriangle& F, const Rational& q);

/// F^q with q kept symbolic, from the binomial series.
QMatrix triangle_power_symbolic(const ConvolutionTriangle& F);

/// F^q with q kept symbolic, from the interpolation form
///   sum_{j<=m} (F^j)_{nk} C(q, j) C(q-j-1, m-j) (-1)^{m-j},  m = n_max - 1.
QMatrix triangle_power_interpolation(const ConvolutionTriangle& F);

ConvolutionTriangle evaluate(const QMatrix& Q, const Rational& q);

/// Coefficients of the q-th iterate f^{[q]}; requires f = z + O(z^2).
TruncatedSeries iterate_series(const TruncatedSeries& f, const Rational& q);

/// [z^n] f^{[q]} as polynomials in q, n = 0..order.
std::vector<XPolynomial> iterate_series_symbolic(const TruncatedSeries& f);

/// ln F = (F-I) - (F-I)^2/2 + (F-I)^3/3 - ...; generally not a convolution matrix.
LowerTriangle<Rational> triangle_log(const ConvolutionTriangle& F);

/// True when the first column of ln F is nonnegative, i.e. every iterate
/// f^{[q]} with q >= 0 has nonnegative coefficients.
bool iterates_nonnegative(const ConvolutionTriangle& F);

/// g with g(f(z)) = z, from Lagrange's formula g_n = (n-1)! [z^{n-1}] (f/z)^{-n}
/// after rescaling to f_1 = 1. Throws std::domain_error when f_1 = 0.
TruncatedSeries revert(const TruncatedSeries& f);

/// f_{nk} = (n!/k!) [z^{n-k}] (f(z)/z)^k.
Rational lagrange_entry(const TruncatedSeries& f, unsigned n, unsigned k);

/// f_{y(y-k)} = y^{falling k} Fhat_k(y - k) where Fhat = f/z; needs f_1 = 1.
ExtendedEntry extended_entry(const TruncatedSeries& f, unsigned k);

/// Extended matrix entry f_{nk} for arbitrary integers; zero when k > n.
Rational extended_value(const TruncatedSeries& f, long n, long k);

/// sigma_n(x) with x sigma_n(x) = [z^n] (z e^z/(e^z - 1))^x, n >= 1.
XPolynomial stirling_polynomial(unsigned n);

/// Entry (n, k) times alpha^n beta^k (z -> alpha z, x -> beta x).
ConvolutionTriangle scale_triangle(const ConvolutionTriangle& F, const Rational& alpha, const Rational& beta);

/// h_{nk} = sum_{i,j} C(n, j) f_{ji} g_{(n-j)(k-i)}, including the implicit
/// zero row and column.
LowerTriangle<Rational> circ_combine(const LowerTriangle<Rational>& F, const LowerTriangle<Rational>& G);

}  // namespace convpoly
