#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "convpoly/poly.hpp"
#include "convpoly/series.hpp"

namespace convpoly {

/// A convolution family F_0(x), ..., F_N(x) stored as explicit polynomials.
///
/// Genuine families have F_0 = 1 and F_n(0) = 0 for n >= 1; the all-zero
/// family is also representable. The constructor does not enforce either so
/// that the identity checks can be run on arbitrary (e.g. corrupted) input.
class Family {
 public:
  explicit Family(std::vector<XPolynomial> polys, std::optional<TruncatedSeries> source = std::nullopt,
                  std::string name = {});

  unsigned order() const { return static_cast<unsigned>(polys_.size() - 1); }
  const XPolynomial& operator[](std::size_t n) const { return polys_.at(n); }
  const std::vector<XPolynomial>& polys() const { return polys_; }
  /// The log-series f(z) the family was built from, when known.
  const std::optional<TruncatedSeries>& source() const { return source_; }
  const std::string& name() const { return name_; }

  Rational value(std::size_t n, const Rational& x) const { return polys_.at(n)(x); }
  /// Row n of the convolution matrix: n! [x^k] F_n(x) for k = 1..n.
  std::vector<Rational> matrix_row(std::size_t n) const;
  bool is_degenerate() const;

  friend bool operator==(const Family& a, const Family& b) { return a.polys_ == b.polys_; }

 private:
  std::vector<XPolynomial> polys_;
  std::optional<TruncatedSeries> source_;
  std::string name_;
};

/// F_n(x) = [z^n] exp(x f(z)) for n <= N, via n F_n = x sum_k k f[k] F_{n-k}.
/// Uses min(N, f.order()).
Family family_from(const TruncatedSeries& f, unsigned N);

/// [z^n] exp(x f(z)) at one rational x, without building the polynomials.
Rational family_value(const TruncatedSeries& f, unsigned n, const Rational& x);

/// Solves the one-variable condition F_n(2x) = sum_k F_k(x) F_{n-k}(x) given
/// the free coefficients f_{n1} (first_column[n-1]); every other f_{nk} is forced.
Family family_from_weak_condition(std::span<const Rational> first_column);

/// F_n(x+y) - sum_k F_k(x) F_{n-k}(y)
Rational check_convolution(const Family& fam, unsigned n, const Rational& x, const Rational& y);
/// F_n(2x) - sum_k F_k(x) F_{n-k}(x)
Rational check_weak_convolution(const Family& fam, unsigned n, const Rational& x);
/// (x+y) sum_k k F_k(x) F_{n-k}(y) - x n F_n(x+y)
Rational check_derived_convolution(const Family& fam, unsigned n, const Rational& x, const Rational& y);

struct ShiftResiduals {
  Rational convolution;
  Rational derived;
};
/// Residuals of the two t-shifted identities
///   (x+y)F_n(x+y+tn)/(x+y+tn) = sum_k xF_k(x+tk)/(x+tk) * yF_{n-k}(y+t(n-k))/(y+t(n-k))
///   nF_n(x+y+tn)/(x+y+tn)     = sum_{k>=1} kF_k(x+tk)/(x+tk) * yF_{n-k}(y+t(n-k))/(y+t(n-k))
/// evaluated through the exact quotients F_n(v)/v, so no poles arise.
ShiftResiduals check_shift_identities(const Family& fam, unsigned n, const Rational& x, const Rational& y,
                                      const Rational& t);

/// sum_k C(x+t(n-k), n-k) C(y+tk, k) y/(y+tk) - C(x+y+tn, n)
Rational rothe_residual(const Rational& x, const Rational& y, const Rational& t, unsigned n);

/// The unique B with constant term 1 and B = 1 + z B^t, through order N.
TruncatedSeries binomial_series(const Rational& t, unsigned N);

/// [z^n] B_t(z)^x in the pole-free product form x(x+tn-1)...(x+tn-n+1)/n!.
Rational binomial_family_coefficient(const Rational& t, const Rational& x, unsigned n);

/// T(z) = z e^{T(z)}; [z^n] = n^{n-1}/n!.
TruncatedSeries tree_function(unsigned N);

/// Family of 1/(1 - T(z))^x; row n of its matrix counts self-maps of an
/// n-set by number of cycles.
Family tree_polynomials(unsigned N);

/// Family of e^{x z e^z}; n! [x^k] = C(n,k) k^{n-k}.
Family idempotent_polynomials(unsigned N);

/// Replaces each x^k in F_n(x) by k! G_k(x). The result is the family of
/// G(ln F(z))^x.
Family umbral_substitute(const Family& F, const Family& G);

/// x F_n(x+tn)/(x+tn), the family of F_t(z) = F(z F_t(z)^t).
Family t_shift(const Family& F, const Rational& t);

/// H_n(x) = sum_k F_k(x) G_{n-k}(x+tk), the family of (G(z) F(z G(z)^t))^x.
Family combine(const Family& F, const Family& G, const Rational& t);

struct CatalogParams {
  Rational t = 2;  // catalan-t
  Rational s = 1;  // s-step
};

/// Names accepted by catalog_series() and catalog().
std::vector<std::string> catalog_names();

/// The exponent series f(z) = ln F(z) of a named family, to order N.
/// Throws std::invalid_argument for unknown names.
TruncatedSeries catalog_series(std::string_view name, unsigned N, const CatalogParams& params = {});

Family catalog(std::string_view name, unsigned N, const CatalogParams& params = {});

}  // namespace convpoly
