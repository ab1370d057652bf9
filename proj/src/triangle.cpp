#include "convpoly/triangle.hpp"

#include <algorithm>

#include "convpoly/family.hpp"

namespace convpoly {

namespace {

void require_unit_diagonal(const ConvolutionTriangle& F, const char* what) {
  for (unsigned n = 1; n <= F.n_max(); ++n)
    if (F.at(n, n) != 1)
      throw std::domain_error(std::string(what) + ": requires a unit diagonal (f_1 = 1)");
}

// Entry with the implicit zero row and column.
Rational padded(const LowerTriangle<Rational>& F, unsigned n, unsigned k) {
  if (n == 0 || k == 0) return n == k ? Rational(1) : Rational(0);
  if (k > n) return 0;
  return F.at(n, k);
}

ConvolutionTriangle minus_identity(const ConvolutionTriangle& F) {
  ConvolutionTriangle D = F;
  for (unsigned n = 1; n <= D.n_max(); ++n) D.at(n, n) -= 1;
  return D;
}

std::vector<ConvolutionTriangle> powers(const ConvolutionTriangle& base, unsigned count) {
  std::vector<ConvolutionTriangle> out{identity_triangle(base.n_max())};
  for (unsigned l = 1; l <= count; ++l) out.push_back(triangle_mul(out.back(), base));
  return out;
}

}  // namespace

ConvolutionTriangle identity_triangle(unsigned n_max) {
  ConvolutionTriangle I(n_max);
  for (unsigned n = 1; n <= n_max; ++n) I.at(n, n) = 1;
  return I;
}

ConvolutionTriangle triangle_from(const TruncatedSeries& f, unsigned n_max) {
  if (!is_zero(f[0])) throw std::invalid_argument("triangle_from: f(z) must have zero constant term");
  if (f.order() < n_max) throw std::invalid_argument("triangle_from: series order is below n_max");
  const auto fj = f.exponential_coeffs();
  ConvolutionTriangle T(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    T.at(n, 1) = fj[n];
    for (unsigned k = 2; k <= n; ++k) {
      Rational acc = 0;
      for (unsigned j = 1; j + k - 1 <= n; ++j) {
        if (is_zero(fj[j]) || n - j < k - 1) continue;
        acc += Rational(binomial(n - 1, j - 1)) * fj[j] * T.at(n - j, k - 1);
      }
      T.at(n, k) = acc;
    }
  }
  return T;
}

TruncatedSeries first_column_series(const ConvolutionTriangle& F) {
  std::vector<Rational> e(F.n_max() + 1, Rational(0));
  for (unsigned n = 1; n <= F.n_max(); ++n) e[n] = F.at(n, 1);
  return TruncatedSeries::from_exponential(e);
}

ConvolutionTriangle triangle_mul(const ConvolutionTriangle& F, const ConvolutionTriangle& G) {
  if (F.n_max() != G.n_max()) throw std::invalid_argument("triangle_mul: n_max mismatch");
  ConvolutionTriangle H(F.n_max());
  for (unsigned n = 1; n <= F.n_max(); ++n)
    for (unsigned k = 1; k <= n; ++k) {
      Rational acc = 0;
      for (unsigned j = k; j <= n; ++j) acc += F.at(n, j) * G.at(j, k);
      H.at(n, k) = acc;
    }
  return H;
}

ConvolutionTriangle triangle_power(const ConvolutionTriangle& F, const Rational& q) {
  require_unit_diagonal(F, "triangle_power");
  const unsigned n_max = F.n_max();
  const auto D = powers(minus_identity(F), n_max == 0 ? 0 : n_max - 1);
  ConvolutionTriangle out(n_max);
  for (unsigned l = 0; l < D.size(); ++l) {
    const Rational c = binomial(q, l);
    if (is_zero(c)) continue;
    for (unsigned n = 1; n <= n_max; ++n)
      for (unsigned k = 1; k + l <= n; ++k) out.at(n, k) += c * D[l].at(n, k);
  }
  return out;
}

QMatrix triangle_power_symbolic(const ConvolutionTriangle& F) {
  require_unit_diagonal(F, "triangle_power_symbolic");
  const unsigned n_max = F.n_max();
  const auto D = powers(minus_identity(F), n_max == 0 ? 0 : n_max - 1);
  QMatrix out(n_max);
  for (unsigned l = 0; l < D.size(); ++l) {
    const XPolynomial c = binomial_poly(l);
    for (unsigned n = 1; n <= n_max; ++n)
      for (unsigned k = 1; k + l <= n; ++k)
        if (!is_zero(D[l].at(n, k))) out.at(n, k) += c * D[l].at(n, k);
  }
  return out;
}

QMatrix triangle_power_interpolation(const ConvolutionTriangle& F) {
  require_unit_diagonal(F, "triangle_power_interpolation");
  const unsigned n_max = F.n_max();
  const unsigned m = n_max == 0 ? 0 : n_max - 1;
  const auto P = powers(F, m);
  QMatrix out(n_max);
  for (unsigned j = 0; j <= m; ++j) {
    // C(q, j) C(q-j-1, m-j) (-1)^{m-j}
    XPolynomial weight = binomial_poly(j) * shift(binomial_poly(m - j), Rational(-static_cast<long>(j) - 1));
    if ((m - j) % 2) weight = -weight;
    for (unsigned n = 1; n <= n_max; ++n)
      for (unsigned k = 1; k <= n; ++k)
        if (!is_zero(P[j].at(n, k))) out.at(n, k) += weight * P[j].at(n, k);
  }
  return out;
}

ConvolutionTriangle evaluate(const QMatrix& Q, const Rational& q) {
  ConvolutionTriangle out(Q.n_max());
  for (unsigned n = 1; n <= Q.n_max(); ++n)
    for (unsigned k = 1; k <= n; ++k) out.at(n, k) = Q.at(n, k)(q);
  return out;
}

TruncatedSeries iterate_series(const TruncatedSeries& f, const Rational& q) {
  if (f.order() < 1 || !is_zero(f[0]) || f[1] != 1)
    throw std::domain_error("iterate_series: requires f(z) = z + O(z^2), i.e. f_1 = 1");
  return first_column_series(triangle_power(triangle_from(f, f.order()), q));
}

std::vector<XPolynomial> iterate_series_symbolic(const TruncatedSeries& f) {
  if (f.order() < 1 || !is_zero(f[0]) || f[1] != 1)
    throw std::domain_error("iterate_series_symbolic: requires f(z) = z + O(z^2), i.e. f_1 = 1");
  const QMatrix Q = triangle_power_symbolic(triangle_from(f, f.order()));
  std::vector<XPolynomial> out{XPolynomial()};
  for (unsigned n = 1; n <= Q.n_max(); ++n) out.push_back(Q.at(n, 1) * (Rational(1) / Rational(factorial(n))));
  return out;
}

LowerTriangle<Rational> triangle_log(const ConvolutionTriangle& F) {
  require_unit_diagonal(F, "triangle_log");
  const unsigned n_max = F.n_max();
  const auto D = powers(minus_identity(F), n_max == 0 ? 0 : n_max - 1);
  LowerTriangle<Rational> out(n_max);
  for (unsigned l = 1; l < D.size(); ++l) {
    const Rational c = Rational(l % 2 ? 1 : -1, l);
    for (unsigned n = 1; n <= n_max; ++n)
      for (unsigned k = 1; k + l <= n; ++k) out.at(n, k) += c * D[l].at(n, k);
  }
  return out;
}

bool iterates_nonnegative(const ConvolutionTriangle& F) {
  const auto L = triangle_log(F);
  for (unsigned n = 1; n <= L.n_max(); ++n)
    if (sgn(L.at(n, 1)) < 0) return false;
  return true;
}

TruncatedSeries revert(const TruncatedSeries& f) {
  if (!is_zero(f[0])) throw std::invalid_argument("revert: f(z) must have zero constant term");
  if (f.order() < 1 || is_zero(f[1])) throw std::domain_error("revert: f_1 = 0, the matrix diagonal is zero");
  const unsigned N = f.order();
  const Rational f1 = f[1];
  // h(z) = f(z/f1) has unit linear term; hhat = h(z)/z.
  std::vector<Rational> hhat(N);
  for (unsigned n = 1; n <= N; ++n) hhat[n - 1] = f[n] / pow(f1, n);
  const TruncatedSeries hat(std::move(hhat));

  std::vector<Rational> g(N + 1, Rational(0));
  for (unsigned n = 1; n <= N; ++n) {
    const TruncatedSeries p = ps_pow(hat.truncate(n - 1), Rational(-static_cast<long>(n)));
    g[n] = p[n - 1] / n / f1;
  }
  return TruncatedSeries(std::move(g));
}

Rational lagrange_entry(const TruncatedSeries& f, unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k == 0) return n == 0 ? 1 : 0;
  if (n > f.order()) throw std::invalid_argument("lagrange_entry: n exceeds the series order");
  std::vector<Rational> hat(f.coeffs().begin() + 1, f.coeffs().end());
  const TruncatedSeries p = ps_pow_int(TruncatedSeries(std::move(hat)).truncate(n - k), k);
  return p[n - k] * Rational(factorial(n)) / Rational(factorial(k));
}

ExtendedEntry extended_entry(const TruncatedSeries& f, unsigned k) {
  if (f.order() < k + 1) throw std::invalid_argument("extended_entry: series order too small");
  if (!is_zero(f[0]) || f[1] != 1) throw std::domain_error("extended_entry: requires f_1 = 1");
  std::vector<Rational> hat(f.coeffs().begin() + 1, f.coeffs().begin() + k + 2);
  const Family fam_hat = family_from(ps_log(TruncatedSeries(std::move(hat))), k);
  XPolynomial poly = falling_poly(k) * shift(fam_hat[k], Rational(-static_cast<long>(k)));
  return {k, std::move(poly)};
}

Rational extended_value(const TruncatedSeries& f, long n, long k) {
  if (k > n) return 0;
  return extended_entry(f, static_cast<unsigned>(n - k)).poly(Rational(n));
}

XPolynomial stirling_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("stirling_polynomial: sigma_0(x) = 1/x is not a polynomial");
  const Family fam = family_from(catalog_series("stirling-poly", n), n);
  return divide_by_linear(fam[n], Rational(0));
}

ConvolutionTriangle scale_triangle(const ConvolutionTriangle& F, const Rational& alpha, const Rational& beta) {
  ConvolutionTriangle out = F;
  for (unsigned n = 1; n <= F.n_max(); ++n)
    for (unsigned k = 1; k <= n; ++k) out.at(n, k) *= pow(alpha, n) * pow(beta, k);
  return out;
}

LowerTriangle<Rational> circ_combine(const LowerTriangle<Rational>& F, const LowerTriangle<Rational>& G) {
  const unsigned n_max = std::min(F.n_max(), G.n_max());
  LowerTriangle<Rational> H(n_max);
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned k = 1; k <= n; ++k) {
      Rational acc = 0;
      for (unsigned j = 0; j <= n; ++j) {
        const Rational c(binomial(n, j));
        for (unsigned i = 0; i <= std::min(j, k); ++i) {
          if (k - i > n - j) continue;
          const Rational a = padded(F, j, i);
          if (is_zero(a)) continue;
          acc += c * a * padded(G, n - j, k - i);
        }
      }
      H.at(n, k) = acc;
    }
  return H;
}

}  // namespace convpoly
