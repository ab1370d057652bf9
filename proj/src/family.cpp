#include "convpoly/family.hpp"

#include <stdexcept>

namespace convpoly {

namespace {

const XPolynomial& x_poly() {
  static const XPolynomial x = XPolynomial::identity();
  return x;
}

// F_n(v)/v for n >= 1; exact because F_n(0) = 0.
XPolynomial quotient_by_x(const XPolynomial& p) { return divide_by_linear(p, Rational(0)); }

}  // namespace

Family::Family(std::vector<XPolynomial> polys, std::optional<TruncatedSeries> source, std::string name)
    : polys_(std::move(polys)), source_(std::move(source)), name_(std::move(name)) {
  if (polys_.empty()) throw std::invalid_argument("a family needs at least F_0");
}

std::vector<Rational> Family::matrix_row(std::size_t n) const {
  std::vector<Rational> row;
  const Rational nf(factorial(static_cast<unsigned>(n)));
  for (std::size_t k = 1; k <= n; ++k) row.emplace_back(polys_.at(n).coeff(k) * nf);
  return row;
}

bool Family::is_degenerate() const {
  for (const auto& p : polys_)
    if (!p.is_zero()) return false;
  return true;
}

Family family_from(const TruncatedSeries& f, unsigned N) {
  if (!is_zero(f[0])) throw std::invalid_argument("family_from: f(z) must have zero constant term");
  N = std::min(N, f.order());
  std::vector<XPolynomial> polys;
  polys.reserve(N + 1);
  polys.push_back(XPolynomial::constant(1));
  for (unsigned n = 1; n <= N; ++n) {
    XPolynomial acc;
    for (unsigned k = 1; k <= n; ++k) {
      if (is_zero(f[k])) continue;
      acc += polys[n - k] * Rational(f[k] * k);
    }
    acc = acc * x_poly();
    acc *= Rational(1, n);
    polys.push_back(std::move(acc));
  }
  return Family(std::move(polys), f.truncate(N));
}

Rational family_value(const TruncatedSeries& f, unsigned n, const Rational& x) {
  if (!is_zero(f[0])) throw std::invalid_argument("family_value: f(z) must have zero constant term");
  if (n > f.order()) throw std::invalid_argument("family_value: index exceeds the series order");
  std::vector<Rational> v(n + 1);
  v[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (unsigned k = 1; k <= m; ++k) {
      if (is_zero(f[k])) continue;
      acc += f[k] * k * v[m - k];
    }
    v[m] = acc * x / m;
  }
  return v[n];
}

Family family_from_weak_condition(std::span<const Rational> first_column) {
  const auto N = static_cast<unsigned>(first_column.size());
  std::vector<XPolynomial> polys{XPolynomial::constant(1)};
  for (unsigned n = 1; n <= N; ++n) {
    XPolynomial cross;
    for (unsigned m = 1; m < n; ++m) cross += polys[m] * polys[n - m];
    std::vector<Rational> c(n + 1, Rational(0));
    c[1] = first_column[n - 1] / Rational(factorial(n));
    // [x^k]: 2^k c_k on the left, 2 c_k plus the cross terms on the right.
    for (unsigned k = 2; k <= n; ++k) c[k] = cross.coeff(k) / Rational((Integer(1) << k) - 2);
    polys.emplace_back(std::move(c));
  }
  return Family(std::move(polys));
}

Rational check_convolution(const Family& fam, unsigned n, const Rational& x, const Rational& y) {
  Rational rhs = 0;
  for (unsigned k = 0; k <= n; ++k) rhs += fam.value(k, x) * fam.value(n - k, y);
  return fam.value(n, x + y) - rhs;
}

Rational check_weak_convolution(const Family& fam, unsigned n, const Rational& x) {
  return check_convolution(fam, n, x, x);
}

Rational check_derived_convolution(const Family& fam, unsigned n, const Rational& x, const Rational& y) {
  Rational sum = 0;
  for (unsigned k = 1; k <= n; ++k) sum += fam.value(k, x) * fam.value(n - k, y) * k;
  return (x + y) * sum - x * n * fam.value(n, x + y);
}

ShiftResiduals check_shift_identities(const Family& fam, unsigned n, const Rational& x, const Rational& y,
                                      const Rational& t) {
  std::vector<XPolynomial> q(n + 1);
  for (unsigned k = 1; k <= n; ++k) q[k] = quotient_by_x(fam[k]);
  auto q_at = [&](unsigned k, const Rational& v) { return q[k](v); };
  // y F_m(y+tm)/(y+tm), which is 1 for m = 0
  auto shifted = [&](unsigned m, const Rational& v) -> Rational {
    if (m == 0) return fam.value(0, v);
    return v * q_at(m, v + t * m);
  };

  Rational conv_rhs = 0;
  Rational derived_rhs = 0;
  for (unsigned k = 0; k <= n; ++k) {
    conv_rhs += shifted(k, x) * shifted(n - k, y);
    if (k >= 1) derived_rhs += q_at(k, x + t * k) * k * shifted(n - k, y);
  }
  const Rational s = x + y + t * n;
  const Rational conv_lhs = n == 0 ? fam.value(0, x + y) : (x + y) * q_at(n, s);
  const Rational derived_lhs = n == 0 ? Rational(0) : Rational(q_at(n, s) * n);
  return {conv_lhs - conv_rhs, derived_lhs - derived_rhs};
}

Rational rothe_residual(const Rational& x, const Rational& y, const Rational& t, unsigned n) {
  Rational sum = 0;
  for (unsigned k = 0; k <= n; ++k)
    sum += binomial(Rational(x + t * (n - k)), n - k) * binomial_family_coefficient(t, y, k);
  return sum - binomial(Rational(x + y + t * n), n);
}

TruncatedSeries binomial_series(const Rational& t, unsigned N) {
  TruncatedSeries b = TruncatedSeries::one(N);
  for (unsigned pass = 0; pass <= N; ++pass) {
    const TruncatedSeries bt = ps_pow(b, t);
    std::vector<Rational> c(N + 1, Rational(0));
    c[0] = 1;
    for (unsigned n = 1; n <= N; ++n) c[n] = bt[n - 1];
    b = TruncatedSeries(std::move(c));
  }
  return b;
}

Rational binomial_family_coefficient(const Rational& t, const Rational& x, unsigned n) {
  if (n == 0) return 1;
  Rational out = x;
  const Rational top = x + t * n;
  for (unsigned i = 1; i < n; ++i) out *= top - i;
  return out / Rational(factorial(n));
}

TruncatedSeries tree_function(unsigned N) {
  // T_n = E_{n-1} with E = e^T, and m E_m = sum_k k T_k E_{m-k}.
  std::vector<Rational> T(N + 1, Rational(0)), E(N + 1, Rational(0));
  E[0] = 1;
  for (unsigned n = 1; n <= N; ++n) {
    T[n] = E[n - 1];
    Rational acc = 0;
    for (unsigned k = 1; k <= n; ++k) acc += T[k] * k * E[n - k];
    E[n] = acc / n;
  }
  return TruncatedSeries(std::move(T));
}

Family tree_polynomials(unsigned N) { return catalog("tree-poly", N); }

Family idempotent_polynomials(unsigned N) { return catalog("idempotent", N); }

Family umbral_substitute(const Family& F, const Family& G) {
  const unsigned N = std::min(F.order(), G.order());
  std::vector<XPolynomial> polys;
  for (unsigned n = 0; n <= N; ++n) {
    XPolynomial acc;
    const auto& c = F[n].coeffs();
    for (unsigned k = 0; k < c.size(); ++k) {
      if (is_zero(c[k])) continue;
      acc += G[k] * Rational(c[k] * factorial(k));
    }
    polys.push_back(std::move(acc));
  }
  std::optional<TruncatedSeries> source;
  if (F.source() && G.source()) source = ps_compose(*G.source(), *F.source()).truncate(N);
  return Family(std::move(polys), std::move(source));
}

Family t_shift(const Family& F, const Rational& t) {
  std::vector<XPolynomial> polys{F[0]};
  for (unsigned n = 1; n <= F.order(); ++n) {
    const Rational c = t * n;
    polys.push_back(divide_by_linear(shift(F[n], c), c) * x_poly());
  }
  std::optional<TruncatedSeries> source;
  if (const auto& f = F.source()) {
    // G = F(z G^t), iterated from G = 1; one more coefficient per pass.
    const unsigned N = f->order();
    TruncatedSeries g = TruncatedSeries::one(N);
    for (unsigned pass = 0; pass <= N; ++pass) {
      const TruncatedSeries gt = ps_pow(g, t);
      std::vector<Rational> c(N + 1, Rational(0));
      for (unsigned n = 1; n <= N; ++n) c[n] = gt[n - 1];
      g = ps_exp(ps_compose(*f, TruncatedSeries(std::move(c))));
    }
    source = ps_log(g);
  }
  return Family(std::move(polys), std::move(source));
}

Family combine(const Family& F, const Family& G, const Rational& t) {
  const unsigned N = std::min(F.order(), G.order());
  std::vector<XPolynomial> polys;
  for (unsigned n = 0; n <= N; ++n) {
    XPolynomial acc;
    for (unsigned k = 0; k <= n; ++k) acc += F[k] * shift(G[n - k], Rational(t * k));
    polys.push_back(std::move(acc));
  }
  std::optional<TruncatedSeries> source;
  if (F.source() && G.source()) {
    // ln(G(z) F(z G(z)^t)) = g(z) + f(z e^{t g(z)})
    const TruncatedSeries& f = *F.source();
    const TruncatedSeries& g = *G.source();
    const TruncatedSeries inner = ps_mul(TruncatedSeries::z(N), ps_exp(g * t));
    source = (g + ps_compose(f, inner)).truncate(N);
  }
  return Family(std::move(polys), std::move(source));
}

}  // namespace convpoly
