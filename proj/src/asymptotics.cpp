#include "convpoly/asymptotics.hpp"

#include <cmath>

#include "convpoly/family.hpp"
#include "convpoly/poly.hpp"

namespace convpoly {

namespace {

using SymSeries = BasicSeries<MultiPoly>;
using SymPoly = Poly<MultiPoly>;
// grid[j][i]: coefficient of w^j n^i, w = 1/x.
using Grid = std::vector<std::vector<MultiPoly>>;

void require_unit_linear(const TruncatedSeries& f, const char* what) {
  if (f.order() < 1 || !is_zero(f[0]) || f[1] != 1)
    throw std::domain_error(std::string(what) + ": requires f(z) = z + O(z^2)");
}

SymSeries ordinary_from_exponential(std::span<const MultiPoly> e, unsigned order) {
  std::vector<MultiPoly> c(order + 1);
  for (unsigned k = 0; k <= order && k < e.size(); ++k) c[k] = e[k] * (Rational(1) / Rational(factorial(k)));
  return SymSeries(std::move(c));
}

SymPoly lift(const XPolynomial& p) {
  std::vector<MultiPoly> c;
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return SymPoly(std::move(c));
}

Grid grid_zero(unsigned J) { return Grid(J + 1, std::vector<MultiPoly>(2 * J + 1)); }

Grid grid_mul(const Grid& a, const Grid& b, unsigned J) {
  Grid out = grid_zero(J);
  for (unsigned ja = 0; ja <= J; ++ja)
    for (unsigned ia = 0; ia < a[ja].size(); ++ia) {
      if (a[ja][ia].is_zero()) continue;
      for (unsigned jb = 0; ja + jb <= J; ++jb)
        for (unsigned ib = 0; ib < b[jb].size() && ia + ib <= 2 * J; ++ib) {
          if (b[jb][ib].is_zero()) continue;
          out[ja + jb][ia + ib] += a[ja][ia] * b[jb][ib];
        }
    }
  return out;
}

std::vector<MultiPoly> to_multi(const TruncatedSeries& f, unsigned count) {
  std::vector<MultiPoly> e;
  for (unsigned k = 0; k <= count; ++k) e.emplace_back(f.exponential(k));
  return e;
}

struct Numeric {
  std::vector<double> a;  // ordinary coefficients

  explicit Numeric(const TruncatedSeries& f) {
    for (const auto& c : f.coeffs()) a.push_back(c.get_d());
  }

  // k-th derivative at s
  double derivative(unsigned k, double s) const {
    double acc = 0;
    for (std::size_t m = a.size(); m-- > k;) {
      double fall = 1;
      for (unsigned i = 0; i < k; ++i) fall *= static_cast<double>(m - i);
      acc = acc * s + a[m] * fall;
    }
    return acc;
  }
};

double saddle_seed(const TruncatedSeries& f, double y) {
  const unsigned order = std::min(3U, f.order() - 1);
  const auto e = to_multi(f, order + 1);
  const SymSeries u = saddle_quotient_series(e, order);
  double acc = 0;
  for (unsigned k = order + 1; k-- > 0;) acc = acc * y + u[k].constant_term().get_d();
  const double s = y * acc;
  return std::isfinite(s) && s > 0 ? s : y;
}

}  // namespace

std::vector<MultiPoly> generic_exponential_coeffs(unsigned count) {
  std::vector<MultiPoly> e{MultiPoly(0), MultiPoly(1)};
  for (unsigned k = 2; k <= count; ++k) e.push_back(MultiPoly::variable(k - 2));
  return e;
}

std::vector<std::string> atom_names(unsigned count) {
  std::vector<std::string> names;
  for (unsigned k = 2; k <= count; ++k) names.push_back("f" + std::to_string(k));
  return names;
}

SymSeries saddle_quotient_series(std::span<const MultiPoly> exp_coeffs, unsigned order) {
  if (exp_coeffs.size() < order + 2) throw std::invalid_argument("saddle_quotient_series: too few coefficients");
  const SymSeries f = ordinary_from_exponential(exp_coeffs, order + 1);
  // g(s) = s f'(s), then s(y) = g^{-1}(y) and s/y drops one order.
  std::vector<MultiPoly> g(order + 2);
  for (unsigned k = 1; k <= order + 1; ++k) g[k] = f[k] * Rational(k);
  const SymSeries s = ps_revert_unit(SymSeries(std::move(g)));
  return SymSeries(std::vector<MultiPoly>(s.coeffs().begin() + 1, s.coeffs().end()));
}

std::vector<std::vector<MultiPoly>> ratio_expansion(std::span<const MultiPoly> exp_coeffs, unsigned J) {
  if (exp_coeffs.size() < J + 2) throw std::invalid_argument("ratio_expansion: too few coefficients");
  const SymSeries f = ordinary_from_exponential(exp_coeffs, J + 1);

  // Denominator approx/(x^n/n!) = exp(n h(y)), h = u phi(y u) - 1 - ln u,
  // with u = s/y and phi(s) = f(s)/s.
  const SymSeries u = saddle_quotient_series(exp_coeffs, J);
  const SymSeries phi(std::vector<MultiPoly>(f.coeffs().begin() + 1, f.coeffs().end()));
  std::vector<MultiPoly> s_coeffs{MultiPoly(0)};
  for (unsigned k = 0; k < J; ++k) s_coeffs.push_back(u[k]);
  const SymSeries s(std::move(s_coeffs));
  const SymSeries h = ps_mul(u, ps_compose(phi, s)) - SymSeries::one(J) - ps_log(u);

  // n h(n w) = sum_m h_m n^{m+1} w^m
  Grid X = grid_zero(J);
  for (unsigned m = 1; m <= J; ++m) X[m][m + 1] = -h[m];
  Grid E = grid_zero(J);
  E[0][0] = MultiPoly(1);
  Grid term = E;
  for (unsigned r = 1; r <= J; ++r) {
    term = grid_mul(term, X, J);
    for (auto& row : term)
      for (auto& v : row) v *= Rational(1, r);
    for (unsigned j = 0; j <= J; ++j)
      for (unsigned i = 0; i <= 2 * J; ++i) E[j][i] += term[j][i];
  }

  // Numerator F_n(x)/(x^n/n!) = sum_k f_{n(n-k)} w^k with
  // f_{n(n-k)} = n^{falling k} Fhat_k(n - k), Fhat_k(x) = sum_r x^r [z^k] L^r / r!, L = ln phi.
  const SymSeries L = ps_log(phi.truncate(J));
  Grid num = grid_zero(J);
  num[0][0] = MultiPoly(1);
  std::vector<SymSeries> L_powers{SymSeries::one(J)};
  for (unsigned r = 1; r <= J; ++r) L_powers.push_back(ps_mul(L_powers.back(), L));
  for (unsigned k = 1; k <= J; ++k) {
    std::vector<MultiPoly> fhat(k + 1);
    for (unsigned r = 0; r <= k; ++r) fhat[r] = L_powers[r][k] * (Rational(1) / Rational(factorial(r)));
    const SymPoly p = lift(falling_poly(k)) * shift(SymPoly(std::move(fhat)), MultiPoly(-static_cast<int>(k)));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) num[k][i] = p.coeffs()[i];
  }

  const Grid ratio = grid_mul(num, E, J);
  std::vector<std::vector<MultiPoly>> a(2 * J + 1, std::vector<MultiPoly>(J + 1));
  for (unsigned j = 0; j <= J; ++j)
    for (unsigned i = 0; i <= 2 * J; ++i) a[i][j] = ratio[j][i];
  return a;
}

SymbolicRatioSeries ratio_series_symbolic(unsigned max_i, unsigned max_j) {
  if (max_i > 4) throw std::invalid_argument("ratio_series_symbolic: symbolic mode supports max_i <= 4");
  const unsigned J = max_i + max_j;
  const auto e = generic_exponential_coeffs(J + 1);
  const auto a = ratio_expansion(e, J);
  SymbolicRatioSeries out;
  out.c.assign(max_i + 1, std::vector<MultiPoly>(max_j + 1));
  for (unsigned i = 0; i <= max_i; ++i)
    for (unsigned j = 0; j <= max_j; ++j) out.c[i][j] = a[i][i + j];
  return out;
}

RatioSeries ratio_series(const TruncatedSeries& f, unsigned max_i, unsigned max_j) {
  require_unit_linear(f, "ratio_series");
  const unsigned J = max_i + max_j;
  if (f.order() < J + 1) throw std::invalid_argument("ratio_series: series order must be at least max_i + max_j + 1");
  const auto a = ratio_expansion(to_multi(f, J + 1), J);
  RatioSeries out;
  out.c.assign(max_i + 1, std::vector<Rational>(max_j + 1));
  for (unsigned i = 0; i <= max_i; ++i)
    for (unsigned j = 0; j <= max_j; ++j) out.c[i][j] = a[i][i + j].constant_term();
  return out;
}

double RatioSeries::evaluate(double y, double x) const {
  double total = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j)
      total += c[i][j].get_d() * std::pow(y, static_cast<double>(i)) * std::pow(x, -static_cast<double>(j));
  return total;
}

PjiTriangle p_triangle(unsigned j_max) {
  // d[m][c]: permutations of m elements, c cycles, no fixed points.
  const unsigned m_max = 2 * j_max;
  std::vector<std::vector<Integer>> d(m_max + 1, std::vector<Integer>(j_max + 1, 0));
  d[0][0] = 1;
  for (unsigned m = 2; m <= m_max; ++m)
    for (unsigned c = 1; c <= j_max; ++c) d[m][c] = (m - 1) * (d[m - 1][c] + d[m - 2][c - 1]);
  PjiTriangle out;
  for (unsigned j = 1; j <= j_max; ++j) {
    std::vector<Integer> row;
    for (unsigned i = 1; i <= j; ++i) row.push_back(d[i + j][i]);
    out.p.push_back(std::move(row));
  }
  return out;
}

double saddle_solve(const TruncatedSeries& f, unsigned n, double x) {
  require_unit_linear(f, "saddle_solve");
  if (n == 0 || !(x > 0)) throw std::invalid_argument("saddle_solve: needs n >= 1 and x > 0");
  const Numeric num(f);
  const double y = n / x;
  auto residual = [&](double s) { return s * num.derivative(1, s) - y; };
  double s = saddle_seed(f, y);
  double r = residual(s);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::fabs(r) <= 1e-12 * y) return s;
    const double slope = num.derivative(1, s) + s * num.derivative(2, s);
    if (!(std::isfinite(slope) && slope != 0)) break;
    double step = r / slope;
    double candidate = s - step;
    double rc = residual(candidate);
    for (int halvings = 0; halvings < 40 && !(std::isfinite(rc) && std::fabs(rc) < std::fabs(r)); ++halvings) {
      step /= 2;
      candidate = s - step;
      rc = residual(candidate);
    }
    if (!(std::isfinite(rc) && std::fabs(rc) < std::fabs(r))) break;
    s = candidate;
    r = rc;
  }
  if (std::fabs(r) <= 1e-12 * y) return s;
  throw SaddleError("saddle_solve: Newton iteration did not converge", s);
}

double log_approx(const TruncatedSeries& f, unsigned n, double x) {
  const double s = saddle_solve(f, n, x);
  const Numeric num(f);
  const double dn = n;
  return x * num.derivative(0, s) + dn * (std::log(dn) - 1.0 - std::log(s)) - std::lgamma(dn + 1.0);
}

double approx(const TruncatedSeries& f, unsigned n, double x) { return std::exp(log_approx(f, n, x)); }

double correction_factor(const TruncatedSeries& f, unsigned n, double x) {
  const double s = saddle_solve(f, n, x);
  const Numeric num(f);
  const double y = n / x;
  const double d2 = num.derivative(2, s);
  const double d3 = num.derivative(3, s);
  const double d4 = num.derivative(4, s);
  const double base = 1.0 + s * s * d2 / y;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double A = s3 * d2 * d2 * d2 / (12.0 * y) - 0.75 * s * d2 * d2 - 0.5 * s2 * d2 * d3 -
                   5.0 / 24.0 * s3 * d3 * d3 + y * d3 / 3.0 + s3 * d2 * d4 / 8.0 + s * y * d4 / 8.0;
  const double q = s / y;
  return 1.0 / std::sqrt(base) + q * q * q * A / (x * std::pow(base, 3.5));
}

double corrected_approx(const TruncatedSeries& f, unsigned n, double x) {
  return approx(f, n, x) * correction_factor(f, n, x);
}

SaddleReport compare(const TruncatedSeries& f, unsigned n, double x) {
  if (f.order() < n) throw std::invalid_argument("compare: series order is below n");
  SaddleReport r;
  r.n = n;
  r.x = x;
  r.y = n / x;
  r.s = saddle_solve(f, n, x);
  r.log_approx = log_approx(f, n, x);
  r.approx = std::exp(r.log_approx);
  const Rational exact = family_value(f, n, from_double(x));
  const double sign = sgn(exact) < 0 ? -1.0 : 1.0;
  r.log_exact = log_abs(exact);
  r.exact = sign * std::exp(r.log_exact);
  r.ratio = sign * std::exp(r.log_exact - r.log_approx);
  r.ratio_series_estimate = ratio_series(f, 2, 0).evaluate(r.y, x);
  r.corrected = r.approx * correction_factor(f, n, x);
  r.outside_validity = r.y > 0.5;
  return r;
}

}  // namespace convpoly
