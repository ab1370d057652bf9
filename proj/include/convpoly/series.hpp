#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "convpoly/rational.hpp"

namespace convpoly {

/// Truncated formal power series a_0 + a_1 z + ... + a_N z^N with N = order().
///
/// Coefficients are stored in the ordinary convention. The exponential view
/// exponential(n) = n! [z^n] is what the convolution-matrix formulas use.
/// Binary operations on series of different order produce a result at the
/// smaller order.
template <class C>
class BasicSeries {
 public:
  explicit BasicSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("a truncated series needs at least the constant term");
  }

  static BasicSeries zero(unsigned order) { return BasicSeries(std::vector<C>(order + 1, C(0))); }
  static BasicSeries one(unsigned order) {
    auto s = zero(order);
    s.c_[0] = C(1);
    return s;
  }
  /// The series z (order >= 1 gives a nonzero result).
  static BasicSeries z(unsigned order) {
    auto s = zero(order);
    if (order >= 1) s.c_[1] = C(1);
    return s;
  }
  /// Builds from exponential coefficients e[n] = n! [z^n].
  static BasicSeries from_exponential(const std::vector<C>& e) {
    std::vector<C> c(e.size(), C(0));
    Rational inv_fact = 1;
    for (std::size_t n = 0; n < e.size(); ++n) {
      if (n > 0) inv_fact /= Rational(static_cast<long>(n));
      c[n] = e[n] * inv_fact;
    }
    return BasicSeries(std::move(c));
  }

  unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
  const C& operator[](std::size_t n) const { return c_.at(n); }
  const std::vector<C>& coeffs() const { return c_; }

  C exponential(std::size_t n) const { return c_.at(n) * Rational(factorial(static_cast<unsigned>(n))); }
  std::vector<C> exponential_coeffs() const {
    std::vector<C> out;
    out.reserve(c_.size());
    for (std::size_t n = 0; n < c_.size(); ++n) out.push_back(exponential(n));
    return out;
  }

  BasicSeries truncate(unsigned order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return BasicSeries(std::vector<C>(c_.begin(), c_.begin() + order + 1));
  }

  BasicSeries& operator+=(const BasicSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
    return *this;
  }
  BasicSeries& operator-=(const BasicSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
    return *this;
  }
  BasicSeries& operator*=(const Rational& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend BasicSeries operator+(BasicSeries a, const BasicSeries& b) { return a += b; }
  friend BasicSeries operator-(BasicSeries a, const BasicSeries& b) { return a -= b; }
  friend BasicSeries operator*(BasicSeries a, const Rational& s) { return a *= s; }
  friend BasicSeries operator*(const Rational& s, BasicSeries a) { return a *= s; }
  friend BasicSeries operator-(BasicSeries a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend bool operator==(const BasicSeries& a, const BasicSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<C> c_;
};

using TruncatedSeries = BasicSeries<Rational>;

/// Cauchy product at order min(a.order(), b.order()).
template <class C>
BasicSeries<C> ps_mul(const BasicSeries<C>& a, const BasicSeries<C>& b) {
  const unsigned n_max = std::min(a.order(), b.order());
  std::vector<C> out(n_max + 1, C(0));
  for (unsigned i = 0; i <= n_max; ++i) {
    if (is_zero(a[i])) continue;
    for (unsigned j = 0; i + j <= n_max; ++j) out[i + j] += a[i] * b[j];
  }
  return BasicSeries<C>(std::move(out));
}

template <class C>
BasicSeries<C> ps_pow_int(const BasicSeries<C>& a, unsigned k) {
  BasicSeries<C> result = BasicSeries<C>::one(a.order());
  BasicSeries<C> base = a;
  while (k > 0) {
    if (k & 1U) result = ps_mul(result, base);
    k >>= 1U;
    if (k > 0) base = ps_mul(base, base);
  }
  return result;
}

/// exp(a) for a with zero constant term, via n b_n = sum_k k a_k b_{n-k}.
template <class C>
BasicSeries<C> ps_exp(const BasicSeries<C>& a) {
  if (!is_zero(a[0])) throw std::invalid_argument("ps_exp: constant term must be zero");
  const unsigned n_max = a.order();
  std::vector<C> b(n_max + 1, C(0));
  b[0] = C(1);
  for (unsigned n = 1; n <= n_max; ++n) {
    C acc(0);
    for (unsigned k = 1; k <= n; ++k) {
      if (is_zero(a[k])) continue;
      acc += a[k] * b[n - k] * Rational(static_cast<long>(k));
    }
    b[n] = acc * Rational(1, n);
  }
  return BasicSeries<C>(std::move(b));
}

/// log(a) for a with constant term 1.
template <class C>
BasicSeries<C> ps_log(const BasicSeries<C>& a) {
  if (!(a[0] == C(1))) throw std::invalid_argument("ps_log: constant term must be 1");
  const unsigned n_max = a.order();
  std::vector<C> c(n_max + 1, C(0));
  for (unsigned n = 1; n <= n_max; ++n) {
    C acc(0);
    for (unsigned k = 1; k < n; ++k) {
      if (is_zero(c[k])) continue;
      acc += c[k] * a[n - k] * Rational(static_cast<long>(k));
    }
    c[n] = a[n] - acc * Rational(1, n);
  }
  return BasicSeries<C>(std::move(c));
}

/// a^e = exp(e log a) for a with constant term 1.
template <class C>
BasicSeries<C> ps_pow(const BasicSeries<C>& a, const Rational& e) {
  if (!(a[0] == C(1))) throw std::invalid_argument("ps_pow: constant term must be 1");
  return ps_exp(ps_log(a) * e);
}

/// outer(inner(z)) by Horner's rule; O(N^3) coefficient operations.
template <class C>
BasicSeries<C> ps_compose(const BasicSeries<C>& outer, const BasicSeries<C>& inner) {
  if (!is_zero(inner[0])) throw std::invalid_argument("ps_compose: inner series must have zero constant term");
  const unsigned n_max = std::min(outer.order(), inner.order());
  const BasicSeries<C> in = inner.truncate(n_max);
  BasicSeries<C> acc = BasicSeries<C>::zero(n_max);
  for (unsigned k = n_max + 1; k-- > 0;) {
    acc = ps_mul(acc, in);
    std::vector<C> c = acc.coeffs();
    c[0] += outer[k];
    acc = BasicSeries<C>(std::move(c));
  }
  return acc;
}

/// d/dz, order N-1 (order 0 stays at order 0).
template <class C>
BasicSeries<C> ps_derive(const BasicSeries<C>& a) {
  if (a.order() == 0) return BasicSeries<C>::zero(0);
  std::vector<C> c(a.order(), C(0));
  for (unsigned n = 0; n < a.order(); ++n) c[n] = a[n + 1] * Rational(static_cast<long>(n + 1));
  return BasicSeries<C>(std::move(c));
}

/// Compositional inverse of a series f = z + O(z^2), by the fixed point
/// g <- g - (f(g) - z); every pass fixes one more coefficient.
template <class C>
BasicSeries<C> ps_revert_unit(const BasicSeries<C>& f) {
  if (!is_zero(f[0]) || f.order() < 1 || !(f[1] == C(1)))
    throw std::invalid_argument("ps_revert_unit: series must be z + O(z^2)");
  const auto z = BasicSeries<C>::z(f.order());
  BasicSeries<C> g = z;
  for (unsigned pass = 1; pass < f.order(); ++pass) g = g - (ps_compose(f, g) - z);
  return g;
}

/// 1/a for a rational series with nonzero constant term.
TruncatedSeries ps_inv(const TruncatedSeries& a);

}  // namespace convpoly
