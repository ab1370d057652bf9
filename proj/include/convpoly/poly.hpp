#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "convpoly/rational.hpp"

namespace convpoly {

/// Dense univariate polynomial, coeffs()[k] = [x^k]. Trailing zeros are
/// trimmed so the zero polynomial has no coefficients and degree -1.
template <class C>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const C& v) { return Poly(std::vector<C>{v}); }
  static Poly monomial(const C& v, std::size_t k) {
    std::vector<C> c(k + 1, C(0));
    c[k] = v;
    return Poly(std::move(c));
  }
  static Poly identity() { return monomial(C(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(std::size_t k) const { return k < c_.size() ? c_[k] : C(0); }

  /// Horner evaluation; V must absorb products C*V.
  template <class V>
  V operator()(const V& at) const {
    V acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) {
      acc *= at;
      acc += c_[k];
    }
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<C> out(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (convpoly::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && convpoly::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

template <class C>
bool is_zero(const Poly<C>& p) {
  return p.is_zero();
}

using XPolynomial = Poly<Rational>;

/// p(x + c)
template <class C>
Poly<C> shift(const Poly<C>& p, const C& c) {
  const Poly<C> lin(std::vector<C>{c, C(1)});
  Poly<C> acc;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    acc = acc * lin;
    acc += Poly<C>::constant(p.coeffs()[k]);
  }
  return acc;
}

/// p(q(x))
template <class C>
Poly<C> compose(const Poly<C>& p, const Poly<C>& q) {
  Poly<C> acc;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    acc = acc * q;
    acc += Poly<C>::constant(p.coeffs()[k]);
  }
  return acc;
}

template <class C>
Poly<C> derivative(const Poly<C>& p) {
  if (p.degree() < 1) return Poly<C>();
  std::vector<C> out(p.coeffs().size() - 1, C(0));
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) out[k - 1] = p.coeffs()[k] * Rational(static_cast<long>(k));
  return Poly<C>(std::move(out));
}

/// p(x) / (x + c). Throws std::domain_error when the division leaves a remainder.
XPolynomial divide_by_linear(const XPolynomial& p, const Rational& c);

/// y(y-1)...(y-k+1) as a polynomial in y.
XPolynomial falling_poly(unsigned k);
/// C(q, k) = q^{falling k}/k! as a polynomial in q.
XPolynomial binomial_poly(unsigned k);

}  // namespace convpoly
