#include "convpoly/poly.hpp"

namespace convpoly {

XPolynomial divide_by_linear(const XPolynomial& p, const Rational& c) {
  if (p.degree() < 1) {
    if (p.is_zero()) return p;
    throw std::domain_error("constant polynomial is not divisible by a linear factor");
  }
  const Rational root = -c;
  const auto& a = p.coeffs();
  std::vector<Rational> q(a.size() - 1);
  Rational carry = a.back();
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = a[k] + root * carry;
  }
  if (!is_zero(carry)) throw std::domain_error("polynomial division by (x + c) is not exact");
  return XPolynomial(std::move(q));
}

XPolynomial falling_poly(unsigned k) {
  XPolynomial out = XPolynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) out *= XPolynomial(std::vector<Rational>{Rational(-static_cast<long>(i)), Rational(1)});
  return out;
}

XPolynomial binomial_poly(unsigned k) {
  XPolynomial out = falling_poly(k);
  out *= Rational(1) / Rational(factorial(k));
  return out;
}

}  // namespace convpoly
