#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "convpoly/rational.hpp"

namespace convpoly {

/// Sparse polynomial over the rationals in finitely many indexed atoms.
/// Used as the coefficient ring when series coefficients are kept symbolic
/// (e.g. f2, f3, f4 as free parameters).
class MultiPoly {
 public:
  /// Exponent vector; trailing zeros trimmed, so the constant monomial is {}.
  using Exponents = std::vector<unsigned>;

  MultiPoly() = default;
  MultiPoly(int v) : MultiPoly(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& v);                  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(std::size_t index);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant monomial.
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  /// Atoms beyond values.size() evaluate to zero.
  Rational evaluate(std::span<const Rational> values) const;

  /// Human-readable form, atom i printed as names[i].
  std::string to_string(std::span<const std::string> names) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(MultiPoly a, int s) { return a *= Rational(s); }
  friend MultiPoly operator*(int s, MultiPoly a) { return a *= Rational(s); }
  friend MultiPoly operator-(MultiPoly a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::map<Exponents, Rational> terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

}  // namespace convpoly
