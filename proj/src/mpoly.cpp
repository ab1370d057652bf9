#include "convpoly/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace convpoly {

namespace {

MultiPoly::Exponents add_exponents(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
  MultiPoly::Exponents out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace

MultiPoly::MultiPoly(const Rational& v) {
  if (!convpoly::is_zero(v)) terms_.emplace(Exponents{}, v);
}

MultiPoly MultiPoly::variable(std::size_t index) {
  MultiPoly out;
  Exponents e(index + 1, 0);
  e[index] = 1;
  out.terms_.emplace(std::move(e), Rational(1));
  return out;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MultiPoly::constant_term() const { return coefficient({}); }

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::evaluate(std::span<const Rational> values) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size() && !convpoly::is_zero(term); ++i) {
      if (e[i] == 0) continue;
      term *= i < values.size() ? pow(values[i], static_cast<long>(e[i])) : Rational(0);
    }
    total += term;
  }
  return total;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    bool has_atoms = false;
    for (unsigned v : e) has_atoms |= v != 0;
    if (!has_atoms || mag != 1) os << convpoly::to_string(mag);
    bool need_star = has_atoms && mag != 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << (i < names.size() ? names[i] : "a" + std::to_string(i));
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (convpoly::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (convpoly::is_zero(it->second)) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (convpoly::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), Rational(ca * cb));
  return out;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

}  // namespace convpoly
