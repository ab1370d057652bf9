#include <functional>
#include <map>
#include <stdexcept>

#include "convpoly/family.hpp"

namespace convpoly {

namespace {

using Builder = std::function<TruncatedSeries(unsigned, const CatalogParams&)>;

TruncatedSeries from_ordinary(unsigned N, const std::function<Rational(unsigned)>& coeff) {
  std::vector<Rational> c(N + 1, Rational(0));
  for (unsigned n = 1; n <= N; ++n) c[n] = coeff(n);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries identity_series(unsigned N, const CatalogParams&) { return TruncatedSeries::z(N); }

// ln(1+z)
TruncatedSeries log_one_plus(unsigned N, const CatalogParams&) {
  return from_ordinary(N, [](unsigned n) -> Rational { return Rational(n % 2 ? 1 : -1, n); });
}

// ln 1/(1-z)
TruncatedSeries log_geometric(unsigned N, const CatalogParams&) {
  return from_ordinary(N, [](unsigned n) -> Rational { return Rational(1, n); });
}

// ln (1+sz)^{1/s}
TruncatedSeries s_step(unsigned N, const CatalogParams& p) {
  return from_ordinary(N, [&](unsigned n) -> Rational {
    Rational c = pow(p.s, static_cast<long>(n) - 1) / n;
    return n % 2 ? c : Rational(-c);
  });
}

TruncatedSeries catalan_t(unsigned N, const CatalogParams& p) { return ps_log(binomial_series(p.t, N)); }

TruncatedSeries tree(unsigned N, const CatalogParams&) { return tree_function(N); }

// ln 1/(1 - T(z))
TruncatedSeries tree_poly(unsigned N, const CatalogParams&) {
  return -ps_log(TruncatedSeries::one(N) - tree_function(N));
}

// z e^z
TruncatedSeries idempotent(unsigned N, const CatalogParams&) {
  return from_ordinary(N, [](unsigned n) -> Rational { return Rational(1) / Rational(factorial(n - 1)); });
}

// e^z - 1
TruncatedSeries exp_minus_one(unsigned N, const CatalogParams&) {
  return from_ordinary(N, [](unsigned n) -> Rational { return Rational(1) / Rational(factorial(n)); });
}

TruncatedSeries arcsin(unsigned N, const CatalogParams&) {
  return from_ordinary(N, [](unsigned n) -> Rational {
    if (n % 2 == 0) return Rational(0);
    const unsigned k = (n - 1) / 2;
    Rational c(binomial(2 * k, k));
    c /= Rational(Integer(1) << (2 * k));
    return Rational(c / n);
  });
}

// 2 sinh(z/2)
TruncatedSeries central_factorial(unsigned N, const CatalogParams&) {
  return from_ordinary(N, [](unsigned n) -> Rational {
    if (n % 2 == 0) return Rational(0);
    return Rational(Rational(1) / Rational(factorial(n) * (Integer(1) << (n - 1))));
  });
}

// ln(z e^z/(e^z - 1)) = ln(z/(1 - e^{-z}))
TruncatedSeries stirling_poly(unsigned N, const CatalogParams&) {
  std::vector<Rational> d(N + 1);
  for (unsigned k = 0; k <= N; ++k) {
    d[k] = Rational(1) / Rational(factorial(k + 1));
    if (k % 2) d[k] = -d[k];
  }
  return ps_log(ps_inv(TruncatedSeries(std::move(d))));
}

// z/(1-z)
TruncatedSeries lah(unsigned N, const CatalogParams&) {
  return from_ordinary(N, [](unsigned) -> Rational { return Rational(1); });
}

// ln 1/(2 - e^z)
TruncatedSeries preferential(unsigned N, const CatalogParams& p) {
  return -ps_log(TruncatedSeries::one(N) - exp_minus_one(N, p));
}

const std::map<std::string, Builder, std::less<>>& registry() {
  static const std::map<std::string, Builder, std::less<>> table{
      {"exp", identity_series},
      {"power", identity_series},
      {"binomial", log_one_plus},
      {"stirling1-signed", log_one_plus},
      {"rising", log_geometric},
      {"log-geometric", log_geometric},
      {"stirling1", log_geometric},
      {"s-step", s_step},
      {"catalan-t", catalan_t},
      {"tree", tree},
      {"tree-poly", tree_poly},
      {"idempotent", idempotent},
      {"bell", exp_minus_one},
      {"exp-minus-one", exp_minus_one},
      {"stirling2", exp_minus_one},
      {"arcsin", arcsin},
      {"central-factorial", central_factorial},
      {"stirling-poly", stirling_poly},
      {"lah", lah},
      {"preferential", preferential},
  };
  return table;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, builder] : registry()) names.push_back(name);
  return names;
}

TruncatedSeries catalog_series(std::string_view name, unsigned N, const CatalogParams& params) {
  const auto& table = registry();
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown family '" + std::string(name) + "'");
  return it->second(N, params);
}

Family catalog(std::string_view name, unsigned N, const CatalogParams& params) {
  const Family fam = family_from(catalog_series(name, N, params), N);
  return Family(fam.polys(), fam.source(), std::string(name));
}

}  // namespace convpoly
