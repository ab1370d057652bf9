#include "convpoly/io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace convpoly {

namespace {

Json rationals_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational as \"p/q\" or an integer");
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Json series_to_json(const TruncatedSeries& s) {
  Json j;
  j["order"] = s.order();
  j["coeffs"] = rationals_to_json(s.coeffs());
  return j;
}

TruncatedSeries series_from_json(const Json& j) {
  auto coeffs = rationals_from_json(j.at("coeffs"));
  if (j.contains("order") && j.at("order").get<unsigned>() + 1 != coeffs.size())
    throw std::invalid_argument("series order does not match the coefficient count");
  return TruncatedSeries(std::move(coeffs));
}

Json family_to_json(const Family& fam) {
  Json j;
  j["order"] = fam.order();
  if (!fam.name().empty()) j["name"] = fam.name();
  Json rows = Json::array();
  for (unsigned n = 1; n <= fam.order(); ++n) rows.push_back(rationals_to_json(fam.matrix_row(n)));
  j["rows"] = rows;
  return j;
}

Family family_from_json(const Json& j) {
  const auto& rows = j.at("rows");
  std::vector<XPolynomial> polys{XPolynomial::constant(1)};
  unsigned n = 0;
  for (const auto& row : rows) {
    ++n;
    auto entries = rationals_from_json(row);
    if (entries.size() != n) throw std::invalid_argument("family row n must have n entries");
    std::vector<Rational> c(n + 1, Rational(0));
    const Rational inv = Rational(1) / Rational(factorial(n));
    for (unsigned k = 1; k <= n; ++k) c[k] = entries[k - 1] * inv;
    polys.emplace_back(std::move(c));
  }
  if (j.contains("order") && j.at("order").get<unsigned>() != n)
    throw std::invalid_argument("family order does not match the row count");
  return Family(std::move(polys), std::nullopt, j.value("name", std::string{}));
}

Json triangle_to_json(const LowerTriangle<Rational>& t) {
  Json j;
  j["n_max"] = t.n_max();
  Json rows = Json::array();
  for (const auto& row : t.rows()) rows.push_back(rationals_to_json(row));
  j["rows"] = rows;
  return j;
}

LowerTriangle<Rational> triangle_from_json(const Json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j.at("rows")) rows.push_back(rationals_from_json(row));
  return LowerTriangle<Rational>(std::move(rows));
}

std::string triangle_to_tsv(const LowerTriangle<Rational>& t) {
  std::string out;
  for (const auto& row : t.rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += '\t';
      out += to_string(row[k]);
    }
    out += '\n';
  }
  return out;
}

Json qmatrix_to_json(const QMatrix& q) {
  Json j;
  j["n_max"] = q.n_max();
  Json rows = Json::array();
  for (const auto& row : q.rows()) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(p.coeffs().empty() ? Json::array({"0"}) : rationals_to_json(p.coeffs()));
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j;
}

std::string polynomial_to_string(const XPolynomial& p, const std::string& var) {
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (is_zero(c[k])) continue;
    Rational mag = abs(c[k]);
    if (out.empty())
      out += sgn(c[k]) < 0 ? "-" : "";
    else
      out += sgn(c[k]) < 0 ? " - " : " + ";
    const bool unit = mag == 1 && k > 0;
    if (!unit) out += to_string(mag);
    if (k > 0) {
      if (!unit) out += '*';
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

Json report_to_json(const SaddleReport& r) {
  Json j;
  j["n"] = r.n;
  j["x"] = r.x;
  j["y"] = r.y;
  j["s"] = r.s;
  j["exact"] = r.exact;
  j["approx"] = r.approx;
  j["corrected"] = r.corrected;
  j["ratio"] = r.ratio;
  j["predicted_ratio"] = r.ratio_series_estimate;
  if (r.outside_validity) j["warning"] = "y > 1/2: outside the range where the approximation is reliable";
  return j;
}

std::string report_tsv_header() { return "n\tx\ty\ts\texact\tapprox\tcorrected\tratio\tpredicted_ratio"; }

std::string report_to_tsv(const SaddleReport& r) {
  std::ostringstream os;
  os << r.n << '\t' << format_double(r.x) << '\t' << format_double(r.y) << '\t' << format_double(r.s) << '\t'
     << format_double(r.exact) << '\t' << format_double(r.approx) << '\t' << format_double(r.corrected) << '\t'
     << format_double(r.ratio) << '\t' << format_double(r.ratio_series_estimate);
  return os.str();
}

}  // namespace convpoly
