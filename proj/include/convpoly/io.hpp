#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "convpoly/asymptotics.hpp"
#include "convpoly/family.hpp"
#include "convpoly/triangle.hpp"

namespace convpoly {

using Json = nlohmann::ordered_json;

Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

Json family_to_json(const Family& fam);
Family family_from_json(const Json& j);

Json triangle_to_json(const LowerTriangle<Rational>& t);
LowerTriangle<Rational> triangle_from_json(const Json& j);
/// One row per line, entries separated by tabs.
std::string triangle_to_tsv(const LowerTriangle<Rational>& t);

/// Entries become coefficient lists in q, lowest degree first.
Json qmatrix_to_json(const QMatrix& q);

std::string polynomial_to_string(const XPolynomial& p, const std::string& var = "x");

Json report_to_json(const SaddleReport& r);
std::string report_tsv_header();
std::string report_to_tsv(const SaddleReport& r);

}  // namespace convpoly
