#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "convpoly/asymptotics.hpp"
#include "convpoly/family.hpp"
#include "convpoly/triangle.hpp"

namespace py = pybind11;
using namespace convpoly;

namespace {

// Rationals cross the boundary as fractions.Fraction; anything whose str()
// parses as "p/q" or "p" is accepted on the way in.
py::object to_py(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(r));
}

Rational from_py(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::list to_py(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& r : v) out.append(to_py(r));
  return out;
}

py::list to_py(const LowerTriangle<Rational>& t) {
  py::list out;
  for (const auto& row : t.rows()) out.append(to_py(row));
  return out;
}

// A series is either a catalog name or a list of ordinary coefficients.
TruncatedSeries series_arg(const py::object& f, unsigned order, const py::object& t) {
  if (py::isinstance<py::str>(f)) {
    CatalogParams params;
    if (!t.is_none()) params.t = from_py(t);
    return catalog_series(f.cast<std::string>(), order, params);
  }
  std::vector<Rational> c;
  for (const auto& item : f) c.push_back(from_py(item));
  if (c.size() < order + 1) c.resize(order + 1, Rational(0));
  return TruncatedSeries(std::move(c));
}

}  // namespace

PYBIND11_MODULE(_convpoly, m) {
  m.doc() = "Exact convolution polynomials, convolution matrices and saddle-point estimates.";

  py::register_exception<SaddleError>(m, "SaddleError", PyExc_ArithmeticError);

  m.def("catalog_names", &catalog_names);

  m.def(
      "series",
      [](const py::object& f, unsigned order, const py::object& t) { return to_py(series_arg(f, order, t).coeffs()); },
      py::arg("f"), py::arg("order"), py::arg("t") = py::none(),
      "Ordinary coefficients of f(z) = ln F(z) up to z^order.");

  m.def(
      "family",
      [](const py::object& f, unsigned order, const py::object& t) {
        const Family fam = family_from(series_arg(f, order, t), order);
        py::list out;
        for (const auto& p : fam.polys()) out.append(to_py(p.coeffs()));
        return out;
      },
      py::arg("f"), py::arg("order"), py::arg("t") = py::none(),
      "Coefficient lists of F_0(x), ..., F_order(x).");

  m.def(
      "family_value",
      [](const py::object& f, unsigned n, const py::object& x, const py::object& t) {
        return to_py(family_value(series_arg(f, n, t), n, from_py(x)));
      },
      py::arg("f"), py::arg("n"), py::arg("x"), py::arg("t") = py::none());

  m.def(
      "triangle",
      [](const py::object& f, unsigned n_max, const py::object& t) {
        return to_py(triangle_from(series_arg(f, n_max, t), n_max));
      },
      py::arg("f"), py::arg("n_max"), py::arg("t") = py::none(), "Convolution matrix rows 1..n_max.");

  m.def(
      "compose_triangles",
      [](const py::object& f, const py::object& g, unsigned n_max) {
        return to_py(triangle_mul(triangle_from(series_arg(f, n_max, py::none()), n_max),
                                  triangle_from(series_arg(g, n_max, py::none()), n_max)));
      },
      py::arg("f"), py::arg("g"), py::arg("n_max"), "Matrix of g(f(z)).");

  m.def(
      "iterate",
      [](const py::object& f, const py::object& q, unsigned order) {
        return to_py(iterate_series(series_arg(f, order, py::none()), from_py(q)).coeffs());
      },
      py::arg("f"), py::arg("q"), py::arg("order"));

  m.def(
      "revert", [](const py::object& f, unsigned order) { return to_py(revert(series_arg(f, order, py::none())).coeffs()); },
      py::arg("f"), py::arg("order"));

  m.def(
      "stirling_polynomial", [](unsigned n) { return to_py(stirling_polynomial(n).coeffs()); }, py::arg("n"));

  m.def(
      "p_triangle",
      [](unsigned j_max) {
        py::list out;
        for (const auto& row : p_triangle(j_max).p) {
          py::list r;
          for (const auto& v : row) r.append(py::int_(py::str(v.get_str())));
          out.append(r);
        }
        return out;
      },
      py::arg("j_max"));

  m.def(
      "saddle_point", [](const py::object& f, unsigned n, double x, unsigned order) {
        return saddle_solve(series_arg(f, order, py::none()), n, x);
      },
      py::arg("f"), py::arg("n"), py::arg("x"), py::arg("order") = 64);

  m.def(
      "compare",
      [](const py::object& f, unsigned n, double x, unsigned order) {
        const SaddleReport r = compare(series_arg(f, std::max(order, n), py::none()), n, x);
        py::dict d;
        d["n"] = r.n;
        d["x"] = r.x;
        d["y"] = r.y;
        d["s"] = r.s;
        d["exact"] = r.exact;
        d["approx"] = r.approx;
        d["corrected"] = r.corrected;
        d["ratio"] = r.ratio;
        d["predicted_ratio"] = r.ratio_series_estimate;
        d["outside_validity"] = r.outside_validity;
        return d;
      },
      py::arg("f"), py::arg("n"), py::arg("x"), py::arg("order") = 64);

  m.def(
      "ratio_series",
      [](const py::object& f, unsigned max_i, unsigned max_j) {
        const RatioSeries rs = ratio_series(series_arg(f, max_i + max_j + 1, py::none()), max_i, max_j);
        py::list out;
        for (const auto& row : rs.c) out.append(to_py(row));
        return out;
      },
      py::arg("f"), py::arg("max_i"), py::arg("max_j"), "c[i][j], the coefficient of y^i x^-j in F_n/approx.");
}
