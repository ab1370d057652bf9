#include "convpoly/series.hpp"

namespace convpoly {

TruncatedSeries ps_inv(const TruncatedSeries& a) {
  if (is_zero(a[0])) throw std::invalid_argument("ps_inv: constant term must be nonzero");
  const Rational inv0 = 1 / a[0];
  std::vector<Rational> b(a.order() + 1);
  b[0] = inv0;
  for (unsigned n = 1; n <= a.order(); ++n) {
    Rational acc = 0;
    for (unsigned k = 1; k <= n; ++k) acc += a[k] * b[n - k];
    b[n] = -acc * inv0;
  }
  return TruncatedSeries(std::move(b));
}

}  // namespace convpoly
