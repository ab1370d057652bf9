#pragma once

// Independent reference computations used to check the library. Nothing in
// here goes through the convolution machinery.

#include <functional>
#include <vector>

#include "convpoly/rational.hpp"

namespace oracle {

using convpoly::Integer;
using convpoly::Rational;

inline std::vector<std::vector<Integer>> stirling_subset(unsigned n_max) {
  std::vector<std::vector<Integer>> s(n_max + 1, std::vector<Integer>(n_max + 1, 0));
  s[0][0] = 1;
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned k = 1; k <= n; ++k) s[n][k] = k * s[n - 1][k] + s[n - 1][k - 1];
  return s;
}

inline std::vector<std::vector<Integer>> stirling_cycle(unsigned n_max) {
  std::vector<std::vector<Integer>> s(n_max + 1, std::vector<Integer>(n_max + 1, 0));
  s[0][0] = 1;
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned k = 1; k <= n; ++k) s[n][k] = (n - 1) * s[n - 1][k] + s[n - 1][k - 1];
  return s;
}

inline Integer lah(unsigned n, unsigned k) {
  return convpoly::binomial(n, k) * convpoly::binomial(n - 1, k - 1) * convpoly::factorial(n - k);
}

/// B_0..B_n with B_1 = -1/2, from sum_{j<=m} C(m+1, j) B_j = 0.
inline std::vector<Rational> bernoulli(unsigned n) {
  std::vector<Rational> B(n + 1);
  B[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += Rational(convpoly::binomial(m + 1, j)) * B[j];
    B[m] = -acc / Rational(m + 1);
  }
  return B;
}

/// Calls visit(map) for each of the n^n maps of {0..n-1} into itself.
inline void for_each_self_map(unsigned n, const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> m(n, 0);
  while (true) {
    visit(m);
    unsigned i = 0;
    while (i < n && ++m[i] == n) m[i++] = 0;
    if (i == n) return;
  }
}

inline unsigned cycle_count(const std::vector<unsigned>& m) {
  const unsigned n = static_cast<unsigned>(m.size());
  std::vector<int> state(n, 0);  // 0 new, 1 on current path, 2 done
  unsigned cycles = 0;
  for (unsigned start = 0; start < n; ++start) {
    unsigned v = start;
    while (state[v] == 0) {
      state[v] = 1;
      v = m[v];
    }
    if (state[v] == 1) ++cycles;
    for (v = start; state[v] == 1; v = m[v]) state[v] = 2;
  }
  return cycles;
}

inline bool idempotent(const std::vector<unsigned>& m) {
  for (unsigned i = 0; i < m.size(); ++i)
    if (m[m[i]] != m[i]) return false;
  return true;
}

/// Row n of counts: [k] = number of self-maps with k cycles (k = 1..n).
inline std::vector<Integer> self_maps_by_cycles(unsigned n, bool idempotent_only) {
  std::vector<Integer> row(n + 1, 0);
  for_each_self_map(n, [&](const std::vector<unsigned>& m) {
    if (!idempotent_only || idempotent(m)) row[cycle_count(m)] += 1;
  });
  return std::vector<Integer>(row.begin() + 1, row.end());
}

/// Ordinary power series quotient a/b by long division (b[0] != 0).
inline std::vector<Rational> divide(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> q(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Rational acc = a[n];
    for (std::size_t k = 1; k <= n && k < b.size(); ++k) acc -= b[k] * q[n - k];
    q[n] = acc / b[0];
  }
  return q;
}

/// Naive composition outer(inner(z)) by repeated multiplication, inner[0] = 0.
inline std::vector<Rational> compose(const std::vector<Rational>& outer, const std::vector<Rational>& inner) {
  const std::size_t N = inner.size();
  std::vector<Rational> out(N, 0), power(N, 0);
  power[0] = 1;
  for (std::size_t k = 0; k < outer.size(); ++k) {
    for (std::size_t n = 0; n < N; ++n) out[n] += outer[k] * power[n];
    std::vector<Rational> next(N, 0);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; i + j < N; ++j) next[i + j] += power[i] * inner[j];
    power = next;
  }
  return out;
}

}  // namespace oracle
