#pragma once

// Brute-force references used only by the tests. None of these call into
// the code under test beyond the plain data types.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "sgc/dense_matrix.hpp"
#include "sgc/signed_graph.hpp"

namespace oracle {

/// Determinant by fraction-free elimination over the integers.
inline mpz_class det(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] /= prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return n == 0 ? mpz_class(1) : sign * a[n - 1][n - 1];
}

/// det(t I - m) at an integer point.
inline mpz_class char_value(const sgc::DenseMatrix& m, long t) {
  const std::size_t n = m.rows();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? t : 0) - static_cast<long>(m(i, j));
  return det(std::move(a));
}

/// mu^T (x I - m)^{-1} mu by Gaussian elimination over the rationals.
inline mpq_class coronal_at(const sgc::DenseMatrix& m, const sgc::Marking& mu, const mpq_class& x) {
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? x : mpq_class(0)) - mpq_class(static_cast<long>(m(i, j)));
    a[i][n] = mu.value(i);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (a[piv][k] == 0) ++piv;
    std::swap(a[piv], a[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const mpq_class f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  mpq_class s = 0;
  for (std::size_t i = 0; i < n; ++i) s += mu.value(i) * (a[i][n] / a[i][i]);
  return s;
}

/// Balanced iff some switching makes every edge positive; tries all 2^n.
inline bool balanced(const sgc::SignedGraph& g) {
  const std::size_t n = g.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v) {
        if (!g.adjacent(u, v)) continue;
        const int su = (mask >> u) & 1U ? -1 : 1;
        const int sv = (mask >> v) & 1U ? -1 : 1;
        ok = su * g.sign_at(u, v) * sv > 0;
      }
    if (ok) return true;
  }
  return false;
}

/// Corona written straight from its definition with the neighbour-mark
/// cross sign; nodes numbered as in CoronaLayout.
inline sgc::SignedGraph corona(const sgc::SignedGraph& g1, const sgc::SignedGraph& g2) {
  auto mark = [](const sgc::SignedGraph& g, std::size_t u) {
    int m = 1;
    for (std::size_t v = 0; v < g.order(); ++v)
      if (g.adjacent(u, v)) m *= g.sign_at(u, v);
    return m;
  };
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  auto sign_of = [](int s) { return s > 0 ? sgc::Sign::kPositive : sgc::Sign::kNegative; };
  std::vector<sgc::Edge> edges = g1.edges();
  for (std::size_t i = 0; i < n1; ++i) {
    for (const sgc::Edge& e : g2.edges()) edges.push_back({n1 + e.u * n1 + i, n1 + e.v * n1 + i, e.sign});
    for (std::size_t u = 0; u < n1; ++u) {
      if (!g1.adjacent(u, i)) continue;
      for (std::size_t v = 0; v < n2; ++v) edges.push_back({u, n1 + v * n1 + i, sign_of(mark(g1, u) * mark(g2, v))});
    }
  }
  return sgc::SignedGraph(n1 * (n2 + 1), edges);
}

/// Triangles by number of negative edges, counted over all triples.
inline std::array<std::int64_t, 4> triads(const sgc::SignedGraph& g) {
  std::array<std::int64_t, 4> t{};
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c))
          ++t[(g.sign_at(a, b) < 0) + (g.sign_at(b, c) < 0) + (g.sign_at(a, c) < 0)];
  return t;
}

}  // namespace oracle
