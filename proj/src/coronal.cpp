#include "sgc/coronal.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sgc {

namespace {

struct SparseRow {
  std::vector<std::pair<std::size_t, long>> entries;
};

std::vector<SparseRow> to_sparse_integer(const DenseMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  if (!m.is_integral()) throw std::invalid_argument("characteristic polynomial needs integer entries");
  std::vector<SparseRow> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0.0) rows[i].entries.emplace_back(j, static_cast<long>(m(i, j)));
  return rows;
}

struct Expansion {
  IntPolynomial char_poly;
  IntPolynomial adjugate_form;  // mu^T adj(xI - M) mu
};

// M_1 = I, M_{k+1} = A M_k + c_{n-k} I, c_{n-k} = -tr(A M_k) / k, and
// adj(xI - A) = sum_k M_k x^{n-k}.
Expansion faddeev_leverrier(const DenseMatrix& m, const Marking* marks) {
  const std::vector<SparseRow> a = to_sparse_integer(m);
  const std::size_t n = a.size();
  if (marks && marks->size() != n) throw std::invalid_argument("marking length does not match the matrix");

  std::vector<mpz_class> c(n + 1);
  std::vector<mpz_class> adj(n + 1);
  c[n] = 1;

  std::vector<mpz_class> cur(n * n);
  std::vector<mpz_class> next(n * n);
  for (std::size_t i = 0; i < n; ++i) cur[i * n + i] = 1;

  mpz_class tr;
  for (std::size_t k = 1; k <= n; ++k) {
    if (marks) {
      mpz_class q = 0;
      for (std::size_t i = 0; i < n; ++i) {
        mpz_class row = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (marks->value(j) > 0)
            row += cur[i * n + j];
          else
            row -= cur[i * n + j];
        }
        if (marks->value(i) > 0)
          q += row;
        else
          q -= row;
      }
      adj[n - k] = q;
    }

    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mpz_class& dst = next[i * n + j];
        dst = 0;
        for (const auto& [col, v] : a[i].entries) {
          if (v == 1)
            dst += cur[col * n + j];
          else if (v == -1)
            dst -= cur[col * n + j];
          else
            dst += cur[col * n + j] * v;
        }
      }
    tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += next[i * n + i];
    const mpz_class kk = static_cast<unsigned long>(k);
    if (!mpz_divisible_p(tr.get_mpz_t(), kk.get_mpz_t())) throw std::logic_error("Faddeev-LeVerrier lost exactness");
    mpz_divexact(c[n - k].get_mpz_t(), tr.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = -c[n - k];
    for (std::size_t i = 0; i < n; ++i) next[i * n + i] += c[n - k];
    std::swap(cur, next);
  }
  return {IntPolynomial(std::move(c)), IntPolynomial(std::move(adj))};
}

RationalFn star_form(long legs, Sign centre_mark, int mark_factor) {
  if (legs <= 0) throw std::invalid_argument("a star needs at least one leg");
  const long n = legs;
  const long mu = to_int(centre_mark);
  // ((n+1)x - (n^2+1) + f*2n*mu) / (x^2 - (n+1)x)
  return RationalFn(IntPolynomial{-(n * n + 1) + mark_factor * 2 * n * mu, n + 1}, IntPolynomial{0, -(n + 1), 1});
}

}  // namespace

IntPolynomial char_poly(const DenseMatrix& m) { return faddeev_leverrier(m, nullptr).char_poly; }

RationalFn coronal_generic(const DenseMatrix& m, const Marking& marks) {
  Expansion e = faddeev_leverrier(m, &marks);
  return RationalFn(std::move(e.adjugate_form), std::move(e.char_poly));
}

RationalFn coronal(const SignedGraph& g, MatrixKind which) {
  return coronal_generic(matrix(g, which), canonical_marking(g));
}

RationalFn coronal_A_net_regular(long n, long k) { return RationalFn(IntPolynomial{n}, IntPolynomial{-k, 1}); }

RationalFn coronal_A_star(long legs, Sign centre_mark) {
  if (legs <= 0) throw std::invalid_argument("a star needs at least one leg");
  const long n = legs;
  return RationalFn(IntPolynomial{2 * n * to_int(centre_mark), n + 1}, IntPolynomial{-n, 0, 1});
}

RationalFn coronal_Q_coregular(long n, long r, long k) { return RationalFn(IntPolynomial{n}, IntPolynomial{-(r + k), 1}); }

RationalFn coronal_Q_star(long legs, Sign centre_mark) { return star_form(legs, centre_mark, +1); }

RationalFn coronal_L_coregular(long n, long r, long k) { return RationalFn(IntPolynomial{n}, IntPolynomial{-(r - k), 1}); }

RationalFn coronal_L_star(long legs, Sign centre_mark) { return star_form(legs, centre_mark, -1); }

std::optional<StarShape> star_shape(const SignedGraph& g) {
  const std::size_t n = g.order();
  if (n < 2 || g.size() != n - 1) return std::nullopt;
  std::size_t centre = n;
  for (std::size_t u = 0; u < n; ++u)
    if (g.degree(u) == n - 1) {
      centre = u;
      break;
    }
  if (centre == n) return std::nullopt;
  return StarShape{centre, n - 1, canonical_marking(g)[centre]};
}

bool has_coregular_coronal(const SignedGraph& g, MatrixKind which) {
  if (g.order() == 0 || !canonical_marking(g).is_constant()) return false;
  const CoRegularity cr = co_regularity(g);
  return which == MatrixKind::kAdjacency ? cr.k.has_value() : cr.co_regular();
}

std::optional<RationalFn> coronal_closed_form(const SignedGraph& g, MatrixKind which) {
  const auto n = static_cast<long>(g.order());
  if (has_coregular_coronal(g, which)) {
    const CoRegularity cr = co_regularity(g);
    switch (which) {
      case MatrixKind::kAdjacency: return coronal_A_net_regular(n, *cr.k);
      case MatrixKind::kSignless: return coronal_Q_coregular(n, *cr.r, *cr.k);
      case MatrixKind::kLaplacian: return coronal_L_coregular(n, *cr.r, *cr.k);
      case MatrixKind::kDegree: return std::nullopt;
    }
  }
  if (const auto star = star_shape(g)) {
    const auto legs = static_cast<long>(star->legs);
    switch (which) {
      case MatrixKind::kAdjacency: return coronal_A_star(legs, star->centre_mark);
      case MatrixKind::kSignless: return coronal_Q_star(legs, star->centre_mark);
      case MatrixKind::kLaplacian: return coronal_L_star(legs, star->centre_mark);
      case MatrixKind::kDegree: return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace sgc
