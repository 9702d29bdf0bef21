#include "sgc/corona.hpp"

#include <cmath>
#include <vector>

namespace sgc {

const char* cross_sign_name(CrossSign rule) noexcept {
  return rule == CrossSign::kNeighbourMark ? "neighbour" : "centre";
}

namespace {

Sign cross_sign(const SignedGraph& g1, const Marking& mu1, const Marking& mu2, std::size_t u,
                std::size_t centre, std::size_t j, CrossSign rule) {
  if (rule == CrossSign::kNeighbourMark) return mu1[u] * mu2[j];
  const Sign edge = g1.sign_at(u, centre) > 0 ? Sign::kPositive : Sign::kNegative;
  return edge * mu1[centre] * mu2[j];
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double s = a(i, j);
      if (s == 0.0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
    }
  return out;
}

void place(DenseMatrix& dst, const DenseMatrix& block, std::size_t row, std::size_t col) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) dst(row + i, col + j) = block(i, j);
}

DenseMatrix diag(const Marking& mu) {
  DenseMatrix d(mu.size(), mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) d(i, i) = mu.value(i);
  return d;
}

DenseMatrix column(const Marking& mu) {
  DenseMatrix c(mu.size(), 1);
  for (std::size_t i = 0; i < mu.size(); ++i) c(i, 0) = mu.value(i);
  return c;
}

DenseMatrix absolute(DenseMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = std::abs(m(i, j));
  return m;
}

}  // namespace

Corona neighbourhood_corona(const SignedGraph& g1, const SignedGraph& g2, CrossSign rule) {
  if (g1.order() == 0 || g2.order() == 0) throw GraphError("corona factors must have at least one node");
  const CoronaLayout layout{g1.order(), g2.order()};
  const Marking mu1 = canonical_marking(g1);
  const Marking mu2 = canonical_marking(g2);

  std::vector<Edge> edges = g1.edges();
  const std::vector<Edge> e2 = g2.edges();
  edges.reserve(g1.size() + layout.n1 * g2.size() + 2 * g1.size() * layout.n2);
  for (std::size_t i = 0; i < layout.n1; ++i)
    for (const Edge& e : e2) edges.push_back({layout.copy_node(i, e.u), layout.copy_node(i, e.v), e.sign});
  for (std::size_t i = 0; i < layout.n1; ++i)
    for (std::size_t u : g1.neighbours(i))
      for (std::size_t j = 0; j < layout.n2; ++j)
        edges.push_back({u, layout.copy_node(i, j), cross_sign(g1, mu1, mu2, u, i, j, rule)});

  return {SignedGraph(layout.total(), edges), layout};
}

DenseMatrix corona_block_matrix(const SignedGraph& g1, const SignedGraph& g2, MatrixKind which,
                                CrossSign rule) {
  if (g1.order() == 0 || g2.order() == 0) throw GraphError("corona factors must have at least one node");
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  const DenseMatrix a1 = matrix(g1, MatrixKind::kAdjacency);
  const DenseMatrix d1 = matrix(g1, MatrixKind::kDegree);
  const DenseMatrix d2 = matrix(g2, MatrixKind::kDegree);
  const Marking mu1 = canonical_marking(g1);
  const Marking mu2 = canonical_marking(g2);
  const DenseMatrix i1 = DenseMatrix::identity(n1);
  const DenseMatrix i2 = DenseMatrix::identity(n2);

  // Upper-right block, rows indexed by V(Gamma_1), columns by W_1..W_n2.
  const DenseMatrix sign_pattern = rule == CrossSign::kCentreMark ? a1 * diag(mu1) : diag(mu1) * absolute(a1);
  DenseMatrix cross = kron(column(mu2).transposed(), sign_pattern);

  const double n2d = static_cast<double>(n2);
  DenseMatrix top_left;
  DenseMatrix bottom_right;
  switch (which) {
    case MatrixKind::kAdjacency:
      top_left = a1;
      bottom_right = kron(matrix(g2, MatrixKind::kAdjacency), i1);
      break;
    case MatrixKind::kSignless:
      top_left = d1 * n2d + matrix(g1, MatrixKind::kSignless);
      bottom_right = kron(matrix(g2, MatrixKind::kSignless), i1) + kron(i2, d1);
      break;
    case MatrixKind::kLaplacian:
      top_left = d1 * n2d + matrix(g1, MatrixKind::kLaplacian);
      bottom_right = kron(matrix(g2, MatrixKind::kLaplacian), i1) + kron(i2, d1);
      cross *= -1.0;
      break;
    case MatrixKind::kDegree:
      top_left = d1 * (n2d + 1.0);
      bottom_right = kron(d2, i1) + kron(i2, d1);
      cross = DenseMatrix(n1, n1 * n2);
      break;
  }

  DenseMatrix out(n1 * (n2 + 1), n1 * (n2 + 1));
  place(out, top_left, 0, 0);
  place(out, cross, 0, n1);
  place(out, cross.transposed(), n1, 0);
  place(out, bottom_right, n1, n1);
  return out;
}

bool cross_sign_rules_coincide(const SignedGraph& g1) {
  const Marking mu = canonical_marking(g1);
  for (const Edge& e : g1.edges())
    if (e.sign != mu[e.u] * mu[e.v]) return false;
  return true;
}

}  // namespace sgc
