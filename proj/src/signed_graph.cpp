#include "sgc/signed_graph.hpp"

#include <algorithm>
#include <string>

namespace sgc {

SignedGraph::SignedGraph(std::size_t n, std::span<const Edge> edges)
    : n_(n), m_(0), adj_(n * n, 0) {
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") index out of range for n=" + std::to_string(n));
    if (e.u == e.v) throw GraphError("self-loop at node " + std::to_string(e.u));
    if (adj_[e.u * n + e.v] != 0)
      throw GraphError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    adj_[e.u * n + e.v] = static_cast<std::int8_t>(to_int(e.sign));
    adj_[e.v * n + e.u] = static_cast<std::int8_t>(to_int(e.sign));
    ++m_;
  }
}

std::size_t SignedGraph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t v = 0; v < n_; ++v) d += adjacent(u, v);
  return d;
}

std::vector<std::size_t> SignedGraph::neighbours(std::size_t u) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n_; ++v)
    if (adjacent(u, v)) out.push_back(v);
  return out;
}

std::size_t SignedGraph::common_neighbours(std::size_t u, std::size_t v) const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < n_; ++w) c += adjacent(u, w) && adjacent(v, w);
  return c;
}

std::vector<Edge> SignedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (int s = sign_at(u, v)) out.push_back({u, v, s > 0 ? Sign::kPositive : Sign::kNegative});
  return out;
}

bool Marking::is_constant() const noexcept {
  return std::adjacent_find(marks_.begin(), marks_.end(), std::not_equal_to<>()) == marks_.end();
}

std::size_t Marking::count(Sign s) const noexcept {
  return static_cast<std::size_t>(std::count(marks_.begin(), marks_.end(), s));
}

const char* matrix_kind_name(MatrixKind kind) noexcept {
  switch (kind) {
    case MatrixKind::kAdjacency: return "A";
    case MatrixKind::kLaplacian: return "L";
    case MatrixKind::kSignless: return "Q";
    case MatrixKind::kDegree: return "D";
  }
  return "?";
}

Marking canonical_marking(const SignedGraph& g) {
  std::vector<Sign> marks(g.order(), Sign::kPositive);
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = 0; v < g.order(); ++v)
      if (g.sign_at(u, v) < 0) marks[u] = -marks[u];
  return Marking(std::move(marks));
}

DegreeProfile degree_profile(const SignedGraph& g) {
  const std::size_t n = g.order();
  DegreeProfile p{std::vector<int>(n), std::vector<int>(n), std::vector<int>(n), std::vector<int>(n)};
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const int s = g.sign_at(u, v);
      if (s > 0) ++p.pos_deg[u];
      if (s < 0) ++p.neg_deg[u];
    }
    p.deg[u] = p.pos_deg[u] + p.neg_deg[u];
    p.sdeg[u] = p.pos_deg[u] - p.neg_deg[u];
  }
  return p;
}

namespace {

std::optional<int> common_value(const std::vector<int>& xs) {
  if (xs.empty()) return std::nullopt;
  if (std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) != xs.end()) return std::nullopt;
  return xs.front();
}

}  // namespace

CoRegularity co_regularity(const SignedGraph& g) {
  const DegreeProfile p = degree_profile(g);
  return {common_value(p.deg), common_value(p.sdeg)};
}

std::optional<int> regular_degree(const SignedGraph& g) { return co_regularity(g).r; }

DenseMatrix matrix(const SignedGraph& g, MatrixKind which) {
  const std::size_t n = g.order();
  DenseMatrix m(n, n);
  const double off = which == MatrixKind::kLaplacian ? -1.0 : which == MatrixKind::kDegree ? 0.0 : 1.0;
  const bool diag = which != MatrixKind::kAdjacency;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) m(u, v) = off * g.sign_at(u, v);
    if (diag) m(u, u) = static_cast<double>(g.degree(u));
  }
  return m;
}

bool is_balanced(const SignedGraph& g) {
  const std::size_t n = g.order();
  std::vector<int> s(n, 0);
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (s[root] != 0) continue;
    s[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        const int sigma = g.sign_at(u, v);
        if (sigma == 0) continue;
        if (s[v] == 0) {
          s[v] = s[u] * sigma;
          stack.push_back(v);
        } else if (s[u] * s[v] * sigma != 1) {
          return false;
        }
      }
    }
  }
  return true;
}

SignedGraph switched(const SignedGraph& g, std::span<const Sign> s) {
  if (s.size() != g.order()) throw std::invalid_argument("switching vector has wrong length");
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.sign = s[e.u] * e.sign * s[e.v];
  return SignedGraph(g.order(), edges);
}

SignedGraph permuted(const SignedGraph& g, std::span<const std::size_t> perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("permutation has wrong length");
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    e.u = perm[e.u];
    e.v = perm[e.v];
  }
  return SignedGraph(g.order(), edges);
}

SignedGraph negated(const SignedGraph& g) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.sign = -e.sign;
  return SignedGraph(g.order(), edges);
}

}  // namespace sgc
