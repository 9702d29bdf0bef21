#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgc/dense_matrix.hpp"

namespace sgc {

enum class Sign : std::int8_t { kPositive = 1, kNegative = -1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) noexcept { return a == b ? Sign::kPositive : Sign::kNegative; }
constexpr Sign operator-(Sign s) noexcept { return s == Sign::kPositive ? Sign::kNegative : Sign::kPositive; }
constexpr char to_char(Sign s) noexcept { return s == Sign::kPositive ? '+' : '-'; }

/// Thrown for structurally invalid graphs (self-loops, duplicate or
/// out-of-range edges).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Sign sign = Sign::kPositive;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected signed graph on nodes 0..n-1 stored as a dense
/// symmetric sign array with zero diagonal. Immutable after construction.
class SignedGraph {
 public:
  SignedGraph() = default;
  SignedGraph(std::size_t n, std::span<const Edge> edges);
  SignedGraph(std::size_t n, std::initializer_list<Edge> edges)
      : SignedGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  /// -1, 0 or +1.
  int sign_at(std::size_t u, std::size_t v) const { return adj_[u * n_ + v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }

  std::size_t degree(std::size_t u) const;
  std::vector<std::size_t> neighbours(std::size_t u) const;
  std::size_t common_neighbours(std::size_t u, std::size_t v) const;

  /// Edges with u < v, in row-major order.
  std::vector<Edge> edges() const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::int8_t> adj_;
};

/// Node marking: one sign per node.
class Marking {
 public:
  Marking() = default;
  explicit Marking(std::vector<Sign> marks) : marks_(std::move(marks)) {}

  std::size_t size() const noexcept { return marks_.size(); }
  Sign operator[](std::size_t u) const { return marks_[u]; }
  int value(std::size_t u) const { return to_int(marks_[u]); }
  std::span<const Sign> marks() const noexcept { return marks_; }

  bool is_constant() const noexcept;
  std::size_t count(Sign s) const noexcept;

  friend bool operator==(const Marking&, const Marking&) = default;

 private:
  std::vector<Sign> marks_;
};

struct DegreeProfile {
  std::vector<int> deg;
  std::vector<int> pos_deg;
  std::vector<int> neg_deg;
  std::vector<int> sdeg;
};

struct CoRegularity {
  std::optional<int> r;
  std::optional<int> k;

  bool co_regular() const noexcept { return r.has_value() && k.has_value(); }
};

enum class MatrixKind { kAdjacency, kLaplacian, kSignless, kDegree };

const char* matrix_kind_name(MatrixKind kind) noexcept;

/// mu(u) = product of the signs of the edges at u; isolated nodes get +1.
Marking canonical_marking(const SignedGraph& g);

DegreeProfile degree_profile(const SignedGraph& g);
CoRegularity co_regularity(const SignedGraph& g);
std::optional<int> regular_degree(const SignedGraph& g);

DenseMatrix matrix(const SignedGraph& g, MatrixKind which);

/// Harary balance via spanning-forest switching.
bool is_balanced(const SignedGraph& g);

/// adj'[u][v] = s[u] * adj[u][v] * s[v].
SignedGraph switched(const SignedGraph& g, std::span<const Sign> s);
/// Node u of g becomes node perm[u].
SignedGraph permuted(const SignedGraph& g, std::span<const std::size_t> perm);
/// Every edge sign flipped.
SignedGraph negated(const SignedGraph& g);

}  // namespace sgc
