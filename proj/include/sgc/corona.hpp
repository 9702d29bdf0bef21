#pragma once

#include <cstddef>

#include "sgc/dense_matrix.hpp"
#include "sgc/signed_graph.hpp"

namespace sgc {

/// Sign assigned to the edge joining a neighbour u of u_i to node v_j of
/// copy i.
///
/// kNeighbourMark: mu1(u) * mu2(v_j), the mark of the Gamma_1 endpoint that
///   actually lies on the edge. This is the defining rule; the edge and triad
///   census formulas and the balance criterion describe this graph.
/// kCentreMark: sigma1(u, u_i) * mu1(u_i) * mu2(v_j). Its adjacency matrix
///   has cross block mu2^T (x) A1*phi1, which is the form the characteristic
///   polynomial factorisations in corona_spectra.hpp rely on.
///
/// The two rules give the same graph exactly when every edge uw of Gamma_1
/// satisfies sigma(uw) = mu1(u) * mu1(w); see cross_sign_rules_coincide().
enum class CrossSign { kNeighbourMark, kCentreMark };

const char* cross_sign_name(CrossSign rule) noexcept;

/// Node numbering of the corona. Nodes of Gamma_1 come first; the copies
/// are grouped by Gamma_2 node so that W_j = {v_j^1..v_j^{n1}} is a
/// contiguous block.
struct CoronaLayout {
  std::size_t n1 = 0;
  std::size_t n2 = 0;

  std::size_t total() const noexcept { return n1 * (n2 + 1); }
  std::size_t base_node(std::size_t i) const noexcept { return i; }
  /// Node v_j of copy i (copy i hangs off node u_i of Gamma_1).
  std::size_t copy_node(std::size_t i, std::size_t j) const noexcept { return n1 + j * n1 + i; }

  friend bool operator==(const CoronaLayout&, const CoronaLayout&) = default;
};

struct Corona {
  SignedGraph graph;
  CoronaLayout layout;
};

/// Builds Gamma_1 * Gamma_2 edge by edge. Throws GraphError if either input
/// has no nodes.
Corona neighbourhood_corona(const SignedGraph& g1, const SignedGraph& g2,
                            CrossSign rule = CrossSign::kNeighbourMark);

/// Assembles A, L, Q or D of the corona from Kronecker blocks of the input
/// matrices, without building the corona graph. Equal entrywise to
/// matrix(neighbourhood_corona(g1, g2, rule).graph, which).
DenseMatrix corona_block_matrix(const SignedGraph& g1, const SignedGraph& g2, MatrixKind which,
                                CrossSign rule = CrossSign::kNeighbourMark);

/// True when both cross-sign rules produce the same corona for this Gamma_1.
bool cross_sign_rules_coincide(const SignedGraph& g1);

}  // namespace sgc
