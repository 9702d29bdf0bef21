#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sgc/corona.hpp"
#include "sgc/signed_graph.hpp"

namespace sgc {

struct EdgeCensus {
  std::int64_t total = 0;
  std::int64_t positive = 0;
  std::int64_t negative = 0;

  friend bool operator==(const EdgeCensus&, const EdgeCensus&) = default;
};

/// N^+/N^- (node counts by canonical mark) and B^+/B^- (degree sums by mark).
struct MarkDegreeSummary {
  std::int64_t n_plus = 0;
  std::int64_t n_minus = 0;
  std::int64_t b_plus = 0;
  std::int64_t b_minus = 0;
};

/// Edges of one sign split by the marks of their endpoints, both as plain
/// counts and weighted by the number of common neighbours of the endpoints.
struct EdgeMarkCounts {
  std::int64_t pp = 0;
  std::int64_t pm = 0;
  std::int64_t mm = 0;
  std::int64_t pp_c = 0;
  std::int64_t pm_c = 0;
  std::int64_t mm_c = 0;
};

struct EdgeMarkBreakdown {
  EdgeMarkCounts positive;
  EdgeMarkCounts negative;
};

/// Triangles bucketed by their number of negative edges.
struct TriadCensus {
  std::int64_t t0 = 0;
  std::int64_t t1 = 0;
  std::int64_t t2 = 0;
  std::int64_t t3 = 0;

  std::int64_t total() const noexcept { return t0 + t1 + t2 + t3; }
  friend bool operator==(const TriadCensus&, const TriadCensus&) = default;
};

MarkDegreeSummary mark_degree_summary(const SignedGraph& g);
EdgeMarkBreakdown edge_mark_breakdown(const SignedGraph& g);

EdgeCensus edge_census_direct(const SignedGraph& g);
/// Edge census of neighbourhood_corona(g1, g2) (neighbour-mark rule) from
/// the factors alone.
EdgeCensus edge_census_formula(const SignedGraph& g1, const SignedGraph& g2);

/// O(n^3) triangle enumeration.
TriadCensus triad_census_direct(const SignedGraph& g);
/// Triad census of neighbourhood_corona(g1, g2) (neighbour-mark rule) from
/// the factors alone.
TriadCensus triad_census_formula(const SignedGraph& g1, const SignedGraph& g2);
/// T(G1) + n1 T(G2) + m2 * sum_u d1(u) + n2 * sum_{uw in E1} |N(u) & N(w)|.
std::int64_t total_triads_formula(const SignedGraph& g1, const SignedGraph& g2);

/// An edge whose sign differs from the product of its endpoint marks:
/// a positive edge between opposite marks, or a negative edge between
/// equal marks.
std::vector<Edge> offending_edges(const SignedGraph& g);

/// Exact balance test for neighbourhood_corona(g1, g2, rule) that does not
/// build the corona.
///
/// Neighbour-mark rule: balanced iff both factors are balanced, Gamma_2 has
/// no offending edge (when Gamma_1 has an edge), and for every node i of
/// Gamma_1 the value sigma(u, i) * mu1(u) is the same for all neighbours u
/// of i. Centre-mark rule: the last condition is dropped.
bool corona_balance_criterion(const SignedGraph& g1, const SignedGraph& g2,
                              CrossSign rule = CrossSign::kNeighbourMark);

/// The offending-edge test: balanced iff both factors are balanced and
/// neither contains an offending edge. Sufficient for balance of the
/// neighbour-mark corona, but not necessary (e.g. Gamma_1 = a negative edge,
/// Gamma_2 = K1 gives a tree).
bool offending_edge_criterion(const SignedGraph& g1, const SignedGraph& g2);

}  // namespace sgc
