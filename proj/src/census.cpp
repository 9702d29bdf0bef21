#include "sgc/census.hpp"

#include "sgc/corona.hpp"

namespace sgc {

MarkDegreeSummary mark_degree_summary(const SignedGraph& g) {
  const Marking mu = canonical_marking(g);
  MarkDegreeSummary s;
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto d = static_cast<std::int64_t>(g.degree(u));
    if (mu[u] == Sign::kPositive) {
      ++s.n_plus;
      s.b_plus += d;
    } else {
      ++s.n_minus;
      s.b_minus += d;
    }
  }
  return s;
}

EdgeMarkBreakdown edge_mark_breakdown(const SignedGraph& g) {
  const Marking mu = canonical_marking(g);
  EdgeMarkBreakdown b;
  for (const Edge& e : g.edges()) {
    EdgeMarkCounts& c = e.sign == Sign::kPositive ? b.positive : b.negative;
    const auto common = static_cast<std::int64_t>(g.common_neighbours(e.u, e.v));
    const int marks = mu.value(e.u) + mu.value(e.v);
    if (marks == 2) {
      ++c.pp;
      c.pp_c += common;
    } else if (marks == -2) {
      ++c.mm;
      c.mm_c += common;
    } else {
      ++c.pm;
      c.pm_c += common;
    }
  }
  return b;
}

EdgeCensus edge_census_direct(const SignedGraph& g) {
  EdgeCensus c;
  for (const Edge& e : g.edges()) {
    ++c.total;
    if (e.sign == Sign::kPositive)
      ++c.positive;
    else
      ++c.negative;
  }
  return c;
}

EdgeCensus edge_census_formula(const SignedGraph& g1, const SignedGraph& g2) {
  const EdgeCensus c1 = edge_census_direct(g1);
  const EdgeCensus c2 = edge_census_direct(g2);
  const MarkDegreeSummary s1 = mark_degree_summary(g1);
  const MarkDegreeSummary s2 = mark_degree_summary(g2);
  const auto n1 = static_cast<std::int64_t>(g1.order());
  const auto n2 = static_cast<std::int64_t>(g2.order());

  EdgeCensus out;
  out.total = c1.total + n1 * c2.total + 2 * n2 * c1.total;
  out.positive = c1.positive + n1 * c2.positive + s1.b_plus * s2.n_plus + s1.b_minus * s2.n_minus;
  out.negative = c1.negative + n1 * c2.negative + s1.b_plus * s2.n_minus + s1.b_minus * s2.n_plus;
  return out;
}

TriadCensus triad_census_direct(const SignedGraph& g) {
  TriadCensus t;
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!g.adjacent(i, k) || !g.adjacent(j, k)) continue;
        const int neg = (g.sign_at(i, j) < 0) + (g.sign_at(i, k) < 0) + (g.sign_at(j, k) < 0);
        switch (neg) {
          case 0: ++t.t0; break;
          case 1: ++t.t1; break;
          case 2: ++t.t2; break;
          default: ++t.t3; break;
        }
      }
    }
  return t;
}

TriadCensus triad_census_formula(const SignedGraph& g1, const SignedGraph& g2) {
  const TriadCensus t1 = triad_census_direct(g1);
  const TriadCensus t2 = triad_census_direct(g2);
  const MarkDegreeSummary s1 = mark_degree_summary(g1);
  const MarkDegreeSummary s2 = mark_degree_summary(g2);
  const EdgeMarkBreakdown e1 = edge_mark_breakdown(g1);
  const EdgeMarkBreakdown e2 = edge_mark_breakdown(g2);
  const auto n1 = static_cast<std::int64_t>(g1.order());
  const auto& B1p = s1.b_plus;
  const auto& B1m = s1.b_minus;
  const auto& N2p = s2.n_plus;
  const auto& N2m = s2.n_minus;
  const EdgeMarkCounts& E2p = e2.positive;
  const EdgeMarkCounts& E2m = e2.negative;
  const EdgeMarkCounts& E1p = e1.positive;
  const EdgeMarkCounts& E1m = e1.negative;

  TriadCensus out;
  out.t0 = t1.t0 + n1 * t2.t0 + B1p * E2p.pp + B1m * E2p.mm + N2p * E1p.pp_c + N2m * E1p.mm_c;
  out.t1 = t1.t1 + n1 * t2.t1 + B1p * (E2p.pm + E2m.pp) + B1m * (E2p.pm + E2m.mm) +
           N2p * (E1p.pm_c + E1m.pp_c) + N2m * (E1p.pm_c + E1m.mm_c);
  out.t2 = t1.t2 + n1 * t2.t2 + B1p * (E2p.mm + E2m.pm) + B1m * (E2p.pp + E2m.pm) +
           N2p * (E1p.mm_c + E1m.pm_c) + N2m * (E1p.pp_c + E1m.pm_c);
  out.t3 = t1.t3 + n1 * t2.t3 + B1p * E2m.mm + B1m * E2m.pp + N2p * E1m.mm_c + N2m * E1m.pp_c;
  return out;
}

std::int64_t total_triads_formula(const SignedGraph& g1, const SignedGraph& g2) {
  const auto n1 = static_cast<std::int64_t>(g1.order());
  const auto n2 = static_cast<std::int64_t>(g2.order());
  const auto m1 = static_cast<std::int64_t>(g1.size());
  const auto m2 = static_cast<std::int64_t>(g2.size());
  std::int64_t common = 0;
  for (const Edge& e : g1.edges()) common += static_cast<std::int64_t>(g1.common_neighbours(e.u, e.v));
  return triad_census_direct(g1).total() + n1 * triad_census_direct(g2).total() + m2 * 2 * m1 + n2 * common;
}

std::vector<Edge> offending_edges(const SignedGraph& g) {
  const Marking mu = canonical_marking(g);
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (e.sign != mu[e.u] * mu[e.v]) out.push_back(e);
  return out;
}

bool corona_balance_criterion(const SignedGraph& g1, const SignedGraph& g2, CrossSign rule) {
  if (!is_balanced(g1) || !is_balanced(g2)) return false;
  if (g1.size() > 0 && !offending_edges(g2).empty()) return false;
  if (rule == CrossSign::kCentreMark) return true;

  const Marking mu1 = canonical_marking(g1);
  for (std::size_t i = 0; i < g1.order(); ++i) {
    int seen = 0;
    for (std::size_t u : g1.neighbours(i)) {
      const int t = g1.sign_at(u, i) * mu1.value(u);
      if (seen == 0)
        seen = t;
      else if (t != seen)
        return false;
    }
  }
  return true;
}

bool offending_edge_criterion(const SignedGraph& g1, const SignedGraph& g2) {
  return is_balanced(g1) && is_balanced(g2) && offending_edges(g1).empty() && offending_edges(g2).empty();
}

}  // namespace sgc
