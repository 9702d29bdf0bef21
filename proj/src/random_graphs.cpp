#include "sgc/random_graphs.hpp"

#include <stdexcept>
#include <utility>

namespace sgc {

std::size_t uniform_index(Rng& rng, std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  return static_cast<std::size_t>(rng() % bound);
}

std::size_t uniform_between(Rng& rng, std::size_t lo, std::size_t hi) { return lo + uniform_index(rng, hi - lo + 1); }

bool bernoulli(Rng& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1p-53 < p; }

Sign random_sign(Rng& rng) { return (rng() & 1U) ? Sign::kNegative : Sign::kPositive; }

std::vector<Sign> random_switching(Rng& rng, std::size_t n) {
  std::vector<Sign> s(n);
  for (auto& x : s) x = random_sign(rng);
  return s;
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[uniform_index(rng, i)]);
  return p;
}

SignedGraph random_signed_graph(Rng& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (bernoulli(rng, p)) edges.push_back({u, v, random_sign(rng)});
  return SignedGraph(n, edges);
}

SignedGraph random_balanced_graph(Rng& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (bernoulli(rng, p)) edges.push_back({u, v, Sign::kPositive});
  const auto s = random_switching(rng, n);
  return switched(SignedGraph(n, edges), s);
}

namespace {

template <typename SignFor>
SignedGraph circulant(Rng& rng, std::size_t n, SignFor&& sign_for) {
  std::vector<Edge> edges;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (!bernoulli(rng, 0.5)) continue;
    const Sign offset_sign = random_sign(rng);
    // Offset n/2 on even n joins each node to one partner only.
    const std::size_t count = (2 * d == n) ? n / 2 : n;
    for (std::size_t u = 0; u < count; ++u) edges.push_back({u, (u + d) % n, sign_for(offset_sign)});
  }
  return SignedGraph(n, edges);
}

}  // namespace

SignedGraph random_regular_graph(Rng& rng, std::size_t n) {
  return circulant(rng, n, [&](Sign) { return random_sign(rng); });
}

SignedGraph random_coregular_graph(Rng& rng, std::size_t n) {
  return circulant(rng, n, [](Sign s) { return s; });
}

SignedGraph random_star(Rng& rng, std::size_t legs) {
  if (legs == 0) throw std::invalid_argument("a star needs at least one leg");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= legs; ++v) edges.push_back({0, v, random_sign(rng)});
  const auto perm = random_permutation(rng, legs + 1);
  return permuted(SignedGraph(legs + 1, edges), perm);
}

}  // namespace sgc
