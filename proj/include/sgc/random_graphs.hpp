#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sgc/signed_graph.hpp"

namespace sgc {

/// All generators draw from this engine with plain modulo reductions, so a
/// seed gives the same graphs on every platform.
using Rng = std::mt19937_64;

/// Uniform in [0, bound). bound must be positive.
std::size_t uniform_index(Rng& rng, std::size_t bound);
/// Uniform in [lo, hi].
std::size_t uniform_between(Rng& rng, std::size_t lo, std::size_t hi);
bool bernoulli(Rng& rng, double p);
Sign random_sign(Rng& rng);
std::vector<Sign> random_switching(Rng& rng, std::size_t n);
std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n);

/// G(n, p) underlying graph, each edge sign a fair coin.
SignedGraph random_signed_graph(Rng& rng, std::size_t n, double p = 0.5);
/// G(n, p) with all edges positive, then switched by a random vector, so
/// the result is balanced.
SignedGraph random_balanced_graph(Rng& rng, std::size_t n, double p = 0.5);
/// Circulant on n nodes over a random set of offsets, each edge signed at
/// random. Regular; usually not net-regular.
SignedGraph random_regular_graph(Rng& rng, std::size_t n);
/// Circulant with one sign per offset. Co-regular, and the canonical
/// marking is constant (every node sees the same multiset of edge signs).
SignedGraph random_coregular_graph(Rng& rng, std::size_t n);
/// K_{1,legs} with random leg signs and nodes randomly relabelled.
SignedGraph random_star(Rng& rng, std::size_t legs);

}  // namespace sgc
