#include <doctest.h>

#include "oracles.hpp"
#include "sgc/corona.hpp"
#include "sgc/random_graphs.hpp"

using namespace sgc;

namespace {
constexpr Sign P = Sign::kPositive;
constexpr Sign N = Sign::kNegative;

SignedGraph c3() { return SignedGraph(3, {{0, 1, P}, {1, 2, P}, {0, 2, P}}); }
}  // namespace

TEST_CASE("worked example sizes") {
  const Corona c = neighbourhood_corona(c3(), SignedGraph(2, {{0, 1, P}}));
  CHECK(c.graph.order() == 9);
  CHECK(c.graph.size() == 18);
  CHECK(c.layout.copy_node(2, 1) == 3 + 3 + 2);
  for (const Edge& e : c.graph.edges()) CHECK(e.sign == P);
}

TEST_CASE("single-node second factor") {
  const SignedGraph g1(3, {{0, 1, P}, {1, 2, N}});
  const Corona c = neighbourhood_corona(g1, SignedGraph(1, std::initializer_list<Edge>{}));
  CHECK(c.graph.order() == 6);
  CHECK(c.graph.size() == 2 + 2 * 2);
}

TEST_CASE("empty factors are rejected") {
  const SignedGraph empty(0, std::initializer_list<Edge>{});
  CHECK_THROWS_AS(neighbourhood_corona(empty, c3()), GraphError);
  CHECK_THROWS_AS(neighbourhood_corona(c3(), empty), GraphError);
}

TEST_CASE("isolated node of the first factor gets a detached copy") {
  const SignedGraph g1(3, {{0, 1, N}});
  const Corona c = neighbourhood_corona(g1, SignedGraph(2, {{0, 1, P}}));
  const std::size_t v = c.layout.copy_node(2, 0);
  CHECK(c.graph.degree(v) == 1);
}

TEST_CASE("A block form with one second-factor node") {
  const SignedGraph g1(3, {{0, 1, N}, {1, 2, P}});
  const DenseMatrix m = corona_block_matrix(g1, SignedGraph(1, std::initializer_list<Edge>{}), MatrixKind::kAdjacency,
                                            CrossSign::kCentreMark);
  const DenseMatrix a1 = matrix(g1, MatrixKind::kAdjacency);
  const Marking mu = canonical_marking(g1);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(m(i, j) == a1(i, j));
      CHECK(m(i, 3 + j) == a1(i, j) * mu.value(j));
    }
}

TEST_CASE("construction matches the definition, block assembly matches construction") {
  Rng rng(21);
  for (int t = 0; t < 250; ++t) {
    const SignedGraph g1 = random_signed_graph(rng, uniform_between(rng, 1, 6));
    const SignedGraph g2 = random_signed_graph(rng, uniform_between(rng, 1, 6));
    const std::size_t n1 = g1.order(), n2 = g2.order();
    const Corona c = neighbourhood_corona(g1, g2);
    REQUIRE(c.graph == oracle::corona(g1, g2));
    CHECK(c.graph.size() == g1.size() + n1 * g2.size() + 2 * g1.size() * n2);

    for (std::size_t i = 0; i < n1; ++i) {
      CHECK(c.graph.degree(i) == (n2 + 1) * g1.degree(i));
      for (std::size_t j = 0; j < n2; ++j)
        CHECK(c.graph.degree(c.layout.copy_node(i, j)) == g2.degree(j) + g1.degree(i));
    }

    for (CrossSign rule : {CrossSign::kNeighbourMark, CrossSign::kCentreMark}) {
      const Corona built = neighbourhood_corona(g1, g2, rule);
      for (MatrixKind k : {MatrixKind::kAdjacency, MatrixKind::kLaplacian, MatrixKind::kSignless, MatrixKind::kDegree})
        CHECK(corona_block_matrix(g1, g2, k, rule) == matrix(built.graph, k));
    }
    const bool same = neighbourhood_corona(g1, g2, CrossSign::kCentreMark).graph == c.graph;
    CHECK(same == cross_sign_rules_coincide(g1));
  }
}

TEST_CASE("degree block of the first factor") {
  const SignedGraph g1(3, {{0, 1, P}, {1, 2, N}});
  const SignedGraph g2(2, {{0, 1, N}});
  const DenseMatrix d = corona_block_matrix(g1, g2, MatrixKind::kDegree);
  for (std::size_t i = 0; i < 3; ++i) CHECK(d(i, i) == 3.0 * g1.degree(i));
}

TEST_CASE("coronas of all-positive graphs are all-positive") {
  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n1 = uniform_between(rng, 1, 5), n2 = uniform_between(rng, 1, 5);
    std::vector<Edge> e1 = random_signed_graph(rng, n1).edges();
    std::vector<Edge> e2 = random_signed_graph(rng, n2).edges();
    for (auto& e : e1) e.sign = P;
    for (auto& e : e2) e.sign = P;
    const Corona c = neighbourhood_corona(SignedGraph(n1, e1), SignedGraph(n2, e2));
    for (const Edge& e : c.graph.edges()) CHECK(e.sign == P);
  }
}
