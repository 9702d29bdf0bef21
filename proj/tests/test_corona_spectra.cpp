#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sgc/corona_spectra.hpp"
#include "sgc/coronal.hpp"
#include "sgc/random_graphs.hpp"

using namespace sgc;

namespace {
constexpr Sign P = Sign::kPositive;
constexpr Sign N = Sign::kNegative;

SignedGraph c3() { return SignedGraph(3, {{0, 1, P}, {1, 2, P}, {0, 2, P}}); }
SignedGraph p2() { return SignedGraph(2, {{0, 1, P}}); }
SignedGraph k1() { return SignedGraph(1, std::initializer_list<Edge>{}); }

Spectrum spec(std::vector<Eigenvalue> pairs) { return Spectrum(std::move(pairs)); }

std::vector<double> roots_of(double a, double b, double c) {
  const double d = std::sqrt(b * b - 4 * a * c);
  return {(-b - d) / (2 * a), (-b + d) / (2 * a)};
}
}  // namespace

TEST_CASE("worked example through every method") {
  const double s3 = std::sqrt(3.0), s33 = std::sqrt(33.0), s48 = std::sqrt(48.0);
  const Spectrum a = spec({{-s3, 2}, {(3 - s33) / 2, 1}, {-1, 3}, {s3, 2}, {(3 + s33) / 2, 1}});
  const Spectrum q = spec({{2, 3}, {(12 - s48) / 2, 1}, {3, 2}, {6, 2}, {(12 + s48) / 2, 1}});
  const Spectrum l = spec({{0, 1}, {(9 - s33) / 2, 2}, {4, 3}, {6, 1}, {(9 + s33) / 2, 2}});
  for (auto method : {SpectrumMethod::kNumeric, SpectrumMethod::kTheorem, SpectrumMethod::kProposition}) {
    for (auto [kind, want] : {std::pair{MatrixKind::kAdjacency, a}, std::pair{MatrixKind::kSignless, q},
                              std::pair{MatrixKind::kLaplacian, l}}) {
      const SpectrumReport r = corona_spectrum(c3(), p2(), kind, method);
      CHECK(r.discrepancies.empty());
      CHECK(approx_equal(r.spectrum, want, 1e-8));
    }
  }
}

TEST_CASE("coregular closed forms on the worked example's parameters") {
  CHECK(approx_equal(spectrum_A_coregular(spec({{2, 1}}), 2, 1, spec({{-1, 1}, {1, 1}})),
                     Spectrum::from_values({(3 - std::sqrt(33.0)) / 2, -1, (3 + std::sqrt(33.0)) / 2}), 1e-12));
  const auto alpha_zero = spectrum_A_coregular(spec({{0, 1}}), 4, 3, spec({{3, 1}}));
  CHECK(approx_equal(alpha_zero, spec({{0, 1}, {3, 1}}), 1e-12));
  // Q: alpha = 4, r1 = 2, n2 = 2, r2 = k2 = 1 -> (12 +- sqrt 48) / 2; beta = 0 -> 2.
  const auto q = spectrum_Q_coregular(spec({{4, 1}}), 2, 2, 1, 1, spec({{0, 1}, {2, 1}}));
  const auto qr = roots_of(1, -12, 24);
  CHECK(approx_equal(q, Spectrum::from_values({qr[0], 2, qr[1]}), 1e-12));
  // L: alpha = 0 -> {0, 6}; beta = 2 -> 4.
  const auto l = spectrum_L_coregular(spec({{0, 1}}), 2, 2, 1, 1, spec({{0, 1}, {2, 1}}));
  CHECK(approx_equal(l, spec({{0, 1}, {4, 1}, {6, 1}}), 1e-12));
}

TEST_CASE("star closed forms") {
  // alpha = 0: x^3 - n x -> {0, +-sqrt n}.
  const auto s = spectrum_A_star(spec({{0, 1}}), 3, P);
  CHECK(approx_equal(s, spec({{-std::sqrt(3.0), 1}, {0, 3}, {std::sqrt(3.0), 1}}), 1e-10));
  // One leg: the star is P2, the 1 + r1 bucket is empty, and the result
  // must match the co-regular form.
  const Spectrum q1 = eig_symmetric(matrix(c3(), MatrixKind::kSignless));
  const Spectrum q2 = eig_symmetric(matrix(p2(), MatrixKind::kSignless));
  CHECK(approx_equal(spectrum_Q_star(q1, 2, 1, P), spectrum_Q_coregular(q1, 2, 2, 1, 1, q2), 1e-8));
  const Spectrum l1 = eig_symmetric(matrix(c3(), MatrixKind::kLaplacian));
  const Spectrum l2 = eig_symmetric(matrix(p2(), MatrixKind::kLaplacian));
  CHECK(approx_equal(spectrum_L_star(l1, 2, 1, P), spectrum_L_coregular(l1, 2, 2, 1, 1, l2), 1e-8));
  const Spectrum a1 = eig_symmetric(matrix(c3(), MatrixKind::kAdjacency));
  const Spectrum a2 = eig_symmetric(matrix(p2(), MatrixKind::kAdjacency));
  CHECK(approx_equal(spectrum_A_star(a1, 1, P), spectrum_A_coregular(a1, 2, 1, a2), 1e-8));
  // C3 with a two-leg positive star, against the eigensolver.
  const SignedGraph star(3, {{0, 1, P}, {0, 2, P}});
  const Spectrum want = eig_symmetric(matrix(neighbourhood_corona(c3(), star).graph, MatrixKind::kSignless));
  CHECK(approx_equal(spectrum_Q_star(q1, 2, 2, P), want, 1e-8));
}

TEST_CASE("single-node second factor doubles the degree") {
  const SignedGraph g1(3, {{0, 1, N}, {1, 2, P}});
  const IntPolynomial f = charpoly_A_corona(g1, k1());
  CHECK(f.degree() == 6);
  CHECK(f == char_poly(matrix(neighbourhood_corona(g1, k1(), CrossSign::kCentreMark).graph, MatrixKind::kAdjacency)));
}

TEST_CASE("assembled polynomials equal the characteristic polynomial of the built corona") {
  Rng rng(77);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n1 = uniform_between(rng, 1, 5), n2 = uniform_between(rng, 1, 4);
    const SignedGraph g1 = t % 2 ? random_regular_graph(rng, n1) : random_signed_graph(rng, n1);
    const SignedGraph g2 = random_signed_graph(rng, n2);
    const Corona c = neighbourhood_corona(g1, g2, CrossSign::kCentreMark);
    for (MatrixKind k : {MatrixKind::kAdjacency, MatrixKind::kLaplacian, MatrixKind::kSignless}) {
      if (k != MatrixKind::kAdjacency && !regular_degree(g1)) {
        CHECK_THROWS_AS(charpoly_corona(g1, g2, k), std::invalid_argument);
        continue;
      }
      const IntPolynomial f = charpoly_corona(g1, g2, k);
      const DenseMatrix m = matrix(c.graph, k);
      for (long x = -3; x <= 3; ++x) CHECK(f.evaluate(mpq_class(x)) == oracle::char_value(m, x));
      CHECK(f == char_poly(m));
    }
  }
}

TEST_CASE("three methods agree on the graphs they describe") {
  Rng rng(78);
  int closed = 0;
  for (int t = 0; t < 120; ++t) {
    const std::size_t n1 = uniform_between(rng, 1, 5), n2 = uniform_between(rng, 1, 5);
    const SignedGraph g1 = t % 2 ? random_regular_graph(rng, n1) : random_coregular_graph(rng, n1);
    const SignedGraph g2 = t % 3 ? random_coregular_graph(rng, n2) : random_star(rng, n2);
    for (MatrixKind k : {MatrixKind::kAdjacency, MatrixKind::kLaplacian, MatrixKind::kSignless}) {
      for (auto m : {SpectrumMethod::kTheorem, SpectrumMethod::kProposition}) {
        if (m == SpectrumMethod::kProposition && !has_closed_form_spectrum(g1, g2, k)) continue;
        closed += m == SpectrumMethod::kProposition;
        const SpectrumReport r = corona_spectrum(g1, g2, k, m, CrossSign::kCentreMark);
        CHECK(r.discrepancies.empty());
        CHECK(r.spectrum.order() == n1 * (g2.order() + 1));
      }
    }
  }
  CHECK(closed > 200);
}

TEST_CASE("neighbour-mark corona departs from the factorisation when the rules differ") {
  // C4 with one negative edge; every edge is offending.
  const SignedGraph g1(4, {{0, 1, P}, {1, 2, P}, {2, 3, P}, {0, 3, N}});
  REQUIRE_FALSE(cross_sign_rules_coincide(g1));
  const Corona nb = neighbourhood_corona(g1, p2());
  CHECK(charpoly_A_corona(g1, p2()) != char_poly(matrix(nb.graph, MatrixKind::kAdjacency)));
  const SpectrumReport r = corona_spectrum(g1, p2(), MatrixKind::kAdjacency, SpectrumMethod::kTheorem);
  CHECK_FALSE(r.discrepancies.empty());
  CHECK(corona_spectrum(g1, p2(), MatrixKind::kAdjacency, SpectrumMethod::kTheorem, CrossSign::kCentreMark)
            .discrepancies.empty());
}

TEST_CASE("cospectral checks") {
  const DenseMatrix a = matrix(c3(), MatrixKind::kAdjacency);
  CHECK(check_cospectral(a, a).cospectral);
  const SignedGraph one_neg(3, {{0, 1, N}, {1, 2, P}, {0, 2, P}});
  const auto r = check_cospectral(a, matrix(one_neg, MatrixKind::kAdjacency));
  CHECK_FALSE(r.cospectral);
  CHECK_FALSE(r.diagnostic.empty());
  CHECK_FALSE(check_cospectral(a, DenseMatrix(2, 2)).cospectral);

  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const SignedGraph g = random_signed_graph(rng, uniform_between(rng, 1, 7));
    const SignedGraph s = switched(g, random_switching(rng, g.order()));
    CHECK(check_cospectral(matrix(g, MatrixKind::kAdjacency), matrix(s, MatrixKind::kAdjacency)).cospectral);
  }
}

TEST_CASE("balanced connected coronas have Laplacian eigenvalue zero") {
  Rng rng(6);
  int seen_balanced = 0, seen_unbalanced = 0;
  for (int t = 0; t < 150; ++t) {
    const SignedGraph g1 = random_balanced_graph(rng, uniform_between(rng, 2, 5), 0.8);
    const SignedGraph g2 = t % 2 ? random_balanced_graph(rng, uniform_between(rng, 1, 4), 0.8)
                           : random_signed_graph(rng, uniform_between(rng, 1, 4), 0.8);
    const Corona c = neighbourhood_corona(g1, g2);
    std::vector<bool> seen(c.graph.order(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : c.graph.neighbours(u))
        if (!seen[v]) seen[v] = true, ++count, stack.push_back(v);
    }
    if (count != c.graph.order()) continue;
    const double smallest = eig_symmetric(matrix(c.graph, MatrixKind::kLaplacian)).pairs().front().value;
    if (is_balanced(c.graph)) {
      ++seen_balanced;
      CHECK(std::abs(smallest) < 1e-9);
    } else {
      ++seen_unbalanced;
      CHECK(smallest > 1e-9);
    }
  }
  CHECK(seen_balanced > 0);
  CHECK(seen_unbalanced > 0);
}
