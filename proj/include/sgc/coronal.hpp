#pragma once

#include <cstddef>
#include <optional>

#include "sgc/dense_matrix.hpp"
#include "sgc/polynomial.hpp"
#include "sgc/rational_fn.hpp"
#include "sgc/signed_graph.hpp"

namespace sgc {

/// det(xI - m) for a square matrix with integer entries, by the
/// Faddeev-LeVerrier recurrence in exact integer arithmetic.
IntPolynomial char_poly(const DenseMatrix& m);

/// mu^T (xI - m)^{-1} mu, reduced. The adjugate comes from the same
/// recurrence as char_poly.
RationalFn coronal_generic(const DenseMatrix& m, const Marking& marks);

/// The M-coronal of g under its canonical marking.
RationalFn coronal(const SignedGraph& g, MatrixKind which);

// Closed forms. Each assumes the stated shape; coronal_closed_form() checks
// the shape before choosing one.

/// n / (x - k): net-regular with net degree k and a constant canonical
/// marking (then A mu = k mu).
RationalFn coronal_A_net_regular(long n, long k);
/// ((n+1)x + 2n mu_c) / (x^2 - n) for the star K_{1,n}.
RationalFn coronal_A_star(long legs, Sign centre_mark);
/// n / (x - r - k).
RationalFn coronal_Q_coregular(long n, long r, long k);
/// ((n+1)x - (n^2+1) + 2n mu_c) / (x (x - n - 1)).
RationalFn coronal_Q_star(long legs, Sign centre_mark);
/// n / (x - r + k).
RationalFn coronal_L_coregular(long n, long r, long k);
/// ((n+1)x - (n^2+1) - 2n mu_c) / (x (x - n - 1)). The centre-mark term
/// enters with the opposite sign to the Q case because L carries -A.
RationalFn coronal_L_star(long legs, Sign centre_mark);

struct StarShape {
  std::size_t centre = 0;
  std::size_t legs = 0;
  Sign centre_mark = Sign::kPositive;
};

/// Recognises K_{1,n}, n >= 1. For n = 1 the centre is node 0.
std::optional<StarShape> star_shape(const SignedGraph& g);

/// True when g is net-regular (and, for L and Q, regular) with a constant
/// canonical marking, i.e. the marking is an eigenvector of M.
bool has_coregular_coronal(const SignedGraph& g, MatrixKind which);

/// Closed-form coronal when g qualifies (constant-marking co-regular first,
/// then star); nullopt otherwise.
std::optional<RationalFn> coronal_closed_form(const SignedGraph& g, MatrixKind which);

}  // namespace sgc
