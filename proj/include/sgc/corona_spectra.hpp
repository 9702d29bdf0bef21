#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgc/corona.hpp"
#include "sgc/discrepancy.hpp"
#include "sgc/polynomial.hpp"
#include "sgc/signed_graph.hpp"
#include "sgc/spectrum.hpp"

namespace sgc {

// Characteristic polynomials of the corona assembled from the factors:
//
//   f(A) = f(A2; x)^n1 * prod_i (x - l_i - chi_A2(x) l_i^2)
//   f(Q) = f(Q2; x - r1)^n1 * prod_i (x - n2 r1 - g_i - chi_Q2(x - r1) (g_i - r1)^2)
//   f(L) = f(L2; x - r1)^n1 * prod_i (x - n2 r1 - v_i - chi_L2(x - r1) (r1 - v_i)^2)
//
// where l_i, g_i, v_i run over the A, Q, L eigenvalues of Gamma_1. The
// product over eigenvalues is the resultant in y of f(M1; y) with the
// cleared-denominator factor, so everything stays in Z[x].
//
// These equal char_poly of the centre-mark corona for all inputs, and of the
// neighbour-mark corona whenever cross_sign_rules_coincide(g1).

IntPolynomial charpoly_A_corona(const SignedGraph& g1, const SignedGraph& g2);
/// Throws std::invalid_argument unless g1 is regular.
IntPolynomial charpoly_Q_corona(const SignedGraph& g1, const SignedGraph& g2);
/// Throws std::invalid_argument unless g1 is regular.
IntPolynomial charpoly_L_corona(const SignedGraph& g1, const SignedGraph& g2);
/// Dispatch on kind (A, L or Q).
IntPolynomial charpoly_corona(const SignedGraph& g1, const SignedGraph& g2, MatrixKind which);

// Closed-form spectra. Eigenvalues of Gamma_1 arrive numerically; roots of
// the per-eigenvalue quadratics and cubics are computed in floating point.

/// Gamma_2 net-regular (net degree k) with a constant marking on n2 nodes.
/// Per alpha in spec_a1: (alpha + k +- sqrt((alpha - k)^2 + 4 n2 alpha^2)) / 2.
/// Each beta != k of spec_a2 gets multiplicity n1 * mult(beta); k gets
/// n1 * (mult(k) - 1).
Spectrum spectrum_A_coregular(const Spectrum& spec_a1, long n2, long k, const Spectrum& spec_a2);
/// Gamma_2 a star with `legs` legs and centre mark c. Per alpha, the roots
/// of x^3 - alpha x^2 - ((n+1) alpha^2 + n) x + n alpha - 2 n c alpha^2;
/// plus 0 with multiplicity n1 (n - 1).
Spectrum spectrum_A_star(const Spectrum& spec_a1, long legs, Sign centre_mark);
/// Gamma_1 r1-regular; Gamma_2 (r2, k2) co-regular with constant marking.
/// Per alpha in spec_q1: the roots of
/// (x - n2 r1 - alpha)(x - r1 - r2 - k2) - n2 (alpha - r1)^2. Each
/// beta != r2 + k2 of spec_q2 gives beta + r1 with multiplicity n1 * mult;
/// the pole r1 + r2 + k2 gets n1 * (mult(r2 + k2) - 1).
Spectrum spectrum_Q_coregular(const Spectrum& spec_q1, long r1, long n2, long r2, long k2, const Spectrum& spec_q2);
/// Gamma_1 r1-regular, Gamma_2 a star. With y = x - r1, per alpha the roots
/// of (y - n r1 - alpha) y (y - n - 1) - ((n+1) y - (n^2+1) + 2 n c)(alpha - r1)^2;
/// plus 1 + r1 with multiplicity n1 (n - 1).
Spectrum spectrum_Q_star(const Spectrum& spec_q1, long r1, long legs, Sign centre_mark);
/// As spectrum_Q_coregular with L quantities; the pole is r1 + r2 - k2.
Spectrum spectrum_L_coregular(const Spectrum& spec_l1, long r1, long n2, long r2, long k2, const Spectrum& spec_l2);
/// As spectrum_Q_star with the L-coronal of the star, i.e. -2nc in place of
/// +2nc.
Spectrum spectrum_L_star(const Spectrum& spec_l1, long r1, long legs, Sign centre_mark);

/// True when a closed-form spectrum exists for this pair and kind: Gamma_2
/// has a constant-marking co-regular coronal or is a star, and for L and Q
/// Gamma_1 is regular.
bool has_closed_form_spectrum(const SignedGraph& g1, const SignedGraph& g2, MatrixKind which);
/// Closed-form spectrum; throws std::invalid_argument if none applies.
Spectrum closed_form_spectrum(const SignedGraph& g1, const SignedGraph& g2, MatrixKind which);

enum class SpectrumMethod { kNumeric, kTheorem, kProposition };
const char* spectrum_method_name(SpectrumMethod m) noexcept;

struct SpectrumReport {
  SpectrumMethod method = SpectrumMethod::kNumeric;
  Spectrum spectrum;
  /// Empty iff the result agreed with the numeric spectrum of the built
  /// corona within kAgreementTolerance.
  std::vector<Discrepancy> discrepancies;
};

inline constexpr double kAgreementTolerance = 1e-6;

/// Spectrum of M(neighbourhood_corona(g1, g2, rule)) by the chosen method,
/// cross-checked against the numeric eigensolver on the built matrix.
SpectrumReport corona_spectrum(const SignedGraph& g1, const SignedGraph& g2, MatrixKind which, SpectrumMethod method,
                               CrossSign rule = CrossSign::kNeighbourMark);

struct CospectralResult {
  bool cospectral = false;
  std::string diagnostic;
};

/// Sorted eigenvalue lists agree entrywise within tol. Order mismatch gives
/// false with a diagnostic rather than an exception.
CospectralResult check_cospectral(const DenseMatrix& m1, const DenseMatrix& m2, double tol = 1e-8);

}  // namespace sgc
