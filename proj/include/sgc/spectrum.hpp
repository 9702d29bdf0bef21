#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "sgc/dense_matrix.hpp"
#include "sgc/polynomial.hpp"

namespace sgc {

/// Default distance under which two eigenvalues count as one.
inline constexpr double kClusterTolerance = 1e-6;

struct Eigenvalue {
  double value = 0.0;
  std::size_t multiplicity = 0;
  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Multiset of real eigenvalues as (value, multiplicity) pairs with strictly
/// increasing values.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts and merges runs whose consecutive gaps are within tol. A merged
  /// value is the mean of its run.
  static Spectrum from_values(std::vector<double> values, double tol = kClusterTolerance);
  /// Pairs must already be strictly increasing with positive multiplicities.
  explicit Spectrum(std::vector<Eigenvalue> pairs);

  std::span<const Eigenvalue> pairs() const noexcept { return pairs_; }
  /// Sum of multiplicities.
  std::size_t order() const noexcept;
  /// Every eigenvalue repeated by its multiplicity, ascending.
  std::vector<double> expand() const;
  /// Multiplicity of the eigenvalue within tol of value, 0 if none.
  std::size_t multiplicity_of(double value, double tol = kClusterTolerance) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<Eigenvalue> pairs_;
};

/// Same order and the expanded ascending lists agree entrywise within tol.
bool approx_equal(const Spectrum& a, const Spectrum& b, double tol);

std::ostream& operator<<(std::ostream& os, const Spectrum& s);

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi
/// rotations run until the off-diagonal Frobenius norm is below 1e-12 times
/// the Frobenius norm of m. Throws std::invalid_argument if m is not
/// symmetric.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& m);

/// symmetric_eigenvalues() clustered into a Spectrum.
Spectrum eig_symmetric(const DenseMatrix& m, double cluster_tol = kClusterTolerance);

/// Real roots with multiplicity. Square-free factors come from Yun's
/// algorithm, roots are isolated with Sturm sequences evaluated exactly at
/// dyadic points and then bisected. Throws std::domain_error when p has
/// fewer real roots than its degree, and std::invalid_argument for p = 0.
Spectrum real_roots(const IntPolynomial& p, double cluster_tol = kClusterTolerance);

}  // namespace sgc
