#pragma once

#include <string>

#include "sgc/polynomial.hpp"

namespace sgc {

/// Ratio of integer polynomials in lowest terms. Canonical form: numerator
/// and denominator coprime, the combined content is 1, and the denominator
/// has a positive leading coefficient, so equal functions compare equal.
class RationalFn {
 public:
  RationalFn(IntPolynomial num, IntPolynomial den);

  const IntPolynomial& num() const noexcept { return num_; }
  const IntPolynomial& den() const noexcept { return den_; }

  double evaluate(double x) const { return num_.evaluate(x) / den_.evaluate(x); }
  mpq_class evaluate(const mpq_class& x) const;
  /// chi(x + c).
  RationalFn shifted(long c) const { return RationalFn(num_.shifted(c), den_.shifted(c)); }

  std::string to_string(char var = 'x') const;

  friend bool operator==(const RationalFn&, const RationalFn&) = default;

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

}  // namespace sgc
