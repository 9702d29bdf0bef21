#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sgc {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored low degree first and kept trimmed (no trailing zeros).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial monomial(const mpz_class& c, std::size_t degree);
  /// x - root.
  static IntPolynomial linear_root(long root);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& leading() const;
  mpz_class coeff(std::size_t i) const;
  std::span<const mpz_class> coeffs() const noexcept { return c_; }

  double evaluate(double x) const;
  mpq_class evaluate(const mpq_class& x) const;

  IntPolynomial derivative() const;
  /// p(x + c).
  IntPolynomial shifted(long c) const;
  IntPolynomial pow(unsigned e) const;

  /// gcd of the coefficients, sign of the leading coefficient.
  mpz_class content() const;
  IntPolynomial primitive_part() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const mpz_class& s);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const mpz_class& s) { return a *= s; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// a / b when the quotient has integer coefficients; throws
/// std::domain_error otherwise.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);
/// Divide every coefficient by s; throws if any is not divisible.
IntPolynomial divide_exact(const IntPolynomial& a, const mpz_class& s);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Greatest common divisor, primitive with positive leading coefficient,
/// times the gcd of the contents. gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Res_y(f(y), g(x, y)) where g = sum_k g_coeffs[k](x) y^k. The result is a
/// polynomial in x. Computed as the Sylvester determinant over Z[x].
IntPolynomial resultant_in_y(const IntPolynomial& f, std::span<const IntPolynomial> g_coeffs);

/// Determinant of a square matrix of polynomials by fraction-free
/// elimination with exact polynomial division.
IntPolynomial determinant(std::vector<std::vector<IntPolynomial>> m);

}  // namespace sgc
