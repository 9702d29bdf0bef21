#include "sgc/rational_fn.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgc {

RationalFn::RationalFn(IntPolynomial num, IntPolynomial den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = {};
    den_ = IntPolynomial::constant(1);
    return;
  }
  const IntPolynomial g = gcd(num, den).primitive_part();
  num = divide_exact(num, g);
  den = divide_exact(den, g);

  mpz_class c;
  const mpz_class cn = abs(num.content());
  const mpz_class cd = abs(den.content());
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den.leading() < 0) c = -c;
  num_ = divide_exact(num, c);
  den_ = divide_exact(den, c);
}

mpq_class RationalFn::evaluate(const mpq_class& x) const {
  const mpq_class d = den_.evaluate(x);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  return num_.evaluate(x) / d;
}

std::string RationalFn::to_string(char var) const {
  const bool wrap_num = num_.degree() >= 1 && num_.coeffs().size() > 1 &&
                        std::count_if(num_.coeffs().begin(), num_.coeffs().end(),
                                      [](const mpz_class& v) { return v != 0; }) > 1;
  std::string s = wrap_num ? "(" + num_.to_string(var) + ")" : num_.to_string(var);
  if (den_ == IntPolynomial::constant(1)) return s;
  const bool wrap_den = std::count_if(den_.coeffs().begin(), den_.coeffs().end(),
                                      [](const mpz_class& v) { return v != 0; }) > 1 ||
                        den_.leading() != 1;
  return s + "/" + (wrap_den ? "(" + den_.to_string(var) + ")" : den_.to_string(var));
}

}  // namespace sgc
