#include "sgc/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sgc {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear_root(long root) { return IntPolynomial{-root, 1}; }

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPolynomial::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

mpz_class IntPolynomial::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::shifted(long c) const {
  // Horner in the ring: p(x + c) = (...(a_n (x+c) + a_{n-1})(x+c) + ...).
  const IntPolynomial step{c, 1};
  IntPolynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * step + constant(*it);
  return acc;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

mpz_class IntPolynomial::content() const {
  if (c_.empty()) return 0;
  mpz_class g = 0;
  for (const mpz_class& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return c_.back() < 0 ? mpz_class(-g) : g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (c_.empty()) return {};
  return divide_exact(*this, content());
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (mpz_class& v : r.c_) v = -v;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& s) {
  for (mpz_class& v : c_) v *= s;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(char var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& a = c_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    mpz_class mag = abs(a);
    if (s.empty()) {
      if (a < 0) s += "-";
    } else {
      s += a < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) s += mag.get_str();
    if (i >= 1) s += var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

IntPolynomial divide_exact(const IntPolynomial& a, const mpz_class& s) {
  if (s == 0) throw std::domain_error("division by zero");
  std::vector<mpz_class> out(a.coeffs().begin(), a.coeffs().end());
  for (mpz_class& v : out) {
    if (!mpz_divisible_p(v.get_mpz_t(), s.get_mpz_t())) throw std::domain_error("inexact coefficient division");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<mpz_class> rem(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  const auto dq = static_cast<std::size_t>(a.degree() - b.degree());
  std::vector<mpz_class> q(dq + 1);
  const mpz_class& lb = b.leading();
  for (std::size_t k = dq + 1; k-- > 0;) {
    mpz_class& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw std::domain_error("inexact polynomial division");
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= q[k] * b.coeffs()[i];
  }
  for (const mpz_class& r : rem)
    if (r != 0) throw std::domain_error("inexact polynomial division");
  return IntPolynomial(std::move(q));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  const mpz_class& lb = b.leading();
  // Each step multiplies the running remainder by lc(b) and cancels its top
  // coefficient, for deg a - deg b + 1 steps in total.
  for (std::size_t top = r.size() - 1; top + 1 > db && top < r.size(); --top) {
    const mpz_class lead = r[top];
    for (mpz_class& v : r) v *= lb;
    for (std::size_t i = 0; i <= db; ++i) r[top - db + i] -= lead * b.coeffs()[i];
    if (top == db) break;
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.is_zero() ? IntPolynomial{} : b.primitive_part() * abs(b.content());
  if (b.is_zero()) return a.primitive_part() * abs(a.content());
  mpz_class cont;
  const mpz_class ca = abs(a.content());
  const mpz_class cb = abs(b.content());
  mpz_gcd(cont.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

  IntPolynomial p = a.primitive_part();
  IntPolynomial q = b.primitive_part();
  if (p.degree() < q.degree()) std::swap(p, q);
  while (!q.is_zero()) {
    IntPolynomial r = pseudo_remainder(p, q);
    p = std::move(q);
    q = r.is_zero() ? IntPolynomial{} : r.primitive_part();
  }
  return p.primitive_part() * cont;
}

IntPolynomial determinant(std::vector<std::vector<IntPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial::constant(1);
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");

  bool negate = false;
  IntPolynomial prev = IntPolynomial::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = IntPolynomial{};
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

IntPolynomial resultant_in_y(const IntPolynomial& f, std::span<const IntPolynomial> g_coeffs) {
  std::size_t dg = g_coeffs.size();
  while (dg > 0 && g_coeffs[dg - 1].is_zero()) --dg;
  if (f.is_zero() || dg == 0) return {};
  const auto m = static_cast<std::size_t>(f.degree());
  const std::size_t n = dg - 1;
  if (m == 0) return IntPolynomial::constant(f.leading()).pow(static_cast<unsigned>(n));
  if (n == 0) return g_coeffs[0].pow(static_cast<unsigned>(m));

  // Sylvester matrix: n rows of f's coefficients, then m rows of g's, each
  // listed from the highest power of y down.
  const std::size_t size = m + n;
  std::vector<std::vector<IntPolynomial>> syl(size, std::vector<IntPolynomial>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) syl[r][r + k] = IntPolynomial::constant(f.coeff(m - k));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) syl[n + r][r + k] = g_coeffs[n - k];
  return determinant(std::move(syl));
}

}  // namespace sgc
