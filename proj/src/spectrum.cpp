#include "sgc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace sgc {

Spectrum Spectrum::from_values(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end());
  std::vector<Eigenvalue> pairs;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j] - values[j - 1] <= tol) sum += values[j++];
    pairs.push_back({sum / static_cast<double>(j - i), j - i});
    i = j;
  }
  Spectrum s;
  s.pairs_ = std::move(pairs);
  return s;
}

Spectrum::Spectrum(std::vector<Eigenvalue> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].multiplicity == 0) throw std::invalid_argument("spectrum entry with zero multiplicity");
    if (i > 0 && !(pairs_[i - 1].value < pairs_[i].value))
      throw std::invalid_argument("spectrum values must be strictly increasing");
  }
}

std::size_t Spectrum::order() const noexcept {
  std::size_t n = 0;
  for (const auto& e : pairs_) n += e.multiplicity;
  return n;
}

std::vector<double> Spectrum::expand() const {
  std::vector<double> out;
  out.reserve(order());
  for (const auto& e : pairs_) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

std::size_t Spectrum::multiplicity_of(double value, double tol) const {
  for (const auto& e : pairs_)
    if (std::abs(e.value - value) <= tol) return e.multiplicity;
  return 0;
}

bool approx_equal(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.order() != b.order()) return false;
  const auto xa = a.expand();
  const auto xb = b.expand();
  for (std::size_t i = 0; i < xa.size(); ++i)
    if (std::abs(xa[i] - xb[i]) > tol) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const Spectrum& s) {
  os << '{';
  bool first = true;
  for (const auto& e : s.pairs()) {
    if (!first) os << ", ";
    first = false;
    os << e.value;
    if (e.multiplicity > 1) os << "^(" << e.multiplicity << ')';
  }
  return os << '}';
}

std::vector<double> symmetric_eigenvalues(const DenseMatrix& m) {
  if (!m.is_square() || !m.is_symmetric()) throw std::invalid_argument("eigensolver needs a symmetric matrix");
  DenseMatrix a = m;
  const std::size_t n = a.rows();
  const double target = 1e-12 * m.frobenius_norm();

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
    return std::sqrt(2.0 * s);
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_norm() > target) {
    if (++sweep > kMaxSweeps) throw std::runtime_error("Jacobi iteration did not converge");
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
      }
  }

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a(i, i);
  std::sort(out.begin(), out.end());
  return out;
}

Spectrum eig_symmetric(const DenseMatrix& m, double cluster_tol) {
  return Spectrum::from_values(symmetric_eigenvalues(m), cluster_tol);
}

namespace {

int sign_of(const mpq_class& q) { return sgn(q); }

IntPolynomial abs_primitive(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  mpz_class c = p.content();
  return divide_exact(p, mpz_class(abs(c)));
}

// f, f', then negated pseudo-remainders with the positive part of their
// content removed so that signs are preserved.
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& f) {
  std::vector<IntPolynomial> seq{f, abs_primitive(f.derivative())};
  while (seq.back().degree() > 0) {
    const IntPolynomial& a = seq[seq.size() - 2];
    const IntPolynomial& b = seq.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    const int delta = a.degree() - b.degree() + 1;
    const bool lc_power_negative = sgn(b.leading()) < 0 && delta % 2 == 1;
    r = abs_primitive(r);
    if (!lc_power_negative) r = -r;
    seq.push_back(std::move(r));
  }
  return seq;
}

int sign_changes(const std::vector<IntPolynomial>& seq, const mpq_class& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sign_of(p.evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Roots of a square-free f in (lo, hi].
void isolate(const IntPolynomial& f, const std::vector<IntPolynomial>& seq, mpq_class lo, mpq_class hi, int v_lo,
             int v_hi, std::vector<double>& out) {
  const int count = v_lo - v_hi;
  if (count <= 0) return;
  if (count > 1) {
    mpq_class mid = (lo + hi) / 2;
    const int v_mid = sign_changes(seq, mid);
    isolate(f, seq, lo, mid, v_lo, v_mid, out);
    isolate(f, seq, mid, hi, v_mid, v_hi, out);
    return;
  }
  // Exactly one root in (lo, hi]. Move lo off a root so endpoint signs differ.
  if (sign_of(f.evaluate(hi)) == 0) {
    out.push_back(hi.get_d());
    return;
  }
  while (sign_of(f.evaluate(lo)) == 0) {
    mpq_class mid = (lo + hi) / 2;
    if (sign_changes(seq, mid) == v_hi)
      hi = mid;
    else
      lo = mid;
  }
  int s_lo = sign_of(f.evaluate(lo));
  for (int iter = 0; iter < 200; ++iter) {
    mpq_class width = hi - lo;
    const double scale = std::max(1.0, std::abs(hi.get_d()));
    if (width.get_d() <= 0x1p-52 * scale) break;
    mpq_class mid = (lo + hi) / 2;
    const int s_mid = sign_of(f.evaluate(mid));
    if (s_mid == 0) {
      out.push_back(mid.get_d());
      return;
    }
    if (s_mid == s_lo)
      lo = mid;
    else
      hi = mid;
  }
  out.push_back(mpq_class((lo + hi) / 2).get_d());
}

std::vector<double> simple_roots(const IntPolynomial& f) {
  if (f.degree() <= 0) return {};
  // Cauchy bound: every root satisfies |x| < 1 + max |a_i / a_n|.
  mpz_class big = 0;
  for (const auto& c : f.coeffs()) big = std::max(big, mpz_class(abs(c)));
  mpz_class bound = 2 + big / abs(f.leading());
  const std::vector<IntPolynomial> seq = sturm_sequence(f);
  mpq_class lo(-bound), hi(bound);
  std::vector<double> out;
  isolate(f, seq, lo, hi, sign_changes(seq, lo), sign_changes(seq, hi), out);
  return out;
}

}  // namespace

Spectrum real_roots(const IntPolynomial& p, double cluster_tol) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  const IntPolynomial f = abs_primitive(p);
  std::vector<double> roots;

  // Yun: f = prod a_i^i with a_i square-free and pairwise coprime.
  if (f.degree() > 0) {
    const IntPolynomial df = f.derivative();
    const IntPolynomial a0 = abs_primitive(gcd(f, df));
    IntPolynomial b = divide_exact(f, a0);
    IntPolynomial c = divide_exact(df, a0);
    IntPolynomial d = c - b.derivative();
    for (std::size_t i = 1; b.degree() > 0; ++i) {
      const IntPolynomial a = abs_primitive(gcd(b, d));
      for (double r : simple_roots(a)) roots.insert(roots.end(), i, r);
      b = divide_exact(b, a);
      c = divide_exact(d, a);
      d = c - b.derivative();
    }
  }
  if (static_cast<int>(roots.size()) != f.degree())
    throw std::domain_error("polynomial is not real-rooted: found " + std::to_string(roots.size()) + " of " +
                            std::to_string(f.degree()) + " roots");
  return Spectrum::from_values(std::move(roots), cluster_tol);
}

}  // namespace sgc
