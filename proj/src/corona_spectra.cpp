#include "sgc/corona_spectra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "sgc/coronal.hpp"
#include "sgc/graph_io.hpp"

namespace sgc {

namespace {

// f2(x - r)^n1 / Qt^n1 * Res_y(f1(y), h(x, y)) with
// h = Qt (x - n2 r - y) - Pt (y - r)^2 and chi2(x - r) = Pt / Qt.
// For A, r = 0 and the same expression reduces to the adjacency form.
IntPolynomial assemble(const IntPolynomial& f1, const IntPolynomial& f2, const RationalFn& chi2, std::size_t n1,
                       long n2, long r) {
  const IntPolynomial f2s = f2.shifted(-r);
  const IntPolynomial pt = chi2.num().shifted(-r);
  const IntPolynomial qt = chi2.den().shifted(-r);
  const IntPolynomial x_minus = IntPolynomial{-n2 * r, 1};
  const std::array<IntPolynomial, 3> h{
      qt * x_minus - pt * mpz_class(r * r),
      pt * mpz_class(2 * r) - qt,
      -pt,
  };
  const IntPolynomial res = resultant_in_y(f1, h);
  const IntPolynomial g = divide_exact(f2s, qt);
  return g.pow(static_cast<unsigned>(n1)) * res;
}

long regular_or_throw(const SignedGraph& g1) {
  const auto r = regular_degree(g1);
  if (!r) throw std::invalid_argument("the first factor must be regular for the L and Q factorisations");
  return *r;
}

IntPolynomial assemble_kind(const SignedGraph& g1, const SignedGraph& g2, MatrixKind which) {
  if (g1.order() == 0 || g2.order() == 0) throw std::invalid_argument("corona factors must be non-empty");
  const long r1 = which == MatrixKind::kAdjacency ? 0 : regular_or_throw(g1);
  return assemble(char_poly(matrix(g1, which)), char_poly(matrix(g2, which)), coronal(g2, which), g1.order(),
                  static_cast<long>(g2.order()), r1);
}

// Roots of (x - a)(x - b) - c with c >= 0, always real.
std::array<double, 2> pair_roots(double a, double b, double c) {
  const double disc = std::sqrt((a - b) * (a - b) + 4.0 * c);
  return {(a + b - disc) / 2.0, (a + b + disc) / 2.0};
}

// Real roots of y^3 + a y^2 + b y + d, assumed all real.
std::array<double, 3> cubic_roots(double a, double b, double d) {
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + d;
  std::array<double, 3> t{};
  if (p >= -1e-14 * std::max(1.0, a * a)) {
    const double c = std::cbrt(-q);
    t = {c, c, c};
  } else {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) t[k] = m * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0);
  }
  std::array<double, 3> y{};
  for (int k = 0; k < 3; ++k) {
    double v = t[k] - a / 3.0;
    auto f = [&](double z) { return ((z + a) * z + b) * z + d; };
    for (int it = 0; it < 4; ++it) {
      const double df = (3.0 * v + 2.0 * a) * v + b;
      if (df == 0.0) break;
      const double next = v - f(v) / df;
      if (!(std::abs(f(next)) < std::abs(f(v)))) break;
      v = next;
    }
    y[k] = v;
  }
  return y;
}

// Eigenvalues of M2 that survive cancellation against the coronal pole:
// each beta gets n1 * mult(beta), the pole value one copy fewer.
void push_remaining(std::vector<double>& out, const Spectrum& spec2, double pole, std::size_t n1, double shift) {
  for (const auto& e : spec2.pairs()) {
    std::size_t mult = e.multiplicity;
    if (std::abs(e.value - pole) <= kClusterTolerance) --mult;
    out.insert(out.end(), n1 * mult, e.value + shift);
  }
}

Spectrum coregular_spectrum(const Spectrum& spec1, long r1, long n2, double pole, const Spectrum& spec2) {
  const std::size_t n1 = spec1.order();
  std::vector<double> values;
  for (const auto& e : spec1.pairs()) {
    const double alpha = e.value;
    const auto roots = pair_roots(static_cast<double>(n2 * r1) + alpha, pole + static_cast<double>(r1),
                                  static_cast<double>(n2) * (alpha - r1) * (alpha - r1));
    for (double v : roots) values.insert(values.end(), e.multiplicity, v);
  }
  push_remaining(values, spec2, pole, n1, static_cast<double>(r1));
  return Spectrum::from_values(std::move(values));
}

// Q (mark_sign = +1) or L (mark_sign = -1) star case, cubic in y = x - r1.
Spectrum star_spectrum(const Spectrum& spec1, long r1, long legs, Sign centre_mark, int mark_sign) {
  if (legs <= 0) throw std::invalid_argument("a star needs at least one leg");
  const double n = static_cast<double>(legs);
  const double c = to_int(centre_mark);
  const std::size_t n1 = spec1.order();
  std::vector<double> values;
  for (const auto& e : spec1.pairs()) {
    const double alpha = e.value;
    const double s = (alpha - r1) * (alpha - r1);
    const double big = n * r1 + alpha;
    const auto ys = cubic_roots(-(n + 1.0 + big), big * (n + 1.0) - s * (n + 1.0),
                                s * (n * n + 1.0 - mark_sign * 2.0 * n * c));
    for (double y : ys) values.insert(values.end(), e.multiplicity, y + r1);
  }
  values.insert(values.end(), n1 * static_cast<std::size_t>(legs - 1), 1.0 + r1);
  return Spectrum::from_values(std::move(values));
}

std::string spectrum_text(const Spectrum& s) {
  std::ostringstream os;
  os.precision(12);
  os << s;
  return os.str();
}

}  // namespace

IntPolynomial charpoly_A_corona(const SignedGraph& g1, const SignedGraph& g2) {
  return assemble_kind(g1, g2, MatrixKind::kAdjacency);
}

IntPolynomial charpoly_Q_corona(const SignedGraph& g1, const SignedGraph& g2) {
  return assemble_kind(g1, g2, MatrixKind::kSignless);
}

IntPolynomial charpoly_L_corona(const SignedGraph& g1, const SignedGraph& g2) {
  return assemble_kind(g1, g2, MatrixKind::kLaplacian);
}

IntPolynomial charpoly_corona(const SignedGraph& g1, const SignedGraph& g2, MatrixKind which) {
  if (which == MatrixKind::kDegree) throw std::invalid_argument("no factorisation for the degree matrix");
  return assemble_kind(g1, g2, which);
}

Spectrum spectrum_A_coregular(const Spectrum& spec_a1, long n2, long k, const Spectrum& spec_a2) {
  return coregular_spectrum(spec_a1, 0, n2, static_cast<double>(k), spec_a2);
}

Spectrum spectrum_A_star(const Spectrum& spec_a1, long legs, Sign centre_mark) {
  if (legs <= 0) throw std::invalid_argument("a star needs at least one leg");
  const double n = static_cast<double>(legs);
  const double c = to_int(centre_mark);
  std::vector<double> values;
  for (const auto& e : spec_a1.pairs()) {
    const double alpha = e.value;
    const auto xs = cubic_roots(-alpha, -((n + 1.0) * alpha * alpha + n), n * alpha - 2.0 * n * c * alpha * alpha);
    for (double x : xs) values.insert(values.end(), e.multiplicity, x);
  }
  values.insert(values.end(), spec_a1.order() * static_cast<std::size_t>(legs - 1), 0.0);
  return Spectrum::from_values(std::move(values));
}

Spectrum spectrum_Q_coregular(const Spectrum& spec_q1, long r1, long n2, long r2, long k2, const Spectrum& spec_q2) {
  return coregular_spectrum(spec_q1, r1, n2, static_cast<double>(r2 + k2), spec_q2);
}

Spectrum spectrum_Q_star(const Spectrum& spec_q1, long r1, long legs, Sign centre_mark) {
  return star_spectrum(spec_q1, r1, legs, centre_mark, +1);
}

Spectrum spectrum_L_coregular(const Spectrum& spec_l1, long r1, long n2, long r2, long k2, const Spectrum& spec_l2) {
  return coregular_spectrum(spec_l1, r1, n2, static_cast<double>(r2 - k2), spec_l2);
}

Spectrum spectrum_L_star(const Spectrum& spec_l1, long r1, long legs, Sign centre_mark) {
  return star_spectrum(spec_l1, r1, legs, centre_mark, -1);
}

bool has_closed_form_spectrum(const SignedGraph& g1, const SignedGraph& g2, MatrixKind which) {
  if (which == MatrixKind::kDegree || g1.order() == 0) return false;
  if (which != MatrixKind::kAdjacency && !regular_degree(g1)) return false;
  return has_coregular_coronal(g2, which) || star_shape(g2).has_value();
}

Spectrum closed_form_spectrum(const SignedGraph& g1, const SignedGraph& g2, MatrixKind which) {
  if (!has_closed_form_spectrum(g1, g2, which))
    throw std::invalid_argument("no closed-form spectrum applies to these factors");
  const Spectrum spec1 = eig_symmetric(matrix(g1, which));
  const long r1 = which == MatrixKind::kAdjacency ? 0 : *regular_degree(g1);
  const auto n2 = static_cast<long>(g2.order());
  if (has_coregular_coronal(g2, which)) {
    const CoRegularity cr = co_regularity(g2);
    const Spectrum spec2 = eig_symmetric(matrix(g2, which));
    switch (which) {
      case MatrixKind::kAdjacency: return spectrum_A_coregular(spec1, n2, *cr.k, spec2);
      case MatrixKind::kSignless: return spectrum_Q_coregular(spec1, r1, n2, *cr.r, *cr.k, spec2);
      default: return spectrum_L_coregular(spec1, r1, n2, *cr.r, *cr.k, spec2);
    }
  }
  const StarShape star = *star_shape(g2);
  const auto legs = static_cast<long>(star.legs);
  switch (which) {
    case MatrixKind::kAdjacency: return spectrum_A_star(spec1, legs, star.centre_mark);
    case MatrixKind::kSignless: return spectrum_Q_star(spec1, r1, legs, star.centre_mark);
    default: return spectrum_L_star(spec1, r1, legs, star.centre_mark);
  }
}

const char* spectrum_method_name(SpectrumMethod m) noexcept {
  switch (m) {
    case SpectrumMethod::kNumeric: return "numeric";
    case SpectrumMethod::kTheorem: return "theorem";
    case SpectrumMethod::kProposition: return "proposition";
  }
  return "?";
}

SpectrumReport corona_spectrum(const SignedGraph& g1, const SignedGraph& g2, MatrixKind which, SpectrumMethod method,
                               CrossSign rule) {
  if (which == MatrixKind::kDegree) throw std::invalid_argument("spectra are offered for A, L and Q only");
  const Corona c = neighbourhood_corona(g1, g2, rule);
  const Spectrum numeric = eig_symmetric(matrix(c.graph, which));
  SpectrumReport report{method, numeric, {}};
  if (method == SpectrumMethod::kNumeric) return report;

  report.spectrum = method == SpectrumMethod::kTheorem ? real_roots(charpoly_corona(g1, g2, which))
                                                       : closed_form_spectrum(g1, g2, which);
  if (!approx_equal(report.spectrum, numeric, kAgreementTolerance)) {
    report.discrepancies.push_back({std::string(spectrum_method_name(method)) + " spectrum of " +
                                        matrix_kind_name(which) + " (" + cross_sign_name(rule) + " rule)",
                                    "g1=" + compact_form(g1) + " g2=" + compact_form(g2), spectrum_text(numeric),
                                    spectrum_text(report.spectrum)});
  }
  return report;
}

CospectralResult check_cospectral(const DenseMatrix& m1, const DenseMatrix& m2, double tol) {
  if (m1.rows() != m2.rows() || !m1.is_square() || !m2.is_square())
    return {false, "order mismatch: " + std::to_string(m1.rows()) + " vs " + std::to_string(m2.rows())};
  if (!m1.is_symmetric() || !m2.is_symmetric()) return {false, "matrix not symmetric"};
  const auto a = symmetric_eigenvalues(m1);
  const auto b = symmetric_eigenvalues(m2);
  double worst = 0.0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    if (d > worst) {
      worst = d;
      at = i;
    }
  }
  if (worst <= tol) return {true, ""};
  std::ostringstream os;
  os.precision(12);
  os << "eigenvalue " << at << " differs: " << a[at] << " vs " << b[at];
  return {false, os.str()};
}

}  // namespace sgc
