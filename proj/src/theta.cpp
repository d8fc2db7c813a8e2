#include "witgen/theta.hpp"

#include <cmath>

namespace witgen {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI(0.0, 1.0);

void require_upper_half_plane(Complex tau) {
  if (!(tau.imag() > 0.0))
    fail(errc::domain, "tau must satisfy Im(tau) > 0");
}

// Maclaurin coefficients of sinh(x/2)/(x/2): x^{2m} / (4^m (2m+1)!).
std::vector<Rational> sinh_half_quotient(int cap) {
  std::vector<Rational> s(static_cast<size_t>(cap) + 1, Rational(0));
  Integer denom(1);
  for (int m = 0; 2 * m <= cap; ++m) {
    if (m > 0) denom *= Integer(4) * (2 * m) * (2 * m + 1);
    Rational c(1);
    c /= Rational(denom);
    s[static_cast<size_t>(2 * m)] = c;
  }
  return s;
}

std::vector<Rational> invert_rational_series(const std::vector<Rational>& s) {
  std::vector<Rational> out(s.size(), Rational(0));
  Rational lead = 1 / s[0];
  out[0] = lead;
  for (size_t d = 1; d < s.size(); ++d) {
    Rational acc(0);
    for (size_t i = 1; i <= d; ++i) acc += s[i] * out[d - i];
    out[d] = -lead * acc;
  }
  return out;
}

}  // namespace

Complex theta_eval_numeric(ThetaKind kind, Complex v, Complex tau, int terms) {
  require_upper_half_plane(tau);
  if (terms < 1) fail(errc::domain, "need at least one product term");
  const Complex q = std::exp(2.0 * kPi * kI * tau);
  const Complex e_plus = std::exp(2.0 * kPi * kI * v);
  const Complex e_minus = 1.0 / e_plus;
  const bool half_shift = kind == ThetaKind::theta2 || kind == ThetaKind::theta3;
  const double sign =
      (kind == ThetaKind::theta || kind == ThetaKind::theta2) ? -1.0 : 1.0;

  Complex prod(1.0, 0.0);
  Complex qj(1.0, 0.0);
  const Complex q_half = std::exp(kPi * kI * tau);
  for (int j = 1; j <= terms; ++j) {
    qj *= q;
    const Complex qshift = half_shift ? qj / q_half : qj;
    prod *= (1.0 - qj) * (1.0 + sign * e_plus * qshift) *
            (1.0 + sign * e_minus * qshift);
  }
  switch (kind) {
    case ThetaKind::theta:
      return 2.0 * std::exp(kPi * kI * tau / 4.0) * std::sin(kPi * v) * prod;
    case ThetaKind::theta1:
      return 2.0 * std::exp(kPi * kI * tau / 4.0) * std::cos(kPi * v) * prod;
    case ThetaKind::theta2:
    case ThetaKind::theta3:
      return prod;
  }
  fail(errc::internal, "unreachable theta kind");
}

Complex theta_deriv0_numeric(Complex tau, int terms) {
  require_upper_half_plane(tau);
  const Complex q = std::exp(2.0 * kPi * kI * tau);
  Complex prod(1.0, 0.0);
  Complex qj(1.0, 0.0);
  for (int j = 1; j <= terms; ++j) {
    qj *= q;
    const Complex f = 1.0 - qj;
    prod *= f * f * f;
  }
  return 2.0 * kPi * std::exp(kPi * kI * tau / 4.0) * prod;
}

Complex theta_translation_factor(ThetaKind kind, int m, int n, Complex v,
                                 Complex tau) {
  // Integer-shift sign: -1 for theta/theta1, +1 for theta2/theta3.
  // tau-shift sign: -1 for theta/theta2, +1 for theta1/theta3.
  const double s1 =
      (kind == ThetaKind::theta || kind == ThetaKind::theta1) ? -1.0 : 1.0;
  const double s2 =
      (kind == ThetaKind::theta || kind == ThetaKind::theta2) ? -1.0 : 1.0;
  Complex factor = std::pow(s1, std::abs(m)) * std::pow(s2, std::abs(n));
  factor *= std::exp(-2.0 * kPi * kI * static_cast<double>(n) * v -
                     kPi * kI * static_cast<double>(n) *
                         static_cast<double>(n) * tau);
  return factor;
}

double translation_law_residual(ThetaKind kind, Complex v, Complex tau, int m,
                                int n, int terms) {
  const Complex shifted = theta_eval_numeric(
      kind, v + static_cast<double>(m) + static_cast<double>(n) * tau, tau,
      terms);
  const Complex predicted =
      theta_translation_factor(kind, m, n, v, tau) *
      theta_eval_numeric(kind, v, tau, terms);
  return std::abs(shifted - predicted);
}

double jacobi_identity_residual(Complex tau, int terms) {
  const Complex lhs = theta_deriv0_numeric(tau, terms);
  const Complex rhs = kPi *
                      theta_eval_numeric(ThetaKind::theta1, 0.0, tau, terms) *
                      theta_eval_numeric(ThetaKind::theta2, 0.0, tau, terms) *
                      theta_eval_numeric(ThetaKind::theta3, 0.0, tau, terms);
  return std::abs(lhs - rhs);
}

CharSeries ahat_char_series(int x_degree_cap) {
  if (x_degree_cap < 0) fail(errc::domain, "negative degree cap");
  const std::vector<Rational> a =
      invert_rational_series(sinh_half_quotient(x_degree_cap));
  UniSeries<QSeries> s(x_degree_cap, QSeries(0));
  for (int d = 0; d <= x_degree_cap; ++d)
    s.c[static_cast<size_t>(d)] = QSeries(0, a[static_cast<size_t>(d)]);
  s.even_only = true;
  return CharSeries{CharKind::ahat, std::move(s)};
}

UniSeries<Rational> ahat_series_rational(int x_degree_cap) {
  if (x_degree_cap < 0) fail(errc::domain, "negative degree cap");
  UniSeries<Rational> s(x_degree_cap, Rational(0));
  s.c = invert_rational_series(sinh_half_quotient(x_degree_cap));
  s.even_only = true;
  return s;
}

CharSeries witten_char_series(int q_order, int x_degree_cap) {
  if (q_order < 0 || x_degree_cap < 0)
    fail(errc::domain, "negative truncation parameter");
  const std::vector<Rational> a =
      invert_rational_series(sinh_half_quotient(x_degree_cap));
  UniSeries<QSeries> w(x_degree_cap, QSeries(q_order));
  for (int d = 0; d <= x_degree_cap; ++d)
    w.c[static_cast<size_t>(d)] =
        QSeries(q_order, a[static_cast<size_t>(d)]);

  // One deformation factor per j <= q_order:
  //   (1-q^j)^2 / ((1-q^j e^x)(1-q^j e^{-x})).
  // The denominator expands to 1 - q^j(e^x + e^{-x}) + q^{2j}, whose x^0
  // part coincides with (1-q^j)^2.
  for (int j = 1; j <= q_order; ++j) {
    UniSeries<QSeries> denom(x_degree_cap, QSeries(q_order));
    QSeries one_minus_qj_sq(q_order, Rational(1));
    one_minus_qj_sq += QSeries::monomial(q_order, j, Rational(-2));
    one_minus_qj_sq += QSeries::monomial(q_order, 2 * j, Rational(1));
    denom.c[0] = one_minus_qj_sq;
    Integer fact(1);
    for (int d = 2; d <= x_degree_cap; d += 2) {
      fact *= Integer(d - 1) * d;
      Rational c(-2);
      c /= Rational(fact);
      denom.c[static_cast<size_t>(d)] = QSeries::monomial(q_order, j, c);
    }
    denom.even_only = true;
    UniSeries<QSeries> factor = uniseries_invert(denom);
    for (auto& coeff : factor.c) coeff = coeff * one_minus_qj_sq;
    w = uniseries_mul(w, factor);
  }
  w.even_only = true;
  for (int d = 1; d <= x_degree_cap; d += 2)
    if (!w.c[static_cast<size_t>(d)].is_zero())
      fail(errc::internal, "odd x-coefficient in an even series");
  return CharSeries{CharKind::witten, std::move(w)};
}

Complex char_series_eval_numeric(const CharSeries& w, Complex x0, Complex tau) {
  require_upper_half_plane(tau);
  const Complex q0 = std::exp(2.0 * kPi * kI * tau);
  Complex acc(0.0, 0.0);
  for (int d = w.series.degree_cap; d >= 0; --d) {
    const QSeries& cd = w.series[d];
    Complex cq(0.0, 0.0);
    for (int j = cd.order(); j >= 0; --j)
      cq = cq * q0 + Complex(cd[j].get_d(), 0.0);
    acc = acc * x0 + cq;
  }
  return acc;
}

}  // namespace witgen
