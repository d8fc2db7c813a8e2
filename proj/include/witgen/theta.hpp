#pragma once

#include <complex>

#include "witgen/qseries.hpp"
#include "witgen/uniseries.hpp"

namespace witgen {

using Complex = std::complex<double>;

// The four Jacobi theta functions, in the convention where theta is the
// odd one (theta(0,tau) = 0).
enum class ThetaKind { theta, theta1, theta2, theta3 };

// Truncated-product evaluation with `terms` factors. Im(tau) must be
// positive; q^{1/8} is taken as exp(pi*i*tau/4), the principal branch for
// |Re(tau)| <= 1/2.
Complex theta_eval_numeric(ThetaKind kind, Complex v, Complex tau,
                           int terms = 60);

// theta'(0,tau) via the closed product 2*pi*q^{1/8}*prod(1-q^j)^3.
Complex theta_deriv0_numeric(Complex tau, int terms = 60);

// Multiplier relating theta_kind(v+m+n*tau) to theta_kind(v) under lattice
// translation.
Complex theta_translation_factor(ThetaKind kind, int m, int n, Complex v,
                                 Complex tau);

// |theta(v+m+n*tau) - factor * theta(v)|.
double translation_law_residual(ThetaKind kind, Complex v, Complex tau, int m,
                                int n, int terms = 60);

// |theta'(0,tau) - pi * theta1(0) * theta2(0) * theta3(0)|.
double jacobi_identity_residual(Complex tau, int terms = 60);

enum class CharKind { witten, ahat };

// Even one-variable series with QSeries coefficients and constant term 1;
// the multiplicative characteristic series evaluated on Chern roots.
struct CharSeries {
  CharKind kind;
  UniSeries<QSeries> series;

  int q_order() const { return series.c.empty() ? 0 : series.c[0].order(); }
  int x_degree_cap() const { return series.degree_cap; }
  const Rational& coeff(int x_power, int q_power) const {
    return series[x_power][q_power];
  }
};

// W(x) = ((x/2)/sinh(x/2)) * prod_{j>=1} (1-q^j)^2 /
//        ((1-q^j e^x)(1-q^j e^{-x})),
// truncated at q^q_order and x^x_degree_cap. Equals x*theta'(0,tau)/theta
// after the Chern-root rescaling x = 2*pi*i*v, which cancels every pi and i;
// all coefficients are exact rationals.
CharSeries witten_char_series(int q_order, int x_degree_cap);

// (x/2)/sinh(x/2): the q^0 slice of the series above.
CharSeries ahat_char_series(int x_degree_cap);

// Rational-coefficient variant of the series above, for pipelines that never
// touch the nome.
UniSeries<Rational> ahat_series_rational(int x_degree_cap);

// Evaluates the exact series at a numeric point (x0, q0 = e^{2 pi i tau});
// used to cross-check the normalization against theta_eval_numeric.
Complex char_series_eval_numeric(const CharSeries& w, Complex x0, Complex tau);

}  // namespace witgen
