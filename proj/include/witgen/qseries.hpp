#pragma once

#include <string>
#include <vector>

#include "witgen/rational.hpp"

namespace witgen {

// Power series in the nome q truncated at a fixed order N: coefficients for
// q^0..q^N, everything above is discarded. Two series combine only when
// their orders match.
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(int order);
  QSeries(int order, const Rational& constant);

  // c * q^power; a power beyond the order yields the zero series.
  static QSeries monomial(int order, int power, const Rational& c);

  int order() const { return order_; }
  const Rational& operator[](int j) const { return c_[static_cast<size_t>(j)]; }
  void set(int j, const Rational& value);

  bool is_zero() const;
  bool is_one() const;

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  QSeries operator-() const;
  QSeries& operator*=(const Rational& scalar);

  friend QSeries operator+(QSeries a, const QSeries& b) { a += b; return a; }
  friend QSeries operator-(QSeries a, const QSeries& b) { a -= b; return a; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const Rational& c) { a *= c; return a; }
  friend QSeries operator*(const Rational& c, QSeries a) { a *= c; return a; }
  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

  // Multiplicative inverse up to the truncation order; the constant term
  // must be nonzero.
  QSeries inverse() const;

  std::string to_string() const;

 private:
  void check_order(const QSeries& rhs) const;

  int order_ = 0;
  std::vector<Rational> c_;  // size order_+1
};

QSeries series_mul(const QSeries& a, const QSeries& b);
QSeries series_invert(const QSeries& s);

}  // namespace witgen
