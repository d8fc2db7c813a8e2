#include "witgen/qseries.hpp"

#include <sstream>

namespace witgen {

QSeries::QSeries(int order) : order_(order) {
  if (order < 0) fail(errc::domain, "negative truncation order");
  c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

QSeries::QSeries(int order, const Rational& constant) : QSeries(order) {
  c_[0] = constant;
}

QSeries QSeries::monomial(int order, int power, const Rational& c) {
  QSeries s(order);
  if (power < 0) fail(errc::domain, "negative q power");
  if (power <= order) s.c_[static_cast<size_t>(power)] = c;
  return s;
}

void QSeries::set(int j, const Rational& value) {
  if (j < 0 || j > order_) fail(errc::domain, "q power out of range");
  c_[static_cast<size_t>(j)] = value;
}

bool QSeries::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool QSeries::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return false;
  return true;
}

void QSeries::check_order(const QSeries& rhs) const {
  if (order_ != rhs.order_)
    fail(errc::order_mismatch,
         "truncation orders differ: " + std::to_string(order_) + " vs " +
             std::to_string(rhs.order_));
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  check_order(rhs);
  for (size_t j = 0; j < c_.size(); ++j) c_[j] += rhs.c_[j];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
  check_order(rhs);
  for (size_t j = 0; j < c_.size(); ++j) c_[j] -= rhs.c_[j];
  return *this;
}

QSeries QSeries::operator-() const {
  QSeries out(order_);
  for (size_t j = 0; j < c_.size(); ++j) out.c_[j] = -c_[j];
  return out;
}

QSeries& QSeries::operator*=(const Rational& scalar) {
  for (auto& x : c_) x *= scalar;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  a.check_order(b);
  QSeries out(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.c_[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= a.order_; ++j) {
      if (b.c_[static_cast<size_t>(j)] == 0) continue;
      out.c_[static_cast<size_t>(i + j)] +=
          a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    }
  }
  return out;
}

QSeries QSeries::inverse() const {
  if (c_[0] == 0)
    fail(errc::not_a_unit, "series with zero constant term has no inverse");
  QSeries out(order_);
  Rational lead = 1 / c_[0];
  out.c_[0] = lead;
  for (int j = 1; j <= order_; ++j) {
    Rational acc(0);
    for (int i = 1; i <= j; ++i)
      acc += c_[static_cast<size_t>(i)] * out.c_[static_cast<size_t>(j - i)];
    out.c_[static_cast<size_t>(j)] = -lead * acc;
  }
  return out;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= order_; ++j) {
    const Rational& x = c_[static_cast<size_t>(j)];
    if (x == 0) continue;
    if (!first) os << " + ";
    os << "(" << format_rational(x) << ")q^" << j;
    first = false;
  }
  if (first) os << "0";
  os << " + O(q^" << order_ + 1 << ")";
  return os.str();
}

QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries series_invert(const QSeries& s) { return s.inverse(); }

}  // namespace witgen
