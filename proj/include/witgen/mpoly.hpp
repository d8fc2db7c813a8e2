#pragma once

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "witgen/qseries.hpp"
#include "witgen/rational.hpp"

namespace witgen {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

// Coefficient-ring glue shared by Rational and QSeries coefficients.
inline bool ring_is_zero(const Rational& r) { return r == 0; }
inline bool ring_is_zero(const QSeries& s) { return s.is_zero(); }
inline Rational ring_inverse(const Rational& r) {
  if (r == 0) fail(errc::not_a_unit, "division by zero");
  return Rational(1) / r;
}
inline QSeries ring_inverse(const QSeries& s) { return s.inverse(); }

// Multivariate polynomial in h_1..h_k truncated at a total-degree cap.
// Terms above the cap are discarded eagerly during arithmetic and zero
// coefficients are never stored, so the term map stays small.
template <class R>
class MPoly {
 public:
  using Terms = std::map<Exponents, R>;

  MPoly(int num_vars, int degree_cap)
      : num_vars_(num_vars), degree_cap_(degree_cap) {
    if (num_vars < 0 || degree_cap < 0)
      fail(errc::domain, "invalid polynomial shape");
  }

  static MPoly constant(int num_vars, int degree_cap, R value) {
    MPoly p(num_vars, degree_cap);
    p.add_term(Exponents(static_cast<size_t>(num_vars), 0), std::move(value));
    return p;
  }

  int num_vars() const { return num_vars_; }
  int degree_cap() const { return degree_cap_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const R* find(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
  }

  // Accumulates c onto the monomial e; drops the entry if it becomes zero
  // or the total degree exceeds the cap.
  void add_term(const Exponents& e, R c) {
    if (static_cast<int>(e.size()) != num_vars_)
      fail(errc::shape_mismatch, "exponent vector of wrong arity");
    if (total_degree(e) > degree_cap_) return;
    if (ring_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, std::move(c));
    if (!inserted) {
      it->second += c;
      if (ring_is_zero(it->second)) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& rhs) {
    check_shape(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  MPoly& operator-=(const MPoly& rhs) {
    check_shape(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  MPoly operator-() const {
    MPoly out(num_vars_, degree_cap_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  MPoly& scale(const R& s) {
    if (ring_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c = c * s;
    prune();
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
  friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_shape(b);
    MPoly out(a.num_vars_, a.degree_cap_);
    Exponents e(static_cast<size_t>(a.num_vars_));
    for (const auto& [ea, ca] : a.terms_) {
      const int da = total_degree(ea);
      for (const auto& [eb, cb] : b.terms_) {
        if (da + total_degree(eb) > a.degree_cap_) continue;
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.degree_cap_ == b.degree_cap_ &&
           a.terms_ == b.terms_;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      os << "[";
      if constexpr (std::is_same_v<R, Rational>)
        os << format_rational(c);
      else
        os << c.to_string();
      os << "]";
      for (int i = 0; i < num_vars_; ++i)
        if (e[static_cast<size_t>(i)] != 0)
          os << " h" << i + 1 << "^" << e[static_cast<size_t>(i)];
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  void check_shape(const MPoly& rhs) const {
    if (num_vars_ != rhs.num_vars_ || degree_cap_ != rhs.degree_cap_)
      fail(errc::shape_mismatch, "polynomial shapes differ");
  }

  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (ring_is_zero(it->second))
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  int num_vars_;
  int degree_cap_;
  Terms terms_;
};

template <class R>
MPoly<R> mpoly_mul(const MPoly<R>& a, const MPoly<R>& b) {
  return a * b;
}

// h_1..h_k linear form with the given integer coefficients, embedded into
// the coefficient ring via `unit` (the ring's 1 of the right shape).
template <class R>
MPoly<R> mpoly_linear_form(int num_vars, int degree_cap,
                           const std::vector<long long>& coeffs,
                           const R& unit) {
  if (static_cast<int>(coeffs.size()) != num_vars)
    fail(errc::shape_mismatch, "linear form arity mismatch");
  MPoly<R> p(num_vars, degree_cap);
  for (int i = 0; i < num_vars; ++i) {
    if (coeffs[static_cast<size_t>(i)] == 0) continue;
    Exponents e(static_cast<size_t>(num_vars), 0);
    e[static_cast<size_t>(i)] = 1;
    R c = unit;
    c *= make_rational(coeffs[static_cast<size_t>(i)]);
    p.add_term(e, std::move(c));
  }
  return p;
}

// Inverse of a polynomial whose constant term is a unit: factor the unit
// out and expand the geometric series of the nilpotent remainder.
template <class R>
MPoly<R> mpoly_invert(const MPoly<R>& f) {
  const Exponents zero(static_cast<size_t>(f.num_vars()), 0);
  const R* c0 = f.find(zero);
  if (c0 == nullptr)
    fail(errc::not_a_unit, "polynomial with zero constant term has no inverse");
  R c0_inv = ring_inverse(*c0);
  MPoly<R> u = f;
  u.scale(c0_inv);
  u.add_term(zero, -*c0 * c0_inv);  // u = f/c0 - 1, nilpotent under the cap
  MPoly<R> acc = MPoly<R>::constant(f.num_vars(), f.degree_cap(), c0_inv);
  MPoly<R> power = MPoly<R>::constant(f.num_vars(), f.degree_cap(), c0_inv);
  for (int t = 1; t <= f.degree_cap(); ++t) {
    power = power * u;
    if (power.is_zero()) break;
    if (t % 2 == 1)
      acc -= power;
    else
      acc += power;
  }
  return acc;
}

}  // namespace witgen
