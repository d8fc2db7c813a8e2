#pragma once

#include <vector>

#include "witgen/mpoly.hpp"

namespace witgen {

// One-variable truncated power series with ring coefficients; carries the
// characteristic series of a genus in its formal Chern-root variable x.
template <class R>
struct UniSeries {
  int degree_cap = 0;
  std::vector<R> c;  // size degree_cap+1, c[d] multiplies x^d
  bool even_only = false;

  UniSeries() = default;
  UniSeries(int cap, const R& zero)
      : degree_cap(cap), c(static_cast<size_t>(cap) + 1, zero) {}

  const R& operator[](int d) const { return c[static_cast<size_t>(d)]; }
};

template <class R>
UniSeries<R> uniseries_mul(const UniSeries<R>& a, const UniSeries<R>& b) {
  if (a.degree_cap != b.degree_cap)
    fail(errc::shape_mismatch, "series degree caps differ");
  UniSeries<R> out = a;
  for (auto& x : out.c) x = x - x;  // zero of the right shape
  for (int i = 0; i <= a.degree_cap; ++i) {
    if (ring_is_zero(a.c[static_cast<size_t>(i)])) continue;
    for (int j = 0; i + j <= a.degree_cap; ++j) {
      if (ring_is_zero(b.c[static_cast<size_t>(j)])) continue;
      out.c[static_cast<size_t>(i + j)] +=
          a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(j)];
    }
  }
  out.even_only = a.even_only && b.even_only;
  return out;
}

// Inverse with respect to x-truncated multiplication; c[0] must be a unit.
template <class R>
UniSeries<R> uniseries_invert(const UniSeries<R>& s) {
  R lead = ring_inverse(s.c[0]);
  UniSeries<R> out = s;
  out.c[0] = lead;
  for (int d = 1; d <= s.degree_cap; ++d) {
    R acc = s.c[0] - s.c[0];
    for (int i = 1; i <= d; ++i)
      acc += s.c[static_cast<size_t>(i)] * out.c[static_cast<size_t>(d - i)];
    out.c[static_cast<size_t>(d)] = -(lead * acc);
  }
  out.even_only = s.even_only;
  return out;
}

// Substitutes the nilpotent polynomial p (zero constant term) into f via
// Horner; the result is truncated at p's degree cap, so f must be defined
// at least that far.
template <class R>
MPoly<R> compose_series(const UniSeries<R>& f, const MPoly<R>& p) {
  const Exponents zero(static_cast<size_t>(p.num_vars()), 0);
  if (p.find(zero) != nullptr)
    fail(errc::composition_domain,
         "composition requires a zero constant term in the inner polynomial");
  if (f.degree_cap < p.degree_cap())
    fail(errc::composition_domain,
         "outer series truncated below the polynomial degree cap");
  const int cap = p.degree_cap();
  MPoly<R> acc =
      MPoly<R>::constant(p.num_vars(), cap, f.c[static_cast<size_t>(cap)]);
  for (int d = cap - 1; d >= 0; --d) {
    acc = acc * p;
    acc.add_term(zero, f.c[static_cast<size_t>(d)]);
  }
  return acc;
}

}  // namespace witgen
