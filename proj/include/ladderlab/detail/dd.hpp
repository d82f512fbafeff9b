#ifndef LADDERLAB_DETAIL_DD_HPP
#define LADDERLAB_DETAIL_DD_HPP

#include <cmath>
#include <complex>

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
// The terminating hypergeometric sums that define the deformed polynomial
// families cancel heavily at moderate degree; accumulating the term
// recursion in ~32 digits keeps the defining-formula route usable where
// plain doubles lose most of the mantissa.

namespace ladderlab::detail {

struct dd {
  double hi = 0.0, lo = 0.0;
  dd() = default;
  dd(double h) : hi(h) {}
  dd(double h, double l) : hi(h), lo(l) {}
  double value() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd add(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd sub(dd a, dd b) { return add(a, {-b.hi, -b.lo}); }

inline dd mul(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd div(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = sub(a, mul(b, dd(q1)));
  double q2 = r.hi / b.hi;
  r = sub(r, mul(b, dd(q2)));
  double q3 = r.hi / b.hi;
  dd q = quick_two_sum(q1, q2);
  return add(q, dd(q3));
}

struct cdd {
  dd re, im;
  cdd() = default;
  cdd(dd r, dd i) : re(r), im(i) {}
  cdd(std::complex<double> z) : re(z.real()), im(z.imag()) {}
  cdd(double r) : re(r), im(0.0) {}
  std::complex<double> value() const { return {re.value(), im.value()}; }
  double abs_approx() const { return std::abs(value()); }
};

inline cdd add(cdd a, cdd b) { return {add(a.re, b.re), add(a.im, b.im)}; }
inline cdd sub(cdd a, cdd b) { return {sub(a.re, b.re), sub(a.im, b.im)}; }

inline cdd mul(cdd a, cdd b) {
  return {sub(mul(a.re, b.re), mul(a.im, b.im)),
          add(mul(a.re, b.im), mul(a.im, b.re))};
}

inline cdd div(cdd a, cdd b) {
  dd den = add(mul(b.re, b.re), mul(b.im, b.im));
  cdd num = mul(a, cdd{b.re, {-b.im.hi, -b.im.lo}});
  return {div(num.re, den), div(num.im, den)};
}

inline cdd mul(cdd a, double s) {
  return {mul(a.re, dd(s)), mul(a.im, dd(s))};
}

// a + k with the roundoff of the shift kept
inline cdd shift(std::complex<double> a, double k) {
  return {two_sum(a.real(), k), dd(a.imag())};
}

}  // namespace ladderlab::detail

#endif
