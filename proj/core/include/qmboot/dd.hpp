#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>

namespace qmb {

/// Double-double scalar (~31 significant decimal digits).
///
/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2. Only the operations the
/// interior-point solver needs are provided. Products use std::fma so the
/// error-free transformations survive compiler contraction settings.
struct dd {
  double hi = 0.0;
  double lo = 0.0;

  constexpr dd() = default;
  constexpr dd(double h) : hi(h), lo(0.0) {}
  constexpr dd(double h, double l) : hi(h), lo(l) {}
  constexpr dd(int v) : hi(v), lo(0.0) {}

  explicit operator double() const { return hi + lo; }
};

namespace detail {
inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}
inline dd two_sum(double a, double b) {
  double s = a + b;
  double v = s - a;
  return {s, (a - (s - v)) + (b - v)};
}
inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}
}  // namespace detail

inline dd operator+(dd a, dd b) {
  dd s = detail::two_sum(a.hi, b.hi);
  dd t = detail::two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = detail::quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return detail::quick_two_sum(s.hi, s.lo);
}
inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }
inline dd operator*(dd a, dd b) {
  dd p = detail::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return detail::quick_two_sum(p.hi, p.lo);
}
inline dd operator/(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = a - b * dd(q1);
  double q2 = r.hi / b.hi;
  r = r - b * dd(q2);
  double q3 = r.hi / b.hi;
  dd q = detail::quick_two_sum(q1, q2);
  return q + dd(q3);
}

inline dd& operator+=(dd& a, dd b) { return a = a + b; }
inline dd& operator-=(dd& a, dd b) { return a = a - b; }
inline dd& operator*=(dd& a, dd b) { return a = a * b; }
inline dd& operator/=(dd& a, dd b) { return a = a / b; }

inline bool operator<(dd a, dd b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(dd a, dd b) { return b < a; }
inline bool operator<=(dd a, dd b) { return !(b < a); }
inline bool operator>=(dd a, dd b) { return !(a < b); }
inline bool operator==(dd a, dd b) { return a.hi == b.hi && a.lo == b.lo; }

inline dd abs(dd a) { return a.hi < 0 || (a.hi == 0 && a.lo < 0) ? -a : a; }

inline dd sqrt(dd a) {
  if (a.hi <= 0) return dd(0.0);
  // One Newton step on x = 1/sqrt(a) doubles the double-precision seed.
  double x = 1.0 / std::sqrt(a.hi);
  double ax = a.hi * x;
  dd err = a - detail::two_prod(ax, ax);
  return dd(ax) + dd(err.hi * (x * 0.5));
}

inline std::ostream& operator<<(std::ostream& os, dd a) {
  return os << (a.hi + a.lo);
}

}  // namespace qmb
