#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace qmb {

/// Exact rational scalar. All operator algebra and constraint elimination is
/// done over Q so that rank decisions and variable counts are reproducible
/// bit for bit; conversion to floating point happens only at SDP assembly.
using Rational = mpq_class;

inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// Complex number with exact rational real/imaginary parts.
struct ComplexQ {
  Rational re{0};
  Rational im{0};

  ComplexQ() = default;
  ComplexQ(Rational r) : re(std::move(r)) {}
  ComplexQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ComplexQ(long r) : re(r) {}

  static ComplexQ i() { return ComplexQ(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  ComplexQ conj() const { return ComplexQ(re, -im); }

  ComplexQ& operator+=(const ComplexQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexQ& operator-=(const ComplexQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexQ& operator*=(const ComplexQ& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend ComplexQ operator+(ComplexQ a, const ComplexQ& b) { return a += b; }
  friend ComplexQ operator-(ComplexQ a, const ComplexQ& b) { return a -= b; }
  friend ComplexQ operator*(ComplexQ a, const ComplexQ& b) { return a *= b; }
  friend ComplexQ operator-(const ComplexQ& a) {
    return ComplexQ(-a.re, -a.im);
  }
  friend bool operator==(const ComplexQ& a, const ComplexQ& b) {
    return a.re == b.re && a.im == b.im;
  }

  friend ComplexQ operator*(const Rational& s, ComplexQ a) {
    a.re *= s;
    a.im *= s;
    return a;
  }

  /// i^k for integer k (k may be negative).
  static ComplexQ ipow(long k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return ComplexQ(Rational(1));
      case 1: return ComplexQ(Rational(0), Rational(1));
      case 2: return ComplexQ(Rational(-1));
      default: return ComplexQ(Rational(0), Rational(-1));
    }
  }
};

inline std::ostream& operator<<(std::ostream& os, const ComplexQ& c) {
  os << c.re.get_str();
  if (c.im != 0) os << (c.im > 0 ? "+" : "") << c.im.get_str() << "i";
  return os;
}

/// Dense univariate polynomial over Q. Used for Frobenius coefficients,
/// which are polynomials in the (unknown) energy E.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(Rational c) {
    if (c != 0) coef_.push_back(std::move(c));
  }
  static QPoly var() {  // the monomial E
    QPoly p;
    p.coef_ = {Rational(0), Rational(1)};
    return p;
  }

  bool is_zero() const { return coef_.empty(); }
  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  const Rational& operator[](int d) const {
    static const Rational zero{0};
    return d >= 0 && d < static_cast<int>(coef_.size()) ? coef_[d] : zero;
  }

  QPoly& operator+=(const QPoly& o) {
    if (o.coef_.size() > coef_.size()) coef_.resize(o.coef_.size());
    for (size_t i = 0; i < o.coef_.size(); ++i) coef_[i] += o.coef_[i];
    trim();
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    if (o.coef_.size() > coef_.size()) coef_.resize(o.coef_.size());
    for (size_t i = 0; i < o.coef_.size(); ++i) coef_[i] -= o.coef_[i];
    trim();
    return *this;
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coef_.size(); ++i)
      for (size_t j = 0; j < b.coef_.size(); ++j)
        r.coef_[i + j] += a.coef_[i] * b.coef_[j];
    r.trim();
    return r;
  }
  friend QPoly operator*(const Rational& s, QPoly p) {
    for (auto& c : p.coef_) c *= s;
    p.trim();
    return p;
  }
  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.coef_ == b.coef_;
  }

  double eval(double e) const {
    double v = 0;
    for (size_t i = coef_.size(); i-- > 0;) v = v * e + to_double(coef_[i]);
    return v;
  }

 private:
  void trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
  }
  std::vector<Rational> coef_;  // coef_[d] multiplies E^d
};

}  // namespace qmb
