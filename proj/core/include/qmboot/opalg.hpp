#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qmboot/rational.hpp"

namespace qmb::opalg {

/// Canonical monomial shape: r^(r2/2) (-V)^(v2/2) V^(k1) V^(k2) ... p^p.
///
/// Exponents of r and (-V) are stored doubled, so the paper's q = sqrt(r)
/// and u = sqrt(-V) factors stay on an integer grid. `derivs` holds symbolic
/// derivative factors V^(k), k >= 1, as a sorted multiset; they are
/// intermediates of constraint generation and must be eliminated by
/// potentials::reduce_derivatives before a moment key is formed.
struct MonoKey {
  int r2 = 0;
  int v2 = 0;
  std::vector<int> derivs;
  int p = 0;

  auto operator<=>(const MonoKey&) const = default;

  bool derivative_free() const { return derivs.empty(); }
  bool mult_only() const { return p == 0; }
};

struct Monomial {
  ComplexQ coeff;
  MonoKey key;
};

/// Finite linear combination of canonical monomials with exact complex
/// rational coefficients. The representation is unique: zero coefficients
/// are erased on every mutation.
class OperatorPoly {
 public:
  OperatorPoly() = default;
  explicit OperatorPoly(const Monomial& m) { add_term(m.key, m.coeff); }

  static OperatorPoly one() {
    OperatorPoly p;
    p.add_term(MonoKey{}, ComplexQ(Rational(1)));
    return p;
  }
  static OperatorPoly zero() { return OperatorPoly(); }
  static OperatorPoly monomial(MonoKey k, ComplexQ c = ComplexQ(Rational(1))) {
    OperatorPoly p;
    p.add_term(std::move(k), std::move(c));
    return p;
  }

  const std::map<MonoKey, ComplexQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(MonoKey k, ComplexQ c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  OperatorPoly& operator+=(const OperatorPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  OperatorPoly& operator-=(const OperatorPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  OperatorPoly& operator*=(const ComplexQ& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) {
    return a += b;
  }
  friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) {
    return a -= b;
  }
  friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) {
    return a.terms_ == b.terms_;
  }

  std::set<MonoKey> keys() const {
    std::set<MonoKey> s;
    for (const auto& [k, c] : terms_) s.insert(k);
    return s;
  }

  std::string str() const;

 private:
  std::map<MonoKey, ComplexQ> terms_;
};

/// One primitive factor of an input word, before canonical ordering.
struct Factor {
  enum class Kind { RPow, NegVPow, VDeriv, P };
  Kind kind;
  // RPow: doubled exponent of r. NegVPow: doubled exponent of (-V).
  // VDeriv: derivative order k (k = 0 denotes V itself). P: power of p.
  int arg;
};
using Word = std::vector<Factor>;

/// d/dr of a pure multiplication polynomial (no p factors), with V
/// derivatives carried symbolically: (r^s)' = s r^(s-1),
/// ((-V)^m)' = -m (-V)^(m-1) V^(1), (V^(k))' = V^(k+1).
OperatorPoly derivative_mult(const OperatorPoly& f);

/// Canonical product. Moves every p in `a` rightward through the
/// multiplication part of `b` with p^k f = sum_j C(k,j) (-i)^j f^(j) p^(k-j).
OperatorPoly multiply(const OperatorPoly& a, const OperatorPoly& b);

/// Hermitian adjoint: reverses factor order (all primitive factors are
/// Hermitian), conjugates coefficients, re-canonicalizes.
OperatorPoly adjoint(const OperatorPoly& a);

inline OperatorPoly commutator(const OperatorPoly& a, const OperatorPoly& b) {
  return multiply(a, b) - multiply(b, a);
}

/// Expands a word of primitive factors into canonical order.
OperatorPoly canonicalize(const Word& word);

/// Parses a whitespace-separated word in the paper's notation:
/// tokens r, q, u, V, p with optional ^<int>, plus "1" and "1/r".
/// Example: "q u r^-1 p^2".
Word parse_word(const std::string& text);

/// Parses a linear combination of words, e.g. "1/r - i p". Terms are
/// separated by standalone + or - tokens; a term may start with an integer,
/// a rational a/b, and/or the token i as coefficient factors.
OperatorPoly parse_poly(const std::string& text);

}  // namespace qmb::opalg
