#include "qmboot/opalg.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace qmb::opalg {

namespace {

MonoKey merge_mult(const MonoKey& a, const MonoKey& b) {
  MonoKey k;
  k.r2 = a.r2 + b.r2;
  k.v2 = a.v2 + b.v2;
  k.derivs.reserve(a.derivs.size() + b.derivs.size());
  std::merge(a.derivs.begin(), a.derivs.end(), b.derivs.begin(),
             b.derivs.end(), std::back_inserter(k.derivs));
  k.p = a.p + b.p;
  return k;
}

Rational binom(int n, int k) {
  Rational r(1);
  for (int j = 1; j <= k; ++j) r *= Rational(n - k + j, j);
  r.canonicalize();
  return r;
}

}  // namespace

OperatorPoly derivative_mult(const OperatorPoly& f) {
  OperatorPoly out;
  for (const auto& [k, c] : f.terms()) {
    if (k.p != 0)
      throw std::logic_error("derivative_mult: p factor in multiplication part");
    if (k.r2 != 0) {
      MonoKey t = k;
      t.r2 -= 2;
      out.add_term(std::move(t), ratio(k.r2, 2) * c);
    }
    if (k.v2 != 0) {
      MonoKey t = k;
      t.v2 -= 2;
      t.derivs.insert(std::lower_bound(t.derivs.begin(), t.derivs.end(), 1), 1);
      out.add_term(std::move(t), ratio(-k.v2, 2) * c);
    }
    for (size_t i = 0; i < k.derivs.size(); ++i) {
      if (i > 0 && k.derivs[i] == k.derivs[i - 1]) continue;  // handled below
      int order = k.derivs[i];
      int mult = 0;
      for (int d : k.derivs)
        if (d == order) ++mult;
      MonoKey t = k;
      t.derivs.erase(std::find(t.derivs.begin(), t.derivs.end(), order));
      t.derivs.insert(
          std::lower_bound(t.derivs.begin(), t.derivs.end(), order + 1),
          order + 1);
      out.add_term(std::move(t), Rational(mult) * c);
    }
  }
  return out;
}

OperatorPoly multiply(const OperatorPoly& a, const OperatorPoly& b) {
  OperatorPoly out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // ka = fa p^n, kb = fb p^m: commute p^n through fb.
      MonoKey fb = kb;
      fb.p = 0;
      OperatorPoly fderiv = OperatorPoly::monomial(fb);
      ComplexQ cab = ca * cb;
      for (int j = 0; j <= ka.p; ++j) {
        if (j > 0) fderiv = derivative_mult(fderiv);
        if (fderiv.is_zero()) break;
        ComplexQ pref = binom(ka.p, j) * ComplexQ::ipow(-j) * cab;
        MonoKey fa = ka;
        fa.p = 0;
        for (const auto& [kf, cf] : fderiv.terms()) {
          MonoKey key = merge_mult(fa, kf);
          key.p = ka.p - j + kb.p;
          out.add_term(std::move(key), pref * cf);
        }
      }
    }
  }
  return out;
}

OperatorPoly adjoint(const OperatorPoly& a) {
  OperatorPoly out;
  for (const auto& [k, c] : a.terms()) {
    // (f p^n)^dagger = p^n f: all primitive factors are Hermitian.
    MonoKey pk;
    pk.p = k.p;
    MonoKey fk = k;
    fk.p = 0;
    out += multiply(OperatorPoly::monomial(pk, c.conj()),
                    OperatorPoly::monomial(fk));
  }
  return out;
}

OperatorPoly canonicalize(const Word& word) {
  OperatorPoly acc = OperatorPoly::one();
  for (const Factor& f : word) {
    MonoKey k;
    ComplexQ c(Rational(1));
    switch (f.kind) {
      case Factor::Kind::RPow: k.r2 = f.arg; break;
      case Factor::Kind::NegVPow: k.v2 = f.arg; break;
      case Factor::Kind::VDeriv:
        if (f.arg == 0) {  // V = -(-V)
          k.v2 = 2;
          c = ComplexQ(Rational(-1));
        } else {
          k.derivs = {f.arg};
        }
        break;
      case Factor::Kind::P: k.p = f.arg; break;
    }
    acc = multiply(acc, OperatorPoly::monomial(k, c));
  }
  return acc;
}

namespace {

bool parse_int(const std::string& s, int& v) {
  try {
    size_t pos = 0;
    v = std::stoi(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

}  // namespace

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    if (tok == "1/r") {
      w.push_back({Factor::Kind::RPow, -2});
      continue;
    }
    char sym = tok[0];
    int exp = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^' || !parse_int(tok.substr(2), exp))
        throw std::invalid_argument("bad operator token: " + tok);
    }
    switch (sym) {
      case 'r': w.push_back({Factor::Kind::RPow, 2 * exp}); break;
      case 'q': w.push_back({Factor::Kind::RPow, exp}); break;
      case 'u': w.push_back({Factor::Kind::NegVPow, exp}); break;
      case 'p': w.push_back({Factor::Kind::P, exp}); break;
      case 'V':
        for (int j = 0; j < exp; ++j) w.push_back({Factor::Kind::VDeriv, 0});
        break;
      default: throw std::invalid_argument("bad operator token: " + tok);
    }
  }
  return w;
}

OperatorPoly parse_poly(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> toks;
  std::string tok;
  while (is >> tok) toks.push_back(tok);

  OperatorPoly out;
  size_t i = 0;
  bool negative = false;
  while (i < toks.size()) {
    if (toks[i] == "+") {
      negative = false;
      ++i;
      continue;
    }
    if (toks[i] == "-") {
      negative = true;
      ++i;
      continue;
    }
    ComplexQ coeff(Rational(negative ? -1 : 1));
    Word w;
    for (; i < toks.size() && toks[i] != "+" && toks[i] != "-"; ++i) {
      const std::string& t = toks[i];
      if (t == "i") {
        coeff *= ComplexQ::i();
        continue;
      }
      int dummy;
      if (parse_int(t, dummy)) {
        coeff *= ComplexQ(Rational(dummy));
        continue;
      }
      auto slash = t.find('/');
      int num, den;
      if (t != "1/r" && slash != std::string::npos &&
          parse_int(t.substr(0, slash), num) &&
          parse_int(t.substr(slash + 1), den)) {
        coeff *= ComplexQ(ratio(num, den));
        continue;
      }
      Word part = parse_word(t);
      w.insert(w.end(), part.begin(), part.end());
    }
    OperatorPoly term = canonicalize(w);
    term *= coeff;
    out += term;
  }
  return out;
}

std::string OperatorPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (k.r2 != 0) os << " r^" << (k.r2 % 2 == 0 ? std::to_string(k.r2 / 2)
                                                 : std::to_string(k.r2) + "/2");
    if (k.v2 != 0)
      os << " (-V)^" << (k.v2 % 2 == 0 ? std::to_string(k.v2 / 2)
                                       : std::to_string(k.v2) + "/2");
    for (int d : k.derivs) os << " V(" << d << ")";
    if (k.p != 0) os << " p^" << k.p;
  }
  return os.str();
}

}  // namespace qmb::opalg
