#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qmboot/opalg.hpp"
#include "qmboot/rational.hpp"

namespace qmb::potentials {

/// Laurent polynomial in r over Q; exponents are doubled like MonoKey::r2.
using Laurent = std::map<int, Rational>;

Laurent laurent_mul(const Laurent& a, const Laurent& b);
Laurent laurent_pow(const Laurent& a, int n);
Laurent laurent_derivative(const Laurent& a);

enum class Kind {
  Algebraic,       // V itself is a Laurent polynomial in r
  ExponentialODE,  // V' = R(r) V with Laurent R
};

/// Truncated small-r power series: sum_j c[j] * r^((lead2 + 2j)/2).
struct PowerSeries {
  int lead2 = 0;
  std::vector<Rational> c;
};

/// One of the five potential families, with everything the symbolic layers
/// need held as exact rationals. Couplings given as doubles are converted
/// exactly (binary expansion), so the diagonalization oracle and the
/// constraint generator describe literally the same Hamiltonian.
struct PotentialSpec {
  Kind kind = Kind::Algebraic;
  std::string name;
  std::map<std::string, Rational> params;
  Rational mass{1};

  // Algebraic: V(r). ExponentialODE: unused.
  Laurent laurent;

  // ExponentialODE data: V' = R(r) V, and (-V) = strength * r^w * exp(T(r))
  // near the origin with T the integral of the regular part of R.
  Laurent ode_r;
  Rational strength{0};
  int negv_lead = 0;  // w (integer power of r)

  std::function<double(double)> value;  // V(r) for the diagonalizer
  double length_scale = 1.0;            // sets grid extents in refdiag

  /// Small-r series of (-V)^m for integer m >= 0 (doubled exponent m2 = 2m).
  PowerSeries negv_power_series(int m2, int nterms) const;

  /// Small-r series of r^(r2/2) (-V)^(v2/2); v2 must be even.
  PowerSeries factor_series(int r2, int v2, int nterms) const;

  /// Small-r series of V itself (for the Frobenius recursion).
  PowerSeries v_series(int nterms) const;
};

struct SmallRBehavior {
  Rational leading_power;  // leading exponent of V as r -> 0
  bool regular = false;
};

SmallRBehavior small_r_behavior(const PotentialSpec& spec);

PotentialSpec make_coulomb(const Rational& alpha, const Rational& mass = 1);
PotentialSpec make_yukawa(const Rational& g, const Rational& rho,
                          const Rational& mass = 1);
PotentialSpec make_gaussian(const Rational& b, const Rational& big_r,
                            const Rational& mass = 1);
PotentialSpec make_cornell(const Rational& alpha_s, const Rational& sigma,
                           const Rational& mass = 1);
PotentialSpec make_conformal(const Rational& lambda, const Rational& mass = 1);

/// Named construction from CLI-style parameters.
PotentialSpec make_potential(const std::string& name,
                             const std::map<std::string, double>& params,
                             double mass);

/// Eliminates every symbolic V^(k) factor (and, for Algebraic potentials,
/// every (-V)^m factor) via V' = R(r) V or direct Laurent substitution.
/// The result is canonical and derivative-free.
opalg::OperatorPoly reduce_derivatives(const opalg::OperatorPoly& p,
                                       const PotentialSpec& spec);

/// H = p^2/(2M) + V in canonical form (V symbolic for ODE potentials,
/// Laurent-substituted for algebraic ones).
opalg::OperatorPoly hamiltonian(const PotentialSpec& spec);

}  // namespace qmb::potentials
