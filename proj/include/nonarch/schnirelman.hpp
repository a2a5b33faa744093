#pragma once

#include <vector>

#include "nonarch/weierstrass.hpp"

namespace nonarch {

/// Integral of f over the circle |z - a| = p^rho, normalized so that
/// the integral of 1/(z - a) is 1.
Rational integral_series(const LaurentApprox& f, const Rational& a, const Rational& rho, const Prime& p);

/// Integral of f(z) / (z - w)^{n+1} over |z - a| = p^rho for a power series f:
/// D^n f(w) inside the circle, 0 outside.
CertifiedValue cauchy_coeff(const LaurentApprox& f, const Rational& w, unsigned long n, const Rational& a,
                            const Rational& rho, const Prime& p);

struct Pole {
  Rational b;
  long order;
  /// principal[j - 1] is the coefficient of (z - b)^{-j}.
  std::vector<Rational> principal;
  const Rational& residue() const { return principal.front(); }
};

struct RationalFunctionSplit {
  Polynomial analytic_part;
  std::vector<Pole> poles;  ///< ascending in b
};

/// num/den = analytic_part + sum A_{b,j} / (z - b)^j; den must split over Q.
RationalFunctionSplit partial_fractions(const Polynomial& num, const Polynomial& den);

/// Sum of residues of num/den at poles with |b - a| < p^rho.
Rational residue_sum(const Polynomial& num, const Polynomial& den, const Rational& a, const Rational& rho,
                     const Prime& p);

/// The (z - a)^{-1} coefficient of the Laurent expansion of num/den valid on
/// |z - a| = p^rho, from a geometric inversion of the denominator with terms
/// up to w^order. Works for denominators that do not split over Q.
CertifiedValue circle_residue(const Polynomial& num, const Polynomial& den, const Rational& a, const Rational& rho,
                              long order, const Prime& p);

struct SchnirelmanSum {
  /// p^shift * (r/n) sum f(a + r xi) xi mod p^k.
  PadicResidueInt value;
  long shift;
  /// n is too small for the sum to equal the integral exactly.
  bool n_too_small;
};

/// Finite Schnirelman sum over the n-th roots of unity for an exact Laurent polynomial.
SchnirelmanSum schnirelman_sum(const LaurentApprox& f, const Rational& a, const Rational& r, unsigned long n,
                               unsigned long k, const Prime& p);

}  // namespace nonarch
