#pragma once

#include <optional>
#include <vector>

#include "nonarch/polygon.hpp"

namespace nonarch {

/// A point of P^1(Q); empty means infinity.
using Target = std::optional<Rational>;

std::string to_string(const Target& a);

/// f = num / den with den nonzero.
struct MeromorphicPair {
  LaurentApprox num;
  LaurentApprox den;

  /// g / h for polynomials with constant gcd; throws NotCoprime otherwise.
  static MeromorphicPair rational(const Polynomial& g, const Polynomial& h);
  /// g / h with the gcd divided out.
  static MeromorphicPair reduced(const Polynomial& g, const Polynomial& h);
  /// Series pair; coprimality is checked when both are exact polynomials.
  static MeromorphicPair series(LaurentApprox num, LaurentApprox den);

  bool is_rational() const;
  Polynomial numerator() const;    ///< RequiresExact unless is_rational()
  Polynomial denominator() const;
};

/// sup_log(f, rho) = sup_log(num) - sup_log(den).
LogValue sup_log(const MeromorphicPair& f, const LogValue& rho, const Prime& p);

/// Series whose zeros are the a-points of f: den for a = infinity, num - a den otherwise.
LaurentApprox a_point_series(const MeromorphicPair& f, const Target& a);

/// Proximity function m(f, a, rho).
PiecewiseLinear prox_m(const MeromorphicPair& f, const Target& a, const Prime& p);
/// Counting function N(f, a, rho) from rho_min (-inf: the r1 = 0 normalization).
PiecewiseLinear count_N(const MeromorphicPair& f, const Target& a, const Prime& p,
                        const LogValue& rho_min = LogValue::neg_inf());
/// Truncated counting function, each distinct a-point once.
PiecewiseLinear count_N1(const MeromorphicPair& f, const Target& a, const Prime& p,
                         const LogValue& rho_min = LogValue::neg_inf());
PiecewiseLinear charT(const MeromorphicPair& f, const Target& a, const Prime& p,
                      const LogValue& rho_min = LogValue::neg_inf());

struct FmtCheck {
  bool bounded;
  /// sup of |T(f,a) - T(f,inf)| over the domain.
  ExtendedRational bound;
  PiecewiseLinear difference;
};

FmtCheck fmt_check(const MeromorphicPair& f, const Target& a, const Prime& p);

/// f' = (h g' - g h') / h^2 with common factors removed; DerivativeVanishes for constant f.
MeromorphicPair derivative(const MeromorphicPair& f);
/// D^n f = f^{(n)} / n!.
MeromorphicPair hasse_derivative(const MeromorphicPair& f, unsigned long n);

/// N_Ram = N(f', 0) + 2 N(f, inf) - N(f', inf).
PiecewiseLinear n_ram(const MeromorphicPair& f, const Prime& p, const LogValue& rho_min = LogValue::neg_inf());

struct SmtReport {
  /// (q-2) T(f,inf) - sum N(f,a_j) + N_Ram + rho
  PiecewiseLinear S;
  ExtendedRational sup_S;
  bool holds;
  /// (q-1) T(f,inf) - sum N(f,a_j)
  PiecewiseLinear S_unramified;
  bool holds_unramified;
  /// (q-2) T(f,inf) - sum N1(f,a_j) + rho
  PiecewiseLinear S_truncated;
  bool holds_truncated;
};

SmtReport smt_report(const MeromorphicPair& f, const std::vector<Target>& targets, const Prime& p);

struct AbcReport {
  PiecewiseLinear lhs;  ///< max of the three log-norms
  PiecewiseLinear rhs;  ///< N1(fgh, 0) - rho
  bool holds;
};

/// f + g = h with pairwise coprime polynomials.
AbcReport abc_check(const Polynomial& f, const Polynomial& g, const Polynomial& h, const Prime& p);

struct Defect {
  Target a;
  Rational delta;  ///< defect
  Rational theta;  ///< ramification defect
};

std::vector<Defect> defects(const MeromorphicPair& f, const std::vector<Target>& targets, const Prime& p);

/// Every a-point of f in the field is a multiple point (vacuous if none).
bool totally_ramified(const MeromorphicPair& f, const Target& a);
/// All totally ramified values of f in P^1(Q).
std::vector<Target> totally_ramified_values(const MeromorphicPair& f);

/// Rational values g(c)/h(c) at the finite critical points c of g/h.
std::vector<Rational> rational_critical_values(const Polynomial& g, const Polynomial& h);

/// f and g have the same a-points, ignoring multiplicity.
bool shares_value(const MeromorphicPair& f, const MeromorphicPair& g, const Target& a);

/// log_p of |f'|_r / max(1, |f|_r).
LogValue spherical_sup(const MeromorphicPair& f, const Rational& rho, const Prime& p);

}  // namespace nonarch
