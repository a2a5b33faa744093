#pragma once

#include <vector>

#include "nonarch/polygon.hpp"

namespace nonarch {

/// A polynomial P with K(P, rho) = deg P; extremal if also k(P, rho) = 0.
struct DominantPolynomial {
  Polynomial poly;
  Rational rho;
  bool extremal;

  /// Throws NotDominant unless K(P, rho) = deg P.
  static DominantPolynomial certify(const Polynomial& poly, const Rational& rho, const Prime& p);
};

struct DivisionResult {
  LaurentApprox q;
  Polynomial R;
  /// log_p bound at rho on the error of R (and of P*q) caused by the
  /// unknown tail of the dividend; -inf when the dividend is exact.
  LogValue error;
};

/// f = P q + R with deg R < deg P, computed exactly on the stored part of f.
DivisionResult divide(const LaurentApprox& f, const DominantPolynomial& P, const Prime& p);

/// A Laurent polynomial approximating a series: sup_log(true - value, rho) <= error.
struct ApproxSeries {
  LaurentApprox value;
  Rational rho;
  LogValue error;
};

/// Geometric-series inverse of a unit at rho using terms w^0..w^order.
ApproxSeries invert_unit(const LaurentApprox& u, const Rational& rho, long order, const Prime& p);

/// Throws IncompatibleSlope unless d * rho is an integer.
void require_compatible_slope(long d, const Rational& rho);

struct PreparationResult {
  Polynomial P;        ///< degree d, P(0) = 1, extremal at rho
  LaurentApprox u;     ///< unit at rho
  long d;
  LogValue delta;      ///< per-step contraction sup_log(g - P_1, rho) < 0 for the normalized g
  /// Smallest coefficient valuation of f - P u on the stored window of f.
  Valuation floor;
  /// sup_log(R_i, rho) relative to |f|_rho, one entry per iteration.
  std::vector<LogValue> trace;
  long iteration_bound;
};

PreparationResult prepare(const LaurentApprox& f, const Rational& rho, const Valuation& target_floor, const Prime& p);

}  // namespace nonarch
