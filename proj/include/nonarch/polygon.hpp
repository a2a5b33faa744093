#pragma once

#include <vector>

#include "nonarch/piecewise_linear.hpp"
#include "nonarch/series.hpp"

namespace nonarch {

/// A point (n, ell_n) with ell_n = -v_p(c_n) = log_p |c_n|.
struct PolygonPoint {
  long n;
  Rational height;
  friend bool operator==(const PolygonPoint&, const PolygonPoint&) = default;
};

struct CriticalRadius {
  Rational rho;
  long delta;  ///< K - k at rho, the number of zeros with log_p|z| = rho
  friend bool operator==(const CriticalRadius&, const CriticalRadius&) = default;
};

/// Upper concave majorant of {(n, ell_n)} over the stored support.
///
/// sup_log(f, rho) = max_n (ell_n + n rho) is the support function of the
/// hull; every hull edge is a critical radius.
struct NewtonPolygon {
  std::vector<PolygonPoint> hull;
  /// Support points lying on a hull edge without being a vertex.
  std::vector<PolygonPoint> collinear;
  LogInterval valid_window;
};

NewtonPolygon newton_polygon(const LaurentApprox& f, const Prime& p);

/// Maximal rho-interval on which the stored coefficients strictly dominate
/// the tail bound; everything for exact series, empty without a tail bound.
LogInterval reliable_window(const LaurentApprox& f, const Prime& p);

/// Bound on log_p |f - stored part|_r from the tail bound: -inf for exact
/// series, +inf without a tail bound or when rho >= beta.
LogValue tail_log_norm(const LaurentApprox& f, const LogValue& rho);

/// log_p |f|_r at rho = log_p r. rho = -inf gives log_p |f(0)| for power series.
LogValue sup_log(const LaurentApprox& f, const LogValue& rho, const Prime& p);

struct Indices {
  long k;  ///< smallest exponent attaining |f|_r
  long K;  ///< largest exponent attaining |f|_r (central index)
  friend bool operator==(const Indices&, const Indices&) = default;
};

/// (k, K) at rho; at rho = -inf the convention (0, order of vanishing at 0).
Indices indices(const LaurentApprox& f, const LogValue& rho, const Prime& p);

/// Critical radii within the closed window, ascending.
std::vector<CriticalRadius> critical_radii(const LaurentApprox& f, const LogInterval& window, const Prime& p);

/// Zeros with rho1 <= log_p|z| <= rho2, with multiplicity: K(rho2) - k(rho1).
long count_zeros(const LaurentApprox& f, const LogValue& rho1, const LogValue& rho2, const Prime& p);

/// Counting function N(f, 0, rho) from the corner data, for rho >= rho_min.
/// With rho_min = -inf the vanishing term K(f,0) rho is included.
PiecewiseLinear counting_N(const LaurentApprox& f, const LogValue& rho_min, const Prime& p);

/// rho -> sup_log(f, rho) as an exact function on the reliable window.
PiecewiseLinear sup_log_function(const LaurentApprox& f, const Prime& p);

/// sup{rho : K(f - f(0), rho) = 1}; f is injective on smaller closed balls.
LogValue injectivity_log_radius(const LaurentApprox& f, const Prime& p);

/// True iff |b - f(0)| <= |f - f(0)|_r, which forces f = b to be solvable
/// in the closed ball of log-radius rho.
bool covers_disc(const LaurentApprox& f, const Rational& b, const LogValue& rho, const Prime& p);

}  // namespace nonarch
