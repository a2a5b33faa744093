#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nonarch/polynomial.hpp"
#include "nonarch/rational.hpp"
#include "nonarch/valued_field.hpp"

namespace nonarch {

/// Affine lower bound v_p(c_n) >= alpha + beta * n for the unstored tail.
struct TailBound {
  Rational alpha;
  Rational beta;
  friend bool operator==(const TailBound&, const TailBound&) = default;
};

/// A Laurent series over Q known to finite precision.
///
/// Every exponent in [n_lo, n_hi] is known exactly (absent means zero) and
/// every exponent below n_lo is zero. When `exact` is set the series is a
/// Laurent polynomial and nothing lies above n_hi. Otherwise coefficients
/// above n_hi are unknown, bounded by the tail bound if one is present.
class LaurentApprox {
 public:
  using Coefficients = std::map<long, Rational>;

  /// The exact zero series.
  LaurentApprox() = default;

  /// Exact Laurent polynomial from its nonzero coefficients.
  static LaurentApprox exact_from(Coefficients coeffs);
  static LaurentApprox from_polynomial(const Polynomial& p);
  static LaurentApprox monomial(const Rational& c, long n);
  static LaurentApprox constant(const Rational& c) { return monomial(c, 0); }

  /// Truncated series: exponents [n_lo, n_hi] known, tail optionally bounded.
  /// Throws ValidationError if a stored exponent falls outside the window.
  /// The prime is recorded because tail bounds are valuations.
  static LaurentApprox truncated(Coefficients coeffs, long n_lo, long n_hi, std::optional<TailBound> tail,
                                 const Prime& p);

  bool exact() const noexcept { return exact_; }
  bool is_zero() const noexcept { return exact_ && coeffs_.empty(); }
  long n_lo() const noexcept { return n_lo_; }
  long n_hi() const noexcept { return n_hi_; }
  const std::optional<TailBound>& tail_bound() const noexcept { return tail_; }
  /// Prime of the tail bound; empty for exact series.
  const std::optional<Prime>& prime() const noexcept { return prime_; }
  const Coefficients& coefficients() const noexcept { return coeffs_; }

  /// Known coefficient; throws Uncertifiable above the window of an inexact series.
  Rational coeff(long n) const;
  /// Smallest exponent with a nonzero stored coefficient (the series must not be zero).
  long min_exponent() const;
  long max_exponent() const;
  bool is_power_series() const { return coeffs_.empty() || coeffs_.begin()->first >= 0; }

  /// Dense polynomial of an exact series with no negative exponents.
  Polynomial to_polynomial() const;

  /// Exact Laurent polynomial made of the stored coefficients only.
  LaurentApprox stored_part() const;

  /// Multiplication by z^k.
  LaurentApprox shift(long k) const;
  LaurentApprox scale(const Rational& s) const;
  LaurentApprox negate() const { return scale(Rational(-1)); }

  friend bool operator==(const LaurentApprox&, const LaurentApprox&) = default;

 private:
  Coefficients coeffs_;
  long n_lo_ = 0;
  long n_hi_ = -1;
  std::optional<TailBound> tail_;
  std::optional<Prime> prime_;
  bool exact_ = true;

  void normalize_exact();
};

LaurentApprox add(const LaurentApprox& f, const LaurentApprox& g);
LaurentApprox sub(const LaurentApprox& f, const LaurentApprox& g);
/// Cauchy product on the fully determined window; EmptyWindow if none.
LaurentApprox mul(const LaurentApprox& f, const LaurentApprox& g);
LaurentApprox hasse_derivative(const LaurentApprox& f, unsigned long n);

/// Largest a with v_p(c_n) >= a + slope*n for every coefficient of f,
/// stored or tail. -inf if no such a exists (slope above the tail slope, or
/// an inexact series without a tail bound). +inf for the zero series.
ExtendedRational affine_floor(const LaurentApprox& f, const Rational& slope, const Prime& p);

/// Keeps exponents <= n_hi and replaces the rest by the tightest affine tail
/// bound with the given slope.
LaurentApprox truncate(const LaurentApprox& f, long n_hi, const Rational& tail_slope, const Prime& p);

/// A rational known to a valuation floor: v_p(true - value) >= floor.
struct CertifiedValue {
  Rational value;
  Valuation floor;
};

/// Partial sum at z with the certified floor of the omitted tail.
CertifiedValue evaluate(const LaurentApprox& f, const Rational& z, const Prime& p);

/// Taylor coefficients of f around b, each with its own valuation floor.
struct Recentered {
  LaurentApprox series;          ///< in the variable w = z - b
  std::vector<Valuation> floors;  ///< floors[n] bounds the error of the coefficient of w^n
};

Recentered recenter(const LaurentApprox& f, const Rational& b, long order, const Prime& p);

struct ZeroPrescription {
  Rational point;
  long multiplicity;
};

/// z^{m0} prod (1 - z/z_n)^{m_n}, truncated to degree <= order.
LaurentApprox product_from_zeros(const std::vector<ZeroPrescription>& zeros, long m0, long order, const Prime& p);

struct StabilizationReport {
  bool stabilizes;
  /// sup_log(1 - f_n, rho) per factor.
  std::vector<LogValue> gaps;
  /// First index whose gap, and every later gap, lies strictly below the floor.
  std::optional<std::size_t> index;
};

/// Checks that |1 - f_n|_rho strictly decreases along the list (zero factors
/// differences, at -inf, are allowed to repeat).
StabilizationReport partial_product_stabilizes(const std::vector<LaurentApprox>& factors, const LogValue& rho,
                                               const Prime& p, const LogValue& floor = LogValue(0));

}  // namespace nonarch
