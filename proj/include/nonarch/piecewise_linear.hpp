#pragma once

#include <vector>

#include "nonarch/rational.hpp"

namespace nonarch {

struct Knot {
  Rational x;
  Rational y;
  friend bool operator==(const Knot&, const Knot&) = default;
};

/// Continuous piecewise-linear function of rho with exact rational data.
///
/// Kept in canonical form: the knots are exactly the slope changes strictly
/// inside the domain. A function without slope changes stores a single anchor
/// knot at 0 clamped into the domain. Outside the first/last knot the function
/// continues with `left_slope`/`right_slope`.
class PiecewiseLinear {
 public:
  /// slope * rho + intercept on the domain.
  static PiecewiseLinear linear(const Rational& slope, const Rational& intercept,
                                const LogInterval& domain = LogInterval::everything());
  static PiecewiseLinear constant(const Rational& c, const LogInterval& domain = LogInterval::everything()) {
    return linear(Rational(0), c, domain);
  }
  /// Interpolates the given points (sorted by x, non-empty) and extends with the given slopes.
  static PiecewiseLinear from_points(const LogInterval& domain, std::vector<Knot> points, const Rational& left_slope,
                                     const Rational& right_slope);

  const LogInterval& domain() const noexcept { return domain_; }
  const std::vector<Knot>& knots() const noexcept { return knots_; }
  const Rational& left_slope() const noexcept { return left_slope_; }
  const Rational& right_slope() const noexcept { return right_slope_; }

  /// Value at a finite rho in the closure of the domain.
  Rational operator()(const Rational& rho) const;
  /// Right derivative at rho.
  Rational slope_right_of(const Rational& rho) const;

  /// Slope as rho -> +inf; the domain must be unbounded above.
  Rational asymptotic_slope() const;
  /// Supremum / infimum over the domain, possibly infinite.
  ExtendedRational sup() const;
  ExtendedRational inf() const;

  /// x coordinates where the slope changes.
  std::vector<Rational> breakpoints() const;

  PiecewiseLinear restrict(const LogInterval& domain) const;

  friend PiecewiseLinear operator+(const PiecewiseLinear& a, const PiecewiseLinear& b);
  friend PiecewiseLinear operator-(const PiecewiseLinear& a, const PiecewiseLinear& b);
  friend PiecewiseLinear operator*(const Rational& s, const PiecewiseLinear& a);
  PiecewiseLinear operator-() const { return Rational(-1) * *this; }
  friend PiecewiseLinear max(const PiecewiseLinear& a, const PiecewiseLinear& b);
  /// max(0, f), the log^+ of a log-norm.
  PiecewiseLinear positive_part() const;

  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

 private:
  LogInterval domain_;
  std::vector<Knot> knots_;
  Rational left_slope_;
  Rational right_slope_;
};

}  // namespace nonarch
