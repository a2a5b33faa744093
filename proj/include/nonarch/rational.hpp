#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "nonarch/error.hpp"

namespace nonarch {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a" or "a/b" (optional leading '-', decimal digits, b != 0).
/// Throws Error{ParseError} on anything else, including whitespace.
Rational parse_rational(std::string_view text);

/// Canonical "a" or "a/b" rendering.
std::string to_string(const Rational& q);

std::strong_ordering compare(const Rational& a, const Rational& b);

/// A rational extended by -inf and +inf.
///
/// Used for valuations (+inf encodes the valuation of zero) and for the
/// log-radius scale rho = log_p r (-inf is r = 0, +inf is all of the field).
class ExtendedRational {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtendedRational() = default;
  ExtendedRational(const Rational& v) : kind_(Kind::Finite), value_(v) {}  // NOLINT
  ExtendedRational(long v) : kind_(Kind::Finite), value_(v) {}             // NOLINT
  ExtendedRational(const Integer& v) : kind_(Kind::Finite), value_(v) {}  // NOLINT

  static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }
  static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }

  /// The finite value; throws std::logic_error on an infinity.
  const Rational& value() const;

  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  ExtendedRational operator-() const;
  /// inf + (-inf) is undefined and throws std::logic_error.
  friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
  friend ExtendedRational operator-(const ExtendedRational& a, const ExtendedRational& b) {
    return a + (-b);
  }
  /// Scaling by a finite rational; 0 * inf throws.
  friend ExtendedRational operator*(const Rational& s, const ExtendedRational& a);

 private:
  explicit ExtendedRational(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Rational value_ = 0;
};

using Valuation = ExtendedRational;
using LogValue = ExtendedRational;

/// "inf", "-inf", or a rational string.
ExtendedRational parse_extended(std::string_view text);
std::string to_string(const ExtendedRational& x);

ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b);
ExtendedRational max(const ExtendedRational& a, const ExtendedRational& b);

/// Interval on the extended rational line with independent open/closed ends.
struct LogInterval {
  ExtendedRational lo = ExtendedRational::neg_inf();
  ExtendedRational hi = ExtendedRational::pos_inf();
  bool lo_closed = false;
  bool hi_closed = false;

  static LogInterval everything() { return {}; }
  static LogInterval closed(ExtendedRational a, ExtendedRational b) {
    return {std::move(a), std::move(b), true, true};
  }
  static LogInterval empty_interval() {
    return {ExtendedRational(0), ExtendedRational(0), false, false};
  }

  bool empty() const;
  bool contains(const ExtendedRational& x) const;
  bool contains(const LogInterval& other) const;
  LogInterval intersect(const LogInterval& other) const;
  std::string to_string() const;

  friend bool operator==(const LogInterval&, const LogInterval&) = default;
};

/// Floor and ceiling of a rational as integers.
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

}  // namespace nonarch
