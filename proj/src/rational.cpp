#include "nonarch/rational.hpp"

#include <cctype>

namespace nonarch {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::NegativeValuation: return "NegativeValuation";
    case ErrorCode::RootsUnavailable: return "RootsUnavailable";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::OutsideRadius: return "OutsideRadius";
    case ErrorCode::Uncertifiable: return "Uncertifiable";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::OutsideReliableWindow: return "OutsideReliableWindow";
    case ErrorCode::ZeroSeries: return "ZeroSeries";
    case ErrorCode::ConstantSeries: return "ConstantSeries";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NeedExtremal: return "NeedExtremal";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::NoContraction: return "NoContraction";
    case ErrorCode::IncompatibleSlope: return "IncompatibleSlope";
    case ErrorCode::RequiresExact: return "RequiresExact";
    case ErrorCode::DerivativeVanishes: return "DerivativeVanishes";
    case ErrorCode::TooFewTargets: return "TooFewTargets";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::UnsplitDenominator: return "UnsplitDenominator";
    case ErrorCode::PoleOnCircle: return "PoleOnCircle";
    case ErrorCode::OnCircle: return "OnCircle";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::ParseError, "malformed rational \"" + std::string(text) + "\"");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  }
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::strong_ordering compare(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

const Rational& ExtendedRational::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("value() of an infinite ExtendedRational");
  return value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  using K = ExtendedRational::Kind;
  if (a.kind_ != b.kind_) {
    auto rank = [](K k) { return k == K::NegInf ? 0 : (k == K::Finite ? 1 : 2); };
    return rank(a.kind_) <=> rank(b.kind_);
  }
  if (a.kind_ != K::Finite) return std::strong_ordering::equal;
  return compare(a.value_, b.value_);
}

ExtendedRational ExtendedRational::operator-() const {
  switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    case Kind::Finite: return ExtendedRational(Rational(-value_));
  }
  return *this;
}

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
  using K = ExtendedRational::Kind;
  if (a.kind_ == K::Finite && b.kind_ == K::Finite) return ExtendedRational(Rational(a.value_ + b.value_));
  if ((a.kind_ == K::PosInf && b.kind_ == K::NegInf) || (a.kind_ == K::NegInf && b.kind_ == K::PosInf)) {
    throw std::logic_error("inf + -inf is undefined");
  }
  return a.kind_ != K::Finite ? a : b;
}

ExtendedRational operator*(const Rational& s, const ExtendedRational& a) {
  if (a.is_finite()) return ExtendedRational(Rational(s * a.value_));
  int sign = sgn(s);
  if (sign == 0) throw std::logic_error("0 * inf is undefined");
  return sign > 0 ? a : -a;
}

ExtendedRational parse_extended(std::string_view text) {
  if (text == "inf" || text == "+inf") return ExtendedRational::pos_inf();
  if (text == "-inf") return ExtendedRational::neg_inf();
  return ExtendedRational(parse_rational(text));
}

std::string to_string(const ExtendedRational& x) {
  if (x.is_pos_inf()) return "inf";
  if (x.is_neg_inf()) return "-inf";
  return to_string(x.value());
}

ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b) { return b < a ? b : a; }
ExtendedRational max(const ExtendedRational& a, const ExtendedRational& b) { return a < b ? b : a; }

bool LogInterval::empty() const {
  if (hi < lo) return true;
  if (lo == hi) return !(lo_closed && hi_closed) || !lo.is_finite();
  return false;
}

bool LogInterval::contains(const ExtendedRational& x) const {
  if (empty()) return false;
  bool above = lo_closed ? lo <= x : lo < x;
  bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

bool LogInterval::contains(const LogInterval& other) const {
  if (other.empty()) return true;
  if (empty()) return false;
  bool lo_ok = lo < other.lo || (lo == other.lo && (lo_closed || !other.lo_closed));
  bool hi_ok = other.hi < hi || (hi == other.hi && (hi_closed || !other.hi_closed));
  return lo_ok && hi_ok;
}

LogInterval LogInterval::intersect(const LogInterval& other) const {
  LogInterval out;
  if (lo < other.lo) {
    out.lo = other.lo;
    out.lo_closed = other.lo_closed;
  } else if (other.lo < lo) {
    out.lo = lo;
    out.lo_closed = lo_closed;
  } else {
    out.lo = lo;
    out.lo_closed = lo_closed && other.lo_closed;
  }
  if (hi < other.hi) {
    out.hi = hi;
    out.hi_closed = hi_closed;
  } else if (other.hi < hi) {
    out.hi = other.hi;
    out.hi_closed = other.hi_closed;
  } else {
    out.hi = hi;
    out.hi_closed = hi_closed && other.hi_closed;
  }
  return out;
}

std::string LogInterval::to_string() const {
  return std::string(lo_closed ? "[" : "(") + nonarch::to_string(lo) + ", " + nonarch::to_string(hi) +
         (hi_closed ? "]" : ")");
}

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace nonarch
