#include "nonarch/series.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "nonarch/polygon.hpp"

namespace nonarch {

namespace {

const Prime& common_prime(const LaurentApprox& f, const LaurentApprox& g) {
  if (f.prime() && g.prime() && !(*f.prime() == *g.prime())) {
    throw Error(ErrorCode::ValidationError, "series over different primes");
  }
  return f.prime() ? *f.prime() : *g.prime();
}

// Largest a with v(c_n) >= a + slope*n for every n >= from (stored or tail).
ExtendedRational affine_floor_from(const LaurentApprox& f, const Rational& slope, long from, const Prime& p) {
  ExtendedRational best = ExtendedRational::pos_inf();
  for (auto it = f.coefficients().lower_bound(from); it != f.coefficients().end(); ++it) {
    best = min(best, vp(it->second, p) - ExtendedRational(Rational(slope * it->first)));
  }
  if (f.exact()) return best;
  if (!f.tail_bound()) return ExtendedRational::neg_inf();
  const TailBound& t = *f.tail_bound();
  if (slope > t.beta) return ExtendedRational::neg_inf();
  long start = std::max(from, f.n_hi() + 1);
  return min(best, ExtendedRational(Rational(t.alpha + (t.beta - slope) * start)));
}

// Smallest tail slope among the inexact operands; empty if one of them has
// no tail bound.
std::optional<Rational> common_tail_slope(const LaurentApprox& f, const LaurentApprox& g) {
  std::optional<Rational> beta;
  for (const auto* s : {&f, &g}) {
    if (s->exact()) continue;
    if (!s->tail_bound()) return std::nullopt;
    beta = beta ? std::min(*beta, s->tail_bound()->beta) : s->tail_bound()->beta;
  }
  return beta;
}

}  // namespace

void LaurentApprox::normalize_exact() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
  }
  if (exact_) {
    tail_.reset();
    prime_.reset();
    if (coeffs_.empty()) {
      n_lo_ = 0;
      n_hi_ = -1;
    } else {
      n_lo_ = coeffs_.begin()->first;
      n_hi_ = coeffs_.rbegin()->first;
    }
  }
}

LaurentApprox LaurentApprox::exact_from(Coefficients coeffs) {
  LaurentApprox out;
  out.coeffs_ = std::move(coeffs);
  out.exact_ = true;
  out.normalize_exact();
  return out;
}

LaurentApprox LaurentApprox::from_polynomial(const Polynomial& p) {
  Coefficients c;
  for (long i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) != 0) c.emplace(i, p.coeff(i));
  }
  return exact_from(std::move(c));
}

LaurentApprox LaurentApprox::monomial(const Rational& c, long n) { return exact_from({{n, c}}); }

LaurentApprox LaurentApprox::truncated(Coefficients coeffs, long n_lo, long n_hi, std::optional<TailBound> tail,
                                       const Prime& p) {
  LaurentApprox out;
  out.coeffs_ = std::move(coeffs);
  out.exact_ = false;
  out.n_lo_ = n_lo;
  out.n_hi_ = n_hi;
  out.tail_ = std::move(tail);
  out.prime_ = p;
  out.normalize_exact();
  if (!out.coeffs_.empty() && (out.coeffs_.begin()->first < n_lo || out.coeffs_.rbegin()->first > n_hi)) {
    throw Error(ErrorCode::ValidationError, "stored exponent outside the window [" + std::to_string(n_lo) + ", " +
                                                std::to_string(n_hi) + "]");
  }
  return out;
}

Rational LaurentApprox::coeff(long n) const {
  if (!exact_ && n > n_hi_) {
    throw Error(ErrorCode::Uncertifiable, "coefficient " + std::to_string(n) + " lies beyond the known window");
  }
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

long LaurentApprox::min_exponent() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroSeries, "no stored coefficients");
  return coeffs_.begin()->first;
}

long LaurentApprox::max_exponent() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroSeries, "no stored coefficients");
  return coeffs_.rbegin()->first;
}

Polynomial LaurentApprox::to_polynomial() const {
  if (!exact_) throw Error(ErrorCode::RequiresExact, "series is truncated, not a polynomial");
  if (!is_power_series()) throw Error(ErrorCode::ValidationError, "series has negative exponents");
  if (coeffs_.empty()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(coeffs_.rbegin()->first + 1), Rational(0));
  for (const auto& [n, c] : coeffs_) v[static_cast<std::size_t>(n)] = c;
  return Polynomial(std::move(v));
}

LaurentApprox LaurentApprox::stored_part() const { return exact_from(coeffs_); }

LaurentApprox LaurentApprox::shift(long k) const {
  LaurentApprox out = *this;
  out.coeffs_.clear();
  for (const auto& [n, c] : coeffs_) out.coeffs_.emplace(n + k, c);
  out.n_lo_ = n_lo_ + k;
  out.n_hi_ = n_hi_ + k;
  if (tail_) out.tail_ = TailBound{tail_->alpha - tail_->beta * k, tail_->beta};
  if (exact_) out.normalize_exact();
  return out;
}

LaurentApprox LaurentApprox::scale(const Rational& s) const {
  if (s == 0) return {};
  LaurentApprox out = *this;
  for (auto& [n, c] : out.coeffs_) c *= s;
  if (tail_) out.tail_->alpha += vp(s, *prime_).value();
  return out;
}

LaurentApprox add(const LaurentApprox& f, const LaurentApprox& g) {
  if (f.exact() && g.exact()) {
    LaurentApprox::Coefficients c = f.coefficients();
    for (const auto& [n, v] : g.coefficients()) c[n] += v;
    return LaurentApprox::exact_from(std::move(c));
  }
  const Prime& p = common_prime(f, g);
  long n_hi = std::numeric_limits<long>::max();
  long n_lo = std::numeric_limits<long>::max();
  for (const auto* s : {&f, &g}) {
    if (!s->exact()) n_hi = std::min(n_hi, s->n_hi());
    if (!s->is_zero()) n_lo = std::min(n_lo, s->exact() ? s->min_exponent() : s->n_lo());
  }
  LaurentApprox::Coefficients c;
  for (const auto* s : {&f, &g}) {
    for (const auto& [n, v] : s->coefficients()) {
      if (n <= n_hi) c[n] += v;
    }
  }
  std::optional<TailBound> tail;
  if (auto beta = common_tail_slope(f, g)) {
    // Finite: the inexact operand always contributes its tail above n_hi.
    ExtendedRational a = min(affine_floor_from(f, *beta, n_hi + 1, p), affine_floor_from(g, *beta, n_hi + 1, p));
    tail = TailBound{a.value(), *beta};
  }
  return LaurentApprox::truncated(std::move(c), std::min(n_lo, n_hi + 1), n_hi, tail, p);
}

LaurentApprox sub(const LaurentApprox& f, const LaurentApprox& g) { return add(f, g.negate()); }

LaurentApprox mul(const LaurentApprox& f, const LaurentApprox& g) {
  if (f.is_zero() || g.is_zero()) return {};
  LaurentApprox::Coefficients c;
  if (f.exact() && g.exact()) {
    for (const auto& [i, a] : f.coefficients()) {
      for (const auto& [j, b] : g.coefficients()) c[i + j] += a * b;
    }
    return LaurentApprox::exact_from(std::move(c));
  }
  const Prime& p = common_prime(f, g);
  long lo_f = f.exact() ? f.min_exponent() : f.n_lo();
  long lo_g = g.exact() ? g.min_exponent() : g.n_lo();
  long n_lo = lo_f + lo_g;
  long n_hi = std::numeric_limits<long>::max();
  if (!f.exact()) n_hi = std::min(n_hi, f.n_hi() + lo_g);
  if (!g.exact()) n_hi = std::min(n_hi, g.n_hi() + lo_f);
  if (n_hi < n_lo) {
    throw Error(ErrorCode::EmptyWindow, "no product coefficient is fully determined");
  }
  for (const auto& [i, a] : f.coefficients()) {
    for (const auto& [j, b] : g.coefficients()) {
      if (i + j <= n_hi) c[i + j] += a * b;
    }
  }
  std::optional<TailBound> tail;
  if (auto beta = common_tail_slope(f, g)) {
    ExtendedRational a = affine_floor(f, *beta, p) + affine_floor(g, *beta, p);
    tail = TailBound{a.value(), *beta};
  }
  return LaurentApprox::truncated(std::move(c), n_lo, n_hi, tail, p);
}

LaurentApprox hasse_derivative(const LaurentApprox& f, unsigned long n) {
  if (n == 0) return f;
  LaurentApprox::Coefficients c;
  for (const auto& [k, a] : f.coefficients()) {
    Integer b = binomial(Integer(k), n);
    if (b != 0) c.emplace(k - static_cast<long>(n), Rational(a * b));
  }
  if (f.exact()) return LaurentApprox::exact_from(std::move(c));
  long shift = static_cast<long>(n);
  std::optional<TailBound> tail;
  if (f.tail_bound()) tail = TailBound{f.tail_bound()->alpha + f.tail_bound()->beta * shift, f.tail_bound()->beta};
  return LaurentApprox::truncated(std::move(c), f.n_lo() - shift, f.n_hi() - shift, tail, *f.prime());
}

ExtendedRational affine_floor(const LaurentApprox& f, const Rational& slope, const Prime& p) {
  return affine_floor_from(f, slope, std::numeric_limits<long>::min(), p);
}

LaurentApprox truncate(const LaurentApprox& f, long n_hi, const Rational& tail_slope, const Prime& p) {
  if (f.exact() && (f.is_zero() || f.max_exponent() <= n_hi)) return f;
  if (!f.exact() && n_hi >= f.n_hi()) return f;
  LaurentApprox::Coefficients c;
  for (const auto& [n, v] : f.coefficients()) {
    if (n <= n_hi) c.emplace(n, v);
  }
  ExtendedRational a = affine_floor_from(f, tail_slope, n_hi + 1, p);
  std::optional<TailBound> tail;
  if (a.is_finite()) tail = TailBound{a.value(), tail_slope};
  long n_lo = f.exact() ? f.min_exponent() : f.n_lo();
  return LaurentApprox::truncated(std::move(c), std::min(n_lo, n_hi + 1), n_hi, tail, p);
}

CertifiedValue evaluate(const LaurentApprox& f, const Rational& z, const Prime& p) {
  if (z == 0) {
    if (!f.is_power_series()) throw Error(ErrorCode::OutsideRadius, "pole at z = 0");
    if (!f.exact() && f.n_hi() < 0 && f.n_lo() <= 0) {
      throw Error(ErrorCode::Uncertifiable, "constant coefficient is not known");
    }
    return {f.exact() || f.n_hi() >= 0 ? f.coeff(0) : Rational(0), Valuation::pos_inf()};
  }
  Rational value = 0;
  for (const auto& [n, c] : f.coefficients()) {
    Rational zn;
    mpz_class num = z.get_num(), den = z.get_den();
    Integer a, b;
    unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
    mpz_pow_ui(a.get_mpz_t(), num.get_mpz_t(), e);
    mpz_pow_ui(b.get_mpz_t(), den.get_mpz_t(), e);
    zn = n >= 0 ? Rational(a, b) : Rational(b, a);
    zn.canonicalize();
    value += c * zn;
  }
  if (f.exact()) return {value, Valuation::pos_inf()};
  if (!f.tail_bound()) throw Error(ErrorCode::Uncertifiable, "truncated series without a tail bound");
  LogValue rho = abs_log(z, p);
  const TailBound& t = *f.tail_bound();
  if (rho >= LogValue(t.beta)) {
    throw Error(ErrorCode::OutsideRadius, "|z| is not inside the certified radius of convergence");
  }
  Rational gap = t.beta - rho.value();
  return {value, Valuation(Rational(t.alpha + gap * (f.n_hi() + 1)))};
}

Recentered recenter(const LaurentApprox& f, const Rational& b, long order, const Prime& p) {
  if (!f.is_power_series() || (!f.exact() && f.n_lo() < 0)) {
    throw Error(ErrorCode::ValidationError, "recenter needs a power series");
  }
  if (order < 0) throw Error(ErrorCode::ValidationError, "negative recentering order");
  Recentered out;
  if (f.exact()) {
    Polynomial shifted = f.to_polynomial().taylor_shift(b);
    out.series = truncate(LaurentApprox::from_polynomial(shifted), order, Rational(0), p);
    out.floors.assign(static_cast<std::size_t>(order + 1), Valuation::pos_inf());
    return out;
  }
  if (!f.tail_bound()) throw Error(ErrorCode::Uncertifiable, "truncated series without a tail bound");
  const TailBound& t = *f.tail_bound();
  LogValue rho_b = abs_log(b, p);
  if (rho_b >= LogValue(t.beta)) {
    throw Error(ErrorCode::OutsideRadius, "center lies outside the certified radius of convergence");
  }
  LaurentApprox::Coefficients c;
  for (long n = 0; n <= order; ++n) {
    Rational sum = 0;
    for (const auto& [k, a] : f.coefficients()) {
      if (k < n) continue;
      Rational bp = 1;
      for (long i = 0; i < k - n; ++i) bp *= b;
      sum += Rational(binomial(Integer(k), static_cast<unsigned long>(n))) * a * bp;
    }
    if (sum != 0) c.emplace(n, sum);
    long k_start = std::max(f.n_hi() + 1, n);
    if (b == 0) {
      out.floors.push_back(n <= f.n_hi() ? Valuation::pos_inf() : Valuation(Rational(t.alpha + t.beta * n)));
    } else {
      const Rational& r = rho_b.value();
      out.floors.push_back(Valuation(Rational(t.alpha + n * r + k_start * (t.beta - r))));
    }
  }
  // v(D^k f(b)) >= A + beta*k, A the affine floor of f at slope beta.
  ExtendedRational a = affine_floor(f, t.beta, p);
  out.series = LaurentApprox::truncated(std::move(c), 0, order, TailBound{a.value(), t.beta}, p);
  return out;
}

LaurentApprox product_from_zeros(const std::vector<ZeroPrescription>& zeros, long m0, long order, const Prime& p) {
  if (m0 < 0) throw Error(ErrorCode::ValidationError, "negative order of vanishing at 0");
  std::set<Rational> seen;
  Polynomial prod = Polynomial::monomial(Rational(1), m0);
  Rational slope = 0;
  bool first = true;
  for (const auto& zp : zeros) {
    if (zp.point == 0) throw Error(ErrorCode::ZeroPoint, "prescribed zero at the origin; use m0");
    if (zp.multiplicity <= 0) throw Error(ErrorCode::ValidationError, "multiplicity must be positive");
    if (!seen.insert(zp.point).second) {
      throw Error(ErrorCode::DuplicatePoint, "point " + to_string(zp.point) + " listed twice");
    }
    Polynomial factor{Rational(1), Rational(-1 / zp.point)};
    prod = prod * factor.pow(static_cast<unsigned long>(zp.multiplicity));
    Rational rho = abs_log(zp.point, p).value();
    slope = first ? rho : std::min(slope, rho);
    first = false;
  }
  return truncate(LaurentApprox::from_polynomial(prod), order, slope, p);
}

StabilizationReport partial_product_stabilizes(const std::vector<LaurentApprox>& factors, const LogValue& rho,
                                               const Prime& p, const LogValue& floor) {
  StabilizationReport out{true, {}, std::nullopt};
  for (const auto& f : factors) {
    out.gaps.push_back(sup_log(sub(LaurentApprox::constant(1), f), rho, p));
  }
  for (std::size_t i = 1; i < out.gaps.size(); ++i) {
    bool both_zero = out.gaps[i].is_neg_inf() && out.gaps[i - 1].is_neg_inf();
    if (!both_zero && !(out.gaps[i] < out.gaps[i - 1])) out.stabilizes = false;
  }
  for (std::size_t i = out.gaps.size(); i-- > 0;) {
    if (!(out.gaps[i] < floor)) break;
    out.index = i;
  }
  return out;
}

}  // namespace nonarch
