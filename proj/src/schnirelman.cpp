#include "nonarch/schnirelman.hpp"

#include <algorithm>

namespace nonarch {

namespace {

Polynomial linear_factor(const Rational& b) { return Polynomial{Rational(-b), Rational(1)}; }

PadicResidueInt unit_inverse(const PadicResidueInt& x) {
  Integer inv;
  Integer m = x.modulus();
  if (mpz_invert(inv.get_mpz_t(), x.residue().get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorCode::PoleOnCircle, "evaluation point is not a unit");
  }
  return PadicResidueInt(x.prime(), x.modulus_exponent(), inv);
}

// p^e for either sign of e.
Rational p_power(const Prime& p, long e) {
  Rational out(p.power(static_cast<unsigned long>(std::labs(e))));
  return e >= 0 ? out : Rational(1 / out);
}

long valuation(const Rational& x, const Prime& p) { return vp(x, p).value().get_num().get_si(); }

}  // namespace

Rational integral_series(const LaurentApprox& f, const Rational& a, const Rational& rho, const Prime& p) {
  LogValue outer = max(abs_log(a, p), LogValue(rho));
  sup_log(f, outer, p);
  if (f.is_power_series()) return 0;
  LogValue ra = abs_log(a, p);
  if (ra == LogValue(rho)) throw Error(ErrorCode::PoleOnCircle, "the pole at 0 lies on the circle");
  if (ra > LogValue(rho)) return 0;
  return f.coeff(-1);
}

CertifiedValue cauchy_coeff(const LaurentApprox& f, const Rational& w, unsigned long n, const Rational& a,
                            const Rational& rho, const Prime& p) {
  if (!f.is_power_series() || (!f.exact() && f.n_lo() < 0)) {
    throw Error(ErrorCode::ValidationError, "Cauchy formula needs a power series");
  }
  sup_log(f, max(abs_log(a, p), LogValue(rho)), p);
  LogValue rw = abs_log(w - a, p);
  if (rw == LogValue(rho)) throw Error(ErrorCode::OnCircle, "w lies on the circle");
  if (rw > LogValue(rho)) return {Rational(0), Valuation::pos_inf()};
  return evaluate(hasse_derivative(f, n), w, p);
}

RationalFunctionSplit partial_fractions(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::ValidationError, "zero denominator");
  if (gcd(num, den).degree() > 0) throw Error(ErrorCode::NotCoprime, "numerator and denominator share a factor");
  auto roots = rational_roots(den);
  long split = 0;
  for (const auto& r : roots) split += r.multiplicity;
  if (split != den.degree()) {
    throw Error(ErrorCode::UnsplitDenominator, den.to_string() + " has irreducible factors of degree > 1 over Q");
  }
  RationalFunctionSplit out;
  out.analytic_part = divmod(num, den).first;
  for (const auto& r : roots) {
    long m = r.multiplicity;
    Polynomial Q = divmod(den, linear_factor(r.root).pow(static_cast<unsigned long>(m))).first;
    Polynomial ns = num.taylor_shift(r.root);
    Polynomial qs = Q.taylor_shift(r.root);
    // Taylor coefficients of num/Q at b up to order m-1.
    std::vector<Rational> c;
    for (long i = 0; i < m; ++i) {
      Rational s = ns.coeff(i);
      for (long j = 1; j <= i; ++j) s -= qs.coeff(j) * c[static_cast<std::size_t>(i - j)];
      c.push_back(s / qs.coeff(0));
    }
    std::reverse(c.begin(), c.end());
    out.poles.push_back({r.root, m, std::move(c)});
  }
  return out;
}

Rational residue_sum(const Polynomial& num, const Polynomial& den, const Rational& a, const Rational& rho,
                     const Prime& p) {
  Rational sum = 0;
  for (const auto& pole : partial_fractions(num, den).poles) {
    LogValue d = abs_log(pole.b - a, p);
    if (d == LogValue(rho)) throw Error(ErrorCode::PoleOnCircle, "pole " + to_string(pole.b) + " on the circle");
    if (d < LogValue(rho)) sum += pole.residue();
  }
  return sum;
}

CertifiedValue circle_residue(const Polynomial& num, const Polynomial& den, const Rational& a, const Rational& rho,
                              long order, const Prime& p) {
  LaurentApprox N = LaurentApprox::from_polynomial(num.taylor_shift(a));
  LaurentApprox D = LaurentApprox::from_polynomial(den.taylor_shift(a));
  if (D.is_zero()) throw Error(ErrorCode::ValidationError, "zero denominator");
  Indices ix = indices(D, LogValue(rho), p);
  if (ix.k != ix.K) throw Error(ErrorCode::PoleOnCircle, "denominator vanishes on the circle");
  ApproxSeries v = invert_unit(D, rho, order, p);
  LaurentApprox prod = mul(N, v.value);
  // |coefficient error| * p^{-rho} <= |N|_rho * |1/D - v|_rho.
  LogValue err = sup_log(N, LogValue(rho), p) + v.error + LogValue(rho);
  Valuation floor = err.is_neg_inf() ? Valuation::pos_inf() : -err;
  return {prod.coeff(-1), floor};
}

SchnirelmanSum schnirelman_sum(const LaurentApprox& f, const Rational& a, const Rational& r, unsigned long n,
                               unsigned long k, const Prime& p) {
  if (!f.exact()) throw Error(ErrorCode::RequiresExact, "Schnirelman sums need an exact Laurent polynomial");
  if (r == 0) throw Error(ErrorCode::ValidationError, "radius must be nonzero");
  if (k == 0) throw Error(ErrorCode::ValidationError, "precision must be positive");
  auto xi = teichmuller_roots(p, n, k);

  SchnirelmanSum out{PadicResidueInt(p, k, Integer(0)), 0, false};
  if (f.is_zero()) return out;
  long lo = f.min_exponent(), hi = f.max_exponent();
  out.n_too_small = static_cast<long>(n) <= std::max(std::labs(lo), hi) + 1;

  // a + r xi = p^e y with y integral.
  long vr = valuation(r, p);
  long e = a == 0 ? vr : std::min(valuation(a, p), vr);
  PadicResidueInt a1 = reduce(a * p_power(p, -e), p, k);
  PadicResidueInt r1 = reduce(r * p_power(p, -e), p, k);

  // Term j carries p^{v(r) + v(c_j) + e j}; the shift clears the most negative one.
  std::vector<long> exps;
  long min_exp = 0;
  for (const auto& [j, c] : f.coefficients()) {
    long ej = vr + valuation(c, p) + e * j;
    min_exp = exps.empty() ? ej : std::min(min_exp, ej);
    exps.push_back(ej);
  }
  out.shift = -min_exp;
  PadicResidueInt prefactor = reduce(r * p_power(p, -vr) / static_cast<long>(n), p, k);

  PadicResidueInt sum(p, k, Integer(0));
  for (const auto& x : xi) {
    PadicResidueInt y = a1 + r1 * x;
    PadicResidueInt yinv = lo < 0 ? unit_inverse(y) : y;
    PadicResidueInt fx(p, k, Integer(0));
    std::size_t i = 0;
    for (const auto& [j, c] : f.coefficients()) {
      long t = exps[i++] + out.shift;
      if (t >= static_cast<long>(k)) continue;
      PadicResidueInt cu = reduce(c * p_power(p, -valuation(c, p)), p, k);
      PadicResidueInt yj = j >= 0 ? y.pow(static_cast<unsigned long>(j)) : yinv.pow(static_cast<unsigned long>(-j));
      fx = fx + cu * yj * PadicResidueInt(p, k, p.power(static_cast<unsigned long>(t)));
    }
    sum = sum + fx * x;
  }
  out.value = sum * prefactor;
  return out;
}

}  // namespace nonarch
