#include "nonarch/weierstrass.hpp"

#include <algorithm>

namespace nonarch {

namespace {

Valuation min_coefficient_valuation(const Polynomial& a, const Prime& p) {
  Valuation best = Valuation::pos_inf();
  for (const auto& c : a.coefficients()) best = min(best, vp(c, p));
  return best;
}

}  // namespace

DominantPolynomial DominantPolynomial::certify(const Polynomial& poly, const Rational& rho, const Prime& p) {
  if (poly.is_zero()) throw Error(ErrorCode::NotDominant, "zero polynomial");
  Indices ix = indices(LaurentApprox::from_polynomial(poly), LogValue(rho), p);
  if (ix.K != poly.degree()) {
    throw Error(ErrorCode::NotDominant, "K(P, " + to_string(rho) + ") = " + std::to_string(ix.K) +
                                            " but deg P = " + std::to_string(poly.degree()));
  }
  return {poly, rho, ix.k == 0};
}

DivisionResult divide(const LaurentApprox& f, const DominantPolynomial& P, const Prime& p) {
  const Polynomial& B = P.poly;
  long d = B.degree();
  LogValue rho(P.rho);
  sup_log(f, rho, p);
  LaurentApprox fs = f.stored_part();
  if (!fs.is_power_series() && !P.extremal) {
    throw Error(ErrorCode::NeedExtremal, "dividend has negative exponents but P is only dominant");
  }

  std::vector<Rational> plus, minus;
  for (const auto& [n, c] : fs.coefficients()) {
    if (n >= 0) {
      if (plus.size() <= static_cast<std::size_t>(n)) plus.resize(static_cast<std::size_t>(n) + 1);
      plus[static_cast<std::size_t>(n)] = c;
    } else {
      // a_{-m} w^{m + d - 1} in the reflected variable w = 1/z.
      std::size_t i = static_cast<std::size_t>(-n + d - 1);
      if (minus.size() <= i) minus.resize(i + 1);
      minus[i] = c;
    }
  }

  auto [qp, R] = divmod(Polynomial(plus), B);
  LaurentApprox::Coefficients q;
  for (long i = 0; i <= qp.degree(); ++i) {
    if (qp.coeff(i) != 0) q[i] = qp.coeff(i);
  }
  if (!minus.empty()) {
    auto [Q, S] = divmod(Polynomial(minus), B.reversed());
    for (long j = 0; j <= Q.degree(); ++j) {
      if (Q.coeff(j) != 0) q[-1 - j] = Q.coeff(j);
    }
    std::vector<Rational> r(static_cast<std::size_t>(d));
    for (long j = 0; j <= S.degree(); ++j) r[static_cast<std::size_t>(d - 1 - j)] = S.coeff(j);
    R = R + Polynomial(r);
  }
  return {LaurentApprox::exact_from(std::move(q)), R, tail_log_norm(f, rho)};
}

ApproxSeries invert_unit(const LaurentApprox& u, const Rational& rho, long order, const Prime& p) {
  if (order < 0) throw Error(ErrorCode::ValidationError, "negative order");
  Indices ix = indices(u, LogValue(rho), p);
  if (ix.k != ix.K) {
    throw Error(ErrorCode::NotUnit, "K = " + std::to_string(ix.K) + ", k = " + std::to_string(ix.k) + " at rho = " +
                                        to_string(rho));
  }
  Rational inv_a = 1 / u.coeff(ix.k);
  LaurentApprox w = sub(LaurentApprox::constant(1), u.stored_part().shift(-ix.k).scale(inv_a));
  LaurentApprox sum;
  LaurentApprox term = LaurentApprox::constant(1);
  for (long j = 0; j <= order; ++j) {
    sum = add(sum, term);
    term = mul(term, w);
  }
  LogValue lu = sup_log(u, LogValue(rho), p);
  LogValue err = Rational(order + 1) * sup_log(w, LogValue(rho), p);
  if (!u.exact()) err = max(err, tail_log_norm(u, LogValue(rho)) - lu);
  return {sum.shift(-ix.k).scale(inv_a), rho, err - lu};
}

void require_compatible_slope(long d, const Rational& rho) {
  Rational t = d * rho;
  if (t.get_den() != 1) {
    throw Error(ErrorCode::IncompatibleSlope, "d * rho = " + to_string(t) + " is not an integer");
  }
}

PreparationResult prepare(const LaurentApprox& f, const Rational& rho, const Valuation& target_floor, const Prime& p) {
  if (f.is_zero() || f.coefficients().empty()) throw Error(ErrorCode::ZeroSeries, "cannot prepare zero");
  LogValue r(rho);
  Indices ix = indices(f, r, p);
  long d = ix.K - ix.k;
  require_compatible_slope(d, rho);

  Rational a = f.coeff(ix.k);
  LaurentApprox g = f.stored_part().shift(-ix.k).scale(1 / a);
  std::vector<Rational> head(static_cast<std::size_t>(d) + 1);
  for (long n = 0; n <= d; ++n) head[static_cast<std::size_t>(n)] = g.coeff(n);
  Polynomial P(head);

  PreparationResult out;
  out.d = d;
  out.delta = sup_log(sub(g, LaurentApprox::from_polynomial(P)), r, p);
  if (out.delta >= LogValue(0)) throw Error(ErrorCode::NoContraction, "sup_log(g - P_1) >= 0");

  Valuation va = vp(a, p);
  Valuation goal = target_floor - va;
  // R_i has log-norm <= i * delta, so its coefficients have valuation >= -i * delta + min(0, (d-1) rho).
  Rational m = std::min(Rational(0), Rational((d - 1) * rho));
  out.iteration_bound = 1;
  if (out.delta.is_finite() && goal.is_finite()) {
    Rational need = (goal.value() - m) / -out.delta.value();
    out.iteration_bound = std::max(1L, ceil(need).get_si());
  } else if (out.delta.is_finite()) {
    out.iteration_bound = 64;
  }

  for (long i = 1;; ++i) {
    DivisionResult div = divide(g, DominantPolynomial{P, rho, true}, p);
    out.trace.push_back(sup_log(LaurentApprox::from_polynomial(div.R), r, p));
    Valuation fl = min_coefficient_valuation(div.R, p);
    if (fl >= goal) {
      Rational c0 = P.coeff(0);
      out.P = (1 / c0) * P;
      out.u = div.q.shift(ix.k).scale(a * c0);
      out.floor = fl + va;
      return out;
    }
    if (i >= out.iteration_bound) {
      throw Error(ErrorCode::NoContraction, "residual did not reach the floor within " +
                                                std::to_string(out.iteration_bound) + " iterations");
    }
    P = P + div.R;
  }
}

}  // namespace nonarch
