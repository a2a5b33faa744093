#include "nonarch/nevanlinna.hpp"

#include <algorithm>
#include <set>

namespace nonarch {

namespace {

PiecewiseLinear log_norm(const LaurentApprox& f, const Prime& p) { return sup_log_function(f, p); }

PiecewiseLinear identity() { return PiecewiseLinear::linear(Rational(1), Rational(0)); }

Polynomial exact_polynomial(const LaurentApprox& f) {
  if (!f.exact() || !f.is_power_series()) {
    throw Error(ErrorCode::RequiresExact, "operation needs an exact rational function");
  }
  return f.to_polynomial();
}

// f' numerator and denominator before any check for vanishing.
std::pair<Polynomial, Polynomial> raw_derivative(const MeromorphicPair& f) {
  Polynomial g = f.numerator(), h = f.denominator();
  return {h * g.derivative() - g * h.derivative(), h * h};
}

MeromorphicPair derivative_or_zero(const MeromorphicPair& f) {
  auto [w, hh] = raw_derivative(f);
  return MeromorphicPair::reduced(w, hh);
}

void check_targets(const std::vector<Target>& targets) {
  std::set<std::pair<bool, Rational>> seen;
  for (const auto& a : targets) {
    if (!seen.insert({a.has_value(), a.value_or(Rational(0))}).second) {
      throw Error(ErrorCode::ValidationError, "target " + to_string(a) + " listed twice");
    }
  }
}

}  // namespace

std::string to_string(const Target& a) { return a ? to_string(*a) : std::string("inf"); }

MeromorphicPair MeromorphicPair::rational(const Polynomial& g, const Polynomial& h) {
  if (h.is_zero()) throw Error(ErrorCode::ValidationError, "zero denominator");
  if (gcd(g, h).degree() > 0) {
    throw Error(ErrorCode::NotCoprime, "numerator and denominator share " + gcd(g, h).to_string());
  }
  return {LaurentApprox::from_polynomial(g), LaurentApprox::from_polynomial(h)};
}

MeromorphicPair MeromorphicPair::reduced(const Polynomial& g, const Polynomial& h) {
  if (h.is_zero()) throw Error(ErrorCode::ValidationError, "zero denominator");
  Polynomial d = gcd(g, h);
  return {LaurentApprox::from_polynomial(divmod(g, d).first), LaurentApprox::from_polynomial(divmod(h, d).first)};
}

MeromorphicPair MeromorphicPair::series(LaurentApprox num, LaurentApprox den) {
  if (den.is_zero()) throw Error(ErrorCode::ValidationError, "zero denominator");
  MeromorphicPair out{std::move(num), std::move(den)};
  if (out.is_rational()) return rational(out.numerator(), out.denominator());
  return out;
}

bool MeromorphicPair::is_rational() const {
  return num.exact() && den.exact() && num.is_power_series() && den.is_power_series();
}

Polynomial MeromorphicPair::numerator() const { return exact_polynomial(num); }
Polynomial MeromorphicPair::denominator() const { return exact_polynomial(den); }

LogValue sup_log(const MeromorphicPair& f, const LogValue& rho, const Prime& p) {
  LogValue g = sup_log(f.num, rho, p);
  if (g.is_neg_inf()) return g;
  return g - sup_log(f.den, rho, p);
}

LaurentApprox a_point_series(const MeromorphicPair& f, const Target& a) {
  if (!a) return f.den;
  return sub(f.num, f.den.scale(*a));
}

PiecewiseLinear prox_m(const MeromorphicPair& f, const Target& a, const Prime& p) {
  PiecewiseLinear H = log_norm(f.den, p);
  if (!a) {
    if (f.num.is_zero()) return PiecewiseLinear::constant(Rational(0), H.domain());
    return (log_norm(f.num, p) - H).positive_part();
  }
  LaurentApprox A = a_point_series(f, a);
  if (A.is_zero()) throw Error(ErrorCode::ZeroSeries, "f is identically " + to_string(a));
  return (H - log_norm(A, p)).positive_part();
}

PiecewiseLinear count_N(const MeromorphicPair& f, const Target& a, const Prime& p, const LogValue& rho_min) {
  LaurentApprox A = a_point_series(f, a);
  if (A.is_zero()) throw Error(ErrorCode::ZeroSeries, "f is identically " + to_string(a));
  return counting_N(A, rho_min, p);
}

PiecewiseLinear count_N1(const MeromorphicPair& f, const Target& a, const Prime& p, const LogValue& rho_min) {
  LaurentApprox A = a_point_series(f, a);
  if (A.is_zero()) throw Error(ErrorCode::ZeroSeries, "f is identically " + to_string(a));
  Polynomial r = radical(exact_polynomial(A));
  return counting_N(LaurentApprox::from_polynomial(r), rho_min, p);
}

PiecewiseLinear charT(const MeromorphicPair& f, const Target& a, const Prime& p, const LogValue& rho_min) {
  return prox_m(f, a, p) + count_N(f, a, p, rho_min);
}

FmtCheck fmt_check(const MeromorphicPair& f, const Target& a, const Prime& p) {
  PiecewiseLinear diff = charT(f, a, p) - charT(f, std::nullopt, p);
  bool bounded = diff.asymptotic_slope() == 0;
  return {bounded, max(diff.sup(), (-diff).sup()), diff};
}

MeromorphicPair derivative(const MeromorphicPair& f) {
  MeromorphicPair out = derivative_or_zero(f);
  if (out.num.is_zero()) throw Error(ErrorCode::DerivativeVanishes, "f is constant");
  return out;
}

MeromorphicPair hasse_derivative(const MeromorphicPair& f, unsigned long n) {
  MeromorphicPair out = MeromorphicPair::reduced(f.numerator(), f.denominator());
  Rational fact = 1;
  for (unsigned long i = 1; i <= n; ++i) {
    out = derivative_or_zero(out);
    fact *= i;
  }
  return {out.num.scale(1 / fact), out.den};
}

PiecewiseLinear n_ram(const MeromorphicPair& f, const Prime& p, const LogValue& rho_min) {
  MeromorphicPair fp = derivative(f);
  return count_N(fp, Rational(0), p, rho_min) + Rational(2) * count_N(f, std::nullopt, p, rho_min) -
         count_N(fp, std::nullopt, p, rho_min);
}

SmtReport smt_report(const MeromorphicPair& f, const std::vector<Target>& targets, const Prime& p) {
  if (targets.size() < 3) {
    throw Error(ErrorCode::TooFewTargets, "need at least 3 targets, got " + std::to_string(targets.size()));
  }
  check_targets(targets);
  if (!f.is_rational()) throw Error(ErrorCode::RequiresExact, "SMT report needs an exact rational function");
  Rational q(static_cast<long>(targets.size()));
  PiecewiseLinear T = charT(f, std::nullopt, p);
  PiecewiseLinear sumN = PiecewiseLinear::constant(Rational(0));
  PiecewiseLinear sumN1 = sumN;
  for (const auto& a : targets) {
    sumN = sumN + count_N(f, a, p);
    sumN1 = sumN1 + count_N1(f, a, p);
  }
  SmtReport out{(q - 2) * T - sumN + n_ram(f, p) + identity(), {}, false,
                (q - 1) * T - sumN, false, (q - 2) * T - sumN1 + identity(), false};
  out.sup_S = out.S.sup();
  out.holds = out.S.asymptotic_slope() <= 0;
  out.holds_unramified = out.S_unramified.asymptotic_slope() <= 0;
  out.holds_truncated = out.S_truncated.asymptotic_slope() <= 0;
  return out;
}

AbcReport abc_check(const Polynomial& f, const Polynomial& g, const Polynomial& h, const Prime& p) {
  if (!(f + g == h)) throw Error(ErrorCode::ValidationError, "f + g != h");
  const Polynomial* polys[] = {&f, &g, &h};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (gcd(*polys[i], *polys[j]).degree() > 0) {
        throw Error(ErrorCode::NotCoprime, polys[i]->to_string() + " and " + polys[j]->to_string());
      }
    }
  }
  if (f.is_constant() && g.is_constant() && h.is_constant()) {
    throw Error(ErrorCode::DerivativeVanishes, "all three polynomials are constant");
  }
  std::optional<PiecewiseLinear> lhs;
  for (const auto* x : polys) {
    if (x->is_zero()) continue;
    PiecewiseLinear l = log_norm(LaurentApprox::from_polynomial(*x), p);
    lhs = lhs ? max(*lhs, l) : l;
  }
  Polynomial r = radical(f * g * h);
  PiecewiseLinear rhs = counting_N(LaurentApprox::from_polynomial(r), LogValue::neg_inf(), p) - identity();
  bool holds = (*lhs - rhs).asymptotic_slope() <= 0;
  return {*lhs, rhs, holds};
}

std::vector<Defect> defects(const MeromorphicPair& f, const std::vector<Target>& targets, const Prime& p) {
  check_targets(targets);
  Rational sT = charT(f, std::nullopt, p).asymptotic_slope();
  if (sT == 0) throw Error(ErrorCode::DerivativeVanishes, "constant function has no defects");
  std::vector<Defect> out;
  for (const auto& a : targets) {
    Rational delta = prox_m(f, a, p).asymptotic_slope() / sT;
    Rational theta = 1 - count_N1(f, a, p).asymptotic_slope() / sT;
    out.push_back({a, delta, theta});
  }
  return out;
}

bool totally_ramified(const MeromorphicPair& f, const Target& a) {
  LaurentApprox A = a_point_series(f, a);
  if (A.is_zero()) throw Error(ErrorCode::ZeroSeries, "f is identically " + to_string(a));
  auto parts = squarefree_decomposition(exact_polynomial(A));
  return parts.empty() || parts.front().degree() == 0;
}

std::vector<Target> totally_ramified_values(const MeromorphicPair& f) {
  Polynomial g = f.numerator(), h = f.denominator();
  auto [w, hh] = raw_derivative(f);
  if (w.is_zero()) throw Error(ErrorCode::DerivativeVanishes, "f is constant");
  std::vector<Target> candidates{std::nullopt};
  if (g.degree() == h.degree()) candidates.emplace_back(g.leading() / h.leading());
  if (g.degree() < h.degree()) candidates.emplace_back(Rational(0));
  for (const auto& v : rational_critical_values(g, h)) candidates.emplace_back(v);

  std::vector<Target> out;
  std::set<Rational> seen;
  for (const auto& a : candidates) {
    if (a && !seen.insert(*a).second) continue;
    if (totally_ramified(f, a)) out.push_back(a);
  }
  return out;
}

std::vector<Rational> rational_critical_values(const Polynomial& g, const Polynomial& h) {
  Polynomial w = h * g.derivative() - g * h.derivative();
  if (w.is_zero()) return {};
  // Finite critical points; roots shared with h are multiple poles.
  Polynomial ws = radical(w);
  ws = divmod(ws, gcd(ws, h)).first;
  long n = ws.degree();
  if (n <= 0) return {};
  Polynomial r = divmod(g * inverse_mod(h, ws), ws).second;

  // Multiplication by r on Q[z]/(ws); its eigenvalues are g(c)/h(c) over the roots c.
  Matrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (long j = 0; j < n; ++j) {
    Polynomial col = divmod(r * Polynomial::monomial(Rational(1), j), ws).second;
    for (long i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.coeff(i);
  }
  std::vector<Rational> out;
  for (const auto& root : rational_roots(characteristic_polynomial(m))) out.push_back(root.root);
  return out;
}

bool shares_value(const MeromorphicPair& f, const MeromorphicPair& g, const Target& a) {
  Polynomial A = exact_polynomial(a_point_series(f, a));
  Polynomial B = exact_polynomial(a_point_series(g, a));
  if (A.is_zero() || B.is_zero()) return A.is_zero() && B.is_zero();
  return radical(A) == radical(B);
}

LogValue spherical_sup(const MeromorphicPair& f, const Rational& rho, const Prime& p) {
  MeromorphicPair fp = derivative_or_zero(f);
  if (fp.num.is_zero()) return LogValue::neg_inf();
  return sup_log(fp, LogValue(rho), p) - max(LogValue(0), sup_log(f, LogValue(rho), p));
}

}  // namespace nonarch
