#include "nonarch/verify.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "nonarch/corpus.hpp"
#include "nonarch/schnirelman.hpp"

namespace nonarch {

namespace {

using Check = std::optional<std::string>;

const Check kPass = std::nullopt;

Check fail(const std::string& what) { return what; }

// Runs `count` instances, catching library errors as failures.
SuiteResult run_instances(const std::string& name, long count, const std::function<Check(long)>& instance) {
  SuiteResult out{name, count, 0, {}};
  for (long i = 0; i < count; ++i) {
    Check c;
    try {
      c = instance(i);
    } catch (const std::exception& e) {
      c = std::string(e.what());
    }
    if (!c) {
      ++out.passed;
    } else if (out.failures.size() < 5) {
      out.failures.push_back("instance " + std::to_string(i) + ": " + *c);
    }
  }
  return out;
}

Valuation min_valuation(const LaurentApprox& f, const Prime& p) {
  Valuation best = Valuation::pos_inf();
  for (const auto& [n, c] : f.coefficients()) best = min(best, vp(c, p));
  return best;
}

// Critical radii expected from the roots of a factored polynomial.
std::vector<CriticalRadius> radii_from_roots(const FactoredPolynomial& f, const Prime& p) {
  std::map<Rational, long> by_rho;
  for (const auto& [r, m] : f.roots) by_rho[abs_log(r, p).value()] += m;
  std::vector<CriticalRadius> out;
  for (const auto& [rho, m] : by_rho) out.push_back({rho, m});
  return out;
}

long roots_in(const FactoredPolynomial& f, const LogValue& lo, const LogValue& hi, const Prime& p) {
  long n = lo.is_neg_inf() ? f.m0 : 0;
  for (const auto& [r, m] : f.roots) {
    LogValue x = abs_log(r, p);
    if (lo <= x && x <= hi) n += m;
  }
  return n;
}

SuiteResult polygon_suite(std::uint64_t seed) {
  Rng rng(seed);
  return run_instances("polygon", 100, [&](long i) -> Check {
    const Prime& p = small_primes()[static_cast<std::size_t>(i) % small_primes().size()];
    FactoredPolynomial F = random_factored(rng, p);
    LaurentApprox f = LaurentApprox::from_polynomial(F.poly);
    auto expected = radii_from_roots(F, p);
    if (critical_radii(f, LogInterval::everything(), p) != expected) return fail("critical radii differ from roots");

    std::vector<Rational> samples;
    for (const auto& r : expected) {
      samples.push_back(r.rho);
      samples.push_back(r.rho + Rational(1, 3));
      samples.push_back(r.rho - Rational(1, 2));
    }
    samples.push_back(Rational(0));
    std::vector<LogValue> ends{LogValue::neg_inf()};
    for (const auto& s : samples) ends.emplace_back(s);
    for (const auto& a : ends) {
      for (const auto& b : ends) {
        if (b < a) continue;
        if (count_zeros(f, a, b, p) != roots_in(F, a, b, p)) return fail("count_zeros on [" + to_string(a) + ", " +
                                                                          to_string(b) + "]");
      }
    }

    PiecewiseLinear N = counting_N(f, LogValue::neg_inf(), p);
    LogValue lead = abs_log(F.poly.coeff(F.m0), p);
    const Rational& rmin = samples.front();
    PiecewiseLinear Na = counting_N(f, LogValue(rmin), p);
    Indices at_min = indices(f, LogValue(rmin), p);
    LogValue lk = abs_log(F.poly.coeff(at_min.k), p);
    for (const auto& s : samples) {
      LogValue sl = sup_log(f, LogValue(s), p);
      if (LogValue(N(s)) + lead != sl) return fail("Poisson-Jensen at " + to_string(s));
      if (s >= rmin && LogValue(Rational(Na(s) + at_min.k * s)) + lk != sl) return fail("annulus Poisson-Jensen");
      if (sup_log_function(f, p).slope_right_of(s) != Rational(indices(f, LogValue(s), p).K)) {
        return fail("slope differs from K at " + to_string(s));
      }
    }

    LaurentApprox g = LaurentApprox::from_polynomial(random_factored(rng, p).poly);
    LaurentApprox fg = mul(f, g);
    for (const auto& s : samples) {
      Indices a = indices(f, LogValue(s), p), b = indices(g, LogValue(s), p), c = indices(fg, LogValue(s), p);
      if (c.k != a.k + b.k || c.K != a.K + b.K) return fail("index additivity at " + to_string(s));
    }
    return kPass;
  });
}

SuiteResult division_suite(std::uint64_t seed) {
  Rng rng(seed);
  return run_instances("division", 100, [&](long i) -> Check {
    const Prime& p = small_primes()[static_cast<std::size_t>(i) % small_primes().size()];
    bool extremal = i % 2 == 1;
    long d = uniform(rng, 1, 3);
    Rational rho(uniform(rng, -4, 4), 2);
    rho.canonicalize();
    if (extremal && Rational(d * rho).get_den() != 1) rho = Rational(uniform(rng, -2, 2));
    Polynomial B = random_dominant(rng, p, d, rho, extremal);
    DominantPolynomial P = DominantPolynomial::certify(B, rho, p);
    if (extremal && !P.extremal) return fail("constructed P is not extremal");
    LaurentApprox f = random_laurent(rng, p, P.extremal ? -3 : 0, 6);
    DivisionResult res = divide(f, P, p);
    LaurentApprox PB = LaurentApprox::from_polynomial(B);
    if (!(add(mul(PB, res.q), LaurentApprox::from_polynomial(res.R)) == f)) return fail("f != P q + R");
    if (res.R.degree() >= d) return fail("deg R >= deg P");
    LogValue r(rho);
    LogValue lf = sup_log(f, r, p);
    if (sup_log(LaurentApprox::from_polynomial(res.R), r, p) > lf) return fail("|R| > |f|");
    if (sup_log(res.q, r, p) > lf - sup_log(PB, r, p)) return fail("|q| > |f| / |P|");
    return kPass;
  });
}

Check check_preparation(const LaurentApprox& f, const Rational& rho, const Valuation& target, const Prime& p) {
  PreparationResult res = prepare(f, rho, target, p);
  LogValue r(rho);
  Indices ix = indices(f, r, p);
  if (res.d != ix.K - ix.k || res.P.degree() != res.d) return fail("deg P != K - k");
  if (res.P.coeff(0) != 1) return fail("P(0) != 1");
  LaurentApprox P = LaurentApprox::from_polynomial(res.P);
  LaurentApprox Pu = mul(P, res.u);
  if (indices(Pu, r, p) != ix) return fail("indices(P u) != indices(f)");
  if (count_zeros(P, r, r, p) != res.d) return fail("P has zeros off the circle");
  Indices iu = indices(res.u, r, p);
  if (iu.k != iu.K) return fail("u is not a unit");
  if (res.floor < target) return fail("floor below target");
  if (min_valuation(sub(f, Pu), p) < res.floor) return fail("residual exceeds the reported floor");
  for (std::size_t j = 0; j < res.trace.size(); ++j) {
    if (res.trace[j] > Rational(static_cast<long>(j) + 1) * res.delta) return fail("no geometric contraction");
  }
  if (static_cast<long>(res.trace.size()) > res.iteration_bound) return fail("iteration bound exceeded");
  return kPass;
}

SuiteResult preparation_suite(std::uint64_t seed) {
  Rng rng(seed);
  return run_instances("preparation", 51, [&](long i) -> Check {
    if (i == 50) {
      Prime p(5);
      LaurentApprox f = LaurentApprox::exact_from({{0, Rational(5)}, {1, Rational(1)}, {2, Rational(1)}});
      PreparationResult res = prepare(f, Rational(0), Valuation(3), p);
      if (!(reduce(res.P.coeff(1), p, 3) == PadicResidueInt(p, 3, Integer(56)))) return fail("P != 1 + 56z mod 125");
      return check_preparation(f, Rational(0), Valuation(3), p);
    }
    const Prime& p = small_primes()[static_cast<std::size_t>(i) % small_primes().size()];
    FactoredPolynomial F = random_factored(rng, p, 5);
    LaurentApprox f = LaurentApprox::from_polynomial(F.poly);
    auto radii = critical_radii(f, LogInterval::everything(), p);
    Rational rho = radii.empty() || uniform(rng, 0, 3) == 0
                       ? Rational(uniform(rng, -3, 3))
                       : radii[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(radii.size()) - 1))].rho;
    Valuation target = min_valuation(f, p) + Valuation(uniform(rng, 2, 6));
    return check_preparation(f, rho, target, p);
  });
}

SuiteResult hasse_suite(std::uint64_t seed) {
  Rng rng(seed);
  return run_instances("hasse", 102, [&](long i) -> Check {
    if (i == 100) {
      for (unsigned long pv : {2UL, 3UL, 5UL}) {
        Prime p(pv);
        for (unsigned long s = 1; s <= 2; ++s) {
          Integer ps = p.power(s);
          for (long j = 1; j <= 20; ++j) {
            Integer b = binomial(Integer(j) * ps, ps.get_ui());
            Integer diff = b - j;
            if (mpz_divisible_ui_p(diff.get_mpz_t(), pv) == 0) return fail("Lucas congruence");
          }
        }
      }
      return kPass;
    }
    if (i == 101) {
      for (long l = -6; l <= 6; ++l) {
        for (long m = -6; m <= 6; ++m) {
          for (unsigned long k = 0; k <= 8; ++k) {
            Integer s = 0;
            for (unsigned long a = 0; a <= k; ++a) s += binomial(Integer(l), a) * binomial(Integer(m), k - a);
            if (s != binomial(Integer(l + m), k)) return fail("Vandermonde");
          }
        }
      }
      return kPass;
    }
    const Prime& p = small_primes()[static_cast<std::size_t>(i) % small_primes().size()];
    LaurentApprox f = random_laurent(rng, p, -3, 4);
    LaurentApprox g = random_laurent(rng, p, -3, 4);
    unsigned long k = static_cast<unsigned long>(uniform(rng, 0, 4));
    if (!(hasse_derivative(add(f, g), k) == add(hasse_derivative(f, k), hasse_derivative(g, k)))) {
      return fail("additivity");
    }
    LaurentApprox leibniz;
    for (unsigned long a = 0; a <= k; ++a) leibniz = add(leibniz, mul(hasse_derivative(f, a), hasse_derivative(g, k - a)));
    if (!(hasse_derivative(mul(f, g), k) == leibniz)) return fail("Leibniz rule");
    unsigned long a = static_cast<unsigned long>(uniform(rng, 0, 3)), b = static_cast<unsigned long>(uniform(rng, 0, 3));
    LaurentApprox lhs = hasse_derivative(hasse_derivative(f, b), a);
    LaurentApprox rhs = hasse_derivative(f, a + b).scale(Rational(binomial(Integer(a + b), b)));
    if (!(lhs == rhs)) return fail("composition rule");
    for (long r = -2; r <= 2; ++r) {
      LogValue rho(r);
      if (sup_log(hasse_derivative(f, k), rho, p) > sup_log(f, rho, p) - LogValue(Rational(static_cast<long>(k) * r))) {
        return fail("derivative estimate at rho = " + std::to_string(r));
      }
    }
    return kPass;
  });
}

SuiteResult nevanlinna_suite(std::uint64_t) {
  auto corpus = rational_corpus();
  Prime p(5);
  std::vector<Target> finite{Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 2)};
  return run_instances("nevanlinna", static_cast<long>(corpus.size()), [&](long i) -> Check {
    const MeromorphicPair& f = corpus[static_cast<std::size_t>(i)];
    for (const auto& a : finite) {
      FmtCheck c = fmt_check(f, a, p);
      if (!c.bounded || !c.bound.is_finite()) return fail("FMT unbounded at a = " + to_string(a));
    }
    SmtReport s = smt_report(f, {Rational(0), Rational(1), std::nullopt}, p);
    if (!s.holds || !s.sup_S.is_finite()) return fail("SMT slack not bounded");
    if (!s.holds_unramified || !s.holds_truncated) return fail("SMT variant fails");
    std::vector<Target> all = finite;
    all.emplace_back(std::nullopt);
    long positive = 0;
    Rational total = 0;
    for (const auto& d : defects(f, all, p)) {
      if (d.delta > 0) ++positive;
      total += d.delta;
    }
    if (positive > 1) return fail("more than one positive defect");
    if (total > 1) return fail("sum of defects exceeds 1");
    if (totally_ramified_values(f).size() > 3) return fail("four totally ramified values");
    for (unsigned long n = 1; n <= 3; ++n) {
      MeromorphicPair dn = hasse_derivative(f, n);
      for (long r = -3; r <= 3; ++r) {
        LogValue rho(r);
        LogValue lhs = sup_log(dn, rho, p);
        if (lhs.is_neg_inf()) continue;
        if (lhs - sup_log(f, rho, p) > LogValue(Rational(-static_cast<long>(n) * r))) {
          return fail("logarithmic derivative lemma, n = " + std::to_string(n));
        }
      }
    }
    return kPass;
  });
}

SuiteResult schnirelman_suite(std::uint64_t seed) {
  Rng rng(seed);
  return run_instances("schnirelman", 53, [&](long i) -> Check {
    if (i == 50) {
      Prime p(13);
      LaurentApprox f = LaurentApprox::exact_from({{3, Rational(1)}, {-1, Rational(1)}});
      SchnirelmanSum s6 = schnirelman_sum(f, Rational(0), Rational(1), 6, 3, p);
      if (s6.n_too_small || s6.shift != 0 || !(s6.value == PadicResidueInt(p, 3, Integer(1)))) {
        return fail("n = 6 sum");
      }
      SchnirelmanSum s4 = schnirelman_sum(f, Rational(0), Rational(1), 4, 3, p);
      if (!s4.n_too_small || !(s4.value.reduce_to(1) == PadicResidueInt(p, 1, Integer(2)))) return fail("n = 4 sum");
      return kPass;
    }
    if (i == 51) {
      Prime p(13);
      for (unsigned long n : {4UL, 6UL, 12UL}) {
        auto xi = teichmuller_roots(p, n, 5);
        for (long j = 1; j < static_cast<long>(n); ++j) {
          PadicResidueInt s(p, 5, Integer(0));
          for (const auto& x : xi) s = s + x.pow(static_cast<unsigned long>(j));
          if (!(s == PadicResidueInt(p, 5, Integer(0)))) return fail("power sum");
        }
      }
      return kPass;
    }
    if (i == 52) {
      Prime p(13);
      LaurentApprox one = LaurentApprox::constant(1);
      if (!(schnirelman_sum(one, Rational(0), Rational(1), 6, 3, p).value == PadicResidueInt(p, 3, Integer(0)))) {
        return fail("integral of 1");
      }
      return kPass;
    }
    const Prime& p = small_primes()[static_cast<std::size_t>(i) % small_primes().size()];
    SplitRational R = random_split_rational(rng, p);
    RationalFunctionSplit split = partial_fractions(R.num, R.den);
    Polynomial rebuilt = split.analytic_part * R.den;
    for (const auto& pole : split.poles) {
      for (long j = 1; j <= pole.order; ++j) {
        Polynomial lin{Rational(-pole.b), Rational(1)};
        Polynomial cof = divmod(R.den, lin.pow(static_cast<unsigned long>(j))).first;
        rebuilt = rebuilt + pole.principal[static_cast<std::size_t>(j - 1)] * cof;
      }
    }
    if (!(rebuilt == R.num)) return fail("partial fractions do not reassemble");

    Rational a = uniform(rng, 0, 1) == 0 ? Rational(0) : random_rational(rng, p);
    std::set<LogValue> blocked;
    for (const auto& [b, m] : R.poles) blocked.insert(abs_log(b - a, p));
    Rational rho;
    do {
      rho = Rational(uniform(rng, -4, 4));
    } while (blocked.count(LogValue(rho)) > 0);
    Rational res = residue_sum(R.num, R.den, a, rho, p);
    CertifiedValue circ = circle_residue(R.num, R.den, a, rho, 40, p);
    if (circ.floor < Valuation(10)) return fail("circle expansion floor too low");
    if (vp(res - circ.value, p) < circ.floor) return fail("residue sum differs from circle expansion");
    return kPass;
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"polygon", "division", "preparation",
                                              "hasse",   "nevanlinna", "schnirelman"};
  return names;
}

std::vector<SuiteResult> verify(const std::string& suite, std::uint64_t seed) {
  static const std::map<std::string, std::function<SuiteResult(std::uint64_t)>> suites{
      {"polygon", polygon_suite}, {"division", division_suite},     {"preparation", preparation_suite},
      {"hasse", hasse_suite},     {"nevanlinna", nevanlinna_suite}, {"schnirelman", schnirelman_suite}};
  std::vector<SuiteResult> out;
  if (suite == "all") {
    for (const auto& name : suite_names()) out.push_back(suites.at(name)(seed));
    return out;
  }
  auto it = suites.find(suite);
  if (it == suites.end()) throw Error(ErrorCode::UnknownSuite, "no suite named '" + suite + "'");
  out.push_back(it->second(seed));
  return out;
}

}  // namespace nonarch
