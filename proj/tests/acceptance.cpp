// Acceptance checks: one PASS/FAIL line per criterion, exact comparisons only.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "nonarch/corpus.hpp"
#include "nonarch/polygon.hpp"
#include "nonarch/schnirelman.hpp"
#include "nonarch/verify.hpp"
#include "nonarch/weierstrass.hpp"

using namespace nonarch;

namespace {

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first = what;
  }
};

Polynomial P(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }
LogValue L(const Rational& x) { return LogValue(x); }
const Target inf = std::nullopt;

bool suite_ok(const std::string& name, Tally& t) {
  for (const auto& r : verify(name, 20240917)) {
    t.expect(r.ok(), name + " suite: " + (r.failures.empty() ? std::string() : r.failures.front()));
    t.checks += r.instances - 1;
  }
  return true;
}

// 20 rational sample points spread around the critical radii.
std::vector<Rational> samples(const std::vector<CriticalRadius>& radii, Rng& rng) {
  std::vector<Rational> out;
  for (const auto& r : radii) out.push_back(r.rho);
  while (out.size() < 20) {
    Rational x(uniform(rng, -40, 40), uniform(rng, 1, 6));
    x.canonicalize();
    out.push_back(x);
  }
  return out;
}

void poisson_jensen(const LaurentApprox& f, const Prime& p, Rng& rng, Tally& t) {
  auto radii = critical_radii(f, LogInterval::everything(), p);
  auto pts = samples(radii, rng);
  long m0 = f.min_exponent();
  LogValue lead = abs_log(f.coeff(m0), p);
  PiecewiseLinear N = counting_N(f, LogValue::neg_inf(), p);
  Rational rmin = *std::min_element(pts.begin(), pts.end());
  Indices at_min = indices(f, L(rmin), p);
  PiecewiseLinear Na = counting_N(f, L(rmin), p);
  LogValue lk = abs_log(f.coeff(at_min.k), p);
  for (const auto& s : pts) {
    LogValue sl = sup_log(f, L(s), p);
    t.expect(L(N(s)) + lead == sl, "full form at " + to_string(s));
    t.expect(L(Rational(Na(s) + at_min.k * s)) + lk == sl, "annulus form at " + to_string(s));
  }
}

bool criterion1(Tally& t) {
  Rng rng(1);
  poisson_jensen(LaurentApprox::exact_from({{0, -5}, {2, 1}}), Prime(5), rng, t);
  for (int i = 0; i < 200; ++i) {
    const Prime& p = small_primes()[static_cast<std::size_t>(i) % 4];
    poisson_jensen(LaurentApprox::from_polynomial(random_factored(rng, p, 6).poly), p, rng, t);
  }
  return t.failures == 0;
}

bool criterion2(Tally& t) {
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const Prime& p = small_primes()[static_cast<std::size_t>(i) % 4];
    FactoredPolynomial F = random_factored(rng, p, 6);
    LaurentApprox f = LaurentApprox::from_polynomial(F.poly);
    std::set<Rational> breaks;
    for (const auto& r : critical_radii(f, LogInterval::everything(), p)) breaks.insert(r.rho);
    std::vector<LogValue> ends{LogValue::neg_inf()};
    for (const auto& b : breaks) ends.emplace_back(b);
    for (std::size_t a = 0; a < ends.size(); ++a) {
      for (std::size_t b = a; b < ends.size(); ++b) {
        long expected = ends[a].is_neg_inf() ? F.m0 : 0;
        for (const auto& [root, m] : F.roots) {
          LogValue x = abs_log(root, p);
          if (ends[a] <= x && x <= ends[b]) expected += m;
        }
        t.expect(count_zeros(f, ends[a], ends[b], p) == expected, "annulus count");
      }
    }
  }
  return t.failures == 0;
}

bool criterion3(Tally& t) {
  Prime p(5);
  DivisionResult r = divide(LaurentApprox::exact_from({{0, 5}, {3, 1}}),
                            DominantPolynomial::certify(P({-5, 0, 1}), Rational(-1, 2), p), p);
  t.expect(r.q == LaurentApprox::monomial(1, 1) && r.R == P({5, 5}), "z^3 + 5 by z^2 - 5");
  suite_ok("division", t);
  return t.failures == 0;
}

bool criterion4(Tally& t) {
  Prime p(5);
  LaurentApprox f = LaurentApprox::exact_from({{0, 5}, {1, 1}, {2, 1}});
  PreparationResult res = prepare(f, 0, Valuation(3), p);
  t.expect(res.P.coeff(0) == 1 && reduce(res.P.coeff(1), p, 3).residue() == 56, "P = 1 + 56z mod 125");
  // Hensel oracle: 1 - z/z0 with z0 the unit root of z^2 + z + 5 mod 125.
  long z0 = 0;
  for (long z = 1; z < 125; ++z) {
    if (z % 5 != 0 && (z * z + z + 5) % 125 == 0) z0 = z;
  }
  t.expect(reduce(res.P.coeff(1) * z0 + 1, p, 3).residue() == 0, "Hensel root");
  LaurentApprox residual = sub(f, mul(LaurentApprox::from_polynomial(res.P), res.u));
  for (const auto& [n, c] : residual.coefficients()) {
    t.expect(vp(c, p) >= Valuation(3), "residual valuation");
  }
  for (std::size_t i = 0; i < res.trace.size(); ++i) {
    t.expect(res.trace[i] <= Rational(static_cast<long>(i) + 1) * res.delta, "geometric contraction");
  }
  suite_ok("preparation", t);
  return t.failures == 0;
}

bool criterion5(Tally& t) {
  Prime p(5);
  MeromorphicPair f = MeromorphicPair::rational(P({0, 1}), P({1, -1, 1}));
  SmtReport r = smt_report(f, {Rational(0), Rational(1), inf}, p);
  for (long k = 0; k <= 40; ++k) t.expect(r.S(Rational(k, 4)) == 0, "S = 0 on rho >= 0");
  t.expect(r.S.slope_right_of(0) == 0 && r.S.asymptotic_slope() == 0, "S flat beyond 0");
  for (const auto& g : rational_corpus()) {
    SmtReport s = smt_report(g, {Rational(0), Rational(1), inf}, p);
    t.expect(s.S.asymptotic_slope() <= 0 && s.sup_S.is_finite(), "corpus slack");
  }
  AbcReport abc = abc_check(P({0, 0, 1}), P({1, 0, -1}), P({1}), p);
  t.expect(abc.lhs == abc.rhs && abc.holds, "abc equality case");
  t.expect(abc.lhs(3) == 6, "abc lhs = 2 rho");
  return t.failures == 0;
}

bool criterion6(Tally& t) {
  Prime p(5);
  std::vector<Target> targets{Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 2)};
  long pairs = 0;
  for (const auto& f : rational_corpus()) {
    for (const auto& a : targets) {
      PiecewiseLinear d = charT(f, a, p) - charT(f, inf, p);
      t.expect(d.asymptotic_slope() == 0 && d.sup().is_finite(), "T(f,a) - T(f,inf) bounded");
      ++pairs;
    }
  }
  t.expect(pairs >= 100, "at least 100 pairs");
  return t.failures == 0;
}

bool criterion7(Tally& t) {
  MeromorphicPair f = MeromorphicPair::rational(P({-1, 0, 1}).pow(2), P({1, 0, 1}).pow(2));
  auto values = totally_ramified_values(f);
  std::set<std::string> got;
  for (const auto& a : values) got.insert(to_string(a));
  t.expect(got == std::set<std::string>{"0", "1", "inf"}, "example reports exactly 0, 1, inf");
  std::vector<MeromorphicPair> search = rational_corpus();
  Rng rng(7);
  while (search.size() < 230) {
    std::vector<Rational> g(static_cast<std::size_t>(uniform(rng, 1, 5))), h(static_cast<std::size_t>(uniform(rng, 1, 5)));
    for (auto& x : g) x = uniform(rng, -4, 4);
    for (auto& x : h) x = uniform(rng, -4, 4);
    Polynomial G(g), H(h);
    if (H.is_zero() || G.is_zero()) continue;
    MeromorphicPair r = MeromorphicPair::reduced(G, H);
    if ((r.denominator() * r.numerator().derivative() - r.numerator() * r.denominator().derivative()).is_zero()) {
      continue;
    }
    search.push_back(r);
  }
  for (const auto& g : search) {
    auto v = totally_ramified_values(g);
    t.expect(v.size() <= 3, "at most three totally ramified values");
    for (const auto& a : v) t.expect(totally_ramified(g, a), "reported value is totally ramified");
  }
  return t.failures == 0;
}

bool criterion8(Tally& t) {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const Prime& p = small_primes()[static_cast<std::size_t>(i) % 4];
    unsigned long n = static_cast<unsigned long>(uniform(rng, 1, 3));
    std::function<LogValue(long)> lhs, norm;
    if (i % 2 == 0) {
      LaurentApprox f = random_laurent(rng, p, -3, 6);
      LaurentApprox d = hasse_derivative(f, n);
      for (long r = -5; r < 5; ++r) {
        LogValue a = sup_log(d, L(r), p);
        if (!a.is_neg_inf()) t.expect(a - sup_log(f, L(r), p) <= L(-static_cast<long>(n) * r), "series lemma");
      }
    } else {
      MeromorphicPair f = MeromorphicPair::reduced(random_laurent(rng, p, 0, 4).to_polynomial(),
                                                   random_laurent(rng, p, 0, 3).to_polynomial());
      MeromorphicPair d = hasse_derivative(f, n);
      for (long r = -5; r < 5; ++r) {
        LogValue a = sup_log(d, L(r), p);
        if (!a.is_neg_inf()) t.expect(a - sup_log(f, L(r), p) <= L(-static_cast<long>(n) * r), "pair lemma");
      }
    }
  }
  return t.failures == 0;
}

bool criterion9(Tally& t) {
  Rng rng(9);
  long done = 0;
  while (done < 50) {
    const Prime& p = small_primes()[static_cast<std::size_t>(done) % 4];
    SplitRational R = random_split_rational(rng, p);
    Rational a = done % 2 == 0 ? Rational(0) : random_rational(rng, p);
    Rational rho(uniform(rng, -4, 4));
    bool on_circle = false;
    for (const auto& [b, m] : R.poles) on_circle = on_circle || abs_log(b - a, p) == L(rho);
    if (on_circle) continue;
    Rational res = residue_sum(R.num, R.den, a, rho, p);
    CertifiedValue c = circle_residue(R.num, R.den, a, rho, 40, p);
    t.expect(c.floor >= Valuation(10) && vp(res - c.value, p) >= c.floor, "residue sum vs circle integral");
    ++done;
  }
  Prime p13(13);
  LaurentApprox f = LaurentApprox::exact_from({{-1, 1}, {3, 1}});
  SchnirelmanSum s6 = schnirelman_sum(f, 0, 1, 6, 3, p13);
  t.expect(!s6.n_too_small && s6.shift == 0 && s6.value.residue() == 1, "n = 6 closed form mod 13^3");
  t.expect(integral_series(f, 0, 0, p13) == 1, "integral of z^3 + 1/z");
  SchnirelmanSum s4 = schnirelman_sum(f, 0, 1, 4, 3, p13);
  t.expect(s4.n_too_small && s4.value.residue() % 13 != 1, "n = 4 aliasing detected");
  for (unsigned long n : {4UL, 6UL, 12UL}) {
    auto xi = teichmuller_roots(p13, n, 5);
    for (unsigned long j = 1; j < n; ++j) {
      PadicResidueInt sum(p13, 5, Integer(0));
      for (const auto& x : xi) sum = sum + x.pow(j);
      t.expect(sum.residue() == 0, "power sum mod 13^5");
    }
  }
  return t.failures == 0;
}

bool criterion10(Tally& t) {
  suite_ok("hasse", t);
  return t.failures == 0;
}

bool criterion11(Tally& t) {
  MeromorphicPair f = MeromorphicPair::rational(P({0, 1}), P({1, -1, 1}));
  MeromorphicPair g = MeromorphicPair::rational(P({0, 0, 1}), P({1, -1, 1}));
  for (const Target& a : {Target(Rational(0)), Target(Rational(1)), inf}) t.expect(shares_value(f, g, a), "shared");
  std::set<Rational> candidates;
  for (long num = -6; num <= 6 && candidates.size() < 50; ++num) {
    for (long den = 1; den <= 9 && candidates.size() < 50; ++den) {
      Rational a(num, den);
      a.canonicalize();
      if (a != 0 && a != 1) candidates.insert(a);
    }
  }
  t.expect(candidates.size() == 50, "50 candidates");
  for (const auto& a : candidates) t.expect(!shares_value(f, g, a), "no fourth shared value");
  return t.failures == 0;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(Tally&)>>> criteria{
      {"Poisson-Jensen identity", criterion1},     {"zero counting", criterion2},
      {"division contracts", criterion3},          {"Weierstrass preparation", criterion4},
      {"second main theorem and abc", criterion5}, {"first main theorem", criterion6},
      {"totally ramified values", criterion7},     {"logarithmic derivative lemma", criterion8},
      {"residues and Schnirelman sums", criterion9}, {"Hasse calculus", criterion10},
      {"value sharing", criterion11}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    bool ok = false;
    try {
      ok = criteria[i].second(t);
    } catch (const std::exception& e) {
      t.first = e.what();
    }
    std::printf("%s %2zu %s (%ld checks)", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), t.checks);
    if (!ok) std::printf(": %s", t.first.c_str());
    std::printf("\n");
    failed += ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
