#include "nonarch/corpus.hpp"

#include <algorithm>
#include <set>

namespace nonarch {

namespace {

Rational p_power(const Prime& p, long e) {
  Rational out(p.power(static_cast<unsigned long>(std::labs(e))));
  return e >= 0 ? out : Rational(1 / out);
}

long prime_to(Rng& rng, const Prime& p, long lo, long hi) {
  for (;;) {
    long v = uniform(rng, lo, hi);
    if (v != 0 && v % static_cast<long>(p.value()) != 0) return v;
  }
}

Polynomial poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(v);
}

}  // namespace

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_with_valuation(Rng& rng, const Prime& p, long e) {
  Rational q(prime_to(rng, p, -9, 9), prime_to(rng, p, 1, 9));
  q.canonicalize();
  return q * p_power(p, e);
}

Rational random_rational(Rng& rng, const Prime& p) { return random_with_valuation(rng, p, uniform(rng, -3, 3)); }

FactoredPolynomial random_factored(Rng& rng, const Prime& p, long max_degree) {
  FactoredPolynomial out;
  out.c = random_rational(rng, p);
  out.m0 = uniform(rng, 0, 1);
  long budget = uniform(rng, 1, std::max(1L, max_degree)) - out.m0;
  std::set<Rational> seen;
  while (budget > 0) {
    Rational r = random_rational(rng, p);
    if (!seen.insert(r).second) continue;
    long m = uniform(rng, 1, std::min(2L, budget));
    out.roots.emplace_back(r, m);
    budget -= m;
  }
  std::vector<std::pair<Rational, long>> all = out.roots;
  if (out.m0 > 0) all.emplace_back(Rational(0), out.m0);
  out.poly = Polynomial::from_roots(out.c, all);
  return out;
}

LaurentApprox random_laurent(Rng& rng, const Prime& p, long lo, long hi) {
  LaurentApprox::Coefficients c;
  for (long n = lo; n <= hi; ++n) {
    if (uniform(rng, 0, 3) == 0) continue;
    c[n] = random_rational(rng, p);
  }
  if (c.empty()) c[lo] = random_rational(rng, p);
  return LaurentApprox::exact_from(std::move(c));
}

Polynomial random_dominant(Rng& rng, const Prime& p, long d, const Rational& rho, bool extremal) {
  long ed = uniform(rng, -1, 1);
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  c[static_cast<std::size_t>(d)] = random_with_valuation(rng, p, ed);
  for (long n = 0; n < d; ++n) {
    // v(c_n) >= v(c_d) - (d - n) rho keeps z^d dominant at rho.
    long floor_v = ceil(Rational(ed - (d - n) * rho)).get_si();
    if (n == 0 && extremal) {
      c[0] = random_with_valuation(rng, p, floor_v);
    } else if (uniform(rng, 0, 2) > 0) {
      c[static_cast<std::size_t>(n)] = random_with_valuation(rng, p, floor_v + uniform(rng, 0, 2));
    }
  }
  return Polynomial(c);
}

SplitRational random_split_rational(Rng& rng, const Prime& p) {
  for (;;) {
    SplitRational out;
    std::set<long> used;
    long count = uniform(rng, 1, 3);
    while (static_cast<long>(out.poles.size()) < count) {
      long e = uniform(rng, -2, 2);
      if (!used.insert(e).second) continue;
      out.poles.emplace_back(uniform(rng, 0, 4) == 0 ? Rational(0) : random_with_valuation(rng, p, e),
                             uniform(rng, 1, 2));
    }
    out.den = Polynomial::from_roots(Rational(1), out.poles);
    std::vector<Rational> num(static_cast<std::size_t>(uniform(rng, 1, out.den.degree() + 1)));
    for (auto& x : num) x = uniform(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng, p);
    out.num = Polynomial(num);
    if (out.num.is_zero() || gcd(out.num, out.den).degree() > 0) continue;
    std::set<Rational> roots;
    for (const auto& [b, m] : out.poles) roots.insert(b);
    if (roots.size() != out.poles.size()) continue;
    return out;
  }
}

std::vector<MeromorphicPair> rational_corpus() {
  std::vector<MeromorphicPair> out;
  auto add = [&](const Polynomial& g, const Polynomial& h) { out.push_back(MeromorphicPair::rational(g, h)); };
  Polynomial one = poly({1});
  add(poly({0, 1}), poly({1, -1, 1}));
  add(poly({0, 0, 1}), poly({1, -1, 1}));
  add(poly({1, 0, -1}).pow(2), poly({1, 0, 1}).pow(2));
  add(poly({0, 1}), one);
  add(poly({0, 0, 1}), one);
  add(poly({0, -1, 0, 1}), one);
  add(one, poly({0, 1}));
  add(poly({1, 1}), poly({-1, 1}));
  add(one, poly({0, -5, 1}));
  add(poly({-5, 0, 1}), one);
  add(poly({5, 1, 1}), one);
  add(poly({8, -6, 1}), one);
  add(poly({-1, 5}), poly({5, 1}));
  add(poly({0, 0, 0, 1}), poly({-1, 1}));
  add(poly({1, 1, 1}), poly({0, -1, 1}));

  Rng rng(20240917);
  Prime p(5);
  while (out.size() < 30) {
    long dg = uniform(rng, 0, 3), dh = uniform(rng, 0, 3);
    if (dg == 0 && dh == 0) continue;
    std::vector<Rational> g(static_cast<std::size_t>(dg) + 1), h(static_cast<std::size_t>(dh) + 1);
    for (auto& x : g) x = Rational(uniform(rng, -6, 6));
    for (auto& x : h) x = Rational(uniform(rng, -6, 6));
    g.back() = Rational(prime_to(rng, Prime(7), -6, 6));
    h.back() = Rational(prime_to(rng, Prime(7), -6, 6));
    Polynomial G(g), H(h);
    if (gcd(G, H).degree() > 0 || (h.size() == 1 && G.is_constant())) continue;
    if ((H * G.derivative() - G * H.derivative()).is_zero()) continue;
    add(G, H);
  }
  return out;
}

const std::vector<Prime>& small_primes() {
  static const std::vector<Prime> primes{Prime(2), Prime(3), Prime(5), Prime(7)};
  return primes;
}

}  // namespace nonarch
