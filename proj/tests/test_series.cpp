#include <doctest.h>

#include "nonarch/corpus.hpp"
#include "nonarch/polygon.hpp"
#include "nonarch/series.hpp"

using namespace nonarch;

namespace {

LaurentApprox S(std::initializer_list<std::pair<const long, Rational>> c) { return LaurentApprox::exact_from(c); }

LaurentApprox geometric(long n_hi, const Prime& p) {
  LaurentApprox::Coefficients c;
  for (long n = 0; n <= n_hi; ++n) c[n] = 1;
  return LaurentApprox::truncated(c, 0, n_hi, TailBound{0, 0}, p);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ValidationError;
}

}  // namespace

TEST_CASE("ring operations") {
  Prime p(5);
  CHECK(add(S({{0, 1}, {1, 1}}), S({{0, 1}, {1, -1}})) == LaurentApprox::constant(2));
  LaurentApprox f = S({{-2, 3}, {4, Rational(1, 7)}});
  CHECK(add(f, LaurentApprox()) == f);
  CHECK(add(S({{0, -5}, {1, 1}}), LaurentApprox::constant(5)) == LaurentApprox::monomial(1, 1));
  CHECK(mul(S({{0, 1}, {1, 1}}), S({{0, 1}, {1, -1}})) == S({{0, 1}, {2, -1}}));
  CHECK(mul(S({{0, -2}, {1, 1}}), S({{0, -4}, {1, 1}})) == S({{0, 8}, {1, -6}, {2, 1}}));
  CHECK(mul(f, LaurentApprox::constant(1)) == f);
  CHECK(sub(f, f).is_zero());
}

TEST_CASE("products of truncated series keep only determined coefficients") {
  Prime p(3);
  LaurentApprox g = geometric(4, p);
  LaurentApprox h = mul(g, g);
  CHECK_FALSE(h.exact());
  CHECK(h.n_hi() == 4);
  for (long n = 0; n <= 4; ++n) CHECK(h.coeff(n) == n + 1);
  CHECK(code_of([&] { (void)h.coeff(5); }) == ErrorCode::Uncertifiable);
  LaurentApprox unknown = LaurentApprox::truncated({}, 0, -1, std::nullopt, p);
  CHECK(code_of([&] { mul(unknown, g); }) == ErrorCode::EmptyWindow);
}

TEST_CASE("Hasse derivatives") {
  CHECK(hasse_derivative(LaurentApprox::monomial(1, 4), 2) == LaurentApprox::monomial(6, 2));
  CHECK(hasse_derivative(LaurentApprox::monomial(1, -1), 1) == LaurentApprox::monomial(-1, -2));
  LaurentApprox f = S({{-3, 2}, {0, 1}, {5, Rational(2, 3)}});
  CHECK(hasse_derivative(f, 0) == f);
  // D^1 agrees with the ordinary derivative.
  LaurentApprox d;
  for (const auto& [n, c] : f.coefficients()) d = add(d, LaurentApprox::monomial(c * n, n - 1));
  CHECK(hasse_derivative(f, 1) == d);
}

TEST_CASE("recentering") {
  Prime p(5);
  CHECK(recenter(LaurentApprox::monomial(1, 2), 1, 2, p).series == S({{0, 1}, {1, 2}, {2, 1}}));
  LaurentApprox f = S({{0, 1}, {1, 1}, {2, 1}});
  CHECK(recenter(f, 0, 2, p).series == f);
  CHECK(recenter(f, 1, 2, p).series == S({{0, 3}, {1, 3}, {2, 1}}));
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    LaurentApprox g = random_laurent(rng, p, 0, 6);
    Rational b = random_rational(rng, p);
    CHECK(recenter(recenter(g, b, 6, p).series, -b, 6, p).series == g);
  }
}

TEST_CASE("evaluation with certified floors") {
  Prime p(5);
  CertifiedValue v = evaluate(S({{0, 1}, {1, 1}, {2, 1}}), 5, p);
  CHECK(v.value == 31);
  CHECK(v.floor.is_pos_inf());
  const long N = 6;
  CertifiedValue g = evaluate(geometric(N, p), 5, p);
  Rational partial = 0, pw = 1;
  for (long n = 0; n <= N; ++n, pw *= 5) partial += pw;
  CHECK(g.value == partial);
  CHECK(g.floor >= Valuation(N + 1));
  // The true value 1/(1-5) differs from the partial sum by exactly 5^{N+1}/(1-5).
  CHECK(vp(Rational(-1, 4) - g.value, p) >= g.floor);
  CHECK(code_of([&] { evaluate(geometric(N, p), Rational(1, 5), p); }) == ErrorCode::OutsideRadius);
  CHECK(code_of([&] { evaluate(geometric(N, p), 1, p); }) == ErrorCode::OutsideRadius);
}

TEST_CASE("products from prescribed zeros") {
  Prime p(5);
  CHECK(product_from_zeros({{1, 1}}, 0, 4, p) == S({{0, 1}, {1, -1}}));
  CHECK(product_from_zeros({{1, 1}, {-1, 1}}, 0, 4, p) == S({{0, 1}, {2, -1}}));
  std::vector<ZeroPrescription> zs{{Rational(1, 5), 1}, {Rational(1, 25), 1}, {Rational(1, 125), 1}};
  LaurentApprox f = product_from_zeros(zs, 0, 3, p);
  LaurentApprox expected = LaurentApprox::constant(1);
  for (long n : {5L, 25L, 125L}) expected = mul(expected, S({{0, 1}, {1, -n}}));
  CHECK(f == expected);
  std::vector<CriticalRadius> radii{{1, 1}, {2, 1}, {3, 1}};
  CHECK(critical_radii(f, LogInterval::everything(), p) == radii);
}

TEST_CASE("stabilization of partial products") {
  Prime p(5);
  std::vector<LaurentApprox> fs;
  for (long n = 1; n <= 4; ++n) fs.push_back(S({{0, 1}, {1, -Rational(p.power(n))}}));
  StabilizationReport r = partial_product_stabilizes(fs, LogValue(0), p);
  CHECK(r.stabilizes);
  for (std::size_t i = 0; i < fs.size(); ++i) CHECK(r.gaps[i] == LogValue(-static_cast<long>(i) - 1));
  std::vector<LaurentApprox> twos(3, LaurentApprox::constant(2));
  CHECK_FALSE(partial_product_stabilizes(twos, LogValue(0), p).stabilizes);
  CHECK(partial_product_stabilizes({}, LogValue(0), p).stabilizes);
}

TEST_CASE("sup-norm is multiplicative") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const Prime& p = small_primes()[static_cast<std::size_t>(i) % 4];
    LaurentApprox f = random_laurent(rng, p, -3, 4), g = random_laurent(rng, p, -3, 4);
    for (long r = -3; r <= 3; ++r) {
      LogValue rho(Rational(r) / 2);
      CHECK(sup_log(mul(f, g), rho, p) == sup_log(f, rho, p) + sup_log(g, rho, p));
    }
  }
}

TEST_CASE("affine floors and truncation") {
  Prime p(5);
  LaurentApprox f = S({{0, 1}, {1, 5}, {2, 25}});
  CHECK(affine_floor(f, 1, p) == ExtendedRational(0));
  CHECK(affine_floor(LaurentApprox(), 1, p).is_pos_inf());
  LaurentApprox t = truncate(f, 1, 1, p);
  CHECK_FALSE(t.exact());
  CHECK(t.n_hi() == 1);
  CHECK(t.tail_bound() == TailBound{0, 1});
}
