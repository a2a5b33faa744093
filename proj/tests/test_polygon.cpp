#include <doctest.h>

#include <algorithm>

#include "nonarch/corpus.hpp"
#include "nonarch/polygon.hpp"

using namespace nonarch;

namespace {

LaurentApprox S(std::initializer_list<std::pair<const long, Rational>> c) { return LaurentApprox::exact_from(c); }

const LaurentApprox z2m5 = LaurentApprox::exact_from({{0, -5}, {2, 1}});
const LaurentApprox z2m6z8 = LaurentApprox::exact_from({{0, 8}, {1, -6}, {2, 1}});  // (z-2)(z-4)

LogValue L(const Rational& x) { return LogValue(x); }

// Brute force max_n (ell_n + n rho).
LogValue envelope(const LaurentApprox& f, const Rational& rho, const Prime& p) {
  LogValue best = LogValue::neg_inf();
  for (const auto& [n, c] : f.coefficients()) best = max(best, abs_log(c, p) + LogValue(Rational(n * rho)));
  return best;
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

TEST_CASE("sup_log examples") {
  Prime p2(2), p5(5);
  LaurentApprox zm2 = S({{0, -2}, {1, 1}});
  for (long r = -4; r <= 4; ++r) CHECK(sup_log(zm2, L(r), p2) == max(LogValue(-1), L(r)));
  CHECK(sup_log(zm2, L(0), p2) == L(0));
  CHECK(sup_log(z2m5, L(-1), p5) == L(-1));
  CHECK(sup_log(LaurentApprox(), L(3), p5).is_neg_inf());
  CHECK(sup_log(z2m5, LogValue::neg_inf(), p5) == L(-1));
}

TEST_CASE("sup_log agrees with the brute-force envelope") {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const Prime& p = small_primes()[static_cast<std::size_t>(i) % 4];
    LaurentApprox f = random_laurent(rng, p, -4, 6);
    for (long r = -8; r <= 8; ++r) CHECK(sup_log(f, L(Rational(r) / 3), p) == envelope(f, Rational(r) / 3, p));
  }
}

TEST_CASE("indices") {
  Prime p(5);
  CHECK(indices(z2m5, L(Rational(-1, 2)), p) == Indices{0, 2});
  CHECK(indices(S({{0, 5}, {1, 1}, {2, 1}}), L(0), p) == Indices{1, 2});
  CHECK(indices(LaurentApprox::monomial(1, 3), LogValue::neg_inf(), p) == Indices{0, 3});
  CHECK(code_of([&] { indices(LaurentApprox(), L(0), p); }) == ErrorCode::ZeroSeries);
}

TEST_CASE("critical radii and zero counts follow the roots") {
  Prime p2(2), p5(5);
  std::vector<CriticalRadius> two_four{{-2, 1}, {-1, 1}};
  CHECK(critical_radii(z2m6z8, LogInterval::everything(), p2) == two_four);
  CHECK(critical_radii(z2m5, LogInterval::everything(), p5) == std::vector<CriticalRadius>{{Rational(-1, 2), 2}});
  CHECK(critical_radii(LaurentApprox::constant(7), LogInterval::everything(), p5).empty());

  CHECK(count_zeros(z2m6z8, L(-3), L(0), p2) == 2);
  CHECK(count_zeros(z2m6z8, L(0), L(3), p2) == 0);
  CHECK(count_zeros(z2m6z8, L(-2), L(-2), p2) == 1);
  CHECK(count_zeros(z2m5, L(0), L(1), p5) == 0);
  CHECK(count_zeros(z2m5, LogValue::neg_inf(), L(0), p5) == 2);
  CHECK(count_zeros(LaurentApprox::constant(3), L(-5), L(5), p5) == 0);
  CHECK(count_zeros(LaurentApprox::monomial(1, 2), LogValue::neg_inf(), L(0), p5) == 2);
}

TEST_CASE("counting function") {
  Prime p2(2), p5(5);
  PiecewiseLinear N = counting_N(z2m5, LogValue::neg_inf(), p5);
  for (long r = 0; r <= 6; ++r) {
    Rational rho = Rational(r - 1) / 2;
    CHECK(N(rho) == 2 * rho + 1);
  }
  CHECK(N(-3) == 0);
  PiecewiseLinear Nz = counting_N(LaurentApprox::monomial(1, 1), LogValue::neg_inf(), p5);
  for (long r = -3; r <= 3; ++r) CHECK(Nz(r) == r);
  PiecewiseLinear N24 = counting_N(z2m6z8, L(-3), p2);
  for (long r = -1; r <= 4; ++r) CHECK(N24(r) == (r + 1) + (r + 2));
  CHECK(N24(-3) == 0);
  CHECK(N24(Rational(-3, 2)) == Rational(1, 2));
}

TEST_CASE("reliable window of truncated series") {
  Prime p(5);
  CHECK(reliable_window(z2m5, p) == LogInterval::everything());
  LaurentApprox::Coefficients units;
  for (long n = 0; n <= 5; ++n) units[n] = 1;
  LaurentApprox g = LaurentApprox::truncated(units, 0, 5, TailBound{0, 0}, p);
  CHECK(reliable_window(g, p) == LogInterval{LogValue::neg_inf(), L(0), false, false});
  LaurentApprox h = LaurentApprox::truncated({{0, 1}}, 0, 0, TailBound{0, 1}, p);
  CHECK(reliable_window(h, p) == LogInterval{LogValue::neg_inf(), L(1), false, false});
  LaurentApprox bare = LaurentApprox::truncated({{0, 1}}, 0, 3, std::nullopt, p);
  CHECK(reliable_window(bare, p).empty());
  CHECK(code_of([&] { sup_log(g, L(0), p); }) == ErrorCode::OutsideReliableWindow);
  CHECK(sup_log(g, L(-1), p) == L(0));
  CHECK(tail_log_norm(g, L(-1)) == L(-6));
  CHECK(tail_log_norm(z2m5, L(3)).is_neg_inf());
}

TEST_CASE("sup_log is convex with slopes equal to central indices") {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const Prime& p = small_primes()[static_cast<std::size_t>(i) % 4];
    LaurentApprox f = random_laurent(rng, p, -3, 5);
    PiecewiseLinear s = sup_log_function(f, p);
    auto radii = critical_radii(f, LogInterval::everything(), p);
    for (std::size_t c = 0; c + 1 < radii.size(); ++c) {
      Rational mid = (radii[c].rho + radii[c + 1].rho) / 2;
      CHECK(s.slope_right_of(mid) == indices(f, L(radii[c].rho), p).K);
      CHECK(indices(f, L(radii[c].rho), p).K == indices(f, L(radii[c + 1].rho), p).k);
    }
    Rational prev = s.left_slope();
    for (const auto& x : s.breakpoints()) {
      CHECK(s.slope_right_of(x) > prev);
      prev = s.slope_right_of(x);
    }
  }
}

TEST_CASE("injectivity radius") {
  Prime p(5);
  CHECK(injectivity_log_radius(S({{1, 1}, {2, 1}}), p) == L(0));
  CHECK(injectivity_log_radius(S({{1, 1}, {2, 5}}), p) == L(1));
  CHECK(injectivity_log_radius(S({{1, 1}, {2, Rational(1, 5)}}), p) == L(-1));
  CHECK(injectivity_log_radius(LaurentApprox::monomial(1, 1), p).is_pos_inf());
  CHECK(code_of([&] { injectivity_log_radius(LaurentApprox::constant(2), p); }) == ErrorCode::ConstantSeries);
}

TEST_CASE("disc covering") {
  Prime p(5);
  LaurentApprox f = S({{1, 1}, {3, 1}});
  for (Rational b : {Rational(1), Rational(5), Rational(375)}) CHECK(covers_disc(f, b, L(0), p));
  CHECK_FALSE(covers_disc(f, Rational(1, 5), L(0), p));
  CHECK_FALSE(covers_disc(LaurentApprox::monomial(5, 1), 1, L(0), p));
  LaurentApprox g = S({{0, 3}, {2, 1}});
  CHECK(covers_disc(g, 3, L(-4), p));
}
