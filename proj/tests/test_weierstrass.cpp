#include <doctest.h>

#include "nonarch/corpus.hpp"
#include "nonarch/polygon.hpp"
#include "nonarch/weierstrass.hpp"

using namespace nonarch;

namespace {

LaurentApprox S(std::initializer_list<std::pair<const long, Rational>> c) { return LaurentApprox::exact_from(c); }
Polynomial P(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }
LogValue L(const Rational& x) { return LogValue(x); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ValidationError;
}

// Solves A x = b by Gauss-Jordan elimination; A is square and invertible.
std::vector<Rational> solve(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (A[piv][c] == 0) ++piv;
    std::swap(A[piv], A[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Rational m = A[r][c] / A[c][c];
      for (std::size_t k = c; k < n; ++k) A[r][k] -= m * A[c][k];
      b[r] -= m * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= A[i][i];
  return b;
}

// q and R of f = B q + R from the linear system on the coefficients.
std::pair<Polynomial, Polynomial> linear_divide(const Polynomial& f, const Polynomial& B) {
  long n = f.degree(), d = B.degree();
  std::size_t m = static_cast<std::size_t>(n + 1);
  std::vector<std::vector<Rational>> A(m, std::vector<Rational>(m));
  std::vector<Rational> rhs(m);
  for (long row = 0; row <= n; ++row) {
    rhs[static_cast<std::size_t>(row)] = f.coeff(row);
    for (long j = 0; j <= n - d; ++j) {
      if (row - j >= 0 && row - j <= d) A[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] = B.coeff(row - j);
    }
    if (row < d) A[static_cast<std::size_t>(row)][static_cast<std::size_t>(n - d + 1 + row)] = 1;
  }
  auto x = solve(A, rhs);
  std::vector<Rational> q(x.begin(), x.begin() + (n - d + 1)), R(x.begin() + (n - d + 1), x.end());
  return {Polynomial(q), Polynomial(R)};
}

}  // namespace

TEST_CASE("certifying dominant polynomials") {
  Prime p(5);
  DominantPolynomial a = DominantPolynomial::certify(P({-5, 0, 1}), Rational(-1, 2), p);
  CHECK(a.extremal);
  DominantPolynomial b = DominantPolynomial::certify(P({0, 1}), 0, p);
  CHECK_FALSE(b.extremal);
  CHECK(code_of([&] { DominantPolynomial::certify(P({1, 1}), -1, p); }) == ErrorCode::NotDominant);
}

TEST_CASE("division examples") {
  Prime p(5);
  DivisionResult r = divide(LaurentApprox::monomial(1, 2), DominantPolynomial::certify(P({-1, 1}), 0, p), p);
  CHECK(r.q == S({{0, 1}, {1, 1}}));
  CHECK(r.R == P({1}));
  CHECK(r.error.is_neg_inf());

  LaurentApprox f = S({{0, 5}, {3, 1}});
  DivisionResult s = divide(f, DominantPolynomial::certify(P({-5, 0, 1}), Rational(-1, 2), p), p);
  CHECK(s.q == LaurentApprox::monomial(1, 1));
  CHECK(s.R == P({5, 5}));
  LogValue rho = L(Rational(-1, 2));
  CHECK(sup_log(LaurentApprox::from_polynomial(s.R), rho, p) == L(-1));
  CHECK(sup_log(f, rho, p) == L(-1));

  Polynomial B = P({3, 5, 1});
  DivisionResult t = divide(LaurentApprox::from_polynomial(B), DominantPolynomial::certify(B, 0, p), p);
  CHECK(t.q == LaurentApprox::constant(1));
  CHECK(t.R.is_zero());
}

TEST_CASE("division agrees with the linear system") {
  Rng rng(21);
  for (int i = 0; i < 60; ++i) {
    const Prime& p = small_primes()[static_cast<std::size_t>(i) % 4];
    long d = uniform(rng, 1, 3);
    Rational rho(uniform(rng, -2, 2));
    Polynomial B = random_dominant(rng, p, d, rho, false);
    LaurentApprox f = random_laurent(rng, p, 0, d + 4);
    Polynomial fp = f.to_polynomial();
    if (fp.degree() < d) continue;
    DivisionResult r = divide(f, DominantPolynomial::certify(B, rho, p), p);
    auto [q, R] = linear_divide(fp, B);
    CHECK(r.q == LaurentApprox::from_polynomial(q));
    CHECK(r.R == R);
  }
}

TEST_CASE("division of Laurent series needs an extremal divisor") {
  Prime p(5);
  DominantPolynomial z = DominantPolynomial::certify(P({0, 1}), 0, p);
  CHECK(code_of([&] { divide(LaurentApprox::monomial(1, -1), z, p); }) == ErrorCode::NeedExtremal);
  Polynomial B = P({1, 1});
  LaurentApprox f = S({{-2, 1}, {-1, 3}, {2, 1}});
  DivisionResult r = divide(f, DominantPolynomial::certify(B, 0, p), p);
  CHECK(add(mul(LaurentApprox::from_polynomial(B), r.q), LaurentApprox::from_polynomial(r.R)) == f);
  CHECK(r.R.degree() < 1);
}

TEST_CASE("division of a truncated series reports the tail error") {
  Prime p(5);
  LaurentApprox::Coefficients c{{0, 1}, {1, 1}, {2, 1}};
  LaurentApprox f = LaurentApprox::truncated(c, 0, 2, TailBound{0, 0}, p);
  DivisionResult r = divide(f, DominantPolynomial::certify(P({-5, 1}), -1, p), p);
  CHECK(r.error == tail_log_norm(f, L(-1)));
  CHECK(r.error == L(-3));
}

TEST_CASE("unit inversion") {
  Prime p(5);
  ApproxSeries a = invert_unit(S({{0, 1}, {1, -1}}), -1, 3, p);
  CHECK(a.value == S({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
  CHECK(a.error == L(-4));
  ApproxSeries b = invert_unit(S({{0, 5}, {1, 1}}), 1, 3, p);
  CHECK(b.value == S({{-1, 1}, {-2, -5}, {-3, 25}, {-4, -125}}));
  CHECK(code_of([&] { invert_unit(S({{0, -5}, {2, 1}}), Rational(-1, 2), 3, p); }) == ErrorCode::NotUnit);
  Rng rng(4);
  for (int i = 0; i < 40; ++i) {
    const Prime& q = small_primes()[static_cast<std::size_t>(i) % 4];
    LaurentApprox u = random_laurent(rng, q, -2, 3);
    Rational rho(uniform(rng, -3, 3));
    Indices ix = indices(u, L(rho), q);
    if (ix.k != ix.K) continue;
    ApproxSeries v = invert_unit(u, rho, 12, q);
    LaurentApprox one = sub(mul(u, v.value), LaurentApprox::constant(1));
    CHECK(sup_log(one, L(rho), q) <= v.error + sup_log(u, L(rho), q));
  }
}

TEST_CASE("preparation examples") {
  Prime p(5);
  PreparationResult a = prepare(S({{0, -5}, {2, 1}}), Rational(-1, 2), Valuation::pos_inf(), p);
  CHECK(a.P == P({1, 0, Rational(-1, 5)}));
  CHECK(a.u == LaurentApprox::constant(-5));
  CHECK(a.d == 2);

  // The unit root of z^2 + z + 5 mod 125, found by search.
  long root = 0;
  for (long z = 1; z < 125; ++z) {
    if (z % 5 != 0 && (z * z + z + 5) % 125 == 0) root = z;
  }
  REQUIRE(root == 29);
  PreparationResult b = prepare(S({{0, 5}, {1, 1}, {2, 1}}), 0, Valuation(3), p);
  CHECK(b.d == 1);
  CHECK(b.P.coeff(0) == 1);
  // P = 1 - z/z0, so P_1 * z0 = -1 mod 125.
  CHECK(reduce(b.P.coeff(1) * root, p, 3) == reduce(-1, p, 3));
  CHECK(reduce(b.P.coeff(1), p, 3).residue() == 56);
  LaurentApprox resid = sub(S({{0, 5}, {1, 1}, {2, 1}}), mul(LaurentApprox::from_polynomial(b.P), b.u));
  for (const auto& [n, c] : resid.coefficients()) CHECK(vp(c, p) >= Valuation(3));
  for (std::size_t i = 0; i < b.trace.size(); ++i) {
    CHECK(b.trace[i] <= Rational(static_cast<long>(i) + 1) * b.delta);
  }

  LaurentApprox e = S({{0, 1}, {1, 1}, {2, 1}});
  PreparationResult c = prepare(e, 0, Valuation(5), p);
  CHECK(c.P == P({1, 1, 1}));
  CHECK(c.u == LaurentApprox::constant(1));
}

TEST_CASE("descent to rational coefficients needs an integral slope displacement") {
  CHECK(code_of([] { require_compatible_slope(2, Rational(1, 3)); }) == ErrorCode::IncompatibleSlope);
  CHECK(code_of([] { require_compatible_slope(3, Rational(-1, 2)); }) == ErrorCode::IncompatibleSlope);
  CHECK_NOTHROW(require_compatible_slope(2, Rational(1, 2)));
  CHECK_NOTHROW(require_compatible_slope(1, 7));
}
