#include "nonarch/polynomial.hpp"

#include <algorithm>
#include <map>

namespace nonarch {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : c_(coefficients) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, long degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree + 1), Rational(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const Rational& c, const std::vector<std::pair<Rational, long>>& roots) {
  Polynomial out = constant(c);
  for (const auto& [r, m] : roots) {
    Polynomial lin{Rational(-r), Rational(1)};
    out = out * lin.pow(static_cast<unsigned long>(m));
  }
  return out;
}

Rational Polynomial::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x = -x;
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x *= s;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial out = constant(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1UL) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return inv * *this;
}

Polynomial Polynomial::taylor_shift(const Rational& b) const {
  // Horner in the shifted variable: acc <- acc * (w + b) + c_i.
  Polynomial acc;
  Polynomial lin{b, Rational(1)};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
  return acc;
}

Polynomial Polynomial::reversed() const {
  std::vector<Rational> v(c_.rbegin(), c_.rend());
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + nonarch::to_string(c_[i]) + ")";
    if (i > 0) out += "z^" + std::to_string(i);
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  long db = b.degree();
  long da = a.degree();
  if (da < db) return {Polynomial{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1), Rational(0));
  Rational lead_inv = 1 / b.leading();
  for (long i = da; i >= db; --i) {
    Rational t = rem[static_cast<std::size_t>(i)] * lead_inv;
    if (t == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = t;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= t * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& a) {
  std::vector<Polynomial> out;
  if (a.degree() <= 0) return out;
  Polynomial f = a.monic();
  Polynomial fp = f.derivative();
  Polynomial g = gcd(f, fp);
  Polynomial b = divmod(f, g).first;
  Polynomial c = divmod(fp, g).first;
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial h = gcd(b, d);
    out.push_back(h);
    b = divmod(b, h).first;
    c = divmod(d, h).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

Polynomial radical(const Polynomial& a) {
  Polynomial out = Polynomial::constant(1);
  for (const auto& q : squarefree_decomposition(a)) out = out * q;
  return out;
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned long>& out) {
  for (unsigned long q = 2; q < 1000 && n > 1; ++q) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
      ++out[Integer(q)];
      n /= q;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    ++out[n];
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(Integer(n / d), out);
}

std::vector<Integer> divisors(const Integer& n) {
  std::map<Integer, unsigned long> factors;
  factor_into(abs(n), factors);
  std::vector<Integer> out{1};
  for (const auto& [q, e] : factors) {
    std::size_t base = out.size();
    Integer pw = 1;
    for (unsigned long i = 0; i < e; ++i) {
      pw *= q;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pw);
    }
  }
  return out;
}

// Integer coefficients with content removed.
std::vector<Integer> primitive_integer_coefficients(const Polynomial& a) {
  Integer lcm_den = 1;
  for (const auto& c : a.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : a.coefficients()) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  for (auto& v : out) v /= content;
  return out;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const Polynomial& a) {
  std::vector<RationalRoot> out;
  if (a.degree() <= 0) return out;
  auto parts = squarefree_decomposition(a);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Polynomial q = parts[i];
    long mult = static_cast<long>(i + 1);
    if (q.coeff(0) == 0) {
      out.push_back({Rational(0), mult});
      q = divmod(q, Polynomial{Rational(0), Rational(1)}).first;
    }
    if (q.degree() <= 0) continue;
    auto ints = primitive_integer_coefficients(q);
    auto num_divs = divisors(ints.front());
    auto den_divs = divisors(ints.back());
    std::vector<Rational> found;
    for (const auto& u : num_divs) {
      for (const auto& v : den_divs) {
        for (int sign : {1, -1}) {
          Rational cand(Integer(sign * u), v);
          cand.canonicalize();
          if (std::find(found.begin(), found.end(), cand) != found.end()) continue;
          if (q(cand) == 0) found.push_back(cand);
        }
      }
      if (static_cast<long>(found.size()) == q.degree()) break;
    }
    for (const auto& r : found) out.push_back({r, mult});
  }
  std::sort(out.begin(), out.end(), [](const RationalRoot& x, const RationalRoot& y) { return x.root < y.root; });
  return out;
}

Polynomial inverse_mod(const Polynomial& a, const Polynomial& m) {
  Polynomial r0 = m, r1 = divmod(a, m).second;
  Polynomial s0, s1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = r1;
    r1 = r;
    Polynomial s = s0 - q * s1;
    s0 = s1;
    s1 = s;
  }
  if (r0.degree() != 0) throw Error(ErrorCode::NotCoprime, "no inverse modulo " + m.to_string());
  return divmod((1 / r0.coeff(0)) * s0, m).second;
}

Polynomial characteristic_polynomial(const Matrix& a) {
  // Faddeev-LeVerrier: det(xI - A) with exact rational arithmetic.
  std::size_t n = a.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * mk[l][j];
        next[i][j] = s + (i == j ? c[n - k + 1] : Rational(0));
      }
    }
    mk = std::move(next);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
    }
    c[n - k] = -tr / static_cast<long>(k);
  }
  return Polynomial(c);
}

}  // namespace nonarch
