#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nonarch/rational.hpp"

namespace nonarch {

/// Dense univariate polynomial over Q, coefficients stored low degree first
/// with no trailing zeros. The zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, long degree);
  /// c * prod (z - r_i)^{m_i}
  static Polynomial from_roots(const Rational& c, const std::vector<std::pair<Rational, long>>& roots);

  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  /// Coefficient of z^i; zero outside the stored range.
  Rational coeff(long i) const;
  Rational leading() const;
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  Rational operator()(const Rational& x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial pow(unsigned long e) const;
  Polynomial derivative() const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;
  /// p(b + w) as a polynomial in w.
  Polynomial taylor_shift(const Rational& b) const;
  /// z^deg p(1/z).
  Polynomial reversed() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Yun's algorithm: returns Q_1, ..., Q_m (monic, squarefree, pairwise coprime)
/// with a = lc(a) * prod Q_i^i. Constant input gives an empty list.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& a);

/// Monic product of the distinct irreducible factors.
Polynomial radical(const Polynomial& a);

/// s with s * a = 1 mod m; throws NotCoprime if a is not invertible.
Polynomial inverse_mod(const Polynomial& a, const Polynomial& m);

using Matrix = std::vector<std::vector<Rational>>;

/// det(x I - A) for a square matrix.
Polynomial characteristic_polynomial(const Matrix& a);

struct RationalRoot {
  Rational root;
  long multiplicity;
};

/// All roots in Q with multiplicity, sorted ascending.
std::vector<RationalRoot> rational_roots(const Polynomial& a);

}  // namespace nonarch
