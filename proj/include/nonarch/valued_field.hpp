#pragma once

#include <cstdint>
#include <vector>

#include "nonarch/rational.hpp"

namespace nonarch {

/// A validated prime. Construction rejects composites and numbers below 2.
class Prime {
 public:
  explicit Prime(unsigned long p);

  unsigned long value() const noexcept { return p_; }
  Integer integer() const { return Integer(p_); }
  /// p^k as an integer.
  Integer power(unsigned long k) const;

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  unsigned long p_;
};

/// v_p(x): exponent of p in x, +inf for zero.
Valuation vp(const Rational& x, const Prime& p);

/// log_p |x|_p = -v_p(x), -inf for zero.
LogValue abs_log(const Rational& x, const Prime& p);

/// An element of Z/p^k. Residue is kept canonical in [0, p^k).
class PadicResidueInt {
 public:
  PadicResidueInt(const Prime& p, unsigned long k, const Integer& residue);

  const Prime& prime() const noexcept { return p_; }
  unsigned long modulus_exponent() const noexcept { return k_; }
  const Integer& residue() const noexcept { return residue_; }
  Integer modulus() const { return p_.power(k_); }

  /// Reduction to Z/p^j for j <= k.
  PadicResidueInt reduce_to(unsigned long j) const;

  PadicResidueInt operator+(const PadicResidueInt& o) const;
  PadicResidueInt operator-(const PadicResidueInt& o) const;
  PadicResidueInt operator*(const PadicResidueInt& o) const;
  PadicResidueInt pow(unsigned long e) const;

  friend bool operator==(const PadicResidueInt& a, const PadicResidueInt& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.residue_ == b.residue_;
  }

 private:
  void check_compatible(const PadicResidueInt& o) const;

  Prime p_;
  unsigned long k_;
  Integer residue_;
};

/// Canonical residue of x mod p^k; requires v_p(x) >= 0.
PadicResidueInt reduce(const Rational& x, const Prime& p, unsigned long k);

/// The n-th roots of unity of Z_p, mod p^k, ordered by their residue mod p.
/// Requires n | p - 1.
std::vector<PadicResidueInt> teichmuller_roots(const Prime& p, unsigned long n, unsigned long k);

/// Generalized binomial k(k-1)...(k-n+1)/n!, valid for negative k.
Integer binomial(const Integer& k, unsigned long n);

}  // namespace nonarch
