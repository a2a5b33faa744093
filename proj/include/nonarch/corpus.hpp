#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nonarch/nevanlinna.hpp"

namespace nonarch {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
long uniform(Rng& rng, long lo, long hi);

/// u/w * p^e with u, w small and prime to p, u != 0.
Rational random_with_valuation(Rng& rng, const Prime& p, long e);

/// Random rational with valuation in [-3, 3].
Rational random_rational(Rng& rng, const Prime& p);

/// A polynomial c * z^m0 * prod (z - r_i)^{m_i} with its construction data.
struct FactoredPolynomial {
  Rational c;
  long m0;
  std::vector<std::pair<Rational, long>> roots;  ///< distinct nonzero roots
  Polynomial poly;
};

/// At most max_degree linear factors (counting z^m0), roots of valuation in [-3, 3].
FactoredPolynomial random_factored(Rng& rng, const Prime& p, long max_degree = 6);

/// Exact Laurent polynomial with exponents in [lo, hi], some coefficients zero.
LaurentApprox random_laurent(Rng& rng, const Prime& p, long lo, long hi);

/// Random P of degree d with K(P, rho) = d; k(P, rho) = 0 too when extremal (needs d rho integral).
Polynomial random_dominant(Rng& rng, const Prime& p, long d, const Rational& rho, bool extremal);

/// num/den with den = prod (z - b_i)^{m_i}, roots of pairwise distinct
/// valuation, and gcd(num, den) = 1.
struct SplitRational {
  Polynomial num;
  Polynomial den;
  std::vector<std::pair<Rational, long>> poles;
};

SplitRational random_split_rational(Rng& rng, const Prime& p);

/// A fixed list of rational functions over Q used for value-distribution checks.
std::vector<MeromorphicPair> rational_corpus();

/// Primes used by randomized checks.
const std::vector<Prime>& small_primes();

}  // namespace nonarch
