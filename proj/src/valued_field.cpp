#include "nonarch/valued_field.hpp"

#include <algorithm>
#include <string>

namespace nonarch {

Prime::Prime(unsigned long p) : p_(p) {
  Integer z(p);
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 50) == 0) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
}

Integer Prime::power(unsigned long k) const {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), p_, k);
  return out;
}

namespace {

long remove_factor(Integer& n, const Integer& p) {
  if (n == 0) return 0;
  return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace

Valuation vp(const Rational& x, const Prime& p) {
  if (x == 0) return Valuation::pos_inf();
  Integer num = x.get_num();
  Integer den = x.get_den();
  Integer pz = p.integer();
  long up = remove_factor(num, pz);
  long down = remove_factor(den, pz);
  return Valuation(up - down);
}

LogValue abs_log(const Rational& x, const Prime& p) { return -vp(x, p); }

PadicResidueInt::PadicResidueInt(const Prime& p, unsigned long k, const Integer& residue) : p_(p), k_(k) {
  if (k == 0) throw Error(ErrorCode::ValidationError, "modulus exponent must be positive");
  Integer m = p_.power(k_);
  mpz_mod(residue_.get_mpz_t(), residue.get_mpz_t(), m.get_mpz_t());
}

PadicResidueInt PadicResidueInt::reduce_to(unsigned long j) const {
  if (j > k_) throw Error(ErrorCode::ValidationError, "cannot lift a residue to higher precision");
  return PadicResidueInt(p_, j, residue_);
}

void PadicResidueInt::check_compatible(const PadicResidueInt& o) const {
  if (!(p_ == o.p_) || k_ != o.k_) {
    throw Error(ErrorCode::ValidationError, "residues from different rings Z/p^k");
  }
}

PadicResidueInt PadicResidueInt::operator+(const PadicResidueInt& o) const {
  check_compatible(o);
  return PadicResidueInt(p_, k_, Integer(residue_ + o.residue_));
}

PadicResidueInt PadicResidueInt::operator-(const PadicResidueInt& o) const {
  check_compatible(o);
  return PadicResidueInt(p_, k_, Integer(residue_ - o.residue_));
}

PadicResidueInt PadicResidueInt::operator*(const PadicResidueInt& o) const {
  check_compatible(o);
  return PadicResidueInt(p_, k_, Integer(residue_ * o.residue_));
}

PadicResidueInt PadicResidueInt::pow(unsigned long e) const {
  Integer m = modulus();
  Integer out;
  mpz_powm_ui(out.get_mpz_t(), residue_.get_mpz_t(), e, m.get_mpz_t());
  return PadicResidueInt(p_, k_, out);
}

PadicResidueInt reduce(const Rational& x, const Prime& p, unsigned long k) {
  if (vp(x, p) < Valuation(0)) {
    throw Error(ErrorCode::NegativeValuation, "cannot reduce " + to_string(x) + " mod p^k");
  }
  Integer m = p.power(k);
  Integer inv;
  // v_p(x) >= 0 so the canonical denominator is prime to p.
  mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), m.get_mpz_t());
  return PadicResidueInt(p, k, Integer(x.get_num() * inv));
}

std::vector<PadicResidueInt> teichmuller_roots(const Prime& p, unsigned long n, unsigned long k) {
  if (n == 0 || (p.value() - 1) % n != 0) {
    throw Error(ErrorCode::RootsUnavailable,
                std::to_string(n) + " does not divide p - 1 = " + std::to_string(p.value() - 1));
  }
  std::vector<PadicResidueInt> roots;
  roots.reserve(n);
  Integer pz = p.integer();
  for (unsigned long a = 1; a < p.value(); ++a) {
    Integer x(a);
    Integer t;
    mpz_powm_ui(t.get_mpz_t(), x.get_mpz_t(), n, pz.get_mpz_t());
    if (t != 1) continue;
    // Newton on x^n - 1, doubling the precision each step.
    unsigned long prec = 1;
    while (prec < k) {
      prec = std::min(2 * prec, k);
      Integer m = p.power(prec);
      Integer xn1, xn;
      mpz_powm_ui(xn1.get_mpz_t(), x.get_mpz_t(), n - 1, m.get_mpz_t());
      xn = xn1 * x - 1;
      Integer denom = Integer(n) * xn1;
      Integer inv;
      mpz_invert(inv.get_mpz_t(), denom.get_mpz_t(), m.get_mpz_t());
      x = x - xn * inv;
      mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    }
    roots.emplace_back(p, k, x);
  }
  return roots;
}

Integer binomial(const Integer& k, unsigned long n) {
  if (n == 0) return 1;
  if (k >= 0 && k < Integer(n)) return 0;
  Integer num = 1;
  for (unsigned long i = 0; i < n; ++i) num *= Integer(k - i);
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
  return out;
}

}  // namespace nonarch
