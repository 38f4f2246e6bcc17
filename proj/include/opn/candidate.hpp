// Hypothetical odd-perfect components N = p^k * m^2 with the Euler-factor
// congruences (p ≡ k ≡ 1 mod 4, gcd(p, m) = 1, m odd) enforced at
// construction: a malformed candidate never exists, so the constraint
// checkers only ever see the definitional form.
#pragma once

#include "opn/arith.hpp"
#include "opn/rational.hpp"

namespace opn {

class OpnCandidate {
 public:
  // Throws std::domain_error naming the violated condition.
  static OpnCandidate create(const Int& p, unsigned long k, const Int& m);

  const Int& p() const { return p_; }
  unsigned long k() const { return k_; }
  const Int& m() const { return m_; }
  const Int& pk() const { return pk_; }  // p^k
  const Int& m2() const { return m2_; }  // m^2
  Int n() const { return pk_ * m2_; }

  const Factorization& pk_factorization() const { return fact_pk_; }
  const Factorization& m_factorization() const { return fact_m_; }
  const Factorization& m2_factorization() const { return fact_m2_; }

  // Canonical factorization of N = p^k * m^2.
  Factorization n_factorization() const;

  // Distinct prime count of N (= 1 + omega(m), since gcd(p, m) = 1).
  std::size_t omega() const { return 1 + fact_m_.omega(); }

 private:
  OpnCandidate(Int p, unsigned long k, Int m);

  Int p_;
  unsigned long k_;
  Int m_;
  Int pk_;
  Int m2_;
  Factorization fact_pk_;
  Factorization fact_m_;
  Factorization fact_m2_;
};

// The six exact ratios tying sigma(p^k), sigma(m), sigma(m^2) to p^k, m, m^2.
struct OpnRatios {
  Rational rho1;  // sigma(p^k) / p^k
  Rational rho2;  // sigma(p^k) / m^2
  Rational rho3;  // sigma(p^k) / m
  Rational mu1;   // sigma(m^2) / m^2
  Rational mu2;   // sigma(m^2) / p^k
  Rational mu3;   // sigma(m)   / p^k
};

// All six ratios, exact and reduced. rho1*mu1 = rho2*mu2 = sigma(N)/N and
// rho1/rho2 = mu2/mu1 = m^2/p^k hold for every candidate.
OpnRatios compute_ratios(const OpnCandidate& c);

}  // namespace opn
