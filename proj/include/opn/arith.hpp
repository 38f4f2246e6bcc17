// Exact integer arithmetic: primality, canonical factorization, the divisor
// sum sigma, the abundancy index sigma(n)/n, and the
// deficient/perfect/abundant classification.
//
// Everything here is a pure function of its inputs; results are exact. All
// operations accept arbitrary-precision integers even when typical inputs fit
// a machine word.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opn/rational.hpp"

namespace opn {

enum class NClass { Deficient, Perfect, Abundant };

std::string to_string(NClass c);  // "deficient" / "perfect" / "abundant"

// Canonical prime factorization: strictly increasing primes, every exponent
// >= 1. The empty factorization is the integer 1.
class Factorization {
 public:
  struct Term {
    Int prime;
    unsigned long exponent = 1;
  };

  Factorization() = default;

  // Validates ordering, primality and exponents; throws std::domain_error.
  static Factorization from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t omega() const { return terms_.size(); }  // distinct prime count
  Int value() const;                                   // product of p^a
  Factorization squared() const;                       // exponents doubled

 private:
  struct Trusted {};
  Factorization(Trusted, std::vector<Term> terms) : terms_(std::move(terms)) {}

  std::vector<Term> terms_;

  friend Factorization factorize(const Int& n);
  friend class OpnCandidate;
};

// Primes <= limit, increasing (plain sieve of Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

// Deterministic Miller-Rabin (fixed 13-witness set, proven below 3.3e24);
// falls back to GMP's probabilistic test beyond that.
bool is_prime(const Int& n);

// Offsets the starting point of the cycle-splitting fallback used by
// factorize for composites with no prime factor below 1e6. Process-wide;
// set once before spawning parallel work. Default 0 (fully deterministic).
void set_split_seed(unsigned long seed);

// Trial division by sieved primes up to 1e6, then deterministic primality
// plus Brent cycle splitting for what remains. n >= 1; n = 1 gives the empty
// factorization. Throws std::domain_error on n < 1.
Factorization factorize(const Int& n);

// 1 + p + p^2 + ... + p^k. Rejects non-prime p and k = 0.
Int sigma_prime_power(const Int& p, unsigned long k);

Int sigma(const Factorization& f);
Int sigma(const Int& n);  // n >= 1

Rational abundancy(const Factorization& f);
Rational abundancy(const Int& n);  // sigma(n)/n, reduced

NClass classify(const Factorization& f);
NClass classify(const Int& n);

}  // namespace opn
