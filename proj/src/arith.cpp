#include "opn/arith.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>

namespace opn {

std::string to_string(NClass c) {
  switch (c) {
    case NClass::Deficient: return "deficient";
    case NClass::Perfect: return "perfect";
    case NClass::Abundant: return "abundant";
  }
  return "unknown";
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

namespace {

constexpr std::uint32_t kTrialSieveLimit = 1'000'000;

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = primes_up_to(kTrialSieveLimit);
  return primes;
}

std::atomic<unsigned long> g_split_seed{0};

// Fixed witness set; deterministic for n < 3'317'044'064'679'887'385'961'981
// (Sorenson & Webster).
const unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

const Int& deterministic_mr_bound() {
  static const Int bound("3317044064679887385961981");
  return bound;
}

bool miller_rabin_witness(const Int& n, const Int& n_minus_1, const Int& d,
                          unsigned long s, unsigned long a) {
  Int x;
  Int base(a);
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
  }
  return false;  // a proves n composite
}

// Nontrivial factor of an odd composite n (Brent's cycle method). The
// polynomial constant is swept deterministically; set_split_seed only shifts
// the starting point.
Int brent_split(const Int& n) {
  const unsigned long seed = g_split_seed.load(std::memory_order_relaxed);
  for (unsigned long c = 1;; ++c) {
    Int y = Int(2) + seed;
    Int g = 1, q = 1, x, xs;
    unsigned long r = 1;
    const unsigned long batch = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        xs = y;
        const unsigned long steps = std::min(batch, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += batch;
      }
      r *= 2;
    }
    if (g == n) {
      // the batched gcd overshot; replay one step at a time
      g = 1;
      while (g == 1) {
        xs = (xs * xs + c) % n;
        g = gcd(abs(x - xs), n);
      }
    }
    if (g != n) return g;
  }
}

using ExponentMap = std::map<Int, unsigned long>;

// n > 1 with no prime factor <= kTrialSieveLimit; accumulates mult * each
// exponent of n's factorization.
void split_into(ExponentMap& acc, const Int& n, unsigned long mult) {
  if (is_prime(n)) {
    acc[n] += mult;
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long k = 2; k <= bits; ++k) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
        split_into(acc, root, mult * k);
        return;
      }
    }
  }
  const Int d = brent_split(n);
  split_into(acc, d, mult);
  split_into(acc, n / d, mult);
}

Int sigma_term(const Int& p, unsigned long k) {
  // (p^(k+1) - 1) / (p - 1), exact
  Int num = ipow(p, k + 1) - 1;
  Int den = p - 1;
  Int out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace

void set_split_seed(unsigned long seed) {
  g_split_seed.store(seed, std::memory_order_relaxed);
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned long p : kWitnesses) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < 41 * 41) return true;  // no witness divides it and it is below 41^2
  if (n >= deterministic_mr_bound()) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
  }
  const Int n_minus_1 = n - 1;
  Int d = n_minus_1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned long a : kWitnesses) {
    if (!miller_rabin_witness(n, n_minus_1, d, s, a)) return false;
  }
  return true;
}

Factorization Factorization::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].exponent < 1) {
      throw std::domain_error("factorization exponents must be >= 1");
    }
    if (i > 0 && !(terms[i - 1].prime < terms[i].prime)) {
      throw std::domain_error("factorization primes must be strictly increasing");
    }
    if (!is_prime(terms[i].prime)) {
      throw std::domain_error("factorization entry " + to_string(terms[i].prime) +
                              " is not prime");
    }
  }
  return Factorization(Trusted{}, std::move(terms));
}

Int Factorization::value() const {
  Int v = 1;
  for (const Term& t : terms_) v *= ipow(t.prime, t.exponent);
  return v;
}

Factorization Factorization::squared() const {
  std::vector<Term> doubled = terms_;
  for (Term& t : doubled) t.exponent *= 2;
  return Factorization(Trusted{}, std::move(doubled));
}

Factorization factorize(const Int& n) {
  if (n < 1) throw std::domain_error("factorize requires n >= 1");
  std::vector<Factorization::Term> terms;
  if (n == 1) return Factorization(Factorization::Trusted{}, std::move(terms));

  Int rest = n;
  for (std::uint32_t p : trial_primes()) {
    const unsigned long long p2 = static_cast<unsigned long long>(p) * p;
    if (mpz_cmp_ui(rest.get_mpz_t(), p2) < 0) break;
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    unsigned long e = 0;
    do {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
    terms.push_back({Int(p), e});
  }

  if (rest > 1) {
    if (is_prime(rest)) {
      terms.push_back({rest, 1});
    } else {
      ExponentMap extra;
      split_into(extra, rest, 1);
      for (const auto& [prime, exp] : extra) terms.push_back({prime, exp});
    }
  }

  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.prime < b.prime; });
  return Factorization(Factorization::Trusted{}, std::move(terms));
}

Int sigma_prime_power(const Int& p, unsigned long k) {
  if (k < 1) throw std::domain_error("sigma_prime_power requires k >= 1");
  if (!is_prime(p)) {
    throw std::domain_error("sigma_prime_power requires a prime base, got " +
                            to_string(p));
  }
  return sigma_term(p, k);
}

Int sigma(const Factorization& f) {
  Int s = 1;
  for (const auto& t : f.terms()) s *= sigma_term(t.prime, t.exponent);
  return s;
}

Int sigma(const Int& n) { return sigma(factorize(n)); }

Rational abundancy(const Factorization& f) {
  return make_rational(sigma(f), f.value());
}

Rational abundancy(const Int& n) { return make_rational(sigma(n), n); }

NClass classify(const Factorization& f) {
  const Int s = sigma(f);
  const Int twice = 2 * f.value();
  if (s == twice) return NClass::Perfect;
  return s < twice ? NClass::Deficient : NClass::Abundant;
}

NClass classify(const Int& n) { return classify(factorize(n)); }

}  // namespace opn
