#include "opn/constraints.hpp"

#include <algorithm>
#include <stdexcept>

namespace opn {

namespace {

const Rational& zero() {
  static const Rational v = frac(0, 1);
  return v;
}

void push(ConstraintReport& rep, AtomicCheck check) {
  rep.checks.push_back(std::move(check));
}

// Conclusion of a case implication: recorded, but only binding when the
// premise holds.
AtomicCheck guarded(AtomicCheck check, bool premise) {
  check.applicable = premise;
  return check;
}

bool corollary1_holds(const Int& n, unsigned long r) {
  if (r == 1) return 3 * n <= 1;
  return ipow(Int(3), r) <= ipow(Int(2), r - 1) * ipow(n, r - 2);
}

}  // namespace

ConstraintReport check_lemma1(const OpnRatios& r) {
  ConstraintReport rep{"L1", "ratio chain 0 < rho2 <= 2/3 < 1 < rho1 < 5/4 < 8/5 < mu1 < 2 < 3 <= mu2", {}};
  push(rep, check_rat("L1.rho2_positive", "0 < rho2", zero(), Cmp::Lt, r.rho2));
  push(rep, check_rat("L1.rho2_le_two_thirds", "rho2 <= 2/3", r.rho2, Cmp::Le, frac(2, 3)));
  push(rep, check_rat("L1.rho1_gt_one", "1 < rho1", frac(1, 1), Cmp::Lt, r.rho1));
  push(rep, check_rat("L1.rho1_lt_five_fourths", "rho1 < 5/4", r.rho1, Cmp::Lt, frac(5, 4)));
  push(rep, check_rat("L1.mu1_gt_eight_fifths", "8/5 < mu1", frac(8, 5), Cmp::Lt, r.mu1));
  push(rep, check_rat("L1.mu1_lt_two", "mu1 < 2", r.mu1, Cmp::Lt, frac(2, 1)));
  push(rep, check_rat("L1.mu2_ge_three", "3 <= mu2", frac(3, 1), Cmp::Le, r.mu2));
  return rep;
}

ConstraintReport check_lemma2(const OpnRatios& r) {
  ConstraintReport rep{"L2", "ratio sums 57/20 < rho1 + mu1 < 3 <= 11/3 <= rho2 + mu2", {}};
  const Rational sum1 = r.rho1 + r.mu1;
  const Rational sum2 = r.rho2 + r.mu2;
  push(rep, check_rat("L2.sum1_gt_57_20", "57/20 < rho1 + mu1", frac(57, 20), Cmp::Lt, sum1));
  push(rep, check_rat("L2.sum1_lt_three", "rho1 + mu1 < 3", sum1, Cmp::Lt, frac(3, 1)));
  push(rep, check_rat("L2.sum2_ge_11_3", "11/3 <= rho2 + mu2", frac(11, 3), Cmp::Le, sum2));
  return rep;
}

ConstraintReport check_lemma3(const OpnCandidate& c) {
  ConstraintReport rep{"L3", "sigma(p^k)/m vs sigma(m)/p^k trichotomy", {}};
  const OpnRatios r = compute_ratios(c);
  const Rational one = frac(1, 1);

  push(rep, check_rat("L3.rho3_ne_mu3", "rho3 != mu3", r.rho3, Cmp::Ne, r.mu3));

  const bool below_one = r.rho3 < one;
  const bool above_one = one < r.rho3;
  const bool rho_lt_mu = r.rho3 < r.mu3;
  const bool mu_lt_rho = r.mu3 < r.rho3;

  push(rep, guarded(check_int("L3.case_low", "if rho3 < 1 then p^k < m",
                              c.pk(), Cmp::Lt, c.m()),
                    below_one));
  push(rep, guarded(check_int("L3.case_mid_lower",
                              "if 1 < rho3 and rho3 < mu3 then 4m < 5p^k",
                              4 * c.m(), Cmp::Lt, 5 * c.pk()),
                    above_one && rho_lt_mu));
  push(rep, guarded(check_int("L3.case_mid_upper",
                              "if 1 < rho3 and rho3 < mu3 then p^(2k) < 2m^2",
                              c.pk() * c.pk(), Cmp::Lt, 2 * c.m2()),
                    above_one && rho_lt_mu));
  push(rep, guarded(check_int("L3.case_high", "if 1 < rho3 and mu3 < rho3 then m < p^k",
                              c.m(), Cmp::Lt, c.pk()),
                    above_one && mu_lt_rho));
  return rep;
}

ConstraintReport check_theorem1(const OpnCandidate& c) {
  ConstraintReport rep{"T1", "p^k < (2/3) m^2", {}};
  push(rep, check_int("T1.cross", "3 p^k < 2 m^2", 3 * c.pk(), Cmp::Lt, 2 * c.m2()));
  return rep;
}

ConstraintReport check_theorem2(const OpnCandidate& c) {
  ConstraintReport rep{"T2", "m^2 - p^k >= 8", {}};
  const Int gap = c.m2() - c.pk();
  push(rep, check_int("T2.gap_positive", "m^2 - p^k > 0", gap, Cmp::Gt, Int(0)));
  push(rep, check_int("T2.gap_divisible_by_four", "4 | (m^2 - p^k)", Int(4), Cmp::Divides, gap));
  push(rep, check_int("T2.gap_ge_eight", "m^2 - p^k >= 8", gap, Cmp::Ge, Int(8)));
  return rep;
}

ConstraintReport check_theorem3(const Factorization& n_factorization) {
  const Int n = n_factorization.value();
  if (mpz_even_p(n.get_mpz_t())) {
    throw std::domain_error("theorem 3 applies to odd N only");
  }
  if (n < 3) throw std::domain_error("theorem 3 requires N >= 3");

  ConstraintReport rep{"T3", "3 sigma(p_i^a_i) p_i^a_i <= 2N for every component", {}};
  const Int two_n = 2 * n;
  for (const auto& t : n_factorization.terms()) {
    const Int pa = ipow(t.prime, t.exponent);
    const Int lhs = 3 * sigma_prime_power(t.prime, t.exponent) * pa;
    const std::string comp = to_string(t.prime) + "^" + std::to_string(t.exponent);
    push(rep, check_int("T3.component_" + to_string(t.prime),
                        "component " + comp + ": 3 sigma(" + comp + ") " + comp +
                            " <= 2N (margin " + to_string(two_n - lhs) + ")",
                        lhs, Cmp::Le, two_n));
  }
  return rep;
}

ConstraintReport check_corollary1(const Int& n, unsigned long r) {
  if (n < 3) throw std::domain_error("corollary 1 requires N >= 3");
  if (mpz_even_p(n.get_mpz_t())) {
    throw std::domain_error("corollary 1 applies to odd N only");
  }
  if (r < 1) throw std::domain_error("corollary 1 requires r >= 1");

  ConstraintReport rep{"C1", "N^(2-r) <= (1/3)(2/3)^(r-1) with r = " + std::to_string(r), {}};
  if (r == 1) {
    push(rep, check_int("C1.r1", "3N <= 1", 3 * n, Cmp::Le, Int(1)));
  } else {
    push(rep, check_int("C1.cross", "3^r <= 2^(r-1) N^(r-2)", ipow(Int(3), r),
                        Cmp::Le, ipow(Int(2), r - 1) * ipow(n, r - 2)));
  }
  return rep;
}

ConstraintReport check_perfection(const OpnCandidate& c) {
  ConstraintReport rep{"PERF", "sigma(p^k) sigma(m^2) = 2 p^k m^2", {}};
  const Int lhs = sigma(c.pk_factorization()) * sigma(c.m2_factorization());
  push(rep, check_int("PERF.sigma_eq_2n", "sigma(N) = 2N", lhs, Cmp::Eq, 2 * c.n()));
  return rep;
}

std::vector<ConstraintReport> full_audit(const OpnCandidate& c) {
  const OpnRatios r = compute_ratios(c);
  std::vector<ConstraintReport> reports;
  reports.push_back(check_perfection(c));
  reports.push_back(check_lemma1(r));
  reports.push_back(check_lemma2(r));
  reports.push_back(check_lemma3(c));
  reports.push_back(check_theorem1(c));
  reports.push_back(check_theorem2(c));
  reports.push_back(check_theorem3(c.n_factorization()));
  reports.push_back(check_corollary1(c.n(), c.omega()));
  return reports;
}

unsigned long min_omega_consistent(const Int& n) {
  if (n < 3) throw std::domain_error("min_omega_consistent requires N >= 3");
  for (unsigned long r = 1;; ++r) {
    if (corollary1_holds(n, r)) return r;
  }
}

std::vector<GapCaseWitness> search_gap4(const Int& pk_limit, const Int& m_limit) {
  if (pk_limit > 100'000'000) {
    throw std::domain_error("gap-4 search supports pk limits up to 1e8");
  }
  std::vector<GapCaseWitness> found;
  if (pk_limit < 5 || m_limit < 1) return found;

  const auto primes = primes_up_to(static_cast<std::uint32_t>(pk_limit.get_ui()));
  for (std::uint32_t p : primes) {
    if (p % 4 != 1) continue;
    const Int prime(p);
    Int pk = prime;  // p^1
    for (unsigned long k = 1; pk <= pk_limit; k += 4, pk *= ipow(prime, 4)) {
      const Int square = pk + 4;
      Int m, rem;
      mpz_sqrtrem(m.get_mpz_t(), rem.get_mpz_t(), square.get_mpz_t());
      if (rem != 0) continue;
      if (m > m_limit || mpz_even_p(m.get_mpz_t()) || gcd(prime, m) != 1) continue;

      GapCaseWitness w;
      w.p = prime;
      w.k = k;
      w.m = m;
      w.n = pk * m * m;

      // m - 2 divides p^k, so it is a power of p whenever the gap equation
      // holds; derive the exponent by direct division.
      Int t = m - 2;
      unsigned long x = 0;
      while (t > 1 && mpz_divisible_p(t.get_mpz_t(), prime.get_mpz_t())) {
        t /= prime;
        ++x;
      }
      if (t == 1) w.x = x;

      std::vector<Factorization::Term> m_terms = factorize(m).terms();
      auto pos = m_terms.begin();
      while (pos != m_terms.end() && pos->prime < prime) ++pos;
      std::vector<Factorization::Term> n_terms;
      for (auto it = m_terms.begin(); it != m_terms.end(); ++it) {
        if (it == pos) n_terms.push_back({prime, k});
        n_terms.push_back({it->prime, it->exponent * 2});
      }
      if (pos == m_terms.end()) n_terms.push_back({prime, k});
      w.n_class = classify(Factorization::from_terms(std::move(n_terms)));
      found.push_back(std::move(w));
    }
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.k < b.k;
  });
  return found;
}

}  // namespace opn
