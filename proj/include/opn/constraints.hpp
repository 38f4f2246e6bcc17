// Machine checks for the component constraints an odd perfect number
// N = p^k * m^2 would have to satisfy: the ratio-chain bounds (L1), the
// ratio-sum bounds (L2), the sigma(p^k)/m trichotomy (L3), p^k < (2/3)m^2
// (T1), m^2 - p^k >= 8 (T2), the per-component bound
// 3*sigma(p_i^a_i)*p_i^a_i <= 2N (T3) and its corollary
// N^(2-r) <= (1/3)(2/3)^(r-1) (C1), plus the perfection equation itself.
//
// Boundary strictness mirrors the source statements exactly: rho2 <= 2/3,
// 3 <= mu2 and 11/3 <= rho2+mu2 are non-strict, everything else is strict.
// Every verdict is an exact integer or rational comparison.
#pragma once

#include <optional>
#include <vector>

#include "opn/candidate.hpp"
#include "opn/report.hpp"

namespace opn {

// Conjectured size floor for an odd perfect number (N > 10^this). Surfaced in
// report headers for context; no verdict depends on it.
inline constexpr int kOpnSizeFloorExponent = 300;

// 0 < rho2 <= 2/3, 1 < rho1 < 5/4, 8/5 < mu1 < 2, 3 <= mu2.
ConstraintReport check_lemma1(const OpnRatios& r);

// 57/20 < rho1 + mu1 < 3 and 11/3 <= rho2 + mu2.
ConstraintReport check_lemma2(const OpnRatios& r);

// rho3 != mu3, plus the three case implications:
//   rho3 < 1                -> p^k < m
//   1 < rho3 and rho3 < mu3 -> 4m < 5p^k and p^(2k) < 2m^2
//   1 < rho3 and mu3 < rho3 -> m < p^k
ConstraintReport check_lemma3(const OpnCandidate& c);

// 3*p^k < 2*m^2.
ConstraintReport check_theorem1(const OpnCandidate& c);

// m^2 - p^k > 0, 4 | (m^2 - p^k), m^2 - p^k >= 8.
ConstraintReport check_theorem2(const OpnCandidate& c);

// For every component: 3 * sigma(p_i^a_i) * p_i^a_i <= 2N, N odd, N >= 3.
// Each check's description carries the exact margin. Throws std::domain_error
// for even or too-small N.
ConstraintReport check_theorem3(const Factorization& n_factorization);

// r = 1: 3N <= 1. r >= 2: 3^r <= 2^(r-1) * N^(r-2) (the cross-multiplied
// form). N >= 3 odd, r >= 1; violations are domain errors.
ConstraintReport check_corollary1(const Int& n, unsigned long r);

// sigma(p^k) * sigma(m^2) = 2 * p^k * m^2.
ConstraintReport check_perfection(const OpnCandidate& c);

// Every checker above, in order PERF, L1, L2, L3, T1, T2, T3, C1 (with
// r = omega(N) for C1). A genuine odd perfect number would pass all of them.
std::vector<ConstraintReport> full_audit(const OpnCandidate& c);

// Smallest r >= 1 whose corollary inequality holds for this N. Accepts any
// N >= 3 (the inequality is purely numeric); for odd N it agrees with
// check_corollary1 verdicts exactly. >= 3 for every N >= 5.
unsigned long min_omega_consistent(const Int& n);

// A solution of m^2 - p^k = 4 found by the bounded search, together with the
// exponent split x (p^(k-x) = m + 2, p^x = m - 2) and what N = p^k * m^2
// actually is.
struct GapCaseWitness {
  Int p;
  unsigned long k = 1;
  std::optional<unsigned long> x;  // exponent with p^x = m - 2, when it exists
  Int m;
  Int n;
  NClass n_class = NClass::Deficient;
};

// Exhaustive over p ≡ k ≡ 1 (mod 4), m odd, gcd(p, m) = 1, p^k <= pk_limit,
// m <= m_limit, m^2 - p^k = 4. Enumerates prime powers and tests
// isqrt(p^k + 4), so it is linear in pk_limit. Results sorted by (p, k).
// pk_limit above 1e8 is rejected (prime sieve range).
std::vector<GapCaseWitness> search_gap4(const Int& pk_limit, const Int& m_limit);

}  // namespace opn
