#include "opn/candidate.hpp"

#include <stdexcept>
#include <utility>

namespace opn {

OpnCandidate OpnCandidate::create(const Int& p, unsigned long k, const Int& m) {
  if (p < 5) throw std::domain_error("candidate rejected: p must be at least 5");
  if (!is_prime(p)) throw std::domain_error("candidate rejected: p must be prime");
  if (mpz_fdiv_ui(p.get_mpz_t(), 4) != 1) {
    throw std::domain_error("candidate rejected: p must be congruent to 1 mod 4");
  }
  if (k < 1 || k % 4 != 1) {
    throw std::domain_error("candidate rejected: k must be congruent to 1 mod 4");
  }
  if (m < 1) throw std::domain_error("candidate rejected: m must be positive");
  if (mpz_even_p(m.get_mpz_t())) {
    throw std::domain_error("candidate rejected: m must be odd");
  }
  if (gcd(p, m) != 1) {
    throw std::domain_error("candidate rejected: gcd(p, m) must be 1");
  }
  return OpnCandidate(p, k, m);
}

OpnCandidate::OpnCandidate(Int p, unsigned long k, Int m)
    : p_(std::move(p)),
      k_(k),
      m_(std::move(m)),
      pk_(ipow(p_, k_)),
      m2_(m_ * m_),
      fact_pk_(Factorization::Trusted{}, {{p_, k_}}),
      fact_m_(factorize(m_)),
      fact_m2_(fact_m_.squared()) {}

Factorization OpnCandidate::n_factorization() const {
  std::vector<Factorization::Term> terms = fact_m2_.terms();
  auto pos = terms.begin();
  while (pos != terms.end() && pos->prime < p_) ++pos;
  terms.insert(pos, {p_, k_});
  return Factorization(Factorization::Trusted{}, std::move(terms));
}

OpnRatios compute_ratios(const OpnCandidate& c) {
  const Int sig_pk = sigma(c.pk_factorization());
  const Int sig_m = sigma(c.m_factorization());
  const Int sig_m2 = sigma(c.m2_factorization());
  OpnRatios r;
  r.rho1 = make_rational(sig_pk, c.pk());
  r.rho2 = make_rational(sig_pk, c.m2());
  r.rho3 = make_rational(sig_pk, c.m());
  r.mu1 = make_rational(sig_m2, c.m2());
  r.mu2 = make_rational(sig_m2, c.pk());
  r.mu3 = make_rational(sig_m, c.pk());
  return r;
}

}  // namespace opn
