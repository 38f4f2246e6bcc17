#include "opn/report.hpp"

#include <stdexcept>

namespace opn {

std::string to_string(Cmp c) {
  switch (c) {
    case Cmp::Lt: return "<";
    case Cmp::Le: return "<=";
    case Cmp::Eq: return "=";
    case Cmp::Ne: return "!=";
    case Cmp::Gt: return ">";
    case Cmp::Ge: return ">=";
    case Cmp::Divides: return "|";
  }
  return "?";
}

bool eval_cmp(const Int& left, Cmp c, const Int& right) {
  switch (c) {
    case Cmp::Lt: return left < right;
    case Cmp::Le: return left <= right;
    case Cmp::Eq: return left == right;
    case Cmp::Ne: return left != right;
    case Cmp::Gt: return left > right;
    case Cmp::Ge: return left >= right;
    case Cmp::Divides:
      if (left == 0) return right == 0;
      return mpz_divisible_p(right.get_mpz_t(), left.get_mpz_t()) != 0;
  }
  return false;
}

bool eval_cmp(const Rational& left, Cmp c, const Rational& right) {
  switch (c) {
    case Cmp::Lt: return left < right;
    case Cmp::Le: return left <= right;
    case Cmp::Eq: return left == right;
    case Cmp::Ne: return left != right;
    case Cmp::Gt: return left > right;
    case Cmp::Ge: return left >= right;
    case Cmp::Divides:
      throw std::logic_error("divisibility is an integer comparison");
  }
  return false;
}

AtomicCheck check_int(std::string id, std::string description, const Int& left,
                      Cmp c, const Int& right) {
  AtomicCheck a;
  a.id = std::move(id);
  a.description = std::move(description);
  a.left = to_string(left);
  a.cmp = c;
  a.right = to_string(right);
  a.holds = eval_cmp(left, c, right);
  return a;
}

AtomicCheck check_rat(std::string id, std::string description,
                      const Rational& left, Cmp c, const Rational& right) {
  AtomicCheck a;
  a.id = std::move(id);
  a.description = std::move(description);
  a.left = to_string(left);
  a.cmp = c;
  a.right = to_string(right);
  a.holds = eval_cmp(left, c, right);
  return a;
}

bool ConstraintReport::passed() const {
  for (const AtomicCheck& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

}  // namespace opn
