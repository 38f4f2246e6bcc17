// Self-verifying check records: every verdict is stored together with the
// exact operands it was computed from, so a report can be re-checked without
// re-running the computation.
#pragma once

#include <string>
#include <vector>

#include "opn/rational.hpp"

namespace opn {

enum class Cmp { Lt, Le, Eq, Ne, Gt, Ge, Divides };

std::string to_string(Cmp c);

bool eval_cmp(const Int& left, Cmp c, const Int& right);
bool eval_cmp(const Rational& left, Cmp c, const Rational& right);

struct AtomicCheck {
  std::string id;           // stable, greppable ("L1.rho1_lt_five_fourths")
  std::string description;  // human phrasing, implications included
  std::string left;         // exact operand: decimal integer or "a/b"
  Cmp cmp = Cmp::Eq;
  std::string right;
  bool applicable = true;  // false when a guarding premise does not hold
  bool holds = false;      // outcome of the comparison itself

  bool passed() const { return !applicable || holds; }
};

AtomicCheck check_int(std::string id, std::string description, const Int& left,
                      Cmp c, const Int& right);
AtomicCheck check_rat(std::string id, std::string description,
                      const Rational& left, Cmp c, const Rational& right);

struct ConstraintReport {
  std::string statement;  // "L1".."L3", "T1".."T3", "C1", "PERF"
  std::string title;
  std::vector<AtomicCheck> checks;

  bool passed() const;  // conjunction of the atomic verdicts
};

}  // namespace opn
