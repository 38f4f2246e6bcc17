#include "opn/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace opn {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) {
    throw std::domain_error("fraction denominator must be nonzero");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Drops '_' separators; they must sit between two digits.
std::string strip_separators(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '_') {
      const bool digit_before = i > 0 && is_digit(text[i - 1]);
      const bool digit_after = i + 1 < text.size() && is_digit(text[i + 1]);
      if (!digit_before || !digit_after) {
        throw std::invalid_argument("misplaced digit separator in '" + text + "'");
      }
      continue;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

Int parse_int(const std::string& text) {
  const std::string digits = strip_separators(text);
  std::size_t start = 0;
  if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) start = 1;
  if (digits.size() == start) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!is_digit(digits[i])) {
      throw std::invalid_argument("not an integer: '" + text + "'");
    }
  }
  return Int(digits, 10);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_int(text));
  }
  if (text.find('/', slash + 1) != std::string::npos) {
    throw std::invalid_argument("not a fraction: '" + text + "'");
  }
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  return make_rational(num, den);
}

}  // namespace opn
