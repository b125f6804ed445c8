#include "loccw/rational.hpp"

#include "loccw/errors.hpp"

namespace loccw {

std::string to_string(const Rational& q) {
  return q.get_str();
}

namespace {

// Decimal integer, optional leading '-', no leading zeros, no whitespace.
// GMP's own string parser is too forgiving for a strict file format.
bool is_strict_integer(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  if (i == s.size()) return false;
  if (s[i] == '0') return i + 1 == s.size();
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class integer_from_string(const std::string& s, const std::string& whole) {
  if (!is_strict_integer(s)) {
    throw MalformedInput("invalid integer '" + s + "' in rational '" + whole + "'");
  }
  return mpz_class(s, 10);
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  mpz_class num;
  mpz_class den{1};
  if (slash == std::string::npos) {
    num = integer_from_string(text, text);
  } else {
    num = integer_from_string(text.substr(0, slash), text);
    den = integer_from_string(text.substr(slash + 1), text);
  }
  if (sgn(den) <= 0) {
    throw MalformedInput("rational '" + text + "' has non-positive denominator");
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (den != 1 && g != 1) {
    throw MalformedInput("rational '" + text + "' is not reduced");
  }
  Rational q(num, den);
  return q;
}

std::string to_string(const GaussianRational& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  std::string imag = to_string(z.im) + "i";
  if (sgn(z.re) == 0) return imag;
  if (sgn(z.im) > 0) return to_string(z.re) + "+" + imag;
  return to_string(z.re) + imag;  // '-' comes with the imaginary part
}

}  // namespace loccw
