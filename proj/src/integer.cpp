#include "csm/integer.hpp"

#include <stdexcept>

namespace csm {

namespace {

bool isDecimal(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start >= s.size()) return false;
  return s.find_first_not_of("0123456789", start) == std::string::npos;
}

}  // namespace

Integer parseInteger(const std::string& text) {
  if (!isDecimal(text)) throw std::invalid_argument("not a decimal integer: '" + text + "'");
  std::string body = text[0] == '+' ? text.substr(1) : text;
  return Integer(body, 10);
}

Rational parseRational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parseInteger(text));
  Integer num = parseInteger(text.substr(0, slash));
  std::string denText = text.substr(slash + 1);
  if (!denText.empty() && (denText[0] == '-' || denText[0] == '+'))
    throw std::invalid_argument("malformed rational: '" + text + "'");
  Integer den = parseInteger(denText);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace csm
