#include "cdl/rational.hpp"

#include <stdexcept>

namespace cdl {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

Rational rational_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  std::string str(s);
  auto slash = str.find('/');
  if (slash != std::string::npos) {
    mpz_class num, den;
    if (num.set_str(str.substr(0, slash), 10) != 0 ||
        den.set_str(str.substr(slash + 1), 10) != 0 || den == 0)
      throw std::invalid_argument("rational: cannot parse '" + str + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  auto dot = str.find('.');
  if (dot != std::string::npos) {
    std::string digits = str.substr(0, dot) + str.substr(dot + 1);
    size_t frac_len = str.size() - dot - 1;
    mpz_class num;
    if (digits.empty() || num.set_str(digits, 10) != 0)
      throw std::invalid_argument("rational: cannot parse '" + str + "'");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  mpz_class num;
  if (num.set_str(str, 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + str + "'");
  return Rational(num);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool fits_int64(const Rational& q) {
  // long is 64-bit on this platform
  return q.get_num().fits_slong_p() && q.get_den().fits_slong_p();
}

}  // namespace cdl
