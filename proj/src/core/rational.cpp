#include "vafilt/core/rational.hpp"

#include "vafilt/core/errors.hpp"

namespace vafilt {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(mpz_class(num), mpz_class(den));
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size()) return false;
    for (std::size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error("malformed rational '" + s + "'");
    return Rational(mpq_class(mpz_class(strip_plus(s))));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw Error("malformed rational '" + s + "'");
  mpz_class d(strip_plus(den));
  if (d == 0) throw DivisionByZero();
  return Rational(mpq_class(mpz_class(strip_plus(num)), d));
}

std::string Rational::str() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

long Rational::floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return f.get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

Rational rational_binomial(const Rational& a, long i) {
  if (i < 0) return Rational(0);
  Rational result(1);
  for (long k = 0; k < i; ++k) {
    result *= (a - Rational(k));
    result /= Rational(k + 1);
  }
  return result;
}

Rational integer_binomial(long top, long i) {
  if (i < 0) return Rational(0);
  if (top >= 0 && i > top) return Rational(0);
  mpz_class r;
  if (top >= 0) {
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(i));
  } else {
    mpz_class t(top);
    mpz_bin_ui(r.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return Rational(mpq_class(r));
}

}  // namespace vafilt
