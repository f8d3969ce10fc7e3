#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace vafilt {

/// Exact rational scalar backed by GMP.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  const mpq_class& get() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }
  /// "p/q", or "p" when the denominator is one.
  std::string str() const;
  /// Floor of the value; only valid when it fits in a long.
  long floor() const;

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

/// binom(a, i) = a(a-1)...(a-i+1)/i! for rational a and integer i >= 0; zero for i < 0.
Rational rational_binomial(const Rational& a, long i);

/// binom(top, i) for any integer top (negative allowed).
Rational integer_binomial(long top, long i);

/// (-1)^k as a Rational.
inline Rational sign_power(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace vafilt
