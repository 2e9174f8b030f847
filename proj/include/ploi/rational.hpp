#pragma once

// Exact rational numbers backed by GMP.
//
// Values are always in lowest terms with a positive denominator; GMP keeps
// mpq_t canonical after every arithmetic operation, and construction from a
// numerator/denominator pair canonicalizes explicitly.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ploi {

class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT: integers convert implicitly
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "p/q" or "p" with optional sign; the result is reduced.
  static Rational parse(std::string_view text);

  // Lowest-terms rendering, "p/q" or "p" when the denominator is 1.
  std::string str() const { return q_.get_str(); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  // Denominator is a power of two.
  bool is_dyadic() const;

  // Approximate value, only for rendering graphics.
  double to_double() const { return q_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational reciprocal() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Exponent e with value == 2^e, if the value is a positive power of two.
bool power_of_two_exponent(const Rational& value, long& exponent);

}  // namespace ploi

template <>
struct std::hash<ploi::Rational> {
  std::size_t operator()(const ploi::Rational& r) const noexcept { return r.hash(); }
};
