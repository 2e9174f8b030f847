#include "ploi/rational.hpp"

#include <cctype>
#include <ostream>

#include "ploi/error.hpp"

namespace ploi {

namespace {

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t h = static_cast<std::size_t>(mpz_size(z)) * 0x9e3779b97f4a7c15ULL;
  if (mpz_size(z) > 0) h ^= static_cast<std::size_t>(mpz_getlimbn(z, 0));
  if (mpz_size(z) > 1) h ^= static_cast<std::size_t>(mpz_getlimbn(z, 1)) * 31;
  return h ^ static_cast<std::size_t>(mpz_sgn(z) + 1);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  mpz_class num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) throw ParseError("not a fraction: '" + std::string(text) + "'");
  } else {
    std::string_view d = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) || !parse_integer(d, den) || d[0] == '-' || d[0] == '+')
      throw ParseError("not a fraction: '" + std::string(text) + "'");
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

bool Rational::is_dyadic() const {
  const mpz_class& d = q_.get_den();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::hash() const {
  return hash_mpz(q_.get_num_mpz_t()) * 1000003u ^ hash_mpz(q_.get_den_mpz_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool power_of_two_exponent(const Rational& value, long& exponent) {
  if (value.sign() <= 0) return false;
  mpz_srcptr num = value.raw().get_num_mpz_t();
  mpz_srcptr den = value.raw().get_den_mpz_t();
  if (mpz_popcount(num) != 1 || mpz_popcount(den) != 1) return false;
  exponent = static_cast<long>(mpz_scan1(num, 0)) - static_cast<long>(mpz_scan1(den, 0));
  return true;
}

}  // namespace ploi
