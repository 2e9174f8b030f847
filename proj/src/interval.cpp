#include "ploi/interval.hpp"

#include <ostream>

#include "ploi/error.hpp"

namespace ploi {

Interval::Interval(Rational left, Rational right) : left_(std::move(left)), right_(std::move(right)) {
  if (left_ < 0 || right_ > 1 || !(left_ < right_))
    throw DomainError("interval (" + left_.str() + ", " + right_.str() + ") is not a subinterval of (0, 1)");
}

Interval Interval::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("interval must be written a:b, got '" + std::string(text) + "'");
  return Interval(Rational::parse(text.substr(0, colon)), Rational::parse(text.substr(colon + 1)));
}

std::string Interval::str() const { return "(" + left_.str() + ", " + right_.str() + ")"; }

std::ostream& operator<<(std::ostream& os, const Interval& a) { return os << a.str(); }

}  // namespace ploi
