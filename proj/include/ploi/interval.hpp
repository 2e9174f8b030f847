#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "ploi/rational.hpp"

namespace ploi {

// An open subinterval (left, right) of [0, 1] with rational ends.
class Interval {
 public:
  Interval(Rational left, Rational right);

  // "a:b" with fractions on both sides.
  static Interval parse(std::string_view text);

  const Rational& left() const { return left_; }
  const Rational& right() const { return right_; }
  Rational length() const { return right_ - left_; }

  bool contains(const Rational& x) const { return left_ < x && x < right_; }
  // this ⊆ outer
  bool within(const Interval& outer) const {
    return outer.left_ <= left_ && right_ <= outer.right_;
  }
  bool strictly_within(const Interval& outer) const { return within(outer) && *this != outer; }
  // closure of this ⊂ outer (both ends strictly inside)
  bool closure_within(const Interval& outer) const {
    return outer.left_ < left_ && right_ < outer.right_;
  }
  bool overlaps(const Interval& o) const { return left_ < o.right_ && o.left_ < right_; }
  bool contains_end_of(const Interval& o) const { return contains(o.left_) || contains(o.right_); }

  std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;
  // Orders by left end, then right end.
  friend std::strong_ordering operator<=>(const Interval& a, const Interval& b) {
    if (auto c = a.left_ <=> b.left_; c != 0) return c;
    return a.right_ <=> b.right_;
  }

 private:
  Rational left_;
  Rational right_;
};

std::ostream& operator<<(std::ostream& os, const Interval& a);

enum class End { Left, Right };

}  // namespace ploi

template <>
struct std::hash<ploi::Interval> {
  std::size_t operator()(const ploi::Interval& a) const noexcept {
    return a.left().hash() * 0x100000001b3ULL ^ a.right().hash();
  }
};
