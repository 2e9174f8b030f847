#pragma once

// Piecewise-linear orientation-preserving homeomorphisms of [0, 1].
//
// Maps act on the right: compose(f, g) is the map x -> (x f) g, and the
// conjugate of f by h is h^-1 f h. A PLMap stores its breakpoints in
// normalized form (no interior point collinear with its neighbours), so two
// maps are equal exactly when their breakpoint lists are equal.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ploi/interval.hpp"
#include "ploi/rational.hpp"

namespace ploi {

struct Breakpoint {
  Rational x;
  Rational y;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

class PLMap;

namespace detail {
// Builds a map from breakpoints already known to be valid (normalizes only).
PLMap make_trusted(std::vector<Breakpoint> points);
}  // namespace detail

class PLMap {
 public:
  // The identity.
  PLMap();

  // Validates (starts at (0,0), ends at (1,1), both coordinates strictly
  // increasing) and normalizes. Throws DomainError on invalid input.
  explicit PLMap(std::vector<Breakpoint> points);

  const std::vector<Breakpoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool is_identity() const { return points_.size() == 2; }
  std::size_t hash() const { return hash_; }

  friend bool operator==(const PLMap& a, const PLMap& b) {
    return a.hash_ == b.hash_ && a.points_ == b.points_;
  }

 private:
  struct Trusted {};
  // Skips validation; still normalizes. Used by the algebra, whose outputs
  // are valid by construction.
  PLMap(Trusted, std::vector<Breakpoint> points);
  void normalize_and_hash();

  std::vector<Breakpoint> points_;
  std::size_t hash_ = 0;

  friend PLMap detail::make_trusted(std::vector<Breakpoint> points);
};

PLMap identity();

// Exact value of x f for 0 <= x <= 1.
Rational eval(const PLMap& f, const Rational& x);
// Exact value of x f^-1.
Rational eval_inverse(const PLMap& f, const Rational& y);

PLMap compose(const PLMap& f, const PLMap& g);
PLMap compose(std::span<const PLMap> product);
PLMap inverse(const PLMap& f);
PLMap power(const PLMap& f, long k);
// f^h = h^-1 f h
PLMap conjugate(const PLMap& f, const PLMap& h);
// [f, g] = f^-1 g^-1 f g
PLMap commutator(const PLMap& f, const PLMap& g);

// Interior points where the left and right slopes differ.
std::vector<Rational> breakpoints(const PLMap& f);

// Slope of the affine piece immediately right (resp. left) of x.
Rational slope_right_of(const PLMap& f, const Rational& x);
Rational slope_left_of(const PLMap& f, const Rational& x);

// Maximal open intervals of moved points, left to right.
std::vector<Interval> support(const PLMap& f);

// True iff `a` is one of the orbitals of f.
bool has_orbital(const PLMap& f, const Interval& a);

// f restricted to `a` and extended by the identity. `a` must be invariant
// under f (its ends fixed).
PLMap restrict_to(const PLMap& f, const Interval& a);

// One map per orbital of f, each equal to f there and the identity elsewhere.
std::vector<PLMap> one_bump_factors(const PLMap& f);

// (right derivative at a.left, left derivative at a.right). Requires f to
// fix both ends of a.
std::pair<Rational, Rational> end_slopes(const PLMap& f, const Interval& a);

// Image of an interval under f.
Interval image(const Interval& a, const PLMap& f);

// Lexicographic order on breakpoint lists. Used only as a deterministic
// tie-break; it is not a group order.
bool canonical_less(const PLMap& a, const PLMap& b);

}  // namespace ploi

template <>
struct std::hash<ploi::PLMap> {
  std::size_t operator()(const ploi::PLMap& f) const noexcept { return f.hash(); }
};
