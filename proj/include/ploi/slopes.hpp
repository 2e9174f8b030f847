#pragma once

// End-slope homomorphism, its image lattice, controllers and c-forms.
//
// Slopes are kept multiplicatively as exact rationals. Lattice questions are
// answered over exponent vectors with respect to a coprime base of all
// numerators and denominators involved, so no integer factoring is needed.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ploi/group.hpp"
#include "ploi/interval.hpp"
#include "ploi/plmap.hpp"
#include "ploi/words.hpp"

namespace ploi {

struct SlopePair {
  Rational left{1};
  Rational right{1};

  bool is_trivial() const { return left.is_one() && right.is_one(); }
  SlopePair inverse() const { return {left.reciprocal(), right.reciprocal()}; }
  std::string str() const { return "(" + left.str() + ", " + right.str() + ")"; }

  friend SlopePair operator*(const SlopePair& a, const SlopePair& b) {
    return {a.left * b.left, a.right * b.right};
  }
  friend bool operator==(const SlopePair&, const SlopePair&) = default;
};

enum class LatticeKind { Trivial, Cyclic, HigherRank };

std::string to_string(LatticeKind kind);

struct LatticeVerdict {
  int rank = 0;
  LatticeKind kind = LatticeKind::Trivial;
  // Generator of a cyclic image, oriented so the left slope exceeds 1 (or,
  // when the left slope is 1, so the right one does).
  std::optional<SlopePair> generator;
  // The image contains a nonzero vector trivial in one component.
  bool imbalanced = false;
  // Pairwise coprime integers > 1; basis rows are exponents over
  // (left slope base..., right slope base...).
  std::vector<mpz_class> base;
  std::vector<std::vector<mpz_class>> basis;
};

struct CForm {
  long exponent = 0;
  PLMap residue;
};

// (slope right of A.left, slope left of A.right). Throws DomainError when h
// does not fix both ends of A.
SlopePair phi(const PLMap& h, const Interval& a);

// Throws DomainError when A is not an orbital of the group.
LatticeVerdict image_lattice(const GroupSpec& g, const Interval& a);

// First ball element (breadth-first) whose slope pair generates the cyclic
// image. Throws DomainError when the image is not cyclic and
// SearchExhausted when the radius is too small.
PLMap find_controller(const GroupSpec& g, const Interval& a, int radius, std::size_t cap = kDefaultBallCap);

// h = c^k residue with the residue the identity near both ends of A.
// Throws DomainError when phi(h) is not a power of phi(c).
CForm c_form(const PLMap& h, const PLMap& c, const Interval& a);

// One end slope above 1 and the other below 1.
bool is_consistent_controller(const PLMap& c, const Interval& a);
// A is an orbital of c.
bool controller_realizes(const PLMap& c, const Interval& a);

// Exponent k with target = base^k componentwise, if any. Exposed for the
// classification code, which combines controllers.
std::optional<long> slope_log(const SlopePair& target, const SlopePair& base);

}  // namespace ploi
