#pragma once

// Chains of nested orbitals and the depth/height bounds they certify.

#include <string>
#include <vector>

#include "ploi/group.hpp"
#include "ploi/orbitals.hpp"
#include "ploi/words.hpp"

namespace ploi {

// Strictly nested signed orbitals, innermost first.
struct Tower {
  std::vector<SignedOrbital> entries;

  std::size_t height() const { return entries.size(); }
};

// A tower found in a word ball. Its height is a lower bound for the depth
// of the group, never a claim of exact depth.
struct DepthReport {
  std::size_t height = 0;
  Tower witness;
  int radius = 0;
  bool exemplary = true;
  std::string summary;
};

// Longest chain on the strict-containment order of the distinct orbitals of
// the elements. Signatures are canonical (see distinct_signed_orbitals).
Tower max_tower(const std::vector<PLMap>& elements);

// For every pair (A,g) below (B,h): no orbital of g contains an end of B,
// and no orbital of g inside B shares an end with B.
bool is_exemplary(const Tower& t);

DepthReport depth_lower_bound(const GroupSpec& g, int radius, std::size_t cap = kDefaultBallCap);

// Longest strict chain of element orbitals starting at `a` and going up
// (depth) or down (height), `a` included. Throws DomainError when `a` is
// not an orbital of any element.
std::size_t orbital_depth(const Interval& a, const std::vector<PLMap>& elements);
std::size_t orbital_height(const Interval& a, const std::vector<PLMap>& elements);

}  // namespace ploi
