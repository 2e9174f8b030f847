#pragma once

// One-orbital pieces of group elements (a truncation of the split group),
// their depths, reordering of products by depth, and the search that turns
// an orbital of a product of pieces into an orbital of a group element.

#include <optional>
#include <string>
#include <vector>

#include "ploi/group.hpp"
#include "ploi/interval.hpp"
#include "ploi/plmap.hpp"
#include "ploi/words.hpp"

namespace ploi {

struct GammaSet {
  std::vector<PLMap> pieces;  // distinct, one orbital each
  int source_radius = 0;
};

struct DepthTaggedPiece {
  PLMap piece;
  Interval orbital;
  std::size_t g_depth = 1;
};

// One-bump factors of every element of the radius ball, deduplicated, in
// ball order.
GammaSet gamma_g(const GroupSpec& g, int radius, std::size_t cap = kDefaultBallCap);

// Each piece tagged with the depth of its orbital among the set's orbitals.
std::vector<DepthTaggedPiece> tag_depths(const GammaSet& s);

// Tags arbitrary one-orbital pieces with depths measured against the
// orbitals of `reference` together with their own.
std::vector<DepthTaggedPiece> tag_pieces(const std::vector<PLMap>& pieces, const GammaSet& reference);

// Reorders a product so depths are nondecreasing, swapping adjacent
// (p, q) with depth(p) > depth(q) into (q, p^q). The composite is unchanged.
// Throws Obstruction when a swap meets overlapping, non-nested orbitals.
std::vector<DepthTaggedPiece> split_form(std::vector<DepthTaggedPiece> product);

// The closure of every later orbital lies inside the first piece's orbital.
// Entries must have one orbital each (DomainError otherwise).
bool first_orbital_dominant(const std::vector<PLMap>& product);

// Support of the composite of the product.
std::vector<Interval> product_support(const std::vector<PLMap>& product);

struct SplitTraceStep {
  std::string step;  // assurance_k_large, depth_ordering, leading_orbital,
                     // force_containment, count_leading, collapse
  std::size_t length = 0;
  std::optional<Interval> leading;
  std::string note;
};

struct SplitSearchResult {
  PLMap element;  // first ball element with orbital A
  Word word;
  std::size_t leading_shrinks = 0;
  std::vector<SplitTraceStep> trace;
};

// Given one-orbital pieces whose composite has orbital A, rewrites the
// product until a single piece with orbital A remains, then returns the
// first element of G's radius ball having orbital A. `max_depth` bounds the
// number of times the leading orbital may shrink; `max_steps` bounds the
// total number of rewriting rounds. Throws SearchExhausted when a budget
// runs out or no ball element has orbital A, Obstruction on geometry that
// rules out solvability, DomainError when A is not an orbital of the
// composite.
SplitSearchResult split_stable_search(const Interval& a, const std::vector<PLMap>& product, const GroupSpec& g,
                                      int radius, std::size_t max_depth, std::size_t max_steps = 10000,
                                      std::size_t cap = kDefaultBallCap);

}  // namespace ploi
