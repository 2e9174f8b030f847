#pragma once

// Word balls in a finitely generated group and a commutator-based
// approximation of its derived series.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ploi/group.hpp"
#include "ploi/plmap.hpp"

namespace ploi {

inline constexpr std::size_t kDefaultBallCap = 20000;

// Letter i > 0 is generator i (1-based), -i its inverse.
using Word = std::vector<int>;

std::string word_string(const Word& w);

// All distinct elements that are products of at most `radius` generators
// and inverses, in breadth-first order; elements[0] is the identity.
struct WordBall {
  int radius = 0;
  std::vector<PLMap> elements;
  std::vector<Word> words;  // words[i] spells elements[i]
  std::unordered_map<PLMap, std::size_t> index;

  std::size_t size() const { return elements.size(); }
  bool contains(const PLMap& f) const { return index.count(f) != 0; }
  const Word& word_of(const PLMap& f) const { return words.at(index.at(f)); }
};

// Throws CapExceeded when more than `cap` elements are produced.
WordBall ball(const GroupSpec& g, int radius, std::size_t cap = kDefaultBallCap);

// Level 0 is the ball itself; level k holds the distinct nontrivial
// commutators [x, y] of pairs of level k-1 elements. Throws CapExceeded
// when a level grows beyond `cap`.
std::vector<PLMap> derived_generators(const WordBall& b, int level, std::size_t cap = kDefaultBallCap);

struct DerivedOptions {
  std::size_t cap = kDefaultBallCap;
  // Commutators at each level are taken among the first `level_width`
  // elements of the previous level (breadth-first order, so shortest words
  // first). Zero means no truncation.
  std::size_t level_width = 160;
  int max_level = 16;
};

// Sandwich evidence for the derived length of a group. A nontrivial level
// k-1 commutator proves derived length >= k; an empty level k is only
// evidence (derived subgroups need not be finitely generated).
struct DerivedReport {
  int radius = 0;
  int lower_bound = 0;
  std::optional<int> vanishing_level;
  std::optional<PLMap> witness;      // nontrivial element of level lower_bound-1
  std::string witness_expression;    // e.g. "[a1,a2]"
  std::vector<std::size_t> level_sizes;
  std::size_t level_width = 0;
  bool truncated = false;
  std::string summary;
};

DerivedReport derived_length_bounds(const GroupSpec& g, int radius, const DerivedOptions& opts = {});

}  // namespace ploi
