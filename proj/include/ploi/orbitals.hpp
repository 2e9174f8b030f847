#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ploi/group.hpp"
#include "ploi/interval.hpp"
#include "ploi/plmap.hpp"
#include "ploi/words.hpp"

namespace ploi {

// An orbital together with the element that owns it.
struct SignedOrbital {
  Interval orbital;
  PLMap signature;

  friend bool operator==(const SignedOrbital&, const SignedOrbital&) = default;
};

// All signed orbitals of the given elements, one per (element, orbital).
std::vector<SignedOrbital> signed_orbitals(const std::vector<PLMap>& elements);

// Distinct orbitals of the elements, each with the canonically smallest
// signature owning it, sorted by (left, right).
std::vector<SignedOrbital> distinct_signed_orbitals(const std::vector<PLMap>& elements);

// Orbitals of <generators>: connected components of the union of the
// generator supports. Every group element's support lies in that union, and
// each component is invariant under every generator, so the components are
// exactly the group's orbitals.
std::vector<Interval> group_orbitals(const GroupSpec& g);
std::vector<Interval> union_components(std::vector<Interval> intervals);

// Some orbital of h lies in `a` and shares the named end with it.
bool realizes_end(const PLMap& h, const Interval& a, End end);

// a < c < b < d (or the mirror image) for orbitals (a,b) and (c,d).
bool is_transition_chain(const SignedOrbital& s, const SignedOrbital& t);
bool is_transition_chain(const Interval& s, const Interval& t);

// Every overlapping-but-not-nested pair of distinct orbitals among the
// elements' orbitals, one pair per orbital pair, with canonical signatures.
// Sorted by the first orbital, then the second.
std::vector<std::pair<SignedOrbital, SignedOrbital>> find_transition_chains(const std::vector<PLMap>& elements);

enum class BalanceStatus { BalancedUpToRadius, ImbalancedWitness };

struct BalanceWitness {
  SignedOrbital element_orbital;  // realizes exactly one end of group_orbital
  Interval group_orbital;
  End realized;
  std::vector<PLMap> subgroup;    // generators of the subgroup owning group_orbital
};

struct BalanceVerdict {
  BalanceStatus status = BalanceStatus::BalancedUpToRadius;
  int radius = 0;
  std::size_t max_subset = 2;
  std::optional<BalanceWitness> witness;
  std::string note;
};

// Semi-decision for imbalance: checks the group itself against every ball
// element, then every subgroup generated by at most `max_subset` ball
// elements (only 1 and 2 are supported) against its own generators.
BalanceVerdict balance_check(const GroupSpec& g, int radius, std::size_t max_subset = 2,
                             std::size_t cap = kDefaultBallCap);

}  // namespace ploi
