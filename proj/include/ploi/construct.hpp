#pragma once

// Named maps and generator families: alpha_1, alpha_2, rescaled copies,
// bumps, beta_k, the iterated wreath products W_n and truncations of G_n.

#include <string>

#include "ploi/group.hpp"
#include "ploi/interval.hpp"
#include "ploi/plmap.hpp"

namespace ploi {

// [(0,0),(1/4,1/2),(1/2,3/4),(1,1)]
PLMap alpha1();
// [(0,0),(1/4,1/4),(5/16,3/8),(3/8,7/16),(1/2,1/2),(1,1)]
PLMap alpha2();

// f conjugated by the increasing affine map of [0,1] onto the closure of A,
// extended by the identity outside A.
PLMap scale_into(const PLMap& f, const Interval& a);

// scale_into(alpha1(), a): a single orbital a, moving points right.
PLMap bump(const Interval& a);

// alpha2 conjugated by alpha1^k; beta(0) == alpha2().
PLMap beta(long k);

// alpha_1, ..., alpha_n with alpha_i = scale_into(alpha_{i-1}, (1/4,1/2)).
// Throws DomainError for n < 1.
GroupSpec w_generators(int n);

struct TruncationParams {
  int level = 0;  // n
  int width = 0;  // conjugates by alpha1^k for |k| <= width

  std::string str() const { return "level " + std::to_string(level) + ", width " + std::to_string(width); }
};

// S(1) = {alpha2}, S(n) = {h rescaled twice by (1/4,1/2) : h in S(n-1)} + {alpha2};
// the result is every element of S(level) conjugated by alpha1^k, |k| <= width.
// Level 0 gives the trivial group.
GroupSpec gn_generators(const TruncationParams& p);

// Every slope is a power of two and every breakpoint coordinate is dyadic.
bool f_membership(const PLMap& f);

// `a` lies inside one orbital of f and is disjoint from its image under f,
// so it sits inside a single fundamental domain of f there.
bool within_fundamental_domain(const Interval& a, const PLMap& f);

}  // namespace ploi
