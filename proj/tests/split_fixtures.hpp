#pragma once

// Products of one-orbital pieces shared by the split unit tests and the
// acceptance binary.

#include <string>
#include <vector>

#include "oracles.hpp"
#include "ploi/construct.hpp"
#include "ploi/split.hpp"

namespace fixtures {

struct SearchInstance {
  std::string name;
  ploi::Interval target;
  std::vector<ploi::PLMap> product;
  ploi::GroupSpec group;
  int radius;
};

inline std::vector<SearchInstance> search_instances() {
  using namespace ploi;
  const Interval unit(0, 1);
  const Interval a2(Rational(1, 4), Rational(1, 2));
  const PLMap x = alpha1();
  const PLMap y = alpha2();
  const GroupSpec w2 = w_generators(2);
  const GroupSpec w3 = w_generators(3);
  const PLMap z = w3.generators()[2];
  return {
      {"single piece", a2, {y}, w2, 2},
      {"padded power", a2, {inverse(y), power(y, 2)}, w2, 2},
      {"distractor", a2, {y, beta(2)}, w2, 3},
      {"outer then inner", unit, {x, y}, w2, 2},
      {"inner then outer", unit, {y, x}, w2, 2},
      {"repeated leading orbital", unit, {x, x, inverse(x)}, w2, 2},
      {"two levels", a2, {z, y}, w3, 2},
      {"disjoint neighbour", Interval(Rational(1, 2), Rational(3, 4)), {beta(1), beta(-1)}, gn_generators({1, 1}), 1},
      {"conjugated piece", Interval(Rational(1, 2), Rational(3, 4)), {beta(1)}, w2, 3},
      {"cancelling with distractor", a2, {power(y, 2), beta(-1), inverse(y)}, w2, 2},
  };
}

// Random products of pieces from a truncation of the split group.
inline std::vector<ploi::PLMap> random_product(oracle::Generator& gen, const std::vector<ploi::PLMap>& pieces,
                                               int min_len, int max_len) {
  std::vector<ploi::PLMap> out;
  int len = gen.uniform(min_len, max_len);
  for (int i = 0; i < len; ++i)
    out.push_back(pieces[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(pieces.size()) - 1))]);
  return out;
}

// A first-orbital-dominant product: a leading piece followed by pieces
// whose orbital closures lie inside its orbital.
inline std::vector<ploi::PLMap> dominant_product(oracle::Generator& gen, const std::vector<ploi::PLMap>& pieces) {
  using namespace ploi;
  for (;;) {
    const PLMap& first = pieces[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(pieces.size()) - 1))];
    Interval lead = support(first).front();
    std::vector<PLMap> inner;
    for (const auto& p : pieces)
      if (support(p).front().closure_within(lead)) inner.push_back(p);
    if (inner.empty()) continue;
    std::vector<PLMap> out{first};
    auto tail = random_product(gen, inner, 1, 4);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  }
}

}  // namespace fixtures
