#include "ploi/towers.hpp"

#include <algorithm>

#include "ploi/error.hpp"

namespace ploi {

namespace {

std::vector<Interval> distinct_orbitals(const std::vector<PLMap>& elements) {
  std::vector<Interval> all;
  for (const auto& e : elements)
    for (auto& a : support(e)) all.push_back(std::move(a));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::size_t index_of(const std::vector<Interval>& nodes, const Interval& a) {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), a);
  if (it == nodes.end() || *it != a) throw DomainError(a.str() + " is not an orbital of any given element");
  return static_cast<std::size_t>(it - nodes.begin());
}

// Longest chain through node `start`, walking to strict supersets (up) or
// subsets (down). Nodes are visited in an order compatible with inclusion
// (shorter intervals first).
std::size_t chain_from(const std::vector<Interval>& nodes, std::size_t start, bool up) {
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return nodes[i].length() < nodes[j].length(); });
  if (!up) std::reverse(order.begin(), order.end());
  std::vector<std::size_t> best(nodes.size(), 0);
  best[start] = 1;
  std::size_t result = 1;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    std::size_t i = order[pos];
    if (best[i] == 0) continue;
    result = std::max(result, best[i]);
    for (std::size_t q = pos + 1; q < order.size(); ++q) {
      std::size_t j = order[q];
      bool next = up ? nodes[i].strictly_within(nodes[j]) : nodes[j].strictly_within(nodes[i]);
      if (next) best[j] = std::max(best[j], best[i] + 1);
    }
  }
  return result;
}

}  // namespace

Tower max_tower(const std::vector<PLMap>& elements) {
  auto nodes = distinct_signed_orbitals(elements);
  const std::size_t n = nodes.size();
  Tower t;
  if (n == 0) return t;

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return nodes[i].orbital.length() < nodes[j].orbital.length();
  });

  // best[i]: longest chain with node i on top; below[i]: the next node down.
  std::vector<std::size_t> best(n, 1);
  std::vector<std::size_t> below(n, n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::size_t i = order[pos];
    for (std::size_t q = 0; q < pos; ++q) {
      std::size_t j = order[q];
      if (!nodes[j].orbital.strictly_within(nodes[i].orbital)) continue;
      if (best[j] + 1 > best[i] || (best[j] + 1 == best[i] && j < below[i])) {
        best[i] = best[j] + 1;
        below[i] = j;
      }
    }
  }
  std::size_t top = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (best[i] > best[top]) top = i;

  for (std::size_t i = top; i != n; i = below[i]) t.entries.push_back(nodes[i]);
  std::reverse(t.entries.begin(), t.entries.end());
  return t;
}

bool is_exemplary(const Tower& t) {
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    auto inner = support(t.entries[i].signature);
    for (std::size_t j = i + 1; j < t.entries.size(); ++j) {
      const Interval& b = t.entries[j].orbital;
      for (const auto& o : inner) {
        if (o.contains(b.left()) || o.contains(b.right())) return false;
        if (o.within(b) && (o.left() == b.left() || o.right() == b.right())) return false;
      }
    }
  }
  return true;
}

DepthReport depth_lower_bound(const GroupSpec& g, int radius, std::size_t cap) {
  if (radius < 1) throw DomainError("depth search needs radius >= 1");
  WordBall b = ball(g, radius, cap);
  DepthReport rep;
  rep.radius = radius;
  rep.witness = max_tower(b.elements);
  rep.height = rep.witness.height();
  rep.exemplary = is_exemplary(rep.witness);
  rep.summary = "tower of height " + std::to_string(rep.height) + " among " + std::to_string(b.size()) +
                " elements of the radius-" + std::to_string(radius) + " ball; depth >= " +
                std::to_string(rep.height) + ", so if the group is solvable its derived length is >= " +
                std::to_string(rep.height);
  if (!rep.exemplary) rep.summary += "; the tower is not exemplary, so the group is not solvable";
  return rep;
}

std::size_t orbital_depth(const Interval& a, const std::vector<PLMap>& elements) {
  auto nodes = distinct_orbitals(elements);
  return chain_from(nodes, index_of(nodes, a), true);
}

std::size_t orbital_height(const Interval& a, const std::vector<PLMap>& elements) {
  auto nodes = distinct_orbitals(elements);
  return chain_from(nodes, index_of(nodes, a), false);
}

}  // namespace ploi
