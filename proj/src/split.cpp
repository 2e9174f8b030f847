#include "ploi/split.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "ploi/error.hpp"

namespace ploi {

namespace {

Interval only_orbital(const PLMap& p) {
  auto s = support(p);
  if (s.size() != 1) throw DomainError("piece must have exactly one orbital, found " + std::to_string(s.size()));
  return s.front();
}

// Depths of distinct orbitals: 1 + the largest depth of a strict superset.
class DepthTable {
 public:
  explicit DepthTable(std::vector<Interval> nodes) : nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end(),
              [](const Interval& x, const Interval& y) { return x.length() > y.length() || (x.length() == y.length() && x < y); });
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
    depth_.assign(nodes_.size(), 1);
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (nodes_[i].strictly_within(nodes_[j])) depth_[i] = std::max(depth_[i], depth_[j] + 1);
  }

  std::size_t depth_of(const Interval& a) const {
    std::size_t d = 1;
    for (std::size_t j = 0; j < nodes_.size(); ++j)
      if (a.strictly_within(nodes_[j])) d = std::max(d, depth_[j] + 1);
    return d;
  }

 private:
  std::vector<Interval> nodes_;
  std::vector<std::size_t> depth_;
};

std::vector<Interval> orbitals_of(const std::vector<PLMap>& pieces) {
  std::vector<Interval> out;
  for (const auto& p : pieces)
    for (auto& a : support(p)) out.push_back(std::move(a));
  return out;
}

bool swap_forward(std::vector<DepthTaggedPiece>& v, std::size_t i) {
  // v[i] moves one place left past v[i-1].
  DepthTaggedPiece& p = v[i - 1];
  DepthTaggedPiece& q = v[i];
  if (p.orbital.overlaps(q.orbital) && !p.orbital.within(q.orbital))
    throw Obstruction("cannot reorder pieces with orbitals " + p.orbital.str() + " and " + q.orbital.str() +
                      ": they form a transition chain");
  DepthTaggedPiece moved{conjugate(p.piece, q.piece), image(p.orbital, q.piece), p.g_depth};
  v[i - 1] = std::move(q);
  v[i] = std::move(moved);
  return true;
}

GammaSet gamma_from_ball(const WordBall& b, int radius) {
  GammaSet s;
  s.source_radius = radius;
  std::unordered_set<PLMap> seen;
  for (const auto& h : b.elements)
    for (auto& f : one_bump_factors(h))
      if (seen.insert(f).second) s.pieces.push_back(std::move(f));
  return s;
}

}  // namespace

GammaSet gamma_g(const GroupSpec& g, int radius, std::size_t cap) {
  if (radius < 1) throw DomainError("gamma set needs radius >= 1");
  return gamma_from_ball(ball(g, radius, cap), radius);
}

std::vector<DepthTaggedPiece> tag_depths(const GammaSet& s) { return tag_pieces(s.pieces, s); }

std::vector<DepthTaggedPiece> tag_pieces(const std::vector<PLMap>& pieces, const GammaSet& reference) {
  std::vector<Interval> nodes = orbitals_of(reference.pieces);
  std::vector<Interval> own;
  for (const auto& p : pieces) own.push_back(only_orbital(p));
  nodes.insert(nodes.end(), own.begin(), own.end());
  DepthTable table(std::move(nodes));
  std::vector<DepthTaggedPiece> out;
  for (std::size_t i = 0; i < pieces.size(); ++i) out.push_back({pieces[i], own[i], table.depth_of(own[i])});
  return out;
}

std::vector<DepthTaggedPiece> split_form(std::vector<DepthTaggedPiece> product) {
  for (std::size_t end = product.size(); end > 1; --end) {
    bool swapped = false;
    for (std::size_t i = 1; i < end; ++i) {
      if (product[i - 1].g_depth > product[i].g_depth) swapped = swap_forward(product, i);
    }
    if (!swapped) break;
  }
  return product;
}

bool first_orbital_dominant(const std::vector<PLMap>& product) {
  if (product.empty()) return false;
  Interval first = only_orbital(product.front());
  for (std::size_t i = 1; i < product.size(); ++i)
    if (!only_orbital(product[i]).closure_within(first)) return false;
  return true;
}

std::vector<Interval> product_support(const std::vector<PLMap>& product) {
  return support(compose(std::span<const PLMap>(product)));
}

SplitSearchResult split_stable_search(const Interval& a, const std::vector<PLMap>& product, const GroupSpec& g,
                                      int radius, std::size_t max_depth, std::size_t max_steps, std::size_t cap) {
  if (!has_orbital(compose(std::span<const PLMap>(product)), a))
    throw DomainError(a.str() + " is not an orbital of the product");
  if (radius < 1) throw DomainError("split search needs radius >= 1");
  WordBall b = ball(g, radius, cap);
  GammaSet gamma = gamma_from_ball(b, radius);
  SplitSearchResult res;
  auto log = [&](std::string step, std::size_t len, std::optional<Interval> lead, std::string note = {}) {
    res.trace.push_back({std::move(step), len, std::move(lead), std::move(note)});
  };

  std::vector<PLMap> pieces = product;
  std::optional<Interval> leading;
  bool done = false;
  for (std::size_t round = 0; !done; ++round) {
    if (round >= max_steps) throw SearchExhausted("split search exceeded " + std::to_string(max_steps) + " rounds");

    // (1) Assurance that k is large.
    if (pieces.size() == 1) {
      Interval only = only_orbital(pieces.front());
      if (only != a) throw Error("internal: single remaining piece has orbital " + only.str());
      log("assurance_k_large", 1, only, "single piece with orbital " + a.str());
      break;
    }
    if (pieces.empty()) throw Error("internal: product became empty");

    // (2) Depth ordering.
    auto tagged = split_form(tag_pieces(pieces, gamma));
    log("depth_ordering", tagged.size(), std::nullopt);

    // (3) Leading orbital.
    const Interval lead = tagged.front().orbital;
    if (!lead.overlaps(a)) {
      log("leading_orbital", tagged.size(), lead, "leading piece disjoint from target; dropped");
      tagged.erase(tagged.begin());
      pieces.clear();
      for (auto& t : tagged) pieces.push_back(std::move(t.piece));
      continue;
    }
    if (!a.within(lead))
      throw Obstruction("target " + a.str() + " is not inside leading orbital " + lead.str());
    if (leading && lead.strictly_within(*leading)) {
      if (++res.leading_shrinks >= max_depth)
        throw SearchExhausted("leading orbital shrank " + std::to_string(res.leading_shrinks) +
                              " times; budget is " + std::to_string(max_depth));
    }
    leading = lead;
    log("leading_orbital", tagged.size(), lead);

    // (4) Force containment in the leading orbital.
    std::vector<DepthTaggedPiece> kept{tagged.front()};
    for (std::size_t i = 1; i < tagged.size(); ++i) {
      const Interval& o = tagged[i].orbital;
      if (!o.overlaps(lead)) continue;
      if (!o.within(lead))
        throw Obstruction("orbitals " + o.str() + " and " + lead.str() + " form a transition chain");
      kept.push_back(tagged[i]);
    }
    if (kept.size() != tagged.size()) {
      log("force_containment", kept.size(), lead,
          "dropped " + std::to_string(tagged.size() - kept.size()) + " pieces outside the leading orbital");
      pieces.clear();
      for (auto& t : kept) pieces.push_back(std::move(t.piece));
      continue;
    }

    // (5) Count the pieces whose orbital equals the leading one, moving
    // them to the front.
    for (std::size_t i = 1; i < kept.size(); ++i) {
      const Interval& o = kept[i].orbital;
      if (o != lead && (o.left() == lead.left() || o.right() == lead.right()))
        throw Obstruction("orbital " + o.str() + " shares an end with leading orbital " + lead.str() +
                          " without being equal to it");
    }
    std::size_t s = 1;
    for (std::size_t i = 1; i < kept.size(); ++i) {
      if (kept[i].orbital != lead) continue;
      for (std::size_t j = i; j > s; --j) swap_forward(kept, j);
      ++s;
    }
    log("count_leading", kept.size(), lead, "s = " + std::to_string(s));
    if (s == 1) {
      std::vector<PLMap> rest;
      for (auto& t : kept) rest.push_back(t.piece);
      if (!first_orbital_dominant(rest) || lead != a)
        throw Obstruction("first orbital dominant product with leading orbital " + lead.str() +
                          " does not have support " + a.str());
      done = true;
      break;
    }

    // (6) Collapse the first two pieces over the leading orbital.
    PLMap t12 = compose(kept[0].piece, kept[1].piece);
    std::vector<PLMap> next;
    std::string note;
    if (t12.is_identity()) {
      note = "first two pieces cancel";
    } else {
      auto factors = one_bump_factors(t12);
      std::size_t used = 0;
      for (auto& f : factors) {
        if (only_orbital(f).overlaps(a)) {
          next.push_back(std::move(f));
          ++used;
        }
      }
      note = "product of first two pieces has " + std::to_string(factors.size()) + " orbitals, " +
             std::to_string(used) + " meeting the target";
    }
    for (std::size_t i = 2; i < kept.size(); ++i) next.push_back(kept[i].piece);
    log("collapse", next.size(), lead, note);
    pieces = std::move(next);
  }

  for (std::size_t i = 0; i < b.size(); ++i) {
    if (has_orbital(b.elements[i], a)) {
      res.element = b.elements[i];
      res.word = b.words[i];
      return res;
    }
  }
  throw SearchExhausted("no element of the radius-" + std::to_string(radius) + " ball has orbital " + a.str());
}

}  // namespace ploi
