#include "ploi/words.hpp"

#include <unordered_set>

#include "ploi/error.hpp"

namespace ploi {

namespace {

bool supports_overlap(const std::vector<Interval>& a, const std::vector<Interval>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].overlaps(b[j])) return true;
    if (a[i].right() <= b[j].left()) ++i;
    else ++j;
  }
  return false;
}

struct Level {
  std::vector<PLMap> elements;
  std::vector<std::string> names;
};

// Distinct nontrivial commutators among the first `width` inputs.
Level commutator_level(const Level& in, std::size_t width, std::size_t cap) {
  std::size_t n = width == 0 ? in.elements.size() : std::min(width, in.elements.size());
  std::vector<std::vector<Interval>> supports;
  supports.reserve(n);
  for (std::size_t i = 0; i < n; ++i) supports.push_back(support(in.elements[i]));
  Level out;
  std::unordered_set<PLMap> seen;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Maps with disjoint supports commute.
      if (!supports_overlap(supports[i], supports[j])) continue;
      PLMap c = commutator(in.elements[i], in.elements[j]);
      if (c.is_identity() || !seen.insert(c).second) continue;
      out.elements.push_back(std::move(c));
      out.names.push_back("[" + in.names[i] + "," + in.names[j] + "]");
      if (out.elements.size() > cap)
        throw CapExceeded("commutator level exceeded " + std::to_string(cap) + " elements");
    }
  }
  return out;
}

}  // namespace

std::string word_string(const Word& w) {
  std::string s;
  for (int letter : w) {
    if (!s.empty()) s += ' ';
    s += GroupSpec::letter_name(letter);
  }
  return s;
}

WordBall ball(const GroupSpec& g, int radius, std::size_t cap) {
  if (radius < 0) throw DomainError("ball radius must be non-negative");
  WordBall b;
  b.radius = radius;
  b.elements.push_back(identity());
  b.words.emplace_back();
  b.index.emplace(b.elements.back(), 0);

  std::vector<std::pair<int, PLMap>> letters;
  for (std::size_t i = 0; i < g.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    letters.emplace_back(id, g.generators()[i]);
    letters.emplace_back(-id, inverse(g.generators()[i]));
  }

  std::size_t frontier_begin = 0, frontier_end = 1;
  for (int r = 1; r <= radius; ++r) {
    for (std::size_t idx = frontier_begin; idx < frontier_end; ++idx) {
      for (const auto& [letter, map] : letters) {
        const Word& w = b.words[idx];
        if (!w.empty() && w.back() == -letter) continue;  // free cancellation
        PLMap h = compose(b.elements[idx], map);
        if (b.index.count(h)) continue;
        Word next = w;
        next.push_back(letter);
        b.index.emplace(h, b.elements.size());
        b.elements.push_back(std::move(h));
        b.words.push_back(std::move(next));
        if (b.elements.size() > cap)
          throw CapExceeded("word ball of radius " + std::to_string(radius) + " exceeded " +
                            std::to_string(cap) + " elements");
      }
    }
    frontier_begin = frontier_end;
    frontier_end = b.elements.size();
  }
  return b;
}

std::vector<PLMap> derived_generators(const WordBall& b, int level, std::size_t cap) {
  if (level < 0) throw DomainError("derived level must be non-negative");
  Level current{b.elements, {}};
  current.names.reserve(b.size());
  for (const auto& w : b.words) current.names.push_back(word_string(w));
  for (int k = 1; k <= level; ++k) {
    current = commutator_level(current, 0, cap);
    if (current.elements.empty()) break;
  }
  return current.elements;
}

DerivedReport derived_length_bounds(const GroupSpec& g, int radius, const DerivedOptions& opts) {
  if (radius < 1) throw DomainError("derived length bounds need radius >= 1");
  DerivedReport rep;
  rep.radius = radius;
  rep.level_width = opts.level_width;
  WordBall b = ball(g, radius, opts.cap);

  Level current;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.elements[i].is_identity()) continue;
    current.elements.push_back(b.elements[i]);
    current.names.push_back(word_string(b.words[i]));
  }
  rep.level_sizes.push_back(current.elements.size());
  if (current.elements.empty()) {
    rep.lower_bound = 0;
    rep.vanishing_level = 0;
    rep.summary = "trivial group: derived length 0";
    return rep;
  }

  int level = 0;
  for (;;) {
    if (opts.level_width != 0 && current.elements.size() > opts.level_width) rep.truncated = true;
    Level next = commutator_level(current, opts.level_width, opts.cap);
    rep.level_sizes.push_back(next.elements.size());
    if (next.elements.empty()) {
      rep.lower_bound = level + 1;
      rep.vanishing_level = level + 1;
      rep.witness = current.elements.front();
      rep.witness_expression = current.names.front();
      break;
    }
    current = std::move(next);
    ++level;
    if (level >= opts.max_level) {
      rep.lower_bound = level + 1;
      rep.witness = current.elements.front();
      rep.witness_expression = current.names.front();
      break;
    }
  }

  rep.summary = "derived length >= " + std::to_string(rep.lower_bound) + " (nontrivial iterated commutator " +
                rep.witness_expression + ")";
  if (rep.vanishing_level) {
    rep.summary += "; level " + std::to_string(*rep.vanishing_level) +
                   " commutators vanish, consistent with derived length <= " +
                   std::to_string(*rep.vanishing_level) + " at radius " + std::to_string(radius);
    if (rep.truncated) rep.summary += " (first " + std::to_string(opts.level_width) + " elements per level)";
  }
  return rep;
}

}  // namespace ploi
