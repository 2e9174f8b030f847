#include "ploi/classify.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "ploi/error.hpp"
#include "ploi/slopes.hpp"
#include "ploi/split.hpp"

namespace ploi {

StructureExpr StructureExpr::trivial() { return StructureExpr(Kind::Trivial, {}); }

StructureExpr StructureExpr::wreath(StructureExpr child) { return StructureExpr(Kind::Wreath, {std::move(child)}); }

StructureExpr StructureExpr::sum(std::vector<StructureExpr> children) {
  if (children.empty()) throw DomainError("a bounded sum needs at least one summand");
  return StructureExpr(Kind::Sum, std::move(children));
}

std::string StructureExpr::str() const {
  switch (kind_) {
    case Kind::Trivial: return "1";
    case Kind::Wreath: return "Wr[" + children_.front().str() + "]";
    case Kind::Sum: {
      std::string s = "Sum[";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) s += ", ";
        s += children_[i].str();
      }
      return s + "]";
    }
  }
  return "?";
}

StructureExpr StructureExpr::normalized() const {
  switch (kind_) {
    case Kind::Trivial: return *this;
    case Kind::Wreath: return wreath(children_.front().normalized());
    case Kind::Sum: break;
  }
  std::vector<StructureExpr> flat;
  for (const auto& c : children_) {
    StructureExpr n = c.normalized();
    if (n.kind_ == Kind::Sum) flat.insert(flat.end(), n.children_.begin(), n.children_.end());
    else if (n.kind_ == Kind::Wreath) flat.push_back(std::move(n));
  }
  if (flat.empty()) return trivial();
  if (flat.size() == 1) return flat.front();
  std::stable_sort(flat.begin(), flat.end(),
                   [](const StructureExpr& a, const StructureExpr& b) { return a.str() < b.str(); });
  return sum(std::move(flat));
}

int expr_derived_length(const StructureExpr& e) {
  switch (e.kind()) {
    case StructureExpr::Kind::Trivial: return 0;
    case StructureExpr::Kind::Wreath: return expr_derived_length(e.children().front()) + 1;
    case StructureExpr::Kind::Sum: {
      int m = 0;
      for (const auto& c : e.children()) m = std::max(m, expr_derived_length(c));
      return m;
    }
  }
  return 0;
}

int embedding_target(const StructureExpr& e) { return expr_derived_length(e); }

namespace {

constexpr int kMaxNesting = 64;

Interval only_orbital(const PLMap& p) {
  auto s = support(p);
  if (s.size() != 1) throw DomainError("generator must have exactly one orbital, found " + std::to_string(s.size()));
  return s.front();
}

bool moves_right(const PLMap& y, const Interval& o) {
  Rational mid = (o.left() + o.right()) / Rational(2);
  return eval(y, mid) > mid;
}

// (g, u, v) with u a + v b = g = gcd(a, b) >= 0.
void ext_gcd(long a, long b, long& g, long& u, long& v) {
  long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    long q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  u = old_s;
  v = old_t;
}

// A single element generating the slope image of the candidates on `o`,
// built from them.
PLMap controller_of(const std::vector<PLMap>& cands, const Interval& o, bool& synthesized) {
  synthesized = false;
  LatticeVerdict v = image_lattice(GroupSpec(cands), o);
  if (v.imbalanced)
    throw Obstruction("slope image on " + o.str() + " contains an element trivial at one end: orbital is imbalanced");
  if (v.kind != LatticeKind::Cyclic)
    throw Obstruction("slope image on " + o.str() + " has rank " + std::to_string(v.rank) +
                      "; a solvable group has cyclic image");
  const SlopePair gen = *v.generator;
  for (const auto& c : cands) {
    SlopePair p = phi(c, o);
    if (p == gen || p == gen.inverse()) return c;
  }
  std::vector<long> ks;
  for (const auto& c : cands) {
    auto k = slope_log(phi(c, o), gen);
    if (!k) throw Error("internal: slope pair outside its own lattice");
    ks.push_back(*k);
  }
  long g = 0;
  std::vector<long> coef(cands.size(), 0);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] == 0) continue;
    if (g == 0) {
      g = ks[i];
      coef[i] = 1;
      continue;
    }
    long d, u, w;
    ext_gcd(g, ks[i], d, u, w);
    for (auto& c : coef) c *= u;
    coef[i] += w;
    g = d;
  }
  if (g < 0) {
    g = -g;
    for (auto& c : coef) c = -c;
  }
  if (g != 1) throw Error("internal: candidate exponents do not generate the slope image");
  PLMap y;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (coef[i] != 0) y = compose(y, power(cands[i], coef[i]));
  synthesized = true;
  return y;
}

bool translates_disjoint(const std::vector<Interval>& inner, const PLMap& y, int window) {
  std::vector<std::vector<Interval>> layers;
  for (int k = -window; k <= window; ++k) {
    PLMap yk = power(y, k);
    std::vector<Interval> layer;
    for (const auto& b : inner) layer.push_back(image(b, yk));
    layers.push_back(std::move(layer));
  }
  for (std::size_t i = 0; i < layers.size(); ++i)
    for (std::size_t j = i + 1; j < layers.size(); ++j)
      for (const auto& p : layers[i])
        for (const auto& q : layers[j])
          if (p.overlaps(q)) return false;
  return true;
}

std::vector<CertNode> build(std::vector<PLMap> pieces, bool repair, int level) {
  if (level > kMaxNesting) throw SearchExhausted("orbital nesting deeper than " + std::to_string(kMaxNesting));
  {
    std::unordered_set<PLMap> seen;
    std::vector<PLMap> uniq;
    for (auto& p : pieces)
      if (!p.is_identity() && seen.insert(p).second) uniq.push_back(std::move(p));
    pieces = std::move(uniq);
  }
  std::vector<Interval> orbs;
  for (const auto& p : pieces) orbs.push_back(only_orbital(p));

  std::vector<Interval> distinct = orbs;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::size_t i = 0; i < distinct.size(); ++i)
    for (std::size_t j = i + 1; j < distinct.size() && distinct[j].left() < distinct[i].right(); ++j)
      if (!distinct[j].within(distinct[i]))
        throw Obstruction("orbitals " + distinct[i].str() + " and " + distinct[j].str() + " form a transition chain");

  std::vector<Interval> maximal;
  for (const auto& o : distinct)
    if (maximal.empty() || !o.within(maximal.back())) maximal.push_back(o);

  std::vector<CertNode> nodes;
  for (const auto& o : maximal) {
    CertNode node(o, PLMap());
    std::vector<PLMap> cands;
    std::vector<PLMap> inner;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (orbs[i] == o) cands.push_back(pieces[i]);
      else if (orbs[i].within(o)) inner.push_back(pieces[i]);
    }

    PLMap y;
    if (cands.size() == 1) {
      y = cands.front();
    } else if (!repair) {
      throw DomainError(std::to_string(cands.size()) + " generators share the orbital " + o.str());
    } else {
      y = controller_of(cands, o, node.synthesized_top);
    }
    if (!has_orbital(y, o))
      throw Obstruction("controller on " + o.str() + " does not realize it: end slopes are inconsistent");
    if (!moves_right(y, o)) y = inverse(y);
    if (cands.size() > 1) {
      for (const auto& c : cands) {
        CForm cf = c_form(c, y, o);
        for (auto& f : one_bump_factors(cf.residue)) inner.push_back(std::move(f));
      }
    }
    node.top = y;

    if (inner.empty()) {
      node.expr = StructureExpr::wreath(StructureExpr::trivial());
      node.wreath_verified = true;
      nodes.push_back(std::move(node));
      continue;
    }

    // Fundamental domain at the left end of the leftmost maximal inner orbital.
    Rational a = only_orbital(inner.front()).left();
    for (const auto& p : inner) a = std::min(a, only_orbital(p).left());
    Rational ay = eval(y, a);
    node.domain = Interval(a, ay);

    std::vector<PLMap> moved;
    std::vector<Interval> moved_orbs;
    for (const auto& p : inner) {
      Interval b = only_orbital(p);
      Rational x = b.left();
      long k = 0;
      while (x < a) {
        x = eval(y, x);
        ++k;
      }
      while (x >= ay) {
        x = eval_inverse(y, x);
        --k;
      }
      PLMap yk = power(y, k);
      Interval nb = image(b, yk);
      if (nb.right() > ay)
        throw Obstruction("orbital " + b.str() + " conjugates to " + nb.str() + ", crossing the end of the domain " +
                          node.domain->str());
      node.members.push_back(p);
      node.exponents.push_back(k);
      moved.push_back(conjugate(p, yk));
      moved_orbs.push_back(nb);
    }
    node.wreath_verified = translates_disjoint(moved_orbs, y, node.window);
    if (!node.wreath_verified)
      throw Obstruction("translates of the pieces inside " + o.str() + " under the top generator overlap");

    node.children = build(std::move(moved), repair, level + 1);
    std::vector<StructureExpr> parts;
    for (const auto& c : node.children) parts.push_back(c.expr);
    node.expr = StructureExpr::wreath(StructureExpr::sum(std::move(parts)).normalized());
    nodes.push_back(std::move(node));
  }
  return nodes;
}

StructureExpr expr_of(const std::vector<CertNode>& roots) {
  if (roots.empty()) return StructureExpr::trivial();
  std::vector<StructureExpr> parts;
  for (const auto& r : roots) parts.push_back(r.expr);
  return StructureExpr::sum(std::move(parts)).normalized();
}

std::string verdict_text(const StructureExpr& e) {
  int n = expr_derived_length(e);
  return e.str() + ", derived length " + std::to_string(n) + ", embeds in G_" + std::to_string(n);
}

}  // namespace

DecompositionCert one_bump_decompose(const GroupSpec& g, int radius, std::size_t cap) {
  if (radius < 1) throw DomainError("decomposition needs radius >= 1");
  std::vector<Interval> orbs;
  for (const auto& gen : g.generators()) orbs.push_back(only_orbital(gen));

  WordBall b = ball(g, radius, cap);
  auto chains = find_transition_chains(b.elements);
  if (!chains.empty())
    throw Obstruction("transition chain between orbitals " + chains.front().first.orbital.str() + " and " +
                      chains.front().second.orbital.str());
  BalanceVerdict bal = balance_check(g, radius, 2, cap);
  if (bal.status == BalanceStatus::ImbalancedWitness) throw Obstruction(bal.note);
  for (const auto& h : b.elements)
    for (std::size_t i = 0; i < orbs.size(); ++i) {
      Interval moved = image(orbs[i], h);
      for (std::size_t j = 0; j < orbs.size(); ++j)
        if (j != i && moved == orbs[j])
          throw DomainError("generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                            " are conjugate onto the same orbital " + orbs[j].str());
    }

  DecompositionCert cert;
  cert.radius = radius;
  cert.roots = build(g.generators(), false, 0);
  cert.expr = expr_of(cert.roots);
  return cert;
}

ClassificationReport classification_report(const GroupSpec& g, int radius, const ClassificationOptions& opts) {
  if (radius < 1) throw DomainError("classification needs radius >= 1");
  ClassificationReport rep;
  rep.radius = radius;
  auto obstructed = [&](std::string kind, std::string text) {
    rep.status = ClassificationStatus::Obstructed;
    rep.obstruction_kind = std::move(kind);
    rep.obstruction = std::move(text);
    rep.summary = "not solvable: " + rep.obstruction;
    return rep;
  };

  WordBall b = ball(g, radius, opts.cap);
  auto chains = find_transition_chains(b.elements);
  if (!chains.empty()) {
    rep.chain = chains.front();
    for (int r = 1; r <= radius; ++r) rep.tower_growth.push_back(depth_lower_bound(g, r, opts.cap).height);
    std::string growth;
    for (auto h : rep.tower_growth) growth += (growth.empty() ? "" : ", ") + std::to_string(h);
    return obstructed("transition_chain", "transition chain between orbitals " + rep.chain->first.orbital.str() +
                                              " and " + rep.chain->second.orbital.str() +
                                              "; tower heights by radius: " + growth);
  }
  BalanceVerdict bal = balance_check(g, radius, 2, opts.cap);
  if (bal.status == BalanceStatus::ImbalancedWitness) {
    rep.imbalance = bal.witness;
    return obstructed("imbalance", bal.note);
  }
  rep.towers = depth_lower_bound(g, radius, opts.cap);
  if (!rep.towers->exemplary) return obstructed("non_exemplary", "the tower found is not exemplary");

  DecompositionCert cert;
  cert.radius = radius;
  if (!g.is_trivial()) {
    GammaSet gamma = gamma_g(g, radius, opts.cap);
    rep.gamma_pieces = gamma.pieces.size();
    try {
      cert.roots = build(std::move(gamma.pieces), true, 0);
    } catch (const Obstruction& e) {
      return obstructed("geometry", e.what());
    }
  }
  cert.expr = expr_of(cert.roots);
  rep.derived_length = expr_derived_length(cert.expr);
  rep.embedding_target = embedding_target(cert.expr);
  rep.summary = verdict_text(cert.expr);
  rep.cert = std::move(cert);

  rep.cross_checks_agree = rep.towers->height == static_cast<std::size_t>(rep.derived_length);
  if (opts.derived_radius > 0 && !g.is_trivial()) {
    rep.derived = derived_length_bounds(g, opts.derived_radius, opts.derived);
    rep.cross_checks_agree = rep.cross_checks_agree && rep.derived->lower_bound == rep.derived_length;
  }
  return rep;
}

}  // namespace ploi
