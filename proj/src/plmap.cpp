#include "ploi/plmap.hpp"

#include <algorithm>

#include "ploi/error.hpp"

namespace ploi {

namespace {

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

// y on the segment a-b at abscissa x.
Rational interpolate(const Breakpoint& a, const Breakpoint& b, const Rational& x) {
  return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

// x on the segment a-b at ordinate y.
Rational interpolate_inverse(const Breakpoint& a, const Breakpoint& b, const Rational& y) {
  return a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
}

Rational slope(const Breakpoint& a, const Breakpoint& b) { return (b.y - a.y) / (b.x - a.x); }

void check_domain(const Rational& x) {
  if (x < 0 || x > 1) throw DomainError("point " + x.str() + " is outside [0, 1]");
}

}  // namespace

PLMap::PLMap() : points_{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}} { normalize_and_hash(); }

PLMap::PLMap(std::vector<Breakpoint> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw DomainError("a PL map needs at least the points (0,0) and (1,1)");
  if (points_.front() != Breakpoint{0, 0}) throw DomainError("first breakpoint must be (0,0)");
  if (points_.back() != Breakpoint{1, 1}) throw DomainError("last breakpoint must be (1,1)");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1].x < points_[i].x) || !(points_[i - 1].y < points_[i].y))
      throw DomainError("breakpoints must be strictly increasing in both coordinates");
  }
  normalize_and_hash();
}

PLMap::PLMap(Trusted, std::vector<Breakpoint> points) : points_(std::move(points)) { normalize_and_hash(); }

void PLMap::normalize_and_hash() {
  std::size_t out = 0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    while (out >= 2 && collinear(points_[out - 2], points_[out - 1], points_[i])) --out;
    if (out != i) points_[out] = std::move(points_[i]);
    ++out;
  }
  points_.resize(out);
  std::size_t h = points_.size();
  for (const auto& p : points_) h = (h * 0x100000001b3ULL) ^ (p.x.hash() + 0x9e3779b97f4a7c15ULL * p.y.hash());
  hash_ = h;
}

namespace detail {
PLMap make_trusted(std::vector<Breakpoint> points) { return PLMap(PLMap::Trusted{}, std::move(points)); }
}  // namespace detail

PLMap identity() { return PLMap(); }

Rational eval(const PLMap& f, const Rational& x) {
  check_domain(x);
  const auto& pts = f.points();
  auto it = std::lower_bound(pts.begin(), pts.end(), x, [](const Breakpoint& p, const Rational& v) { return p.x < v; });
  if (it->x == x) return it->y;
  return interpolate(*(it - 1), *it, x);
}

Rational eval_inverse(const PLMap& f, const Rational& y) {
  check_domain(y);
  const auto& pts = f.points();
  auto it = std::lower_bound(pts.begin(), pts.end(), y, [](const Breakpoint& p, const Rational& v) { return p.y < v; });
  if (it->y == y) return it->x;
  return interpolate_inverse(*(it - 1), *it, y);
}

PLMap compose(const PLMap& f, const PLMap& g) {
  if (f.is_identity()) return g;
  if (g.is_identity()) return f;
  // Walk the intermediate coordinate u through the union of f's ordinates
  // and g's abscissae; each u contributes the point (u f^-1, u g).
  const auto& a = f.points();
  const auto& b = g.points();
  std::vector<Breakpoint> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = a[i].y <=> b[j].x;
    if (c == 0) {
      out.push_back({a[i].x, b[j].y});
      ++i;
      ++j;
    } else if (c < 0) {
      out.push_back({a[i].x, interpolate(b[j - 1], b[j], a[i].y)});
      ++i;
    } else {
      out.push_back({interpolate_inverse(a[i - 1], a[i], b[j].x), b[j].y});
      ++j;
    }
  }
  return detail::make_trusted(std::move(out));
}

PLMap compose(std::span<const PLMap> product) {
  PLMap result;
  for (const auto& f : product) result = compose(result, f);
  return result;
}

PLMap inverse(const PLMap& f) {
  std::vector<Breakpoint> out;
  out.reserve(f.size());
  for (const auto& p : f.points()) out.push_back({p.y, p.x});
  return detail::make_trusted(std::move(out));
}

PLMap power(const PLMap& f, long k) {
  PLMap base = k < 0 ? inverse(f) : f;
  unsigned long n = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1 : static_cast<unsigned long>(k);
  PLMap result;
  while (n > 0) {
    if (n & 1) result = compose(result, base);
    n >>= 1;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

PLMap conjugate(const PLMap& f, const PLMap& h) { return compose(compose(inverse(h), f), h); }

PLMap commutator(const PLMap& f, const PLMap& g) {
  return compose(compose(compose(inverse(f), inverse(g)), f), g);
}

std::vector<Rational> breakpoints(const PLMap& f) {
  std::vector<Rational> out;
  const auto& pts = f.points();
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) out.push_back(pts[i].x);
  return out;
}

Rational slope_right_of(const PLMap& f, const Rational& x) {
  check_domain(x);
  if (x == 1) throw DomainError("no slope to the right of 1");
  const auto& pts = f.points();
  auto it = std::upper_bound(pts.begin(), pts.end(), x, [](const Rational& v, const Breakpoint& p) { return v < p.x; });
  return slope(*(it - 1), *it);
}

Rational slope_left_of(const PLMap& f, const Rational& x) {
  check_domain(x);
  if (x == 0) throw DomainError("no slope to the left of 0");
  const auto& pts = f.points();
  auto it = std::lower_bound(pts.begin(), pts.end(), x, [](const Breakpoint& p, const Rational& v) { return p.x < v; });
  return slope(*(it - 1), *it);
}

std::vector<Interval> support(const PLMap& f) {
  std::vector<Interval> out;
  if (f.is_identity()) return out;
  const auto& pts = f.points();
  // d = y - x is affine on every piece; orbitals are the maximal runs where
  // it is nonzero.
  std::vector<Rational> d;
  d.reserve(pts.size());
  for (const auto& p : pts) d.push_back(p.y - p.x);
  Rational start;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    int s0 = d[i].sign(), s1 = d[i + 1].sign();
    if (s0 == 0 && s1 == 0) continue;
    if (s0 == 0) start = pts[i].x;
    if (s0 != 0 && s1 != 0 && s0 != s1) {
      Rational t = d[i] / (d[i] - d[i + 1]);
      Rational cross = pts[i].x + t * (pts[i + 1].x - pts[i].x);
      out.emplace_back(start, cross);
      start = cross;
    }
    if (s1 == 0) {
      out.emplace_back(start, pts[i + 1].x);
    }
  }
  return out;
}

bool has_orbital(const PLMap& f, const Interval& a) {
  for (const auto& b : support(f))
    if (b == a) return true;
  return false;
}

PLMap restrict_to(const PLMap& f, const Interval& a) {
  if (eval(f, a.left()) != a.left() || eval(f, a.right()) != a.right())
    throw DomainError("cannot restrict to " + a.str() + ": its ends are not fixed");
  std::vector<Breakpoint> out;
  out.push_back({0, 0});
  if (a.left() > 0) out.push_back({a.left(), a.left()});
  for (const auto& p : f.points())
    if (a.left() < p.x && p.x < a.right()) out.push_back(p);
  if (a.right() < 1) out.push_back({a.right(), a.right()});
  out.push_back({1, 1});
  return detail::make_trusted(std::move(out));
}

std::vector<PLMap> one_bump_factors(const PLMap& f) {
  std::vector<PLMap> out;
  for (const auto& a : support(f)) out.push_back(restrict_to(f, a));
  return out;
}

std::pair<Rational, Rational> end_slopes(const PLMap& f, const Interval& a) {
  if (eval(f, a.left()) != a.left() || eval(f, a.right()) != a.right())
    throw DomainError("end slopes on " + a.str() + ": the map does not fix both ends");
  return {slope_right_of(f, a.left()), slope_left_of(f, a.right())};
}

Interval image(const Interval& a, const PLMap& f) { return Interval(eval(f, a.left()), eval(f, a.right())); }

bool canonical_less(const PLMap& a, const PLMap& b) {
  return std::lexicographical_compare(
      a.points().begin(), a.points().end(), b.points().begin(), b.points().end(),
      [](const Breakpoint& p, const Breakpoint& q) {
        if (auto c = p.x <=> q.x; c != 0) return c < 0;
        return p.y < q.y;
      });
}

}  // namespace ploi
