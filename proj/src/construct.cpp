#include "ploi/construct.hpp"

#include "ploi/error.hpp"

namespace ploi {

namespace {

const Interval& shrink_target() {
  static const Interval s(Rational(1, 4), Rational(1, 2));
  return s;
}

}  // namespace

PLMap alpha1() {
  return PLMap({{0, 0}, {Rational(1, 4), Rational(1, 2)}, {Rational(1, 2), Rational(3, 4)}, {1, 1}});
}

PLMap alpha2() {
  return PLMap({{0, 0},
                {Rational(1, 4), Rational(1, 4)},
                {Rational(5, 16), Rational(3, 8)},
                {Rational(3, 8), Rational(7, 16)},
                {Rational(1, 2), Rational(1, 2)},
                {1, 1}});
}

PLMap scale_into(const PLMap& f, const Interval& a) {
  if (f.is_identity()) return f;
  const Rational& lo = a.left();
  const Rational w = a.length();
  std::vector<Breakpoint> pts;
  if (!lo.is_zero()) pts.push_back({0, 0});
  for (const auto& p : f.points()) pts.push_back({lo + w * p.x, lo + w * p.y});
  if (a.right() != Rational(1)) pts.push_back({1, 1});
  return detail::make_trusted(std::move(pts));
}

PLMap bump(const Interval& a) { return scale_into(alpha1(), a); }

PLMap beta(long k) { return conjugate(alpha2(), power(alpha1(), k)); }

GroupSpec w_generators(int n) {
  if (n < 1) throw DomainError("W_n needs n >= 1");
  std::vector<PLMap> gens{alpha1()};
  for (int i = 2; i <= n; ++i) gens.push_back(scale_into(gens.back(), shrink_target()));
  return GroupSpec(std::move(gens), "W" + std::to_string(n));
}

GroupSpec gn_generators(const TruncationParams& p) {
  if (p.level < 0 || p.width < 0) throw DomainError("truncation level and width must be non-negative");
  std::vector<PLMap> s;
  for (int n = 1; n <= p.level; ++n) {
    std::vector<PLMap> next;
    for (const auto& h : s) next.push_back(scale_into(scale_into(h, shrink_target()), shrink_target()));
    next.push_back(alpha2());
    s = std::move(next);
  }
  std::vector<PLMap> out;
  const PLMap a1 = alpha1();
  for (long k = -p.width; k <= p.width; ++k) {
    PLMap c = power(a1, k);
    for (const auto& h : s) out.push_back(conjugate(h, c));
  }
  return GroupSpec(std::move(out), "G" + std::to_string(p.level) + " (" + p.str() + ")");
}

bool f_membership(const PLMap& f) {
  const auto& pts = f.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i].x.is_dyadic() || !pts[i].y.is_dyadic()) return false;
    if (i + 1 < pts.size()) {
      long e = 0;
      if (!power_of_two_exponent((pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x), e)) return false;
    }
  }
  return true;
}

bool within_fundamental_domain(const Interval& a, const PLMap& f) {
  for (const auto& o : support(f)) {
    if (!a.within(o)) continue;
    Interval img = image(a, f);
    return img.left() >= a.right() || img.right() <= a.left();
  }
  return false;
}

}  // namespace ploi
