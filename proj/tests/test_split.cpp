#include <doctest.h>

#include "oracles.hpp"
#include "ploi/construct.hpp"
#include "ploi/error.hpp"
#include "ploi/split.hpp"
#include "split_fixtures.hpp"

using namespace ploi;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }
Interval iv(long a, long b, long c, long d) { return Interval(q(a, b), q(c, d)); }

PLMap composite(const std::vector<DepthTaggedPiece>& v) {
  PLMap out;
  for (const auto& p : v) out = compose(out, p.piece);
  return out;
}

bool contains(const std::vector<PLMap>& v, const PLMap& f) { return std::find(v.begin(), v.end(), f) != v.end(); }

}  // namespace

TEST_SUITE("split") {
  TEST_CASE("gamma set") {
    auto s = gamma_g(GroupSpec({alpha2(), beta(1)}), 1);
    CHECK(s.source_radius == 1);
    CHECK(s.pieces.size() == 4);
    for (const auto& f : {alpha2(), inverse(alpha2()), beta(1), inverse(beta(1))}) CHECK(contains(s.pieces, f));

    auto c = gamma_g(GroupSpec({alpha1()}), 2);
    CHECK(c.pieces.size() == 4);
    for (long k : {-2L, -1L, 1L, 2L}) CHECK(contains(c.pieces, power(alpha1(), k)));
    CHECK_THROWS_AS(gamma_g(GroupSpec({alpha1()}), 0), DomainError);
  }

  TEST_CASE("gamma pieces come from ball elements") {
    GroupSpec g = w_generators(2);
    auto b = ball(g, 2);
    auto s = gamma_g(g, 2);
    for (const auto& p : s.pieces) {
      auto sup = support(p);
      REQUIRE(sup.size() == 1);
      bool found = false;
      for (const auto& h : b.elements)
        if (has_orbital(h, sup[0]) && restrict_to(h, sup[0]) == p) found = true;
      CHECK(found);
    }
    for (const auto& h : b.elements) {
      auto parts = one_bump_factors(h);
      for (const auto& p : parts) CHECK(contains(s.pieces, p));
      CHECK(compose(std::span<const PLMap>(parts)) == h);
    }
  }

  TEST_CASE("depth tags") {
    auto tagged = tag_depths(gamma_g(w_generators(2), 2));
    for (const auto& t : tagged) {
      if (t.orbital == Interval(0, 1)) CHECK(t.g_depth == 1);
      if (t.orbital == iv(1, 4, 1, 2)) CHECK(t.g_depth == 2);
      CHECK(t.g_depth >= 1);
    }
    for (const auto& t : tag_depths(gamma_g(GroupSpec({alpha2()}), 3))) CHECK(t.g_depth == 1);
    for (const auto& x : tagged)
      for (const auto& y : tagged)
        if (x.orbital == y.orbital) CHECK(x.g_depth == y.g_depth);

    auto ref = gamma_g(w_generators(2), 2);
    auto conj = tag_pieces({conjugate(alpha2(), alpha1())}, ref);
    CHECK(conj.front().g_depth == 2);
    CHECK(conj.front().orbital == iv(1, 2, 3, 4));
  }

  TEST_CASE("split form") {
    auto ref = gamma_g(w_generators(2), 2);
    auto in = tag_pieces({alpha2(), alpha1()}, ref);
    auto out = split_form(in);
    REQUIRE(out.size() == 2);
    CHECK(out[0].piece == alpha1());
    CHECK(out[0].g_depth == 1);
    CHECK(out[1].piece == conjugate(alpha2(), alpha1()));
    CHECK(out[1].g_depth == 2);
    CHECK(composite(out) == composite(in));

    auto sorted = tag_pieces({alpha1(), alpha2()}, ref);
    auto same = split_form(sorted);
    CHECK(same[0].piece == sorted[0].piece);
    CHECK(same[1].piece == sorted[1].piece);
    auto single = split_form(tag_pieces({alpha2()}, ref));
    CHECK(single.size() == 1);
    CHECK(single[0].piece == alpha2());
    CHECK(split_form({}).empty());
  }

  TEST_CASE("split form refuses transition chains") {
    PLMap p = bump(iv(1, 8, 1, 2));
    PLMap r = bump(iv(1, 4, 3, 4));
    std::vector<DepthTaggedPiece> v{{p, iv(1, 8, 1, 2), 2}, {r, iv(1, 4, 3, 4), 1}};
    CHECK_THROWS_AS(split_form(v), Obstruction);
  }

  TEST_CASE("split form on generated products") {
    oracle::Generator gen(71);
    for (GroupSpec g : {w_generators(3), gn_generators({2, 1})}) {
      auto ref = gamma_g(g, 2);
      for (int i = 0; i < 25; ++i) {
        auto product = fixtures::random_product(gen, ref.pieces, 2, 6);
        auto in = tag_pieces(product, ref);
        auto out = split_form(in);
        CHECK(composite(out) == composite(in));
        for (std::size_t j = 0; j + 1 < out.size(); ++j) CHECK(out[j].g_depth <= out[j + 1].g_depth);
        for (const auto& p : out) CHECK(support(p.piece) == std::vector<Interval>{p.orbital});
      }
    }
  }

  TEST_CASE("first orbital dominance") {
    PLMap deep = gn_generators({2, 0}).generators().front();
    CHECK(first_orbital_dominant({alpha2(), deep}));
    CHECK(product_support({alpha2(), deep}) == std::vector<Interval>{iv(1, 4, 1, 2)});
    CHECK_FALSE(first_orbital_dominant({alpha2(), beta(1)}));
    CHECK(first_orbital_dominant({alpha1()}));
    CHECK_FALSE(first_orbital_dominant({}));
    CHECK_FALSE(first_orbital_dominant({alpha1(), alpha1()}));
    CHECK_THROWS_AS(first_orbital_dominant({compose(alpha2(), beta(1))}), DomainError);
  }

  TEST_CASE("dominant products have the first orbital as support") {
    oracle::Generator gen(72);
    for (GroupSpec g : {w_generators(3), gn_generators({2, 1})}) {
      auto ref = gamma_g(g, 2);
      for (int i = 0; i < 25; ++i) {
        auto product = fixtures::dominant_product(gen, ref.pieces);
        REQUIRE(first_orbital_dominant(product));
        CHECK(product_support(product) == support(product.front()));
      }
    }
  }

  TEST_CASE("split stable search on constructed instances") {
    for (const auto& inst : fixtures::search_instances()) {
      CAPTURE(inst.name);
      auto res = split_stable_search(inst.target, inst.product, inst.group, inst.radius, 8);
      CHECK(has_orbital(res.element, inst.target));
      auto b = ball(inst.group, inst.radius);
      CHECK(b.contains(res.element));
      CHECK(b.word_of(res.element) == res.word);
      CHECK_FALSE(res.trace.empty());
    }
  }

  TEST_CASE("split stable search details") {
    GroupSpec w2 = w_generators(2);
    Interval a = iv(1, 4, 1, 2);
    auto one = split_stable_search(a, {alpha2()}, w2, 2, 8);
    CHECK(one.element == alpha2());
    CHECK(one.trace.size() == 1);
    CHECK(one.trace.front().step == "assurance_k_large");

    auto padded = split_stable_search(a, {inverse(alpha2()), power(alpha2(), 2)}, w2, 2, 8);
    CHECK(support(padded.element) == std::vector<Interval>{a});
    bool collapsed = false;
    for (const auto& t : padded.trace) collapsed = collapsed || t.step == "collapse";
    CHECK(collapsed);

    auto distract = split_stable_search(a, {alpha2(), beta(2)}, w2, 3, 8);
    bool dropped = false;
    for (const auto& t : distract.trace) dropped = dropped || t.step == "force_containment" || t.note.find("dropped") != std::string::npos;
    CHECK(dropped);
    CHECK(has_orbital(distract.element, a));

    CHECK_THROWS_AS(split_stable_search(Interval(0, 1), {alpha2()}, w2, 2, 8), DomainError);
    CHECK_THROWS_AS(split_stable_search(iv(1, 2, 3, 4), {beta(1)}, w2, 1, 8), SearchExhausted);
    CHECK_THROWS_AS(split_stable_search(Interval(0, 1), {alpha1(), alpha1(), inverse(alpha1())}, w2, 2, 8, 1),
                    SearchExhausted);
  }
}
