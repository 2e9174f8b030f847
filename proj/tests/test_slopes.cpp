#include <doctest.h>

#include "oracles.hpp"
#include "ploi/construct.hpp"
#include "ploi/error.hpp"
#include "ploi/orbitals.hpp"
#include "ploi/slopes.hpp"

using namespace ploi;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }
Interval iv(long a, long b, long c, long d) { return Interval(q(a, b), q(c, d)); }

// A map of (0,1) with end slopes (2, 3).
PLMap both_up() { return PLMap({{0, 0}, {q(1, 8), q(1, 4)}, {q(3, 4), q(1, 2)}, {q(7, 8), q(5, 8)}, {1, 1}}); }

SlopePair phi_oracle(const PLMap& h, const Interval& a) {
  auto raw = oracle::raw(h);
  return {oracle::right_slope(raw, a.left()), oracle::left_slope(raw, a.right())};
}

}  // namespace

TEST_SUITE("slopes") {
  TEST_CASE("phi") {
    CHECK(phi(alpha1(), Interval(0, 1)) == SlopePair{2, q(1, 2)});
    CHECK(phi(alpha2(), Interval(0, 1)) == SlopePair{1, 1});
    CHECK(phi(alpha2(), iv(1, 4, 1, 2)) == SlopePair{2, q(1, 2)});
    CHECK_THROWS_AS(phi(alpha1(), iv(1, 4, 1, 2)), DomainError);
    oracle::Generator gen(41);
    for (int i = 0; i < 40; ++i) {
      PLMap h = gen.map(4, 4);
      CHECK(phi(h, Interval(0, 1)) == phi_oracle(h, Interval(0, 1)));
    }
  }

  TEST_CASE("image lattice") {
    auto v = image_lattice(GroupSpec({alpha1()}), Interval(0, 1));
    CHECK(v.kind == LatticeKind::Cyclic);
    CHECK(v.rank == 1);
    REQUIRE(v.generator);
    CHECK(*v.generator == SlopePair{2, q(1, 2)});
    CHECK_FALSE(v.imbalanced);

    auto w = image_lattice(GroupSpec({alpha2()}), iv(1, 4, 1, 2));
    CHECK(w.kind == LatticeKind::Cyclic);
    CHECK(*w.generator == SlopePair{2, q(1, 2)});

    CHECK(image_lattice(GroupSpec({identity()}), Interval(0, 1)).kind == LatticeKind::Trivial);
    CHECK_THROWS_AS(image_lattice(GroupSpec({alpha2()}), Interval(0, 1)), DomainError);

    // generator orientation: inverse input still reports left slope > 1
    auto inv = image_lattice(GroupSpec({inverse(alpha1())}), Interval(0, 1));
    CHECK(*inv.generator == SlopePair{2, q(1, 2)});

    // slopes 2 and 3 at the left end generate a rank-2 image
    auto hr = image_lattice(GroupSpec({alpha1(), both_up()}), Interval(0, 1));
    CHECK(hr.kind == LatticeKind::HigherRank);
    CHECK(hr.rank == 2);

    // a bump sharing only the left end makes the image imbalanced
    auto im = image_lattice(GroupSpec({alpha1(), bump(iv(0, 1, 1, 2))}), Interval(0, 1));
    CHECK(im.imbalanced);
    CHECK(im.kind == LatticeKind::HigherRank);

    // alpha1^2 and alpha1^3 together generate the same image as alpha1
    auto sq = image_lattice(GroupSpec({power(alpha1(), 2), power(alpha1(), 3)}), Interval(0, 1));
    CHECK(sq.kind == LatticeKind::Cyclic);
    CHECK(*sq.generator == SlopePair{2, q(1, 2)});
  }

  TEST_CASE("lattice verdicts ignore generator order") {
    std::vector<PLMap> gens{alpha1(), alpha2(), both_up(), power(alpha1(), 2)};
    oracle::Generator gen(42);
    auto ref = image_lattice(GroupSpec(gens), Interval(0, 1));
    for (int i = 0; i < 10; ++i) {
      std::shuffle(gens.begin(), gens.end(), gen.rng());
      auto v = image_lattice(GroupSpec(gens), Interval(0, 1));
      CHECK(v.rank == ref.rank);
      CHECK(v.kind == ref.kind);
    }
    std::vector<PLMap> cyc{power(alpha1(), 4), alpha2(), power(alpha1(), 6)};
    auto c0 = image_lattice(GroupSpec(cyc), Interval(0, 1));
    std::reverse(cyc.begin(), cyc.end());
    auto c1 = image_lattice(GroupSpec(cyc), Interval(0, 1));
    CHECK(c0.kind == LatticeKind::Cyclic);
    CHECK(*c0.generator == *c1.generator);
    CHECK(*c0.generator == SlopePair{4, q(1, 4)});
  }

  TEST_CASE("find controller") {
    PLMap c = find_controller(w_generators(2), Interval(0, 1), 1);
    CHECK((c == alpha1() || c == inverse(alpha1())));
    PLMap c2 = find_controller(GroupSpec({power(alpha1(), 2), alpha2()}), Interval(0, 1), 1);
    CHECK(c2 == power(alpha1(), 2));
    CHECK_THROWS_AS(find_controller(GroupSpec({alpha2()}), Interval(0, 1), 2), DomainError);
    CHECK_THROWS_AS(find_controller(GroupSpec({identity()}), Interval(0, 1), 2), DomainError);
    // the generator of <a1^2, a1^3> is a1, which first appears at radius 2
    GroupSpec g({power(alpha1(), 2), power(alpha1(), 3)});
    CHECK_THROWS_AS(find_controller(g, Interval(0, 1), 1), SearchExhausted);
    PLMap c3 = find_controller(g, Interval(0, 1), 2);
    CHECK(phi(c3, Interval(0, 1)).left != 1);
    CHECK(support(c3) == std::vector<Interval>{Interval(0, 1)});
  }

  TEST_CASE("c-form") {
    Interval a(0, 1);
    PLMap h = compose(power(alpha1(), 2), alpha2());
    CForm f = c_form(h, alpha1(), a);
    CHECK(f.exponent == 2);
    CHECK(f.residue == alpha2());
    CHECK(phi(f.residue, a) == SlopePair{1, 1});
    CHECK(compose(power(alpha1(), f.exponent), f.residue) == h);

    CForm self = c_form(alpha1(), alpha1(), a);
    CHECK(self.exponent == 1);
    CHECK(self.residue.is_identity());
    CForm id = c_form(identity(), alpha1(), a);
    CHECK(id.exponent == 0);
    CHECK(id.residue.is_identity());
    CHECK_THROWS_AS(c_form(both_up(), alpha1(), a), DomainError);
  }

  TEST_CASE("c-form round trip and uniqueness on the W2 ball") {
    Interval a(0, 1);
    auto b = ball(w_generators(2), 3);
    for (const auto& h : b.elements) {
      CForm f = c_form(h, alpha1(), a);
      CHECK(compose(power(alpha1(), f.exponent), f.residue) == h);
      CHECK_FALSE(realizes_end(f.residue, a, End::Left));
      CHECK_FALSE(realizes_end(f.residue, a, End::Right));
      CForm again = c_form(h, alpha1(), a);
      CHECK(again.exponent == f.exponent);
      CHECK(again.residue == f.residue);
    }
  }

  TEST_CASE("consistency") {
    CHECK(is_consistent_controller(alpha1(), Interval(0, 1)));
    CHECK_FALSE(is_consistent_controller(both_up(), Interval(0, 1)));
    CHECK(controller_realizes(alpha1(), Interval(0, 1)));
    CHECK_FALSE(controller_realizes(alpha2(), Interval(0, 1)));
    PLMap inconsistent({{0, 0}, {q(1, 8), q(1, 4)}, {q(1, 2), q(1, 2)}, {q(11, 12), q(3, 4)}, {1, 1}});
    CHECK_FALSE(is_consistent_controller(inconsistent, Interval(0, 1)));
    CHECK_FALSE(controller_realizes(inconsistent, Interval(0, 1)));
  }

  TEST_CASE("consistent controllers realize their orbital on solvable fixtures") {
    for (int n = 1; n <= 3; ++n) {
      GroupSpec g = w_generators(n);
      for (const auto& o : group_orbitals(g)) {
        PLMap c = find_controller(g, o, 2);
        if (!is_consistent_controller(c, o)) continue;
        CHECK(controller_realizes(c, o));
        for (const auto& h : ball(g, 2).elements)
          if (realizes_end(h, o, End::Left) && realizes_end(h, o, End::Right)) CHECK(has_orbital(h, o));
      }
    }
  }

  TEST_CASE("slope logarithms") {
    SlopePair base{2, q(1, 2)};
    CHECK(slope_log(SlopePair{8, q(1, 8)}, base) == 3);
    CHECK(slope_log(SlopePair{q(1, 4), 4}, base) == -2);
    CHECK(slope_log(SlopePair{1, 1}, base) == 0);
    CHECK_FALSE(slope_log(SlopePair{2, 2}, base));
    CHECK_FALSE(slope_log(SlopePair{3, q(1, 3)}, base));
    CHECK(SlopePair{2, 3}.inverse() == SlopePair{q(1, 2), q(1, 3)});
    CHECK(to_string(LatticeKind::Cyclic) == "Cyclic");
  }
}
