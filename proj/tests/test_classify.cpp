#include <doctest.h>

#include "ploi/classify.hpp"
#include "ploi/construct.hpp"
#include "ploi/error.hpp"

using namespace ploi;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }
Interval iv(long a, long b, long c, long d) { return Interval(q(a, b), q(c, d)); }

StructureExpr wr(int n) {
  StructureExpr e = StructureExpr::trivial();
  for (int i = 0; i < n; ++i) e = StructureExpr::wreath(e);
  return e;
}

// Conjugates translated by y^k, |k| <= window, are pairwise disjoint.
void check_wreath_windows(const CertNode& node) {
  CHECK(node.wreath_verified);
  if (!node.children.empty()) {
    std::vector<Interval> inner;
    for (const auto& c : node.children) inner.push_back(c.orbital);
    for (long k = -node.window; k <= node.window; ++k)
      for (long l = k + 1; l <= node.window; ++l)
        for (const auto& x : inner)
          for (const auto& z : inner)
            CHECK_FALSE(image(x, power(node.top, k)).overlaps(image(z, power(node.top, l))));
  }
  CHECK(has_orbital(node.top, node.orbital));
  for (const auto& c : node.children) {
    CHECK(c.orbital.within(*node.domain));
    check_wreath_windows(c);
  }
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("expressions") {
    CHECK(StructureExpr::trivial().str() == "1");
    CHECK(wr(2).str() == "Wr[Wr[1]]");
    CHECK(expr_derived_length(wr(2)) == 2);
    CHECK(expr_derived_length(StructureExpr::trivial()) == 0);
    CHECK(expr_derived_length(StructureExpr::sum({wr(1), wr(3)})) == 3);
    CHECK(expr_derived_length(StructureExpr::wreath(StructureExpr::trivial())) == 1);
    CHECK(embedding_target(wr(3)) == 3);
    CHECK(embedding_target(StructureExpr::trivial()) == 0);
    CHECK(embedding_target(StructureExpr::sum({wr(2), wr(1)})) == 2);
    CHECK_THROWS_AS(StructureExpr::sum({}), DomainError);
    CHECK(StructureExpr::sum({wr(2), wr(1)}).str() == "Sum[Wr[Wr[1]], Wr[1]]");
  }

  TEST_CASE("normalization") {
    auto nested = StructureExpr::sum({wr(1), StructureExpr::sum({wr(2), StructureExpr::trivial()})});
    auto n = nested.normalized();
    CHECK(n.kind() == StructureExpr::Kind::Sum);
    CHECK(n.children().size() == 2);
    CHECK(n.str() == "Sum[Wr[1], Wr[Wr[1]]]");
    CHECK(n.normalized() == n);
    CHECK(StructureExpr::sum({wr(2)}).normalized() == wr(2));
    CHECK(StructureExpr::sum({StructureExpr::trivial()}).normalized() == StructureExpr::trivial());
    CHECK(StructureExpr::sum({wr(1), wr(2)}).normalized() == StructureExpr::sum({wr(2), wr(1)}).normalized());
  }

  TEST_CASE("sub-expressions of G_k truncations embed no higher") {
    for (int k = 1; k <= 3; ++k) {
      auto rep = classification_report(gn_generators({k, 1}), 2);
      REQUIRE(rep.cert);
      std::vector<const StructureExpr*> stack{&rep.cert->expr};
      while (!stack.empty()) {
        const StructureExpr* e = stack.back();
        stack.pop_back();
        CHECK(embedding_target(*e) <= k);
        CHECK(embedding_target(*e) == expr_derived_length(*e));
        for (const auto& c : e->children()) stack.push_back(&c);
      }
    }
  }

  TEST_CASE("one bump decomposition") {
    auto w2 = one_bump_decompose(w_generators(2), 2);
    CHECK(w2.expr == wr(2));
    REQUIRE(w2.roots.size() == 1);
    CHECK(w2.roots[0].orbital == Interval(0, 1));
    check_wreath_windows(w2.roots[0]);

    auto g1 = one_bump_decompose(gn_generators({1, 1}), 2);
    CHECK(g1.expr.str() == "Sum[Wr[1], Wr[1], Wr[1]]");

    auto pair = one_bump_decompose(GroupSpec({alpha2(), beta(1)}), 2);
    CHECK(pair.expr == StructureExpr::sum({wr(1), wr(1)}));

    for (int n = 1; n <= 3; ++n) {
      auto c = one_bump_decompose(w_generators(n), 2);
      CHECK(c.expr == wr(n));
      for (const auto& r : c.roots) check_wreath_windows(r);
    }
  }

  TEST_CASE("one bump decomposition hypotheses") {
    CHECK_THROWS_AS(one_bump_decompose(GroupSpec({compose(alpha2(), beta(1))}), 2), DomainError);
    CHECK_THROWS_AS(one_bump_decompose(GroupSpec({bump(iv(1, 8, 1, 2)), bump(iv(1, 4, 3, 4))}), 2), Obstruction);
    CHECK_THROWS_AS(one_bump_decompose(GroupSpec({alpha1(), bump(iv(0, 1, 1, 2))}), 1), Obstruction);
    // beta(1) is alpha2 conjugated by alpha1
    CHECK_THROWS_AS(one_bump_decompose(GroupSpec({alpha1(), alpha2(), beta(1)}), 2), DomainError);
    // two generators on one orbital
    CHECK_THROWS_AS(one_bump_decompose(GroupSpec({alpha1(), power(alpha1(), 2)}), 1), DomainError);
    CHECK_THROWS_AS(one_bump_decompose(w_generators(2), 0), DomainError);
  }

  TEST_CASE("decomposition is invariant under conjugating the generators") {
    for (const auto& h : {alpha1(), inverse(alpha1()), compose(alpha1(), alpha2()), bump(iv(1, 8, 7, 8))}) {
      for (GroupSpec g : {w_generators(2), w_generators(3), gn_generators({1, 1})}) {
        std::vector<PLMap> moved;
        for (const auto& x : g.generators()) moved.push_back(conjugate(x, h));
        CHECK(one_bump_decompose(GroupSpec(moved), 2).expr == one_bump_decompose(g, 2).expr);
      }
    }
  }

  TEST_CASE("classification report") {
    auto w2 = classification_report(w_generators(2), 2);
    CHECK(w2.status == ClassificationStatus::Classified);
    CHECK(w2.summary == "Wr[Wr[1]], derived length 2, embeds in G_2");
    CHECK(w2.derived_length == 2);
    CHECK(w2.embedding_target == 2);
    CHECK(w2.cross_checks_agree);
    CHECK(w2.gamma_pieces > 0);

    auto w3 = classification_report(w_generators(3), 2);
    CHECK(w3.derived_length == 3);
    CHECK(w3.embedding_target == 3);
    CHECK(w3.cert->expr == wr(3));

    auto triv = classification_report(GroupSpec({identity()}), 2);
    CHECK(triv.status == ClassificationStatus::Classified);
    CHECK(triv.cert->expr == StructureExpr::trivial());
    CHECK(triv.derived_length == 0);
    CHECK(triv.summary == "1, derived length 0, embeds in G_0");

    auto chain = classification_report(GroupSpec({bump(iv(1, 8, 1, 2)), bump(iv(1, 4, 3, 4))}), 3);
    CHECK(chain.status == ClassificationStatus::Obstructed);
    CHECK(chain.obstruction_kind == "transition_chain");
    REQUIRE(chain.chain);
    CHECK(chain.tower_growth.size() == 3);
    CHECK(chain.tower_growth.front() < chain.tower_growth.back());

    auto imb = classification_report(GroupSpec({alpha1(), bump(iv(0, 1, 1, 2))}), 1);
    CHECK(imb.status == ClassificationStatus::Obstructed);
    CHECK(imb.obstruction_kind == "imbalance");
    CHECK(imb.imbalance);
    CHECK_THROWS_AS(classification_report(w_generators(2), 0), DomainError);
  }

  TEST_CASE("repair handles multi-orbital generators") {
    // alpha2 * beta(1) has two orbitals; its pieces are separate summands
    auto rep = classification_report(GroupSpec({compose(alpha2(), beta(1))}), 2);
    CHECK(rep.status == ClassificationStatus::Classified);
    CHECK(rep.cert->expr == StructureExpr::sum({wr(1), wr(1)}));
    CHECK(rep.derived_length == 1);

    // <a1^2, a1^3> needs a synthesized controller a1
    auto syn = classification_report(GroupSpec({power(alpha1(), 2), power(alpha1(), 3)}), 1);
    REQUIRE(syn.status == ClassificationStatus::Classified);
    CHECK(syn.cert->expr == wr(1));

    auto g3 = classification_report(gn_generators({3, 1}), 2);
    CHECK(g3.derived_length == 3);
    CHECK(g3.embedding_target == 3);
  }

  TEST_CASE("geometric obstructions are reported, not thrown") {
    // slopes 2 and 3 at the left end of (0,1)
    PLMap other({{0, 0}, {q(1, 8), q(3, 8)}, {q(1, 2), q(3, 4)}, {1, 1}});
    auto rep = classification_report(GroupSpec({alpha1(), other}), 1);
    CHECK(rep.status == ClassificationStatus::Obstructed);
    CHECK_FALSE(rep.obstruction.empty());
  }
}
