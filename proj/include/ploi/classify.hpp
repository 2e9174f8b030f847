#pragma once

// Finite structure expressions built from the trivial group by wreath
// products with Z and bounded direct sums, and the decomposition of a group
// generated by one-orbital maps into such an expression.

#include <optional>
#include <string>
#include <vector>

#include "ploi/group.hpp"
#include "ploi/orbitals.hpp"
#include "ploi/plmap.hpp"
#include "ploi/towers.hpp"
#include "ploi/words.hpp"

namespace ploi {

class StructureExpr {
 public:
  enum class Kind { Trivial, Wreath, Sum };

  static StructureExpr trivial();
  static StructureExpr wreath(StructureExpr child);
  // Throws DomainError on an empty child list.
  static StructureExpr sum(std::vector<StructureExpr> children);

  Kind kind() const { return kind_; }
  const std::vector<StructureExpr>& children() const { return children_; }

  // "1", "Wr[e]", "Sum[e1, e2, ...]".
  std::string str() const;

  // Flattens nested sums, drops trivial summands, unwraps single-child sums
  // and sorts summands by their printed form.
  StructureExpr normalized() const;

  friend bool operator==(const StructureExpr&, const StructureExpr&) = default;

 private:
  StructureExpr(Kind kind, std::vector<StructureExpr> children) : kind_(kind), children_(std::move(children)) {}

  Kind kind_ = Kind::Trivial;
  std::vector<StructureExpr> children_;
};

// Trivial = 0, Wr[e] = length(e) + 1, Sum = max over summands.
int expr_derived_length(const StructureExpr& e);

// n such that the group of `e` embeds in G_n.
int embedding_target(const StructureExpr& e);

// One wreath layer: the top generator y of a group orbital and the pieces
// inside it, conjugated by powers of y into the fundamental domain [a, a y).
struct CertNode {
  CertNode(Interval o, PLMap y) : orbital(std::move(o)), top(std::move(y)) {}

  Interval orbital;
  PLMap top;
  std::optional<Interval> domain;      // [a, a y), stored as (a, a y)
  std::vector<PLMap> members;          // pieces inside the orbital, as given
  std::vector<long> exponents;         // members[i] is conjugated by y^exponents[i]
  std::vector<CertNode> children;      // decomposition of the conjugated members
  StructureExpr expr = StructureExpr::trivial();
  int window = 2;                      // translates y^k, |k| <= window, checked disjoint
  bool wreath_verified = false;
  bool synthesized_top = false;        // top built as a product of several pieces
};

struct DecompositionCert {
  StructureExpr expr = StructureExpr::trivial();
  std::vector<CertNode> roots;
  int radius = 0;
};

// Requires every generator to have exactly one orbital and no two
// generators to be conjugate (by an element of the radius ball) onto the
// same orbital; DomainError otherwise. Transition chains, imbalance and
// orbitals crossing a fundamental domain end raise Obstruction.
DecompositionCert one_bump_decompose(const GroupSpec& g, int radius, std::size_t cap = kDefaultBallCap);

enum class ClassificationStatus { Classified, Obstructed };

struct ClassificationReport {
  ClassificationStatus status = ClassificationStatus::Classified;
  int radius = 0;
  std::size_t gamma_pieces = 0;
  std::optional<DecompositionCert> cert;
  int derived_length = 0;
  int embedding_target = 0;

  std::string obstruction_kind;  // transition_chain, imbalance, non_exemplary, geometry
  std::string obstruction;
  std::optional<std::pair<SignedOrbital, SignedOrbital>> chain;
  std::optional<BalanceWitness> imbalance;
  std::vector<std::size_t> tower_growth;  // max tower height at radius 1..radius

  std::optional<DepthReport> towers;
  std::optional<DerivedReport> derived;
  bool cross_checks_agree = false;
  std::string summary;
};

struct ClassificationOptions {
  std::size_t cap = kDefaultBallCap;
  // Radius for the commutator cross-check; 0 skips it.
  int derived_radius = 2;
  DerivedOptions derived{};
};

// Classifies the split group of G (which contains G and has the same
// derived length) from the one-orbital pieces of the radius ball. Never
// throws for geometric obstructions; they are reported.
ClassificationReport classification_report(const GroupSpec& g, int radius, const ClassificationOptions& opts = {});

}  // namespace ploi
