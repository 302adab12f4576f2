#pragma once

// Relative-size reading of a diagram. A link X -> Z says that most of X lies
// in Z: X & Z is a Z-BIG subset of X, written "X & Z in B(X, Z)"; X !> Z says
// the same of X & ~Z. Composite paths only ever transfer the weaker grade
// ("big", b(X, Z)). Conflicts between information sources are settled by
// specificity, and information reaches X through its most specific reference
// class: the intersection of every node Y that X validly reaches and that
// speaks about Z directly.
//
// Rules:
//   Base  X -> Z  gives  X & Z in B(X, Z);  X !> Z  gives  X & ~Z in B(X, Z)
//   R3    A in B(X, Y)  =>  A in b(X, Y)
//   R12   X & Y in b(X, Y),  X & Y' in b(X, Y')  =>  X & Y & Y' in b(X, Y & Y')
//   R13   Yi & (~)Z in B(Yi, Z) for all i  =>  Y1 & .. & Yn & (~)Z in
//         B(Y1 & .. & Yn, Z), the polarity resolved by specificity (P22)
//   R14   Y & (~)Z in B(Y, Z),  X & Y in b(X, Y)  =>
//         X & Y & (~)Z in b(X & Y, Z), Y being X's reference class for Z
//   R2    X & Y & (~)Z in b(X & Y, Z),  X & Y in b(X, Y)  =>  X & (~)Z in b(X, Z)
// where Y may itself be an intersection.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "inet/diagram.hpp"
#include "inet/engine.hpp"

namespace inet::setsem {

// An intersection of nodes, with at most one complemented factor.
// Canonical: factors are kept sorted, so equality is structural.
class SetExpr {
 public:
  // Throws kSemanticError for an empty factor set or a complemented factor
  // that also appears positively.
  explicit SetExpr(std::set<NodeId> positive,
                   std::optional<NodeId> complemented = {});
  SetExpr(std::initializer_list<const char*> positive);

  const std::set<NodeId>& positive() const { return positive_; }
  const std::optional<NodeId>& complemented() const { return complemented_; }
  bool is_single() const {
    return positive_.size() == 1 && !complemented_;
  }

  friend auto operator<=>(const SetExpr&, const SetExpr&) = default;
  friend bool operator==(const SetExpr&, const SetExpr&) = default;

 private:
  std::set<NodeId> positive_;
  std::optional<NodeId> complemented_;
};

std::string to_string(const SetExpr& e);  // "a & b & ~d"

enum class Grade : std::uint8_t { kBig, kBIG };  // b(...), B(...)

// "subject in B(reference, about)". The subject is reference & about for a
// positive statement and reference & ~about for a negative one.
class SizeStatement {
 public:
  // Throws kSemanticError if either set carries a complement, if a negative
  // statement is about more than one node, or if about and reference share
  // a factor.
  SizeStatement(SetExpr reference, SetExpr about, Grade grade,
                Polarity polarity);

  const SetExpr& reference() const { return reference_; }
  const SetExpr& about() const { return about_; }
  Grade grade() const { return grade_; }
  Polarity polarity() const { return polarity_; }
  SetExpr subject() const;

  friend auto operator<=>(const SizeStatement&,
                          const SizeStatement&) = default;
  friend bool operator==(const SizeStatement&, const SizeStatement&) = default;

 private:
  SetExpr reference_;
  SetExpr about_;
  Grade grade_;
  Polarity polarity_;
};

std::string to_string(const SizeStatement& s);  // "a & ~d in b(a, d)"

// The statement corresponding to a conclusion x -> z or x !> z:
// "x & z in b(x, z)" or "x & ~z in b(x, z)".
SizeStatement conclusion_goal(const NodeId& x, const NodeId& z, Polarity p);

enum class Rule : std::uint8_t { kBase, kR3, kR12, kR13, kR14, kR2 };

const char* to_string(Rule r);

struct Derivation {
  SizeStatement conclusion;
  Rule rule;
  std::vector<Derivation> premises;
  std::string note;  // R13: which sources were precluded, and by whom

  std::size_t depth() const;
  std::size_t size() const;  // number of rule applications
};

// Indented rule tree, one statement per line:
//   a & ~d in b(a, d)   by R2
//     a & b & c & ~d in b(a & b & c, d)   by R14
//     ...
std::string pretty(const Derivation& d);

// One Base statement per link.
std::set<SizeStatement> base_theory(const Diagram& gamma);

// Goal-directed prover over one diagram. Results are memoized; specificity
// among sources comes from the path engine under the default policy.
class Deduction {
 public:
  explicit Deduction(Diagram gamma);

  const Diagram& diagram() const { return engine_.diagram(); }

  // Throws kUnknownNode if the goal mentions a node outside the diagram.
  std::optional<Derivation> derive(const SizeStatement& goal);

  // The nodes whose intersection serves as X's reference class for Z:
  // {X} when X links to Z directly, otherwise every Y with a direct link to
  // Z for which X & Y in b(X, Y) is derivable. Empty when X hears nothing
  // about Z.
  std::set<NodeId> reference_class(const NodeId& x, const NodeId& z);

 private:
  std::optional<Derivation> attempt(const SizeStatement& goal);
  std::optional<Derivation> resolve(const std::set<NodeId>& sources,
                                    const NodeId& z, Polarity p);
  std::optional<Derivation> transfer(const SizeStatement& goal);

  Engine engine_;
  std::map<SizeStatement, std::optional<Derivation>> memo_;
};

std::optional<Derivation> derive(const Diagram& gamma,
                                 const SizeStatement& goal);

struct Mismatch {
  NodeId x;
  NodeId z;
  Verdict engine;
  bool derives_positive;
  bool derives_negative;
};

struct CorrespondenceReport {
  std::size_t pairs_checked = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// For every ordered pair (X, Z), X != Z: "X & Z in b(X, Z)" is derivable iff
// the engine concludes Positive, and "X & ~Z in b(X, Z)" iff Negative.
CorrespondenceReport check_correspondence(const Diagram& gamma);

std::string to_string(const Mismatch& m);

}  // namespace inet::setsem
