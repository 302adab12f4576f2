#include "inet/setsem.hpp"

#include <algorithm>
#include <iterator>

namespace inet::setsem {

namespace {

std::set<NodeId> names(std::initializer_list<const char*> ids) {
  std::set<NodeId> out;
  for (const char* id : ids) out.emplace(id);
  return out;
}

std::string join(const std::set<NodeId>& ids) {
  std::string out;
  for (const NodeId& id : ids) {
    if (!out.empty()) out += " & ";
    out += id.str();
  }
  return out;
}

}  // namespace

SetExpr::SetExpr(std::set<NodeId> positive, std::optional<NodeId> complemented)
    : positive_(std::move(positive)), complemented_(std::move(complemented)) {
  if (positive_.empty()) {
    throw Error(ErrorCode::kSemanticError, "empty set expression");
  }
  if (complemented_ && positive_.contains(*complemented_)) {
    throw Error(ErrorCode::kSemanticError,
                "'" + complemented_->str() + "' both plain and complemented",
                {complemented_->str()});
  }
}

SetExpr::SetExpr(std::initializer_list<const char*> positive)
    : SetExpr(names(positive)) {}

std::string to_string(const SetExpr& e) {
  std::string out = join(e.positive());
  if (e.complemented()) out += " & ~" + e.complemented()->str();
  return out;
}

SizeStatement::SizeStatement(SetExpr reference, SetExpr about, Grade grade,
                             Polarity polarity)
    : reference_(std::move(reference)),
      about_(std::move(about)),
      grade_(grade),
      polarity_(polarity) {
  if (reference_.complemented() || about_.complemented()) {
    throw Error(ErrorCode::kSemanticError,
                "reference and about sets are plain intersections");
  }
  if (polarity_ == Polarity::kNegative && about_.positive().size() != 1) {
    throw Error(ErrorCode::kSemanticError,
                "a negative statement is about a single node");
  }
  for (const NodeId& id : about_.positive()) {
    if (reference_.positive().contains(id)) {
      throw Error(ErrorCode::kSemanticError,
                  "'" + id.str() + "' in both reference and about", {id.str()});
    }
  }
}

SetExpr SizeStatement::subject() const {
  if (polarity_ == Polarity::kNegative) {
    return SetExpr(reference_.positive(), *about_.positive().begin());
  }
  std::set<NodeId> all = reference_.positive();
  all.insert(about_.positive().begin(), about_.positive().end());
  return SetExpr(std::move(all));
}

std::string to_string(const SizeStatement& s) {
  return to_string(s.subject()) + " in " +
         (s.grade() == Grade::kBIG ? "B(" : "b(") + to_string(s.reference()) +
         ", " + to_string(s.about()) + ")";
}

SizeStatement conclusion_goal(const NodeId& x, const NodeId& z, Polarity p) {
  return SizeStatement(SetExpr({x}), SetExpr({z}), Grade::kBig, p);
}

const char* to_string(Rule r) {
  switch (r) {
    case Rule::kBase: return "Base";
    case Rule::kR3: return "R3";
    case Rule::kR12: return "R12";
    case Rule::kR13: return "R13";
    case Rule::kR14: return "R14";
    case Rule::kR2: return "R2";
  }
  return "?";
}

std::size_t Derivation::depth() const {
  std::size_t d = 0;
  for (const Derivation& p : premises) d = std::max(d, p.depth());
  return d + 1;
}

std::size_t Derivation::size() const {
  std::size_t s = 1;
  for (const Derivation& p : premises) s += p.size();
  return s;
}

namespace {

void print(const Derivation& d, std::size_t indent, std::string& out) {
  out += std::string(indent * 2, ' ') + to_string(d.conclusion) + "   by " +
         to_string(d.rule);
  if (!d.note.empty()) out += " (" + d.note + ")";
  out += '\n';
  for (const Derivation& p : d.premises) print(p, indent + 1, out);
}

SizeStatement base_statement(const Link& l) {
  return SizeStatement(SetExpr({l.source}), SetExpr({l.target}), Grade::kBIG,
                       l.polarity);
}

}  // namespace

std::string pretty(const Derivation& d) {
  std::string out;
  print(d, 0, out);
  return out;
}

std::set<SizeStatement> base_theory(const Diagram& gamma) {
  std::set<SizeStatement> out;
  for (const Link& l : gamma.links()) out.insert(base_statement(l));
  return out;
}

Deduction::Deduction(Diagram gamma) : engine_(std::move(gamma)) {}

std::optional<Derivation> Deduction::derive(const SizeStatement& goal) {
  for (const SetExpr* e : {&goal.reference(), &goal.about()}) {
    for (const NodeId& id : e->positive()) diagram().index(id);
  }
  if (auto it = memo_.find(goal); it != memo_.end()) return it->second;
  auto result = attempt(goal);
  memo_.emplace(goal, result);
  return result;
}

std::set<NodeId> Deduction::reference_class(const NodeId& x,
                                            const NodeId& z) {
  const Diagram& g = diagram();
  const std::size_t xi = g.index(x);
  const std::size_t zi = g.index(z);
  if (g.link(xi, zi)) return {x};
  std::set<NodeId> out;
  for (std::size_t y : g.predecessors(zi)) {
    if (!g.reaches(xi, y)) continue;
    const NodeId& yn = g.node(y);
    if (derive(conclusion_goal(x, yn, Polarity::kPositive))) out.insert(yn);
  }
  return out;
}

std::optional<Derivation> Deduction::attempt(const SizeStatement& goal) {
  const Diagram& g = diagram();
  const std::set<NodeId>& ref = goal.reference().positive();
  const std::set<NodeId>& about = goal.about().positive();

  if (goal.grade() == Grade::kBIG) {
    if (about.size() != 1) return std::nullopt;
    const NodeId& z = *about.begin();
    if (ref.size() == 1) {
      auto p = g.link(g.index(*ref.begin()), g.index(z));
      if (p && *p == goal.polarity()) {
        return Derivation{goal, Rule::kBase, {}, {}};
      }
      return std::nullopt;
    }
    return resolve(ref, z, goal.polarity());
  }

  // Every BIG statement is also big.
  SizeStatement strong(goal.reference(), goal.about(), Grade::kBIG,
                       goal.polarity());
  if (auto d = derive(strong)) {
    return Derivation{goal, Rule::kR3, {std::move(*d)}, {}};
  }

  if (ref.size() == 1 && about.size() > 1) {
    // R12: peel off the last channel.
    if (goal.polarity() != Polarity::kPositive) return std::nullopt;
    std::set<NodeId> rest = about;
    const NodeId last = *std::prev(rest.end());
    rest.erase(std::prev(rest.end()));
    auto left = derive(SizeStatement(goal.reference(), SetExpr(rest),
                                     Grade::kBig, Polarity::kPositive));
    if (!left) return std::nullopt;
    auto right = derive(SizeStatement(goal.reference(), SetExpr({last}),
                                      Grade::kBig, Polarity::kPositive));
    if (!right) return std::nullopt;
    return Derivation{goal, Rule::kR12, {std::move(*left), std::move(*right)},
                      {}};
  }

  if (about.size() != 1) return std::nullopt;
  if (ref.size() == 1) {
    // R2: X & (~)Z in b(X, Z) from the transfer to X's reference class.
    const NodeId& x = *ref.begin();
    const NodeId& z = *about.begin();
    if (x == z) return std::nullopt;
    std::set<NodeId> cls = reference_class(x, z);
    if (cls.empty() || cls == std::set<NodeId>{x}) return std::nullopt;
    std::set<NodeId> joined = cls;
    joined.insert(x);
    auto moved = derive(SizeStatement(SetExpr(joined), goal.about(),
                                      Grade::kBig, goal.polarity()));
    if (!moved) return std::nullopt;
    auto channel = derive(SizeStatement(goal.reference(), SetExpr(cls),
                                        Grade::kBig, Polarity::kPositive));
    if (!channel) return std::nullopt;
    return Derivation{goal, Rule::kR2, {std::move(*moved), std::move(*channel)},
                      {}};
  }
  return transfer(goal);
}

std::optional<Derivation> Deduction::resolve(const std::set<NodeId>& sources,
                                             const NodeId& z, Polarity p) {
  const Diagram& g = diagram();
  const std::size_t zi = g.index(z);
  std::vector<SourceReport> reports;
  std::vector<Derivation> premises;
  for (const NodeId& y : sources) {
    auto link = g.link(g.index(y), zi);
    if (!link) return std::nullopt;
    reports.push_back({y, *link, z});
    premises.push_back(
        Derivation{base_statement(Link{y, z, *link}), Rule::kBase, {}, {}});
  }
  BetterRelation better = [&](const NodeId& a, const NodeId& b) {
    return engine_.has_valid_path(g.index(a), g.index(b), Polarity::kPositive);
  };
  const ResolvedSources r = resolve_sources(reports, better, Resolver::kP22);
  const Resolution want =
      p == Polarity::kPositive ? Resolution::kPositive : Resolution::kNegative;
  if (r.resolution != want) return std::nullopt;

  std::string note;
  for (const SourceReport& loser : reports) {
    if (std::find(r.survivors.begin(), r.survivors.end(), loser) !=
        r.survivors.end()) {
      continue;
    }
    std::set<NodeId> winners;
    for (const SourceReport& w : reports) {
      if (w.claim != loser.claim && better(w.source, loser.source)) {
        winners.insert(w.source);
      }
    }
    if (!note.empty()) note += "; ";
    note += join(winners) + " over " + loser.source.str();
  }
  return Derivation{SizeStatement(SetExpr(sources), SetExpr({z}), Grade::kBIG,
                                  p),
                    Rule::kR13, std::move(premises), std::move(note)};
}

std::optional<Derivation> Deduction::transfer(const SizeStatement& goal) {
  // R14: the reference is X & Y1 & .. & Yn where the Yi form X's
  // reference class for Z. Try each factor as X.
  const std::set<NodeId>& ref = goal.reference().positive();
  const NodeId& z = *goal.about().positive().begin();
  for (const NodeId& x : ref) {
    std::set<NodeId> rest = ref;
    rest.erase(x);
    if (reference_class(x, z) != rest) continue;
    auto strong = derive(SizeStatement(SetExpr(rest), goal.about(),
                                       Grade::kBIG, goal.polarity()));
    if (!strong) continue;
    auto channel = derive(SizeStatement(SetExpr({x}), SetExpr(rest),
                                        Grade::kBig, Polarity::kPositive));
    if (!channel) continue;
    return Derivation{goal, Rule::kR14,
                      {std::move(*strong), std::move(*channel)}, {}};
  }
  return std::nullopt;
}

std::optional<Derivation> derive(const Diagram& gamma,
                                 const SizeStatement& goal) {
  return Deduction(gamma).derive(goal);
}

CorrespondenceReport check_correspondence(const Diagram& gamma) {
  Deduction deduction(gamma);
  const Engine engine(gamma);
  CorrespondenceReport report;
  for (std::size_t x = 0; x < gamma.size(); ++x) {
    for (std::size_t z = 0; z < gamma.size(); ++z) {
      if (x == z) continue;
      ++report.pairs_checked;
      const NodeId& xn = gamma.node(x);
      const NodeId& zn = gamma.node(z);
      const bool pos = deduction.derive(
          conclusion_goal(xn, zn, Polarity::kPositive)).has_value();
      const bool neg = deduction.derive(
          conclusion_goal(xn, zn, Polarity::kNegative)).has_value();
      const Verdict v = engine.verdict(x, z);
      if (pos != (v == Verdict::kPositive) ||
          neg != (v == Verdict::kNegative)) {
        report.mismatches.push_back({xn, zn, v, pos, neg});
      }
    }
  }
  return report;
}

std::string to_string(const Mismatch& m) {
  return m.x.str() + " .. " + m.z.str() + ": engine " + inet::to_string(m.engine) +
         ", derives" + (m.derives_positive ? " positive" : "") +
         (m.derives_negative ? " negative" : "") +
         (!m.derives_positive && !m.derives_negative ? " nothing" : "");
}

}  // namespace inet::setsem
