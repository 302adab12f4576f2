#pragma once

// The .inet text format.
//
//   file    := (net | query)* ;
//   net     := "net" IDENT "{" stmt* "}" ;
//   stmt    := IDENT ("->" | "!>") IDENT ";"   -- positive / negative link
//            | IDENT ";"                       -- isolated node
//   query   := "query" IDENT ":" IDENT "?" IDENT
//              ("expect" ("pos" | "neg" | "none"))? ";" ;
//
// "#" starts a comment running to the end of the line. LF and CRLF are
// accepted; serialize() emits LF.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inet/diagram.hpp"

namespace inet {

struct NamedNet {
  std::string name;
  Diagram diagram;

  friend bool operator==(const NamedNet&, const NamedNet&) = default;
};

struct Query {
  std::string net;
  NodeId subject;
  NodeId predicate;
  std::optional<Verdict> expect;

  friend bool operator==(const Query&, const Query&) = default;
};

struct NetFile {
  std::vector<NamedNet> nets;  // declaration order
  std::vector<Query> queries;  // file order

  const NamedNet* find(std::string_view name) const;

  friend bool operator==(const NetFile&, const NetFile&) = default;
};

// Throws ParseError: kSyntaxError for malformed input, kSemanticError for
// duplicate nets or queries naming unknown nets/nodes, and the diagram codes
// (kCycleDetected, kHardContradiction, kSelfLoop) with the offending line.
NetFile parse(std::string_view text);

// Canonical text: nets in declaration order with statements sorted by
// (source, target, polarity) followed by isolated nodes, then all queries.
std::string serialize(const NetFile& nf);

const char* expect_keyword(Verdict v);  // "pos" / "neg" / "none"

}  // namespace inet
