#include <gtest/gtest.h>

#include <random>

#include "inet/dsl.hpp"
#include "nets.hpp"

using namespace inet;

namespace {

ParseError parse_error(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "accepted: " << text;
  return ParseError(ErrorCode::kSyntaxError, 0, 0, "");
}

TEST(Parse, TweetyWithQuery) {
  const NetFile nf = parse(
      "net t { a->b; a->c; c->b; b->d; c!>d; } query t: a ? d expect neg;");
  ASSERT_EQ(nf.nets.size(), 1u);
  EXPECT_EQ(nf.nets[0].name, "t");
  EXPECT_EQ(nf.nets[0].diagram, inet::testing::tweety());
  ASSERT_EQ(nf.queries.size(), 1u);
  EXPECT_EQ(nf.queries[0],
            (Query{"t", NodeId("a"), NodeId("d"), Verdict::kNegative}));
}

TEST(Parse, Nixon) {
  const NetFile nf = parse("net n { a->b; a->c; b->d; c!>d; }");
  EXPECT_EQ(nf.find("n")->diagram, inet::testing::nixon());
  EXPECT_TRUE(nf.queries.empty());
  EXPECT_EQ(nf.find("m"), nullptr);
}

TEST(Parse, CommentsCrlfAndWhitespace) {
  const NetFile nf = parse(
      "# leading comment\r\n"
      "net   n{a\t->b;# trailing\r\n"
      "  b !> c ;}\r\n"
      "query n:a?c;\r\n");
  EXPECT_EQ(nf.nets[0].diagram,
            Diagram::build({pos("a", "b"), neg("b", "c")}));
  EXPECT_FALSE(nf.queries[0].expect.has_value());
}

TEST(Parse, IsolatedNode) {
  const NetFile nf = parse("net n { a -> b; e; }");
  EXPECT_TRUE(nf.nets[0].diagram.contains(NodeId("e")));
  EXPECT_EQ(nf.nets[0].diagram.size(), 3u);
}

TEST(Parse, KeywordsAreOrdinaryNames) {
  const NetFile nf =
      parse("net net { query -> expect; } query net: query ? expect;");
  EXPECT_EQ(nf.queries[0].predicate, NodeId("expect"));
}

TEST(Parse, SyntaxErrors) {
  ParseError e = parse_error("net x { a -> ; }");
  EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 14u);

  e = parse_error("net x {\n  a => b;\n}");
  EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 5u);

  EXPECT_EQ(parse_error("net x { a -> b }").code(), ErrorCode::kSyntaxError);
  EXPECT_EQ(parse_error("net x { a -> b;").code(), ErrorCode::kSyntaxError);
  EXPECT_EQ(parse_error("query x: a ? b expect maybe;").code(),
            ErrorCode::kSyntaxError);
  EXPECT_EQ(parse_error("edge a b;").code(), ErrorCode::kSyntaxError);
}

TEST(Parse, DiagramErrorsCarryLines) {
  ParseError e = parse_error("net x {\n a -> b;\n a !> b;\n}");
  EXPECT_EQ(e.code(), ErrorCode::kHardContradiction);
  EXPECT_EQ(e.line(), 3u);

  e = parse_error("net x {\n a -> a;\n}");
  EXPECT_EQ(e.code(), ErrorCode::kSelfLoop);
  EXPECT_EQ(e.line(), 2u);

  e = parse_error("\n\nnet x {\n a -> b;\n b -> a;\n}");
  EXPECT_EQ(e.code(), ErrorCode::kCycleDetected);
  EXPECT_EQ(e.line(), 3u);
}

TEST(Parse, SemanticErrors) {
  EXPECT_EQ(parse_error("net x { a -> b; } net x { c -> d; }").code(),
            ErrorCode::kSemanticError);
  ParseError e = parse_error("net x { a -> b; }\nquery y: a ? b;");
  EXPECT_EQ(e.code(), ErrorCode::kSemanticError);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(parse_error("net x { a -> b; } query x: a ? q;").code(),
            ErrorCode::kSemanticError);
}

TEST(Parse, QueryMayPrecedeItsNet) {
  const NetFile nf = parse("query x: a ? b expect pos; net x { a -> b; }");
  EXPECT_EQ(nf.queries.size(), 1u);
}

TEST(Serialize, CanonicalForm) {
  const NetFile nf = parse(
      "net n { c!>d; b->d; a->c; a->b; e; }\n"
      "query n: a ? d expect none;\n"
      "net m { x -> y; }\n"
      "query m: x ? y;\n");
  EXPECT_EQ(serialize(nf),
            "net n {\n"
            "  a -> b;\n"
            "  a -> c;\n"
            "  b -> d;\n"
            "  c !> d;\n"
            "  e;\n"
            "}\n"
            "net m {\n"
            "  x -> y;\n"
            "}\n"
            "query n: a ? d expect none;\n"
            "query m: x ? y;\n");
}

TEST(Serialize, EmptyFile) {
  EXPECT_EQ(serialize(NetFile{}), "");
  EXPECT_EQ(parse(""), NetFile{});
}

TEST(Serialize, CorpusRoundTrip) {
  const NetFile nf = inet::testing::corpus();
  EXPECT_GE(nf.nets.size(), 6u);
  EXPECT_EQ(parse(serialize(nf)), nf);
  const std::string text = serialize(nf);
  EXPECT_NE(text.find("expect neg"), std::string::npos);
}

// Random files with keyword-like names, isolated nodes and optional
// expectations.
NetFile random_file(std::mt19937_64& rng) {
  static const std::vector<std::string> pool = {
      "a", "b", "c", "x_1", "Tweety", "_", "net", "query", "expect",
      "pos", "neg", "none", "A", "n0", "n10"};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> count(0, 3);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution sparse(0.3);

  NetFile nf;
  const int nets = count(rng);
  for (int i = 0; i < nets; ++i) {
    std::vector<NodeId> order;
    for (const std::string& s : pool) {
      if (coin(rng)) order.emplace_back(s);
    }
    if (order.empty()) order.emplace_back(pool[pick(rng)]);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Link> links;
    for (std::size_t s = 0; s < order.size(); ++s) {
      for (std::size_t t = s + 1; t < order.size(); ++t) {
        if (!sparse(rng)) continue;
        links.push_back({order[s], order[t],
                         coin(rng) ? Polarity::kPositive
                                   : Polarity::kNegative});
      }
    }
    nf.nets.push_back(
        {"net" + std::to_string(i) + (coin(rng) ? "_" : ""),
         Diagram::build(order, links)});
  }
  for (const NamedNet& net : nf.nets) {
    const auto& nodes = net.diagram.nodes();
    std::uniform_int_distribution<std::size_t> node(0, nodes.size() - 1);
    const int queries = count(rng);
    for (int q = 0; q < queries; ++q) {
      std::optional<Verdict> expect;
      switch (count(rng)) {
        case 0: expect = Verdict::kPositive; break;
        case 1: expect = Verdict::kNegative; break;
        case 2: expect = Verdict::kNone; break;
        default: break;
      }
      nf.queries.push_back(
          {net.name, nodes[node(rng)], nodes[node(rng)], expect});
    }
  }
  std::shuffle(nf.queries.begin(), nf.queries.end(), rng);
  return nf;
}

TEST(Serialize, RandomRoundTrip) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const NetFile nf = random_file(rng);
    const std::string text = serialize(nf);
    ASSERT_EQ(parse(text), nf) << text;
    ASSERT_EQ(serialize(parse(text)), text);
  }
}

}  // namespace
