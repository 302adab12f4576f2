#include <gtest/gtest.h>

#include <random>

#include "inet/diagram.hpp"
#include "inet/oracle.hpp"
#include "nets.hpp"

using namespace inet;
using inet::testing::tweety;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kSemanticError;
}

TEST(NodeId, RejectsBadNames) {
  EXPECT_EQ(code_of([] { NodeId(""); }), ErrorCode::kInvalidName);
  EXPECT_EQ(code_of([] { NodeId("a b"); }), ErrorCode::kInvalidName);
  EXPECT_EQ(code_of([] { NodeId("a-b"); }), ErrorCode::kInvalidName);
  EXPECT_NO_THROW(NodeId("_A9"));
  EXPECT_NE(NodeId("a"), NodeId("A"));
}

TEST(Diagram, BuildsTweety) {
  const Diagram g = tweety();
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.links().size(), 5u);
  EXPECT_TRUE(g.contains(neg("c", "d")));
  EXPECT_FALSE(g.contains(pos("c", "d")));
}

TEST(Diagram, NodeSetIncludesIsolatedAndEndpoints) {
  const Diagram g =
      Diagram::build({NodeId("e"), NodeId("a")}, {pos("a", "b")});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.node(0), NodeId("a"));
  EXPECT_EQ(g.node(2), NodeId("e"));
}

TEST(Diagram, DuplicateLinksCollapse) {
  const Diagram g = Diagram::build({pos("a", "b"), pos("a", "b")});
  EXPECT_EQ(g.links().size(), 1u);
}

TEST(Diagram, RejectsCycle) {
  try {
    Diagram::build({pos("a", "b"), pos("b", "c"), neg("c", "a")});
    FAIL() << "cycle accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCycleDetected);
    std::vector<std::string> cycle = e.nodes();
    std::sort(cycle.begin(), cycle.end());
    EXPECT_EQ(cycle, (std::vector<std::string>{"a", "b", "c"}));
  }
  EXPECT_EQ(code_of([] { Diagram::build({pos("a", "b"), pos("b", "a")}); }),
            ErrorCode::kCycleDetected);
}

TEST(Diagram, RejectsHardContradiction) {
  try {
    Diagram::build({pos("c", "d"), neg("c", "d")});
    FAIL() << "contradiction accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHardContradiction);
    EXPECT_EQ(e.nodes(), (std::vector<std::string>{"c", "d"}));
  }
}

TEST(Diagram, RejectsSelfLoop) {
  EXPECT_EQ(code_of([] { Diagram::build({neg("a", "a")}); }),
            ErrorCode::kSelfLoop);
}

TEST(Diagram, UnknownNode) {
  const Diagram g = tweety();
  EXPECT_EQ(code_of([&] { g.index(NodeId("q")); }), ErrorCode::kUnknownNode);
  EXPECT_EQ(code_of([&] { degree(g, NodeId("a"), NodeId("q")); }),
            ErrorCode::kUnknownNode);
}

TEST(Path, ClassifiesKind) {
  const Diagram g = tweety();
  const Path p = g.path_through({"a", "c", "b", "d"});
  EXPECT_EQ(p.kind(), PathKind::kPotential);
  EXPECT_EQ(p.polarity(), Polarity::kPositive);
  EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(to_string(p), "a -> c -> b -> d");

  const Path q({neg("a", "b"), pos("b", "c")});
  EXPECT_EQ(q.kind(), PathKind::kGeneralized);
  const Path r({pos("a", "b"), neg("b", "c")});
  EXPECT_EQ(r.kind(), PathKind::kPotential);
  EXPECT_EQ(r.polarity(), Polarity::kNegative);
  EXPECT_EQ(to_string(r), "a -> b !> c");
}

TEST(Path, PrefixAndNodes) {
  const Path p({pos("a", "c"), pos("c", "b"), pos("b", "d")});
  EXPECT_EQ(*p.prefix(), Path({pos("a", "c"), pos("c", "b")}));
  EXPECT_FALSE(Path({pos("a", "c")}).prefix());
  EXPECT_EQ(p.nodes(), (std::vector<NodeId>{NodeId("a"), NodeId("c"),
                                             NodeId("b"), NodeId("d")}));
}

TEST(Path, Concatenate) {
  const Path ac({pos("a", "c")});
  const Path cbd({pos("c", "b"), pos("b", "d")});
  const Path joined = concatenate(ac, cbd);
  EXPECT_EQ(to_string(joined), "a -> c -> b -> d");
  EXPECT_EQ(joined.kind(), PathKind::kPotential);

  const Path neg_step = concatenate(ac, Path({neg("c", "d")}));
  EXPECT_EQ(neg_step.kind(), PathKind::kPotential);
  EXPECT_EQ(neg_step.polarity(), Polarity::kNegative);

  // A negative link in the middle demotes the result.
  const Path demoted =
      concatenate(Path({neg("a", "b")}), Path({pos("b", "c")}));
  EXPECT_EQ(demoted.kind(), PathKind::kGeneralized);

  EXPECT_EQ(code_of([] {
              concatenate(Path({pos("a", "b")}), Path({pos("c", "d")}));
            }),
            ErrorCode::kEndpointMismatch);
}

TEST(Path, PathThroughMissingLink) {
  EXPECT_EQ(code_of([] { tweety().path_through({"a", "d"}); }),
            ErrorCode::kPathNotInDiagram);
}

TEST(Degree, TweetyExamples) {
  const Diagram g = tweety();
  EXPECT_EQ(degree(g, NodeId("a"), NodeId("d")), 3u);
  EXPECT_EQ(degree(g, NodeId("a"), NodeId("b")), 2u);
  EXPECT_EQ(degree(g, NodeId("b"), NodeId("a")), std::nullopt);
  EXPECT_EQ(degree(g, NodeId("a"), NodeId("a")), std::nullopt);
}

TEST(Degree, BoundsEveryGeneralizedPath) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Diagram g = oracle::random_net(rng);
    for (const Link& l : g.links()) {
      EXPECT_GE(degree(g, l.source, l.target).value_or(0), 1u);
    }
    for (const NodeId& x : g.nodes()) {
      for (const NodeId& y : g.nodes()) {
        const auto paths =
            oracle::enumerate_paths(g, x, y, PathKind::kGeneralized);
        std::size_t longest = 0;
        for (const Path& p : paths) longest = std::max(longest, p.length());
        if (paths.empty()) {
          EXPECT_EQ(degree(g, x, y), std::nullopt);
        } else {
          EXPECT_EQ(degree(g, x, y), longest);
        }
      }
    }
  }
}

TEST(Diagram, TopologicalOrderRespectsLinks) {
  const Diagram g = inet::testing::inheruniv();
  std::vector<std::size_t> rank(g.size());
  const auto order = g.topological_order();
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  for (const Link& l : g.links()) {
    EXPECT_LT(rank[g.index(l.source)], rank[g.index(l.target)]);
  }
}

}  // namespace
