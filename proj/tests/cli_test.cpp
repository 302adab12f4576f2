#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = inet::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    path_ = (std::filesystem::temp_directory_path() /
             ("inet_cli_" + std::to_string(counter_++) + ".inet"))
                .string();
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::string path_;
};

const std::string kCorpus = INET_CORPUS_FILE;

TEST(CliQuery, TextbookVerdicts) {
  EXPECT_EQ(run({"query", kCorpus, "tweety", "a", "d"}).out,
            "NEGATIVE a -> c !> d\n");
  EXPECT_EQ(run({"query", kCorpus, "nixon", "a", "d"}).out, "NONE\n");
  EXPECT_EQ(run({"query", kCorpus, "updown", "z", "y"}).out,
            "POSITIVE z -> u -> v -> y\n");
}

TEST(CliQuery, PolicyFlags) {
  EXPECT_EQ(run({"query", kCorpus, "splittotal", "u", "y"}).out,
            "NEGATIVE u -> x !> y\n");
  EXPECT_EQ(
      run({"query", kCorpus, "splittotal", "u", "y", "--validity", "total"})
          .out,
      "NONE\n");
  EXPECT_EQ(run({"query", kCorpus, "nixon", "a", "d", "--mode", "extensions"})
                .out,
            "NONE\n");
  EXPECT_EQ(run({"query", kCorpus, "tweety", "a", "d", "--mode", "extensions",
                 "--resolver", "p21"})
                .out,
            "NEGATIVE a -> c !> d\n");
  // On-path preclusion leaves both sides standing, so the extensions fork.
  EXPECT_EQ(run({"query", kCorpus, "tweety", "a", "d", "--mode", "extensions",
                 "--preclusion", "on-path"})
                .out,
            "NONE\n");
  EXPECT_EQ(run({"query", kCorpus, "tweety", "a", "d", "--preclusion",
                 "on-path"})
                .out,
            "NEGATIVE a -> c !> d\n");
  EXPECT_EQ(run({"query", kCorpus, "tweety", "a", "d", "--seed", "9"}).out,
            "NEGATIVE a -> c !> d\n");
}

TEST(CliQuery, AllWitnessesAndSignposts) {
  EXPECT_EQ(run({"query", kCorpus, "inheruniv", "x", "y", "--all"}).out,
            "POSITIVE x -> a -> y\n"
            "  x -> c -> e -> b -> d -> a -> y\n"
            "  x -> c -> y\n");
  EXPECT_EQ(run({"query", kCorpus, "tweety", "a", "d", "--signposts"}).out,
            "NEGATIVE a -> c !> d\n"
            "signpost a -> b\n"
            "signpost b -> d\n"
            "signpost c -> b\n");
}

TEST(CliQuery, Errors) {
  Result r = run({"query", kCorpus, "nope", "a", "d"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("nope"), std::string::npos);
  EXPECT_EQ(run({"query", kCorpus, "tweety", "a", "q"}).code, 2);
  EXPECT_EQ(run({"query", "/nonexistent.inet", "t", "a", "b"}).code, 2);
  EXPECT_EQ(run({"query", kCorpus, "tweety", "a"}).code, 2);
  EXPECT_EQ(run({"query", kCorpus, "tweety", "a", "d", "--validity", "x"})
                .code,
            2);
  EXPECT_EQ(run({}).code, 2);

  TempFile bad("net t {\n a -> b;\n b -> a;\n}\n");
  r = run({"query", bad.path(), "t", "a", "b"});
  EXPECT_EQ(r.code, 2);
  // Diagram errors found after the statements point at the net keyword.
  EXPECT_NE(r.err.find(":1:1: net 't': cycle detected"), std::string::npos)
      << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(CliCompile, Dot) {
  Result r = run({"compile", kCorpus, "updown", "u"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"u -> v\" -> \"v -> y\" [style=dashed, "
                       "label=\"blocks\"];"),
            std::string::npos)
      << r.out;

  auto dashed = [](const std::string& dot) {
    std::size_t n = 0;
    for (std::size_t at = 0;
         (at = dot.find("style=dashed", at)) != std::string::npos; ++at) {
      ++n;
    }
    return n;
  };
  EXPECT_EQ(dashed(run({"compile", kCorpus, "tweety", "a"}).out), 2u);
  EXPECT_EQ(dashed(run({"compile", kCorpus, "chain", "a"}).out), 0u);
  EXPECT_EQ(run({"compile", kCorpus, "tweety", "a", "--preclusion", "on-path"})
                .code,
            2);
}

TEST(CliCorpus, ShippedCorpusPasses) {
  const Result r = run({"corpus", kCorpus});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("tweety a ? d: NEGATIVE a -> c !> d [strength c] ok"),
            std::string::npos);
  EXPECT_NE(r.out.find(" passed, 0 failed\n"), std::string::npos);
}

TEST(CliCorpus, FlippedExpectationFails) {
  TempFile f("net n { a -> b; a -> c; b -> d; c !> d; }\n"
             "query n: a ? d expect pos;\n"
             "query n: a ? b expect pos;\n");
  const Result r = run({"corpus", f.path()});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out,
            "n a ? d: NONE FAIL (expected pos)\n"
            "n a ? b: POSITIVE a -> b [strength a] ok\n"
            "1 passed, 1 failed\n");
}

TEST(CliCorpus, EmptyFile) {
  TempFile f("");
  const Result r = run({"corpus", f.path()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 passed, 0 failed\n");
}

TEST(CliOther, LabelsDeriveCheckOracle) {
  EXPECT_EQ(run({"labels", kCorpus, "tweety", "a"}).out,
            "a a *\na b v+\na c v+\na d v-\n");
  const Result d = run({"derive", kCorpus, "nixon", "a", "d"});
  EXPECT_EQ(d.out, "no derivation of a & d in b(a, d)\n");
  EXPECT_EQ(run({"derive", kCorpus, "chain", "a", "b"}).out,
            "a & b in b(a, b)   by R3\n  a & b in B(a, b)   by Base\n");
  const Result c = run({"check", kCorpus});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("tweety: 12 pairs, 0 mismatches"), std::string::npos);
  const Result o = run({"oracle", "--trials", "20", "--seed", "4"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("seed 4: 20 nets"), std::string::npos);
}

TEST(CliOther, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"corpus", kCorpus}, {"compile", kCorpus, "inheruniv", "x"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(CliOther, Help) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("query"), std::string::npos);
}

}  // namespace
