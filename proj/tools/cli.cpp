#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "inet/dsl.hpp"
#include "inet/engine.hpp"
#include "inet/oracle.hpp"
#include "inet/reactive.hpp"
#include "inet/setsem.hpp"

namespace inet::cli {

namespace {

// Bad file names, unknown nets and the like; reported like parse errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PolicyFlags {
  std::string preclusion = "off-path";
  std::string validity = "split";
  std::string mode = "sceptical";
  std::string resolver = "p22";

  PolicyConfig config() const {
    PolicyConfig cfg;
    cfg.scope = preclusion == "on-path" ? PreclusionScope::kOnPath
                                        : PreclusionScope::kOffPath;
    cfg.validity = validity == "total" ? PreclusionValidity::kTotal
                                       : PreclusionValidity::kSplit;
    cfg.scepticism = mode == "extensions" ? Scepticism::kExtensions
                                          : Scepticism::kDirect;
    cfg.resolver = resolver == "p21" ? Resolver::kP21 : Resolver::kP22;
    return cfg;
  }
};

void add_policy_flags(CLI::App* app, PolicyFlags& f) {
  app->add_option("--preclusion", f.preclusion, "off-path or on-path")
      ->check(CLI::IsMember({"off-path", "on-path"}));
  app->add_option("--validity", f.validity, "split or total")
      ->check(CLI::IsMember({"split", "total"}));
  app->add_option("--mode", f.mode, "sceptical or extensions")
      ->check(CLI::IsMember({"sceptical", "extensions"}));
  app->add_option("--resolver", f.resolver, "p21 or p22")
      ->check(CLI::IsMember({"p21", "p22"}));
}

NetFile load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse(text.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

const Diagram& net_named(const NetFile& nf, const std::string& name) {
  const NamedNet* net = nf.find(name);
  if (net == nullptr) throw UsageError("no net named '" + name + "'");
  return net->diagram;
}

// Answers queries against one diagram, building the engine (or the
// extension set) once.
class Answerer {
 public:
  Answerer(const Diagram& gamma, const PolicyConfig& cfg,
           std::optional<std::uint64_t> seed) {
    if (cfg.scepticism == Scepticism::kExtensions) {
      for (Conclusion& c : compute_extensions(gamma, cfg).intersection) {
        shared_.emplace(std::pair{c.subject, c.predicate}, std::move(c));
      }
    } else {
      engine_.emplace(gamma, cfg, seed);
    }
  }

  Conclusion ask(const NodeId& x, const NodeId& y) const {
    if (engine_) return engine_->query(x, y);
    if (auto it = shared_.find({x, y}); it != shared_.end()) return it->second;
    return Conclusion{x, y, Verdict::kNone, {}, std::nullopt};
  }

  const Engine* engine() const { return engine_ ? &*engine_ : nullptr; }

 private:
  std::optional<Engine> engine_;
  std::map<std::pair<NodeId, NodeId>, Conclusion> shared_;
};

std::string verdict_line(const Conclusion& c) {
  std::string line = to_string(c.verdict);
  if (!c.witnesses.empty()) line += " " + to_string(c.witnesses.front());
  return line;
}

NodeId node_arg(const Diagram& gamma, const std::string& name) {
  if (!NodeId::is_valid_name(name)) {
    throw UsageError("'" + name + "' is not a node name");
  }
  NodeId id(name);
  if (!gamma.contains(id)) throw UsageError("no node named '" + name + "'");
  return id;
}

int cmd_query(const std::string& file, const std::string& net,
              const std::string& x, const std::string& y,
              const PolicyFlags& flags, bool all, bool show_signposts,
              std::optional<std::uint64_t> seed, std::ostream& out) {
  const NetFile nf = load(file);
  const Diagram& gamma = net_named(nf, net);
  const NodeId xn = node_arg(gamma, x);
  const NodeId yn = node_arg(gamma, y);
  const PolicyConfig cfg = flags.config();

  const Answerer answerer(gamma, cfg, seed);
  const Conclusion c = answerer.ask(xn, yn);
  out << verdict_line(c) << '\n';
  if (all) {
    for (std::size_t i = 1; i < c.witnesses.size(); ++i) {
      out << "  " << to_string(c.witnesses[i]) << '\n';
    }
  }
  if (show_signposts) {
    if (answerer.engine() == nullptr) {
      throw UsageError("--signposts needs --mode sceptical");
    }
    for (const Link& l : answerer.engine()->signposts(xn, yn)) {
      out << "signpost " << to_string(l) << '\n';
    }
  }
  return 0;
}

int cmd_compile(const std::string& file, const std::string& net,
                const std::string& origin, const PolicyFlags& flags,
                std::ostream& out) {
  const NetFile nf = load(file);
  const Diagram& gamma = net_named(nf, net);
  const ReactiveNet rn = compile(gamma, node_arg(gamma, origin),
                                 flags.config());
  out << to_dot(rn, net);
  return 0;
}

int cmd_corpus(const std::string& file, const PolicyFlags& flags,
               std::optional<std::uint64_t> seed, std::ostream& out) {
  const NetFile nf = load(file);
  const PolicyConfig cfg = flags.config();
  std::map<std::string, Answerer> answerers;
  std::size_t passed = 0;
  std::size_t failed = 0;
  for (const Query& q : nf.queries) {
    auto it = answerers.find(q.net);
    if (it == answerers.end()) {
      it = answerers.try_emplace(q.net, nf.find(q.net)->diagram, cfg, seed)
               .first;
    }
    const Conclusion c = it->second.ask(q.subject, q.predicate);
    out << q.net << " " << q.subject << " ? " << q.predicate << ": "
        << verdict_line(c);
    if (c.strength) out << " [strength " << *c.strength << "]";
    if (q.expect) {
      if (*q.expect == c.verdict) {
        ++passed;
        out << " ok";
      } else {
        ++failed;
        out << " FAIL (expected " << expect_keyword(*q.expect) << ")";
      }
    }
    out << '\n';
  }
  out << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

int cmd_labels(const std::string& file, const std::string& net,
               const std::string& origin, std::ostream& out) {
  const NetFile nf = load(file);
  const Diagram& gamma = net_named(nf, net);
  const LabelTable t = label_all(gamma, node_arg(gamma, origin));
  for (const auto& [pair, label] : t.labels) {
    out << pair.first << " " << pair.second << " " << to_string(label)
        << '\n';
  }
  return 0;
}

int cmd_derive(const std::string& file, const std::string& net,
               const std::string& x, const std::string& z, bool negative,
               std::ostream& out) {
  const NetFile nf = load(file);
  const Diagram& gamma = net_named(nf, net);
  const auto goal = setsem::conclusion_goal(
      node_arg(gamma, x), node_arg(gamma, z),
      negative ? Polarity::kNegative : Polarity::kPositive);
  if (auto d = setsem::derive(gamma, goal)) {
    out << setsem::pretty(*d);
  } else {
    out << "no derivation of " << setsem::to_string(goal) << '\n';
  }
  return 0;
}

int cmd_check(const std::string& file, std::ostream& out) {
  const NetFile nf = load(file);
  std::size_t bad = 0;
  for (const NamedNet& net : nf.nets) {
    const auto report = setsem::check_correspondence(net.diagram);
    out << net.name << ": " << report.pairs_checked << " pairs, "
        << report.mismatches.size() << " mismatches\n";
    for (const auto& m : report.mismatches) {
      out << "  " << setsem::to_string(m) << '\n';
    }
    bad += report.mismatches.size();
  }
  return bad == 0 ? 0 : 1;
}

int cmd_oracle(std::size_t trials, std::optional<std::uint64_t> seed_flag,
               std::size_t max_nodes, std::ostream& out) {
  const std::uint64_t seed = seed_flag ? *seed_flag : oracle::seed_from_env(1);
  std::mt19937_64 rng(seed);
  oracle::RandomNetOptions opts;
  opts.max_nodes = max_nodes;
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const Diagram gamma = oracle::random_net(rng, opts);
    for (auto scope : {PreclusionScope::kOffPath, PreclusionScope::kOnPath}) {
      for (auto validity :
           {PreclusionValidity::kSplit, PreclusionValidity::kTotal}) {
        PolicyConfig cfg;
        cfg.scope = scope;
        cfg.validity = validity;
        const Engine engine(gamma, cfg);
        for (const NodeId& x : gamma.nodes()) {
          for (const NodeId& y : gamma.nodes()) {
            ++checked;
            const Verdict a = engine.query(x, y).verdict;
            const Verdict b = oracle::naive_verdict(gamma, x, y, cfg);
            if (a == b) continue;
            ++mismatches;
            out << "mismatch (" << to_string(cfg) << ") trial " << t << " "
                << x << " ? " << y << ": engine " << to_string(a)
                << ", oracle " << to_string(b) << '\n';
          }
        }
      }
    }
  }
  out << "seed " << seed << ": " << trials << " nets, " << checked
      << " queries, " << mismatches << " mismatches\n";
  return mismatches == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Defeasible inheritance net reasoner", "inet"};
  app.require_subcommand(1);

  std::string file, net, x, y;
  PolicyFlags flags;
  bool all = false;
  bool show_signposts = false;
  bool negative = false;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 500;
  std::size_t max_nodes = 8;

  auto* query = app.add_subcommand("query", "decide whether X is a Y");
  query->add_option("file", file)->required();
  query->add_option("net", net)->required();
  query->add_option("x", x)->required();
  query->add_option("y", y)->required();
  add_policy_flags(query, flags);
  query->add_flag("--all", all, "print every witness");
  query->add_flag("--signposts", show_signposts,
                  "list links where no valid path continues");
  query->add_option("--seed", seed, "shuffle pairs of equal degree");

  auto* compile_cmd =
      app.add_subcommand("compile", "reactive compilation as Graphviz DOT");
  compile_cmd->add_option("file", file)->required();
  compile_cmd->add_option("net", net)->required();
  compile_cmd->add_option("origin", x)->required();
  add_policy_flags(compile_cmd, flags);

  auto* corpus = app.add_subcommand("corpus", "run every query in a file");
  corpus->add_option("file", file)->required();
  add_policy_flags(corpus, flags);
  corpus->add_option("--seed", seed, "shuffle pairs of equal degree");

  auto* labels = app.add_subcommand("labels", "pair labels for one origin");
  labels->add_option("file", file)->required();
  labels->add_option("net", net)->required();
  labels->add_option("origin", x)->required();

  auto* derive_cmd =
      app.add_subcommand("derive", "relative-size derivation of X -> Z");
  derive_cmd->add_option("file", file)->required();
  derive_cmd->add_option("net", net)->required();
  derive_cmd->add_option("x", x)->required();
  derive_cmd->add_option("z", y)->required();
  derive_cmd->add_flag("--negative", negative, "derive X & ~Z instead");

  auto* check = app.add_subcommand(
      "check", "compare size derivations with path conclusions");
  check->add_option("file", file)->required();

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "engine against brute force on random nets");
  oracle_cmd->add_option("--trials", trials);
  oracle_cmd->add_option("--seed", seed,
                         "random seed (default: ORACLE_SEED, else 1)");
  oracle_cmd->add_option("--max-nodes", max_nodes)
      ->check(CLI::Range(2, static_cast<int>(oracle::kMaxNodes)));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*query) {
      return cmd_query(file, net, x, y, flags, all, show_signposts, seed, out);
    }
    if (*compile_cmd) return cmd_compile(file, net, x, flags, out);
    if (*corpus) return cmd_corpus(file, flags, seed, out);
    if (*labels) return cmd_labels(file, net, x, out);
    if (*derive_cmd) return cmd_derive(file, net, x, y, negative, out);
    if (*check) return cmd_check(file, out);
    if (*oracle_cmd) return cmd_oracle(trials, seed, max_nodes, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace inet::cli
