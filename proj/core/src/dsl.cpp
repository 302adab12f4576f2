#include "inet/dsl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace inet {

const NamedNet* NetFile::find(std::string_view name) const {
  for (const NamedNet& n : nets) {
    if (n.name == name) return &n;
  }
  return nullptr;
}

const char* expect_keyword(Verdict v) {
  switch (v) {
    case Verdict::kPositive: return "pos";
    case Verdict::kNegative: return "neg";
    case Verdict::kNone: return "none";
  }
  return "none";
}

namespace {

enum class Tok { kIdent, kArrow, kNegArrow, kLBrace, kRBrace, kSemi, kColon,
                 kQuestion, kEnd };

const char* describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kArrow: return "'->'";
    case Tok::kNegArrow: return "'!>'";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kSemi: return "';'";
    case Tok::kColon: return "':'";
    case Tok::kQuestion: return "'?'";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Token t{Tok::kEnd, {}, line_, col_};
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    if (NodeId::is_valid_name(std::string_view(&c, 1))) {
      std::size_t end = pos_;
      while (end < text_.size() &&
             NodeId::is_valid_name(std::string_view(&text_[end], 1))) {
        ++end;
      }
      t.kind = Tok::kIdent;
      t.text = std::string(text_.substr(pos_, end - pos_));
      advance(end - pos_);
      return t;
    }
    auto two = text_.substr(pos_, 2);
    if (two == "->" || two == "!>") {
      t.kind = two == "->" ? Tok::kArrow : Tok::kNegArrow;
      t.text = std::string(two);
      advance(2);
      return t;
    }
    switch (c) {
      case '{': t.kind = Tok::kLBrace; break;
      case '}': t.kind = Tok::kRBrace; break;
      case ';': t.kind = Tok::kSemi; break;
      case ':': t.kind = Tok::kColon; break;
      case '?': t.kind = Tok::kQuestion; break;
      default:
        throw ParseError(ErrorCode::kSyntaxError, line_, col_,
                         std::string("unexpected character '") + c + "'");
    }
    t.text = std::string(1, c);
    advance(1);
    return t;
  }

 private:
  void advance(std::size_t k) {
    pos_ += k;
    col_ += k;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance(1);
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { shift(); }

  NetFile run() {
    NetFile nf;
    std::vector<std::size_t> query_lines;
    std::set<std::string> names;
    while (cur_.kind != Tok::kEnd) {
      if (cur_.kind == Tok::kIdent && cur_.text == "net") {
        const Token kw = cur_;
        NamedNet net = parse_net();
        if (!names.insert(net.name).second) {
          throw ParseError(ErrorCode::kSemanticError, kw.line, kw.column,
                           "duplicate net '" + net.name + "'", {net.name});
        }
        nf.nets.push_back(std::move(net));
      } else if (cur_.kind == Tok::kIdent && cur_.text == "query") {
        query_lines.push_back(cur_.line);
        nf.queries.push_back(parse_query());
      } else {
        fail("'net' or 'query'");
      }
    }
    for (std::size_t i = 0; i < nf.queries.size(); ++i) {
      const Query& q = nf.queries[i];
      const NamedNet* net = nf.find(q.net);
      if (net == nullptr) {
        throw ParseError(ErrorCode::kSemanticError, query_lines[i], 1,
                         "query names unknown net '" + q.net + "'", {q.net});
      }
      for (const NodeId& id : {q.subject, q.predicate}) {
        if (!net->diagram.contains(id)) {
          throw ParseError(ErrorCode::kSemanticError, query_lines[i], 1,
                           "node '" + id.str() + "' is not in net '" + q.net +
                               "'",
                           {id.str()});
        }
      }
    }
    return nf;
  }

 private:
  void shift() { cur_ = lex_.next(); }

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError(ErrorCode::kSyntaxError, cur_.line, cur_.column,
                     "expected " + expected + ", found " +
                         (cur_.kind == Tok::kIdent ? "'" + cur_.text + "'"
                                                   : describe(cur_.kind)));
  }

  Token expect(Tok kind) {
    if (cur_.kind != kind) fail(describe(kind));
    Token t = cur_;
    shift();
    return t;
  }

  NamedNet parse_net() {
    const Token kw = cur_;
    shift();
    const std::string name = expect(Tok::kIdent).text;
    expect(Tok::kLBrace);
    std::vector<NodeId> isolated;
    std::vector<Link> links;
    std::map<Link, std::size_t> link_line;
    while (cur_.kind != Tok::kRBrace) {
      const Token src = expect(Tok::kIdent);
      if (cur_.kind == Tok::kSemi) {
        shift();
        isolated.emplace_back(src.text);
        continue;
      }
      if (cur_.kind != Tok::kArrow && cur_.kind != Tok::kNegArrow) {
        fail("'->', '!>' or ';'");
      }
      const Polarity p =
          cur_.kind == Tok::kArrow ? Polarity::kPositive : Polarity::kNegative;
      shift();
      const Token dst = expect(Tok::kIdent);
      expect(Tok::kSemi);
      Link l{NodeId(src.text), NodeId(dst.text), p};
      if (l.source == l.target) {
        throw ParseError(ErrorCode::kSelfLoop, src.line, src.column,
                         "self loop on '" + src.text + "'", {src.text});
      }
      Link twin{l.source, l.target, opposite(p)};
      if (link_line.contains(twin)) {
        throw ParseError(ErrorCode::kHardContradiction, src.line, src.column,
                         "'" + to_string(l) + "' contradicts '" +
                             to_string(twin) + "' (line " +
                             std::to_string(link_line[twin]) + ")",
                         {src.text, dst.text});
      }
      link_line.emplace(l, src.line);
      links.push_back(std::move(l));
    }
    shift();
    try {
      return NamedNet{name, Diagram::build(std::move(isolated),
                                           std::move(links))};
    } catch (const Error& e) {
      throw ParseError(e.code(), kw.line, kw.column,
                       "net '" + name + "': " + e.what(), e.nodes());
    }
  }

  Query parse_query() {
    shift();
    Query q{expect(Tok::kIdent).text, NodeId("_"), NodeId("_"), std::nullopt};
    expect(Tok::kColon);
    q.subject = NodeId(expect(Tok::kIdent).text);
    expect(Tok::kQuestion);
    q.predicate = NodeId(expect(Tok::kIdent).text);
    if (cur_.kind == Tok::kIdent && cur_.text == "expect") {
      shift();
      if (cur_.kind == Tok::kIdent && cur_.text == "pos") {
        q.expect = Verdict::kPositive;
      } else if (cur_.kind == Tok::kIdent && cur_.text == "neg") {
        q.expect = Verdict::kNegative;
      } else if (cur_.kind == Tok::kIdent && cur_.text == "none") {
        q.expect = Verdict::kNone;
      } else {
        fail("'pos', 'neg' or 'none'");
      }
      shift();
    }
    expect(Tok::kSemi);
    return q;
  }

  Lexer lex_;
  Token cur_;
};

}  // namespace

NetFile parse(std::string_view text) { return Parser(text).run(); }

std::string serialize(const NetFile& nf) {
  std::string out;
  for (const NamedNet& net : nf.nets) {
    out += "net " + net.name + " {\n";
    std::set<NodeId> linked;
    for (const Link& l : net.diagram.links()) {  // already canonical order
      out += "  " + to_string(l) + ";\n";
      linked.insert(l.source);
      linked.insert(l.target);
    }
    for (const NodeId& id : net.diagram.nodes()) {
      if (!linked.contains(id)) out += "  " + id.str() + ";\n";
    }
    out += "}\n";
  }
  for (const Query& q : nf.queries) {
    out += "query " + q.net + ": " + q.subject.str() + " ? " +
           q.predicate.str();
    if (q.expect) out += std::string(" expect ") + expect_keyword(*q.expect);
    out += ";\n";
  }
  return out;
}

}  // namespace inet
