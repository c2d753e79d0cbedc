// Text formats: `.cat` documents (categories, functors, natural
// transformations, diagrams), `.enet` networks and `.dyn` dynamical
// systems. Parsing reports every error it can recover from, with spans;
// serialization is canonical (declarations sorted by name).
#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autocat/closure.hpp"
#include "autocat/core.hpp"
#include "autocat/functors.hpp"

namespace autocat {

struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 1;
  friend auto operator<=>(const SourceSpan&, const SourceSpan&) = default;
};

struct ParseError {
  SourceSpan span;
  std::string message;
  std::vector<std::string> expected;  // token kinds that would have been accepted
};

template <class T>
struct ParseResult {
  std::optional<T> value;
  std::vector<ParseError> errors;
  bool ok() const noexcept { return value.has_value(); }
};

inline std::string format_error(const ParseError& e, std::string_view file = {}) {
  std::string out;
  if (!file.empty()) out += std::string(file) + ":";
  out += std::to_string(e.span.line) + ":" + std::to_string(e.span.column) + ": error: " + e.message;
  if (!e.expected.empty()) out += " (expected " + detail::join(e.expected, " or ") + ")";
  return out;
}

// ---------------------------------------------------------------------------
// Raw document types

struct RawFunctor {
  std::string name;
  std::string source;
  std::string target;
  std::vector<std::pair<std::string, std::string>> objects;
  std::vector<std::pair<std::string, std::string>> arrows;
  friend bool operator==(const RawFunctor&, const RawFunctor&) = default;
};

struct RawNatural {
  std::string name;
  std::string from;
  std::string to;
  std::vector<std::pair<std::string, std::string>> components;
  friend bool operator==(const RawNatural&, const RawNatural&) = default;
};

struct RawPath {
  std::string name;
  std::vector<std::string> arrows;  // composition order
  friend auto operator<=>(const RawPath&, const RawPath&) = default;
};

struct RawDiagram {
  std::string name;
  std::string category;
  std::vector<RawPath> paths;
  friend bool operator==(const RawDiagram&, const RawDiagram&) = default;
};

struct Document {
  std::vector<RawCategory> categories;
  std::vector<RawFunctor> functors;
  std::vector<RawNatural> naturals;
  std::vector<RawDiagram> diagrams;
  std::vector<EnablingNetwork> networks;
  friend bool operator==(const Document&, const Document&) = default;

  const RawCategory* category(std::string_view name) const { return find(categories, name); }
  const RawFunctor* functor(std::string_view name) const { return find(functors, name); }
  const RawNatural* natural(std::string_view name) const { return find(naturals, name); }
  const RawDiagram* diagram(std::string_view name) const { return find(diagrams, name); }

 private:
  template <class T>
  static const T* find(const std::vector<T>& items, std::string_view name) {
    for (const auto& item : items) {
      if (item.name == name) return &item;
    }
    return nullptr;
  }
};

inline Document normalized(Document doc) {
  auto by_name = [](const auto& a, const auto& b) { return a.name < b.name; };
  for (auto& c : doc.categories) c = normalized(std::move(c));
  for (auto& f : doc.functors) {
    std::sort(f.objects.begin(), f.objects.end());
    std::sort(f.arrows.begin(), f.arrows.end());
  }
  for (auto& n : doc.naturals) std::sort(n.components.begin(), n.components.end());
  for (auto& d : doc.diagrams) std::sort(d.paths.begin(), d.paths.end());
  std::sort(doc.categories.begin(), doc.categories.end(), by_name);
  std::sort(doc.functors.begin(), doc.functors.end(), by_name);
  std::sort(doc.naturals.begin(), doc.naturals.end(), by_name);
  std::sort(doc.diagrams.begin(), doc.diagrams.end(), by_name);
  std::sort(doc.networks.begin(), doc.networks.end(),
            [](const EnablingNetwork& a, const EnablingNetwork& b) { return a.name() < b.name(); });
  return doc;
}

inline bool structurally_equal(const Document& a, const Document& b) { return normalized(a) == normalized(b); }

// ---------------------------------------------------------------------------
// Lexer

namespace detail {

enum class TokenKind { Identifier, Number, String, LBrace, RBrace, Semicolon, Colon, Arrow, DoubleArrow, Dot, Equals, End };

inline std::string describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::String: return "string";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::DoubleArrow: return "'=>'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Equals: return "'='";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

struct Token {
  TokenKind kind;
  std::string text;
  SourceSpan span;
};

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

inline std::vector<Token> lex(std::string_view text, std::vector<ParseError>& errors) {
  std::vector<Token> tokens;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    SourceSpan span{line, col, 1};
    std::size_t start = i;
    if (is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c))) {
      TokenKind kind = is_ident_start(c) ? TokenKind::Identifier : TokenKind::Number;
      while (i < text.size() && is_ident_char(text[i])) advance(1);
      span.length = i - start;
      tokens.push_back({kind, std::string(text.substr(start, i - start)), span});
      continue;
    }
    if (c == '"') {
      advance(1);
      std::string value;
      bool closed = false;
      while (i < text.size() && text[i] != '\n') {
        if (text[i] == '"') {
          advance(1);
          closed = true;
          break;
        }
        if (text[i] == '\\' && i + 1 < text.size() && (text[i + 1] == '"' || text[i + 1] == '\\')) advance(1);
        value += text[i];
        advance(1);
      }
      span.length = std::max<std::size_t>(1, i - start);
      if (!closed) {
        errors.push_back({span, "unterminated string", {}});
        continue;
      }
      tokens.push_back({TokenKind::String, std::move(value), span});
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "->" || two == "=>") {
      span.length = 2;
      tokens.push_back({two == "->" ? TokenKind::Arrow : TokenKind::DoubleArrow, std::string(two), span});
      advance(2);
      continue;
    }
    std::optional<TokenKind> punct;
    switch (c) {
      case '{': punct = TokenKind::LBrace; break;
      case '}': punct = TokenKind::RBrace; break;
      case ';': punct = TokenKind::Semicolon; break;
      case ':': punct = TokenKind::Colon; break;
      case '.': punct = TokenKind::Dot; break;
      case '=': punct = TokenKind::Equals; break;
      default: break;
    }
    if (punct) {
      tokens.push_back({*punct, std::string(1, c), span});
      advance(1);
      continue;
    }
    // Skip one UTF-8 code point.
    std::size_t width = 1;
    while (i + width < text.size() && (static_cast<unsigned char>(text[i + width]) & 0xC0) == 0x80) ++width;
    span.length = width;
    errors.push_back({span, "unexpected character '" + std::string(text.substr(i, width)) + "'", {}});
    advance(width);
  }
  tokens.push_back({TokenKind::End, "", SourceSpan{line, col, 1}});
  return tokens;
}

struct Located {
  std::string text;
  SourceSpan span;
};

// Raised inside a statement to resynchronise at the next ';' or '}'.
struct Resync {};

class Parser {
 public:
  Parser(std::string_view text, bool numeric_names) : numeric_names_(numeric_names) {
    tokens_ = lex(text, errors_);
  }

  std::vector<ParseError>& errors() { return errors_; }

  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  bool at(TokenKind k) const { return peek().kind == k; }
  bool at_keyword(std::string_view kw) const { return at(TokenKind::Identifier) && peek().text == kw; }
  const Token& next() {
    const Token& t = peek();
    if (t.kind != TokenKind::End) ++pos_;
    return t;
  }

  [[noreturn]] void fail(std::vector<std::string> expected, std::string message = {}) {
    const Token& t = peek();
    if (message.empty()) {
      message = t.kind == TokenKind::End ? "unexpected end of input" : "unexpected " + describe(t.kind) + " '" + t.text + "'";
    }
    errors_.push_back({t.span, std::move(message), std::move(expected)});
    throw Resync{};
  }

  const Token& expect(TokenKind k) {
    if (!at(k)) fail({describe(k)});
    return next();
  }

  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail({"'" + std::string(kw) + "'"});
    next();
  }

  Located name() {
    const Token& t = peek();
    bool ok = t.kind == TokenKind::Identifier || t.kind == TokenKind::String ||
              (numeric_names_ && t.kind == TokenKind::Number);
    if (!ok) {
      std::vector<std::string> expected{"identifier", "string"};
      if (numeric_names_) expected.push_back("number");
      fail(expected);
    }
    if (t.text.empty()) fail({}, "names must be nonempty");
    next();
    return {t.text, t.span};
  }

  void error(SourceSpan span, std::string message) { errors_.push_back({span, std::move(message), {}}); }

  // Skip to just after the next ';' or stop before '}' / end.
  void resync_statement() {
    while (!at(TokenKind::End) && !at(TokenKind::RBrace)) {
      if (next().kind == TokenKind::Semicolon) return;
    }
  }

  // Skip past the '}' that closes the current block.
  void resync_block() {
    int depth = 0;
    while (!at(TokenKind::End)) {
      auto k = next().kind;
      if (k == TokenKind::LBrace) ++depth;
      if (k == TokenKind::RBrace && --depth <= 0) return;
    }
  }

  // Runs `statement` until the closing '}' with per-statement recovery.
  template <class F>
  void body(F&& statement) {
    expect(TokenKind::LBrace);
    while (!at(TokenKind::RBrace) && !at(TokenKind::End)) {
      try {
        statement();
      } catch (const Resync&) {
        resync_statement();
      }
    }
    expect(TokenKind::RBrace);
  }

  const Token& current() const { return peek(); }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<ParseError> errors_;
  bool numeric_names_;
};

// Tracks declared names within one namespace and reports duplicates or
// dangling references with spans.
class Scope {
 public:
  Scope(Parser& p, std::string kind) : p_(p), kind_(std::move(kind)) {}

  bool declare(const Located& n) {
    if (!names_.emplace(n.text, n.span).second) {
      p_.error(n.span, kind_ + " " + n.text + " declared twice");
      return false;
    }
    return true;
  }
  bool has(const std::string& n) const { return names_.count(n) != 0; }
  void require(const Located& n, const std::string& context) {
    if (!has(n.text)) p_.error(n.span, "undeclared " + kind_ + " " + n.text + " in " + context);
  }

 private:
  Parser& p_;
  std::string kind_;
  std::map<std::string, SourceSpan> names_;
};

struct FunctorDraft {
  RawFunctor raw;
  Located source, target;
  std::vector<std::pair<Located, Located>> objects, arrows;
};

struct NaturalDraft {
  RawNatural raw;
  Located from, to;
  std::vector<std::pair<Located, Located>> components;
};

struct DiagramDraft {
  RawDiagram raw;
  Located category;
  std::vector<std::vector<Located>> paths;
};

struct CategoryScopes {
  std::set<std::string> objects, arrows;
};

class DocumentParser {
 public:
  explicit DocumentParser(std::string_view text) : p_(text, false) {}

  ParseResult<Document> run() {
    while (!p_.at(TokenKind::End)) {
      try {
        block();
      } catch (const Resync&) {
        p_.resync_block();
      }
    }
    resolve_cross_references();
    auto& errors = p_.errors();
    std::stable_sort(errors.begin(), errors.end(), [](const auto& a, const auto& b) { return a.span < b.span; });
    ParseResult<Document> result;
    result.errors = std::move(errors);
    if (result.errors.empty()) result.value = std::move(doc_);
    return result;
  }

 private:
  void block() {
    if (p_.at_keyword("category")) return category();
    if (p_.at_keyword("functor")) return functor();
    if (p_.at_keyword("natural")) return natural();
    if (p_.at_keyword("diagram")) return diagram();
    if (p_.at_keyword("network")) return network();
    p_.fail({"'category'", "'functor'", "'natural'", "'diagram'", "'network'"});
  }

  void declare_block(std::map<std::string, SourceSpan>& seen, const Located& name, const char* kind) {
    if (!seen.emplace(name.text, name.span).second) p_.error(name.span, std::string(kind) + " " + name.text + " declared twice");
  }

  void category() {
    p_.next();
    Located name = p_.name();
    declare_block(category_names_, name, "category");
    RawCategory raw;
    raw.name = name.text;
    Scope objects(p_, "object"), arrows(p_, "arrow");
    std::vector<std::pair<Located, std::string>> object_refs;  // (reference, context)
    std::vector<std::pair<Located, std::string>> arrow_refs;
    std::set<std::string> identity_for;
    std::set<std::pair<std::string, std::string>> composite_for;

    p_.body([&] {
      if (p_.at_keyword("object")) {
        p_.next();
        Located x = p_.name();
        p_.expect(TokenKind::Semicolon);
        if (objects.declare(x)) raw.objects.push_back(x.text);
      } else if (p_.at_keyword("arrow")) {
        p_.next();
        Located a = p_.name();
        p_.expect(TokenKind::Colon);
        Located d = p_.name();
        p_.expect(TokenKind::Arrow);
        Located c = p_.name();
        p_.expect(TokenKind::Semicolon);
        if (arrows.declare(a)) raw.arrows.push_back({a.text, d.text, c.text});
        object_refs.push_back({d, "arrow " + a.text});
        object_refs.push_back({c, "arrow " + a.text});
      } else if (p_.at_keyword("identity")) {
        auto kw = p_.next().span;
        Located x = p_.name();
        p_.expect(TokenKind::Equals);
        Located a = p_.name();
        p_.expect(TokenKind::Semicolon);
        object_refs.push_back({x, "identity declaration"});
        arrow_refs.push_back({a, "identity of " + x.text});
        if (!identity_for.insert(x.text).second) {
          p_.error(kw, "identity of " + x.text + " declared twice");
        } else {
          raw.identities.push_back({x.text, a.text});
        }
      } else if (p_.at_keyword("compose")) {
        auto kw = p_.next().span;
        Located g = p_.name();
        p_.expect(TokenKind::Dot);
        Located f = p_.name();
        p_.expect(TokenKind::Equals);
        Located h = p_.name();
        p_.expect(TokenKind::Semicolon);
        std::string ctx = "composite " + g.text + " . " + f.text;
        for (const auto* n : {&g, &f, &h}) arrow_refs.push_back({*n, ctx});
        if (!composite_for.insert({g.text, f.text}).second) {
          p_.error(kw, "composite " + g.text + " . " + f.text + " declared twice");
        } else {
          raw.composites.push_back({g.text, f.text, h.text});
        }
      } else {
        p_.fail({"'object'", "'arrow'", "'identity'", "'compose'", "'}'"});
      }
    });
    for (const auto& [ref, ctx] : object_refs) objects.require(ref, ctx);
    for (const auto& [ref, ctx] : arrow_refs) arrows.require(ref, ctx);
    CategoryScopes scopes;
    scopes.objects.insert(raw.objects.begin(), raw.objects.end());
    for (const auto& a : raw.arrows) scopes.arrows.insert(a.name);
    scopes_[raw.name] = std::move(scopes);
    doc_.categories.push_back(std::move(raw));
  }

  void functor() {
    p_.next();
    FunctorDraft d;
    Located name = p_.name();
    declare_block(functor_names_, name, "functor");
    d.raw.name = name.text;
    p_.expect(TokenKind::Colon);
    d.source = p_.name();
    p_.expect(TokenKind::Arrow);
    d.target = p_.name();
    d.raw.source = d.source.text;
    d.raw.target = d.target.text;
    std::set<std::string> mapped_objects, mapped_arrows;
    p_.body([&] {
      bool is_object = p_.at_keyword("object");
      if (!is_object && !p_.at_keyword("arrow")) p_.fail({"'object'", "'arrow'", "'}'"});
      p_.next();
      Located from = p_.name();
      p_.expect(TokenKind::Arrow);
      Located to = p_.name();
      p_.expect(TokenKind::Semicolon);
      auto& seen = is_object ? mapped_objects : mapped_arrows;
      if (!seen.insert(from.text).second) {
        p_.error(from.span, std::string(is_object ? "object " : "arrow ") + from.text + " mapped twice");
        return;
      }
      (is_object ? d.objects : d.arrows).push_back({from, to});
      (is_object ? d.raw.objects : d.raw.arrows).push_back({from.text, to.text});
    });
    functors_.push_back(std::move(d));
  }

  void natural() {
    p_.next();
    NaturalDraft d;
    Located name = p_.name();
    declare_block(natural_names_, name, "natural transformation");
    d.raw.name = name.text;
    p_.expect(TokenKind::Colon);
    d.from = p_.name();
    p_.expect(TokenKind::DoubleArrow);
    d.to = p_.name();
    d.raw.from = d.from.text;
    d.raw.to = d.to.text;
    std::set<std::string> seen;
    p_.body([&] {
      p_.expect_keyword("component");
      Located x = p_.name();
      p_.expect(TokenKind::Equals);
      Located a = p_.name();
      p_.expect(TokenKind::Semicolon);
      if (!seen.insert(x.text).second) {
        p_.error(x.span, "component at " + x.text + " declared twice");
        return;
      }
      d.components.push_back({x, a});
      d.raw.components.push_back({x.text, a.text});
    });
    naturals_.push_back(std::move(d));
  }

  void diagram() {
    p_.next();
    DiagramDraft d;
    Located name = p_.name();
    declare_block(diagram_names_, name, "diagram");
    d.raw.name = name.text;
    p_.expect_keyword("in");
    d.category = p_.name();
    d.raw.category = d.category.text;
    Scope paths(p_, "path");
    p_.body([&] {
      p_.expect_keyword("path");
      Located n = p_.name();
      p_.expect(TokenKind::Equals);
      std::vector<Located> arrows{p_.name()};
      while (p_.at(TokenKind::Dot)) {
        p_.next();
        arrows.push_back(p_.name());
      }
      p_.expect(TokenKind::Semicolon);
      if (!paths.declare(n)) return;
      RawPath path{n.text, {}};
      for (const auto& a : arrows) path.arrows.push_back(a.text);
      d.raw.paths.push_back(std::move(path));
      d.paths.push_back(std::move(arrows));
    });
    diagrams_.push_back(std::move(d));
  }

  void network() {
    p_.next();
    Located name = p_.name();
    declare_block(network_names_, name, "network");
    Scope processes(p_, "process");
    Scope labels(p_, "enabling label");
    std::vector<std::string> declared;
    struct Draft {
      std::optional<Located> label;
      Located source, target;
    };
    std::vector<Draft> drafts;
    p_.body([&] {
      if (p_.at_keyword("process")) {
        p_.next();
        Located x = p_.name();
        p_.expect(TokenKind::Semicolon);
        if (processes.declare(x)) declared.push_back(x.text);
      } else if (p_.at_keyword("enable")) {
        p_.next();
        Located first = p_.name();
        Draft d{std::nullopt, first, first};
        if (p_.at(TokenKind::Colon)) {
          p_.next();
          d.label = first;
          d.source = p_.name();
        }
        p_.expect(TokenKind::Arrow);
        d.target = p_.name();
        p_.expect(TokenKind::Semicolon);
        if (d.label && !labels.declare(*d.label)) return;
        drafts.push_back(std::move(d));
      } else {
        p_.fail({"'process'", "'enable'", "'}'"});
      }
    });
    std::vector<Enabling> enablings;
    std::map<std::pair<std::string, std::string>, std::size_t> auto_count;
    bool ok = true;
    for (const auto& d : drafts) {
      for (const auto* ref : {&d.source, &d.target}) {
        if (!processes.has(ref->text)) {
          p_.error(ref->span, "undeclared process " + ref->text + " in enabling");
          ok = false;
        }
      }
      std::string label;
      if (d.label) {
        label = d.label->text;
      } else {
        auto& k = auto_count[{d.source.text, d.target.text}];
        do {
          label = d.source.text + ">" + d.target.text + "#" + std::to_string(++k);
        } while (labels.has(label));
      }
      enablings.push_back({label, d.source.text, d.target.text});
    }
    if (ok) doc_.networks.emplace_back(name.text, std::move(declared), std::move(enablings));
  }

  void resolve_cross_references() {
    auto category_scope = [&](const Located& ref, const std::string& ctx) -> const CategoryScopes* {
      auto it = scopes_.find(ref.text);
      if (it == scopes_.end()) {
        p_.error(ref.span, "undeclared category " + ref.text + " in " + ctx);
        return nullptr;
      }
      return &it->second;
    };
    auto require = [&](const std::set<std::string>& names, const Located& ref, const char* kind, const std::string& ctx) {
      if (!names.count(ref.text)) p_.error(ref.span, std::string("undeclared ") + kind + " " + ref.text + " in " + ctx);
    };

    std::map<std::string, const FunctorDraft*> functor_by_name;
    for (const auto& d : functors_) {
      functor_by_name.emplace(d.raw.name, &d);
      std::string ctx = "functor " + d.raw.name;
      const auto* src = category_scope(d.source, ctx);
      const auto* tgt = category_scope(d.target, ctx);
      for (const auto& [from, to] : d.objects) {
        if (src) require(src->objects, from, "object", ctx);
        if (tgt) require(tgt->objects, to, "object", ctx);
      }
      for (const auto& [from, to] : d.arrows) {
        if (src) require(src->arrows, from, "arrow", ctx);
        if (tgt) require(tgt->arrows, to, "arrow", ctx);
      }
      doc_.functors.push_back(d.raw);
    }
    for (const auto& d : naturals_) {
      std::string ctx = "natural transformation " + d.raw.name;
      const FunctorDraft* from = nullptr;
      for (const auto* ref : {&d.from, &d.to}) {
        auto it = functor_by_name.find(ref->text);
        if (it == functor_by_name.end()) {
          p_.error(ref->span, "undeclared functor " + ref->text + " in " + ctx);
        } else if (ref == &d.from) {
          from = it->second;
        }
      }
      if (from) {
        auto src = scopes_.find(from->raw.source);
        auto tgt = scopes_.find(from->raw.target);
        for (const auto& [x, a] : d.components) {
          if (src != scopes_.end()) require(src->second.objects, x, "object", ctx);
          if (tgt != scopes_.end()) require(tgt->second.arrows, a, "arrow", ctx);
        }
      }
      doc_.naturals.push_back(d.raw);
    }
    for (const auto& d : diagrams_) {
      std::string ctx = "diagram " + d.raw.name;
      if (const auto* c = category_scope(d.category, ctx)) {
        for (const auto& path : d.paths) {
          for (const auto& a : path) require(c->arrows, a, "arrow", ctx);
        }
      }
      doc_.diagrams.push_back(d.raw);
    }
  }

  Parser p_;
  Document doc_;
  std::map<std::string, CategoryScopes> scopes_;
  std::map<std::string, SourceSpan> category_names_, functor_names_, natural_names_, diagram_names_, network_names_;
  std::vector<FunctorDraft> functors_;
  std::vector<NaturalDraft> naturals_;
  std::vector<DiagramDraft> diagrams_;
};

}  // namespace detail

/// Parses a `.cat` or `.enet` document: any number of `category`,
/// `functor`, `natural`, `diagram` and `network` blocks.
inline ParseResult<Document> parse_document(std::string_view text) { return detail::DocumentParser(text).run(); }

/// A text holding exactly one category block.
inline ParseResult<RawCategory> parse_category(std::string_view text) {
  auto doc = parse_document(text);
  ParseResult<RawCategory> out{std::nullopt, std::move(doc.errors)};
  if (!doc.ok()) return out;
  const auto& d = *doc.value;
  if (d.categories.size() != 1 || !d.functors.empty() || !d.naturals.empty() || !d.diagrams.empty() ||
      !d.networks.empty()) {
    out.errors.push_back({SourceSpan{}, "expected exactly one category block", {"'category'"}});
    return out;
  }
  out.value = d.categories.front();
  return out;
}

/// A text holding exactly one network block.
inline ParseResult<EnablingNetwork> parse_network(std::string_view text) {
  auto doc = parse_document(text);
  ParseResult<EnablingNetwork> out{std::nullopt, std::move(doc.errors)};
  if (!doc.ok()) return out;
  const auto& d = *doc.value;
  if (d.networks.size() != 1 || !d.categories.empty() || !d.functors.empty() || !d.naturals.empty() ||
      !d.diagrams.empty()) {
    out.errors.push_back({SourceSpan{}, "expected exactly one network block", {"'network'"}});
    return out;
  }
  out.value = d.networks.front();
  return out;
}

/// `states a b c; step a -> b; ...`
inline ParseResult<DiscreteDynSys> parse_dynsys(std::string_view text) {
  using detail::TokenKind;
  detail::Parser p(text, true);
  std::vector<detail::Located> states;
  std::optional<SourceSpan> states_span;
  std::vector<std::pair<detail::Located, detail::Located>> steps;
  std::set<std::string> stepped;
  while (!p.at(TokenKind::End)) {
    try {
      if (p.at_keyword("states")) {
        SourceSpan kw = p.next().span;
        if (states_span) p.error(kw, "states declared twice");
        states_span = kw;
        while (!p.at(TokenKind::Semicolon)) states.push_back(p.name());
        p.next();
      } else if (p.at_keyword("step")) {
        p.next();
        auto from = p.name();
        p.expect(TokenKind::Arrow);
        auto to = p.name();
        p.expect(TokenKind::Semicolon);
        if (!stepped.insert(from.text).second) {
          p.error(from.span, "step of " + from.text + " declared twice");
        } else {
          steps.push_back({from, to});
        }
      } else {
        p.fail({"'states'", "'step'"});
      }
    } catch (const detail::Resync&) {
      p.resync_statement();
      if (p.at(TokenKind::RBrace)) p.next();
    }
  }
  std::set<std::string> declared;
  for (const auto& s : states) {
    if (!declared.insert(s.text).second) p.error(s.span, "state " + s.text + " declared twice");
  }
  if (!states_span) {
    p.error(p.current().span, "missing states declaration");
  } else if (states.empty()) {
    p.error(*states_span, "no states declared");
  }
  std::map<std::string, std::string> step;
  for (const auto& [from, to] : steps) {
    for (const auto* ref : {&from, &to}) {
      if (states_span && !declared.count(ref->text)) p.error(ref->span, "undeclared state " + ref->text + " in step");
    }
    step.emplace(from.text, to.text);
  }
  if (states_span) {
    for (const auto& s : declared) {
      if (!stepped.count(s)) p.error(*states_span, "step is undefined on state " + s);
    }
  }
  ParseResult<DiscreteDynSys> out;
  out.errors = std::move(p.errors());
  std::stable_sort(out.errors.begin(), out.errors.end(), [](const auto& a, const auto& b) { return a.span < b.span; });
  if (out.errors.empty()) {
    std::vector<std::string> names(declared.begin(), declared.end());
    out.value.emplace(std::move(names), std::move(step));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

inline bool is_bare(std::string_view s, bool numeric) {
  if (s.empty()) return false;
  if (!is_ident_start(s[0]) && !(numeric && std::isdigit(static_cast<unsigned char>(s[0])))) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

inline std::string quote_name(std::string_view s, bool numeric = false) {
  if (is_bare(s, numeric)) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string serialize(const RawCategory& raw) {
  using detail::quote_name;
  RawCategory c = normalized(raw);
  std::string out = "category " + quote_name(c.name) + " {\n";
  for (const auto& x : c.objects) out += "  object " + quote_name(x) + ";\n";
  for (const auto& a : c.arrows) {
    out += "  arrow " + quote_name(a.name) + ": " + quote_name(a.dom) + " -> " + quote_name(a.cod) + ";\n";
  }
  for (const auto& i : c.identities) out += "  identity " + quote_name(i.object) + " = " + quote_name(i.arrow) + ";\n";
  for (const auto& e : c.composites) {
    out += "  compose " + quote_name(e.outer) + " . " + quote_name(e.inner) + " = " + quote_name(e.result) + ";\n";
  }
  return out + "}\n";
}

inline std::string serialize(const FiniteCategory& c) { return serialize(c.to_raw()); }

inline std::string serialize(const EnablingNetwork& n) {
  using detail::quote_name;
  std::string out = "network " + quote_name(n.name()) + " {\n";
  for (const auto& p : n.processes()) out += "  process " + quote_name(p) + ";\n";
  for (const auto& e : n.enablings()) {
    out += "  enable " + quote_name(e.label) + ": " + quote_name(e.source) + " -> " + quote_name(e.target) + ";\n";
  }
  return out + "}\n";
}

inline std::string serialize(const Document& doc) {
  using detail::quote_name;
  Document d = normalized(doc);
  std::vector<std::string> blocks;
  for (const auto& c : d.categories) blocks.push_back(serialize(c));
  for (const auto& f : d.functors) {
    std::string out = "functor " + quote_name(f.name) + ": " + quote_name(f.source) + " -> " + quote_name(f.target) + " {\n";
    for (const auto& [x, y] : f.objects) out += "  object " + quote_name(x) + " -> " + quote_name(y) + ";\n";
    for (const auto& [a, b] : f.arrows) out += "  arrow " + quote_name(a) + " -> " + quote_name(b) + ";\n";
    blocks.push_back(out + "}\n");
  }
  for (const auto& n : d.naturals) {
    std::string out = "natural " + quote_name(n.name) + ": " + quote_name(n.from) + " => " + quote_name(n.to) + " {\n";
    for (const auto& [x, a] : n.components) out += "  component " + quote_name(x) + " = " + quote_name(a) + ";\n";
    blocks.push_back(out + "}\n");
  }
  for (const auto& g : d.diagrams) {
    std::string out = "diagram " + quote_name(g.name) + " in " + quote_name(g.category) + " {\n";
    for (const auto& p : g.paths) {
      std::vector<std::string> names;
      for (const auto& a : p.arrows) names.push_back(quote_name(a));
      out += "  path " + quote_name(p.name) + " = " + detail::join(names, " . ") + ";\n";
    }
    blocks.push_back(out + "}\n");
  }
  for (const auto& n : d.networks) blocks.push_back(serialize(n));
  return detail::join(blocks, "\n");
}

inline std::string serialize(const DiscreteDynSys& d) {
  using detail::quote_name;
  std::string out = "states";
  for (const auto& s : d.states()) out += " " + quote_name(s, true);
  out += ";\n";
  for (const auto& [from, to] : d.step()) out += "step " + quote_name(from, true) + " -> " + quote_name(to, true) + ";\n";
  return out;
}

/// Graphviz rendering of a category; designated identities are omitted.
inline std::string category_to_dot(const FiniteCategory& c) {
  using detail::dot_quote;
  std::string dot = "digraph " + dot_quote(c.name()) + " {\n";
  for (const auto& x : c.objects()) dot += "  " + dot_quote(x.str()) + ";\n";
  for (FiniteCategory::Index a = 0; a < c.arrow_count(); ++a) {
    if (c.is_identity(a)) continue;
    dot += "  " + dot_quote(c.object(c.dom(a)).str()) + " -> " + dot_quote(c.object(c.cod(a)).str()) +
           " [label=" + dot_quote(c.arrow(a).str()) + "];\n";
  }
  return dot + "}\n";
}

// ---------------------------------------------------------------------------
// Resolution of raw document blocks against validated categories.

using CategoryTable = std::map<std::string, FiniteCategory>;

inline const FiniteCategory& lookup_category(const CategoryTable& table, const std::string& name) {
  auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorKind::UnknownName, "unknown or invalid category " + name);
  return it->second;
}

inline Functor resolve_functor(const RawFunctor& raw, const CategoryTable& table) {
  Functor F{raw.name, std::cref(lookup_category(table, raw.source)), std::cref(lookup_category(table, raw.target)), {}, {}};
  for (const auto& [x, y] : raw.objects) F.objects.emplace(ObjectId{x}, ObjectId{y});
  for (const auto& [a, b] : raw.arrows) F.arrows.emplace(ArrowId{a}, ArrowId{b});
  return F;
}

inline NaturalTransformation resolve_natural(const RawNatural& raw, const Document& doc, const CategoryTable& table) {
  const auto* from = doc.functor(raw.from);
  const auto* to = doc.functor(raw.to);
  if (!from || !to) throw Error(ErrorKind::UnknownName, "natural transformation " + raw.name + " refers to an unknown functor");
  NaturalTransformation nt{raw.name, resolve_functor(*from, table), resolve_functor(*to, table), {}};
  for (const auto& [x, a] : raw.components) nt.components.emplace(ObjectId{x}, ArrowId{a});
  return nt;
}

inline Diagram resolve_diagram(const RawDiagram& raw, const CategoryTable& table) {
  Diagram d{std::cref(lookup_category(table, raw.category)), {}};
  for (const auto& p : raw.paths) {
    Path path{p.name, {}};
    for (const auto& a : p.arrows) path.arrows.emplace_back(a);
    d.paths.push_back(std::move(path));
  }
  return d;
}

}  // namespace autocat
