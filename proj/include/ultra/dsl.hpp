#ifndef ULTRA_DSL_HPP_
#define ULTRA_DSL_HPP_

#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "symbolic.hpp"
#include "ultragraph.hpp"
#include "vertex_set.hpp"

namespace ultra {

// ---- lexer -------------------------------------------------------------------

struct Token {
  enum class Kind { Word, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  SourceSpan span;
};

namespace detail {

inline bool word_start(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
inline bool word_char(char c) { return word_start(c) || c == '.' || c == '\''; }

inline std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      advance(1);
      continue;
    }
    SourceSpan span{line, col};
    if (word_start(c)) {
      std::size_t j = i;
      while (j < text.size() && word_char(text[j])) ++j;
      out.push_back({Token::Kind::Word, std::string(text.substr(i, j - i)), span});
      advance(j - i);
      continue;
    }
    for (std::string_view p : {"->", ">=", "~{", "{", "}", "[", "]", ":", "+", "-", "~"}) {
      if (text.substr(i, p.size()) == p) {
        out.push_back({Token::Kind::Punct, std::string(p), span});
        advance(p.size());
        goto next;
      }
    }
    throw ParseError(ErrorKind::SyntaxError, span, std::string("unexpected character '") + c + "'");
  next:;
  }
  out.push_back({Token::Kind::End, "", SourceSpan{line, col}});
  return out;
}

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool accept(std::string_view text) {
    if (peek().kind != Token::Kind::End && peek().text == text) {
      next();
      return true;
    }
    return false;
  }
  const Token& expect(std::string_view text) {
    if (peek().text != text || peek().kind == Token::Kind::End) fail("expected '" + std::string(text) + "'");
    return next();
  }
  [[noreturn]] void fail(const std::string& what) const {
    std::string got = at_end() ? "end of input" : "'" + peek().text + "'";
    throw ParseError(ErrorKind::SyntaxError, peek().span, what + ", found " + got);
  }

  std::int64_t integer() {
    bool neg = accept("-");
    const Token& t = peek();
    if (t.kind != Token::Kind::Word || t.text.empty() || t.text.size() > 17) fail("expected an integer");
    for (char c : t.text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected an integer");
    }
    next();
    std::int64_t v = std::stoll(t.text);
    return neg ? -v : v;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// ---- ultragraph documents ------------------------------------------------------

inline const std::set<std::string>& dsl_keywords() {
  static const std::set<std::string> k{"vertices", "tail", "edge", "family", "for", "step"};
  return k;
}

// A vertex reference as written: a name, prefix[k], or prefix[param + d].
struct VertexRef {
  enum class Kind { Name, Index, Offset };
  Kind kind = Kind::Name;
  std::string name;  // the name, or the prefix
  std::string param;
  std::int64_t value = 0;  // the index k or the offset d
  SourceSpan span;

  friend bool operator==(const VertexRef& a, const VertexRef& b) {
    return a.kind == b.kind && a.name == b.name && a.param == b.param && a.value == b.value;
  }
};

struct RangeExpr {
  bool cofinite = false;
  std::vector<VertexRef> items;
  SourceSpan span;
  friend bool operator==(const RangeExpr& a, const RangeExpr& b) {
    return a.cofinite == b.cofinite && a.items == b.items;
  }
};

struct EdgeDecl {
  std::string id;
  VertexRef source;
  RangeExpr range;
  SourceSpan span;
  friend bool operator==(const EdgeDecl& a, const EdgeDecl& b) {
    return a.id == b.id && a.source == b.source && a.range == b.range;
  }
};

struct FamilyDecl {
  std::string id;
  std::string param = "n";
  std::int64_t start = 0;
  std::int64_t step = 1;
  VertexRef source;
  RangeExpr range;
  SourceSpan span;
  friend bool operator==(const FamilyDecl& a, const FamilyDecl& b) {
    return a.id == b.id && a.param == b.param && a.start == b.start && a.step == b.step &&
           a.source == b.source && a.range == b.range;
  }
};

struct TailDecl {
  std::string prefix;
  std::string param = "n";
  std::int64_t start = 0;
  SourceSpan span;
  friend bool operator==(const TailDecl& a, const TailDecl& b) {
    return a.prefix == b.prefix && a.param == b.param && a.start == b.start;
  }
};

struct VertexDecl {
  std::string name;
  SourceSpan span;
  friend bool operator==(const VertexDecl& a, const VertexDecl& b) { return a.name == b.name; }
};

struct UltragraphDocument {
  std::vector<VertexDecl> vertices;
  std::optional<TailDecl> tail;
  std::vector<EdgeDecl> edges;
  std::vector<FamilyDecl> families;
  friend bool operator==(const UltragraphDocument&, const UltragraphDocument&) = default;
};

namespace detail {

class DocumentParser {
 public:
  explicit DocumentParser(std::string_view text) : ts_(lex(text)) {}

  UltragraphDocument run() {
    UltragraphDocument doc;
    while (!ts_.at_end()) {
      const Token& t = ts_.peek();
      if (t.text == "vertices") {
        ts_.next();
        while (!ts_.at_end() && !dsl_keywords().count(ts_.peek().text)) {
          doc.vertices.push_back({name("a vertex name"), ts_.peek().span});
          doc.vertices.back().span = last_span_;
        }
      } else if (t.text == "tail") {
        if (doc.tail) throw ParseError(ErrorKind::DuplicateId, t.span, "second tail declaration");
        doc.tail = tail();
      } else if (t.text == "edge") {
        doc.edges.push_back(edge());
      } else if (t.text == "family") {
        doc.families.push_back(family());
      } else {
        ts_.fail("expected 'vertices', 'tail', 'edge' or 'family'");
      }
    }
    return doc;
  }

 private:
  std::string name(const char* what) {
    const Token& t = ts_.peek();
    if (t.kind != Token::Kind::Word) ts_.fail(std::string("expected ") + what);
    if (dsl_keywords().count(t.text)) ts_.fail(std::string("expected ") + what + ", not a keyword");
    last_span_ = t.span;
    return ts_.next().text;
  }

  TailDecl tail() {
    TailDecl d;
    d.span = ts_.next().span;
    d.prefix = name("a tail prefix");
    ts_.expect("[");
    d.param = name("a parameter");
    ts_.expect("]");
    ts_.expect("for");
    if (name("the parameter") != d.param) {
      throw ParseError(ErrorKind::SyntaxError, last_span_, "parameter does not match '" + d.param + "'");
    }
    ts_.expect(">=");
    d.start = ts_.integer();
    return d;
  }

  // NAME | NAME[INT] | NAME[param] | NAME[param + INT] | NAME[param - INT]
  VertexRef ref(const std::string* param) {
    VertexRef r;
    r.span = ts_.peek().span;
    r.name = name("a vertex");
    if (!ts_.accept("[")) return r;
    const Token& t = ts_.peek();
    if (t.kind == Token::Kind::Word && !t.text.empty() && std::isdigit(static_cast<unsigned char>(t.text[0]))) {
      r.kind = VertexRef::Kind::Index;
      r.value = ts_.integer();
    } else {
      std::string p = name("an index");
      if (!param || p != *param) {
        throw ParseError(ErrorKind::SyntaxError, last_span_, "unknown parameter '" + p + "'");
      }
      r.kind = VertexRef::Kind::Offset;
      r.param = p;
      if (ts_.accept("+")) {
        r.value = ts_.integer();
      } else if (ts_.accept("-")) {
        r.value = -ts_.integer();
      }
    }
    ts_.expect("]");
    return r;
  }

  RangeExpr range(const std::string* param) {
    RangeExpr r;
    r.span = ts_.peek().span;
    if (ts_.accept("~{") || (ts_.accept("~") && (ts_.expect("{"), true))) {
      r.cofinite = true;
    } else {
      ts_.expect("{");
    }
    while (!ts_.accept("}")) {
      if (ts_.at_end()) ts_.fail("expected '}'");
      r.items.push_back(ref(param));
    }
    if (!r.cofinite && r.items.empty()) throw ParseError(ErrorKind::EmptyRange, r.span, "empty range");
    return r;
  }

  EdgeDecl edge() {
    EdgeDecl d;
    d.span = ts_.next().span;
    d.id = name("an edge id");
    ts_.expect(":");
    d.source = ref(nullptr);
    ts_.expect("->");
    d.range = range(nullptr);
    return d;
  }

  FamilyDecl family() {
    FamilyDecl d;
    d.span = ts_.next().span;
    d.id = name("a family id");
    ts_.expect("[");
    d.param = name("a parameter");
    ts_.expect("]");
    ts_.expect("for");
    if (name("the parameter") != d.param) {
      throw ParseError(ErrorKind::SyntaxError, last_span_, "parameter does not match '" + d.param + "'");
    }
    ts_.expect(">=");
    d.start = ts_.integer();
    if (ts_.accept("step")) {
      SourceSpan s = ts_.peek().span;
      d.step = ts_.integer();
      if (d.step < 1) throw ParseError(ErrorKind::SyntaxError, s, "step must be positive");
    }
    ts_.expect(":");
    d.source = ref(&d.param);
    ts_.expect("->");
    d.range = range(&d.param);
    return d;
  }

  TokenStream ts_;
  SourceSpan last_span_;
};

}  // namespace detail

inline UltragraphDocument parse(std::string_view text) { return detail::DocumentParser(text).run(); }

namespace detail {

inline std::string render_ref(const VertexRef& r) {
  switch (r.kind) {
    case VertexRef::Kind::Name: return r.name;
    case VertexRef::Kind::Index: return r.name + "[" + std::to_string(r.value) + "]";
    case VertexRef::Kind::Offset:
      if (r.value == 0) return r.name + "[" + r.param + "]";
      return r.name + "[" + r.param + (r.value > 0 ? "+" : "-") + std::to_string(r.value > 0 ? r.value : -r.value) + "]";
  }
  return r.name;
}

inline std::string render_range(const RangeExpr& r) {
  std::string out = r.cofinite ? "~{" : "{";
  for (const auto& x : r.items) out += " " + render_ref(x);
  return out + " }";
}

}  // namespace detail

inline std::string render(const UltragraphDocument& doc) {
  std::ostringstream out;
  if (!doc.vertices.empty()) {
    out << "vertices";
    for (const auto& v : doc.vertices) out << ' ' << v.name;
    out << '\n';
  }
  if (doc.tail) {
    out << "tail " << doc.tail->prefix << '[' << doc.tail->param << "] for " << doc.tail->param
        << " >= " << doc.tail->start << '\n';
  }
  for (const auto& e : doc.edges) {
    out << "edge " << e.id << " : " << detail::render_ref(e.source) << " -> " << detail::render_range(e.range) << '\n';
  }
  for (const auto& f : doc.families) {
    out << "family " << f.id << '[' << f.param << "] for " << f.param << " >= " << f.start;
    if (f.step != 1) out << " step " << f.step;
    out << " : " << detail::render_ref(f.source) << " -> " << detail::render_range(f.range) << '\n';
  }
  return out.str();
}

// ---- document <-> model ----------------------------------------------------------

namespace detail {

class Builder {
 public:
  explicit Builder(const UltragraphDocument& doc) : doc_(doc) {}

  SymbolicUltragraph run() {
    std::set<std::string> seen;
    std::vector<std::string> names;
    std::optional<TailSpec> tail;
    if (doc_.tail) tail = TailSpec{doc_.tail->prefix, doc_.tail->param, doc_.tail->start};
    for (const auto& v : doc_.vertices) {
      if (!seen.insert(v.name).second) throw ParseError(ErrorKind::DuplicateId, v.span, "vertex '" + v.name + "'");
      names.push_back(v.name);
    }
    try {
      shell_ = SymbolicUltragraph(names, tail, {}, {});
    } catch (const Error& e) {
      SourceSpan s = doc_.tail ? doc_.tail->span : SourceSpan{1, 1};
      for (const auto& v : doc_.vertices) {
        if (e.kind() == ErrorKind::DuplicateId && std::string(e.what()).find("'" + v.name + "'") != std::string::npos) {
          s = v.span;
        }
      }
      throw ParseError(e.kind(), s, e.what());
    }
    std::set<std::string> ids;
    std::vector<Edge> edges;
    for (const auto& e : doc_.edges) {
      if (!ids.insert(e.id).second) throw ParseError(ErrorKind::DuplicateId, e.span, "edge '" + e.id + "'");
      edges.push_back(Edge{e.id, fixed(e.source), range(e.range, nullptr)});
    }
    std::vector<EdgeFamily> families;
    for (const auto& f : doc_.families) {
      if (!ids.insert(f.id).second) throw ParseError(ErrorKind::DuplicateId, f.span, "family '" + f.id + "'");
      EdgeFamily fam;
      fam.id = f.id;
      fam.param = f.param;
      fam.start = f.start;
      fam.step = f.step;
      if (f.source.kind == VertexRef::Kind::Offset) {
        check_prefix(f.source);
        fam.source_offset = f.source.value;
      } else {
        fam.fixed_source = fixed(f.source);
      }
      fam.fixed_range = range(f.range, &fam.range_offsets);
      families.push_back(std::move(fam));
    }
    try {
      return SymbolicUltragraph(std::move(names), tail, std::move(edges), std::move(families));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.kind(), locate(e), e.what());
    }
  }

 private:
  void check_prefix(const VertexRef& r) const {
    if (!doc_.tail || r.name != doc_.tail->prefix) {
      throw ParseError(ErrorKind::UndeclaredVertex, r.span, "'" + r.name + "' is not the tail prefix");
    }
  }

  VertexKey fixed(const VertexRef& r) const {
    if (r.kind == VertexRef::Kind::Offset) {
      throw ParseError(ErrorKind::SyntaxError, r.span, "offset reference outside a family");
    }
    std::optional<VertexKey> k;
    if (r.kind == VertexRef::Kind::Name) {
      k = shell_.find_vertex(r.name);
    } else {
      check_prefix(r);
      k = shell_.resolve_index(r.value);
    }
    if (!k) throw ParseError(ErrorKind::UndeclaredVertex, r.span, "vertex '" + render_ref(r) + "'");
    return *k;
  }

  VertexSet range(const RangeExpr& r, std::vector<std::int64_t>* offsets) const {
    std::vector<VertexKey> keys;
    for (const auto& x : r.items) {
      if (x.kind == VertexRef::Kind::Offset) {
        if (!offsets || r.cofinite) {
          throw ParseError(ErrorKind::SyntaxError, x.span, "offset reference not allowed here");
        }
        check_prefix(x);
        offsets->push_back(x.value);
      } else {
        keys.push_back(fixed(x));
      }
    }
    if (r.cofinite) return VertexSet::all_but(shell_.universe(), std::move(keys));
    return VertexSet::of(shell_.universe(), std::move(keys));
  }

  SourceSpan locate(const Error& e) const {
    std::string what = e.what();
    for (const auto& x : doc_.edges) {
      if (what.find("'" + x.id + "'") != std::string::npos) return x.span;
    }
    for (const auto& x : doc_.families) {
      if (what.find("'" + x.id + "'") != std::string::npos) return x.span;
    }
    return SourceSpan{1, 1};
  }

  const UltragraphDocument& doc_;
  SymbolicUltragraph shell_;
};

}  // namespace detail

inline SymbolicUltragraph build(const UltragraphDocument& doc) { return detail::Builder(doc).run(); }

inline SymbolicUltragraph parse_ultragraph(std::string_view text) { return build(parse(text)); }

namespace detail {

inline VertexRef name_ref(const std::string& n) { return VertexRef{VertexRef::Kind::Name, n, "", 0, {}}; }

inline RangeExpr set_expr(const std::function<std::string(VertexKey)>& name, const VertexSet& s) {
  RangeExpr r;
  r.cofinite = s.is_cofinite();
  for (VertexKey k : s.support()) r.items.push_back(name_ref(name(k)));
  return r;
}

}  // namespace detail

inline UltragraphDocument to_document(const SymbolicUltragraph& g) {
  UltragraphDocument doc;
  auto nm = [&](VertexKey k) { return g.name(k); };
  for (const auto& v : g.exceptional_names()) doc.vertices.push_back({v, {}});
  if (g.tail()) doc.tail = TailDecl{g.tail()->prefix, g.tail()->param, g.tail()->start, {}};
  for (const auto& e : g.concrete_edges()) {
    doc.edges.push_back(EdgeDecl{e.id, detail::name_ref(g.name(e.source)), detail::set_expr(nm, e.range), {}});
  }
  for (const auto& f : g.families()) {
    FamilyDecl d;
    d.id = f.id;
    d.param = f.param;
    d.start = f.start;
    d.step = f.step;
    if (f.source_offset) {
      d.source = VertexRef{VertexRef::Kind::Offset, g.tail()->prefix, f.param, *f.source_offset, {}};
    } else {
      d.source = detail::name_ref(g.name(f.fixed_source));
    }
    d.range = detail::set_expr(nm, f.fixed_range);
    std::vector<VertexRef> offs;
    for (std::int64_t o : f.range_offsets) offs.push_back(VertexRef{VertexRef::Kind::Offset, g.tail()->prefix, f.param, o, {}});
    d.range.items.insert(d.range.items.begin(), offs.begin(), offs.end());
    doc.families.push_back(std::move(d));
  }
  return doc;
}

inline UltragraphDocument to_document(const Ultragraph& g) {
  return to_document(SymbolicUltragraph::from_finite(g));
}

inline std::string render(const SymbolicUltragraph& g) { return render(to_document(g)); }
inline std::string render(const Ultragraph& g) { return render(to_document(g)); }

// ---- matrix files -------------------------------------------------------------
//
// Dense: rows of 0/1 tokens. Symbolic:
//   index i >= 0
//   row 0 : ~{ 0 }
//   rows i >= 2 [step k] : { i-1 5 }

using MatrixDocument = std::variant<ZeroOneMatrix, SymbolicZeroOneMatrix>;

namespace detail {

inline ZeroOneMatrix parse_dense(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::vector<SourceSpan> spans;
  int current_line = 0;
  for (const Token& t : lex(text)) {
    if (t.kind == Token::Kind::End) break;
    if (t.kind != Token::Kind::Word || (t.text != "0" && t.text != "1")) {
      throw ParseError(ErrorKind::SyntaxError, t.span, "expected 0 or 1, found '" + t.text + "'");
    }
    if (t.span.line != current_line) {
      rows.emplace_back();
      spans.push_back(t.span);
      current_line = t.span.line;
    }
    rows.back().push_back(t.text == "1" ? 1 : 0);
  }
  if (rows.empty()) throw ParseError(ErrorKind::SyntaxError, SourceSpan{1, 1}, "empty matrix");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw ParseError(ErrorKind::SyntaxError, spans[i],
                       "row has " + std::to_string(rows[i].size()) + " entries, expected " + std::to_string(rows.size()));
    }
  }
  return ZeroOneMatrix::from_rows(rows);
}

// Items of a row pattern: i, i+d, i-d, or a fixed column.
inline void pattern_items(TokenStream& ts, const std::string& param, RowPattern& p, bool cofinite) {
  std::vector<std::int64_t> fixed;
  while (!ts.accept("}")) {
    if (ts.at_end()) ts.fail("expected '}'");
    if (ts.peek().text == param) {
      if (cofinite) ts.fail("offsets are not allowed in a cofinite pattern");
      ts.next();
      std::int64_t d = 0;
      if (ts.accept("+")) {
        d = ts.integer();
      } else if (ts.accept("-")) {
        d = -ts.integer();
      }
      p.offsets.push_back(d);
    } else {
      fixed.push_back(ts.integer());
    }
  }
  p.fixed = IndexSet::of(std::move(fixed), cofinite);
}

inline SymbolicZeroOneMatrix parse_symbolic_matrix(std::string_view text) {
  TokenStream ts(lex(text));
  ts.expect("index");
  std::string param = ts.next().text;
  ts.expect(">=");
  std::int64_t base = ts.integer();
  std::map<std::int64_t, IndexSet> rows;
  std::vector<RowPattern> patterns;
  while (!ts.at_end()) {
    SourceSpan span = ts.peek().span;
    if (ts.accept("row")) {
      std::int64_t i = ts.integer();
      ts.expect(":");
      bool cof = ts.accept("~{") || (ts.accept("~") && (ts.expect("{"), true));
      if (!cof) ts.expect("{");
      std::vector<std::int64_t> items;
      while (!ts.accept("}")) {
        if (ts.at_end()) ts.fail("expected '}'");
        items.push_back(ts.integer());
      }
      if (rows.count(i)) throw ParseError(ErrorKind::DuplicateId, span, "row " + std::to_string(i) + " twice");
      rows[i] = IndexSet::of(std::move(items), cof);
    } else if (ts.accept("rows")) {
      if (ts.next().text != param) ts.fail("expected '" + param + "'");
      ts.expect(">=");
      RowPattern p;
      p.start = ts.integer();
      if (ts.accept("step")) p.step = ts.integer();
      if (p.step < 1) throw ParseError(ErrorKind::SyntaxError, span, "step must be positive");
      ts.expect(":");
      bool cof = ts.accept("~{") || (ts.accept("~") && (ts.expect("{"), true));
      if (!cof) ts.expect("{");
      pattern_items(ts, param, p, cof);
      patterns.push_back(std::move(p));
    } else {
      ts.fail("expected 'row' or 'rows'");
    }
  }
  try {
    return SymbolicZeroOneMatrix(base, std::move(rows), std::move(patterns));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.kind(), SourceSpan{1, 1}, e.what());
  }
}

}  // namespace detail

inline MatrixDocument parse_matrix(std::string_view text) {
  std::vector<Token> toks = detail::lex(text);
  if (!toks.empty() && toks.front().text == "index") return detail::parse_symbolic_matrix(text);
  return detail::parse_dense(text);
}

inline std::string render_matrix(const ZeroOneMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out += (j ? " " : "") + std::string(m.at(i, j) ? "1" : "0");
    out += "\n";
  }
  return out;
}

}  // namespace ultra

#endif  // ULTRA_DSL_HPP_
