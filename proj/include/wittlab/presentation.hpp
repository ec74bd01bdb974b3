#pragma once

// Group source files: finite presentations and permutation generators.
//
//   file   := header block | item*            (bare items: a presentation)
//   header := "group" STRING ("presentation" | "permutations" "degree" INT)
//   block  := "{" item* "}"
//   item   := "gens" ident+ ";" | "rel" rel ";" | "gen" cycles ";"
//   rel    := word ("=" word)?
//   word   := "1" | factor+
//   factor := (ident | "(" word ")" | "[" word "," word "]") ("^" INT)?
//   cycles := ("(" INT+ ")")+
//
// '#' starts a line comment. A relation u = v is stored as the relator
// u v^-1, freely reduced; [u,v] denotes u^-1 v^-1 u v.

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wittlab/error.hpp"

namespace wittlab {

inline constexpr std::size_t kMaxGenerators = 8;

struct Letter {
  std::uint8_t generator = 0;
  std::int8_t exponent = 1;  // +1 or -1

  Letter inverse() const { return {generator, static_cast<std::int8_t>(-exponent)}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

/// Cancels adjacent x x^-1 pairs.
inline Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// A permutation of {0..degree-1}, stored as its image list.
using Permutation = std::vector<std::uint32_t>;

struct PermGenSet {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;

  friend bool operator==(const PermGenSet&, const PermGenSet&) = default;
};

using GroupSource = std::variant<Presentation, PermGenSet>;

namespace detail {

enum class Tok { Ident, Int, String, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::int64_t value = 0;
  std::size_t line = 1, column = 1;
};

class Lexer {
 public:
  Lexer(std::string_view src, std::string file) : src_(src), file_(std::move(file)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= src_.size()) {
        t.kind = Tok::End;
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::islower(static_cast<unsigned char>(c))) {
        t.kind = Tok::Ident;
        while (pos_ < src_.size() && (std::islower(static_cast<unsigned char>(src_[pos_])) ||
                                      std::isdigit(static_cast<unsigned char>(src_[pos_]))))
          t.text += advance();
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
        t.kind = Tok::Int;
        if (c == '-') t.text += advance();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
          fail(t, "expected digits after '-'");
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          t.text += advance();
          if (t.text.size() > 9) fail(t, "integer literal too large");
        }
        t.value = std::strtoll(t.text.c_str(), nullptr, 10);
      } else if (c == '"') {
        t.kind = Tok::String;
        advance();
        while (pos_ < src_.size() && src_[pos_] != '"') {
          if (src_[pos_] == '\n') fail(t, "unterminated string");
          t.text += advance();
        }
        if (pos_ >= src_.size()) fail(t, "unterminated string");
        advance();
      } else if (std::string_view("{};()^=[],").find(c) != std::string_view::npos) {
        t.kind = Tok::Sym;
        t.text = std::string(1, advance());
      } else {
        fail(t, std::string("unexpected character '") + c + "'");
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(file_, t.line, t.column, msg);
  }

  std::string_view src_;
  std::string file_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::string file) : toks_(std::move(toks)), file_(std::move(file)) {}

  GroupSource parse_file() {
    if (peek().kind == Tok::End) fail(peek(), "empty file");
    if (is_ident("group")) {
      next();
      const Token& name = expect(Tok::String, "group name string");
      std::string group_name = name.text;
      if (is_ident("presentation")) {
        next();
        expect_sym("{");
        Presentation p = parse_presentation_items("}");
        p.name = group_name;
        expect_sym("}");
        expect_end();
        return p;
      }
      if (is_ident("permutations")) {
        next();
        if (!is_ident("degree")) fail(peek(), "expected 'degree'");
        next();
        const Token& deg = expect(Tok::Int, "degree");
        if (deg.value <= 0) fail(deg, "degree must be positive");
        expect_sym("{");
        PermGenSet g = parse_permutation_items(static_cast<std::size_t>(deg.value));
        g.name = group_name;
        expect_sym("}");
        expect_end();
        return g;
      }
      fail(peek(), "expected 'presentation' or 'permutations'");
    }
    Presentation p = parse_presentation_items("");
    expect_end();
    return p;
  }

  Word parse_standalone_word(const std::vector<std::string>& gens) {
    gens_ = gens;
    Word w = parse_relation();
    expect_end();
    return w;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool is_ident(std::string_view s) const { return peek().kind == Tok::Ident && peek().text == s; }
  bool is_sym(std::string_view s) const { return peek().kind == Tok::Sym && peek().text == s; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(file_, t.line, t.column, msg);
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), "expected " + what);
    return next();
  }
  void expect_sym(std::string_view s) {
    if (!is_sym(s)) fail(peek(), "expected '" + std::string(s) + "'");
    next();
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail(peek(), "unexpected trailing input");
  }

  Presentation parse_presentation_items(std::string_view closer) {
    Presentation p;
    while (!(peek().kind == Tok::End || (!closer.empty() && is_sym(closer)))) {
      if (is_ident("gens")) {
        next();
        if (peek().kind != Tok::Ident) fail(peek(), "expected generator name");
        while (peek().kind == Tok::Ident) {
          const Token& g = next();
          for (const auto& existing : gens_)
            if (existing == g.text) fail(g, "duplicate generator '" + g.text + "'");
          if (gens_.size() == kMaxGenerators) fail(g, "at most 8 generators are supported");
          gens_.push_back(g.text);
        }
        expect_sym(";");
      } else if (is_ident("rel")) {
        next();
        Word w = parse_relation();
        expect_sym(";");
        if (!w.empty()) p.relators.push_back(std::move(w));
      } else if (is_ident("gen")) {
        fail(peek(), "'gen' items belong to a permutations block");
      } else {
        fail(peek(), "expected 'gens' or 'rel'");
      }
    }
    p.generators = gens_;
    return p;
  }

  PermGenSet parse_permutation_items(std::size_t degree) {
    PermGenSet g;
    g.degree = degree;
    while (!is_sym("}") && peek().kind != Tok::End) {
      if (!is_ident("gen")) fail(peek(), "expected 'gen'");
      next();
      Permutation perm(degree);
      for (std::size_t i = 0; i < degree; ++i) perm[i] = static_cast<std::uint32_t>(i);
      std::vector<bool> seen(degree, false);
      if (!is_sym("(")) fail(peek(), "expected '('");
      while (is_sym("(")) {
        next();
        std::vector<std::uint32_t> cycle;
        while (peek().kind == Tok::Int) {
          const Token& t = next();
          if (t.value < 1 || static_cast<std::size_t>(t.value) > degree)
            fail(t, "point out of range 1.." + std::to_string(degree));
          auto pt = static_cast<std::uint32_t>(t.value - 1);
          if (seen[pt]) fail(t, "point " + t.text + " repeated; cycles must be disjoint");
          seen[pt] = true;
          cycle.push_back(pt);
        }
        if (cycle.empty()) fail(peek(), "empty cycle");
        expect_sym(")");
        for (std::size_t i = 0; i < cycle.size(); ++i) perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      expect_sym(";");
      g.generators.push_back(std::move(perm));
    }
    return g;
  }

  Word parse_relation() {
    Word lhs = parse_word();
    if (is_sym("=")) {
      next();
      Word rhs = parse_word();
      lhs.insert(lhs.end(), rhs.rbegin(), rhs.rend());
      for (std::size_t i = lhs.size() - rhs.size(); i < lhs.size(); ++i) lhs[i] = lhs[i].inverse();
    }
    return free_reduce(lhs);
  }

  Word parse_word() {
    if (peek().kind == Tok::Int && peek().value == 1 && peek().text == "1") {
      next();
      return {};
    }
    Word w;
    bool any = false;
    while (peek().kind == Tok::Ident || is_sym("[") || is_sym("(")) {
      any = true;
      Word base;
      if (is_sym("(")) {
        next();
        base = parse_word();
        expect_sym(")");
      } else if (is_sym("[")) {
        next();
        Word u = parse_word();
        expect_sym(",");
        Word v = parse_word();
        expect_sym("]");
        base = inverse(u);
        Word vi = inverse(v);
        base.insert(base.end(), vi.begin(), vi.end());
        base.insert(base.end(), u.begin(), u.end());
        base.insert(base.end(), v.begin(), v.end());
      } else {
        const Token& g = next();
        std::size_t idx = 0;
        while (idx < gens_.size() && gens_[idx] != g.text) ++idx;
        if (idx == gens_.size()) fail(g, "undeclared generator '" + g.text + "'");
        base.push_back({static_cast<std::uint8_t>(idx), 1});
      }
      std::int64_t e = 1;
      if (is_sym("^")) {
        next();
        const Token& t = expect(Tok::Int, "exponent");
        if (t.value == 0) fail(t, "exponent must be nonzero");
        if (t.value > 10000 || t.value < -10000) fail(t, "exponent out of range");
        e = t.value;
      }
      Word unit = e > 0 ? base : inverse(base);
      for (std::int64_t k = 0; k < (e > 0 ? e : -e); ++k) w.insert(w.end(), unit.begin(), unit.end());
    }
    if (!any) fail(peek(), "expected a word");
    return w;
  }

  std::vector<Token> toks_;
  std::string file_;
  std::size_t pos_ = 0;
  std::vector<std::string> gens_;
};

}  // namespace detail

/// Parses a group source file. Errors carry file name, line and column.
inline GroupSource parse_group_file(std::string_view text, const std::string& filename = "<input>") {
  detail::Lexer lexer(text, filename);
  detail::Parser parser(lexer.run(), filename);
  return parser.parse_file();
}

/// Parses a word (or relation u = v) over the given generator names.
inline Word parse_word(std::string_view text, const std::vector<std::string>& generators,
                       const std::string& filename = "<word>") {
  detail::Lexer lexer(text, filename);
  detail::Parser parser(lexer.run(), filename);
  return parser.parse_standalone_word(generators);
}

/// Renders a word with runs collapsed into powers, e.g. "b^-1 a b a".
inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    auto run = static_cast<long>(j - i) * w[i].exponent;
    if (i) os << ' ';
    os << names.at(w[i].generator);
    if (run != 1) os << '^' << run;
    i = j;
  }
  return os.str();
}

/// Disjoint-cycle notation (1-based), identity written "(1)".
inline std::string format_cycles(const Permutation& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == s) continue;
    os << '(';
    std::size_t x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) os << ' ';
      os << x + 1;
      first = false;
      x = p[x];
    }
    os << ')';
  }
  std::string out = os.str();
  return out.empty() ? "(1)" : out;
}

/// Canonical source text; parse(format(x)) == x.
inline std::string format_group_source(const GroupSource& src) {
  std::ostringstream os;
  if (const auto* p = std::get_if<Presentation>(&src)) {
    os << "group \"" << p->name << "\" presentation {\n";
    if (!p->generators.empty()) {
      os << "  gens";
      for (const auto& g : p->generators) os << ' ' << g;
      os << ";\n";
    }
    for (const auto& r : p->relators) os << "  rel " << format_word(r, p->generators) << ";\n";
  } else {
    const auto& g = std::get<PermGenSet>(src);
    os << "group \"" << g.name << "\" permutations degree " << g.degree << " {\n";
    for (const auto& perm : g.generators) os << "  gen " << format_cycles(perm) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace wittlab
