#include "charpreg/parse.hpp"

#include <cctype>
#include <cstdint>
#include <utility>

#include "charpreg/errors.hpp"
#include "charpreg/field.hpp"

namespace charpreg {

namespace {

enum class Tok { ident, number, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  long long value = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_blank();
    cur_.line = line_;
    cur_.col = col_;
    if (pos_ >= text_.size()) {
      cur_.kind = Tok::end;
      cur_.text = "end of input";
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        bump();
      cur_.kind = Tok::ident;
      cur_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        if (v > (INT64_MAX - 9) / 10)
          throw ParseError("integer literal too large", line_, col_);
        v = v * 10 + (text_[pos_] - '0');
        bump();
      }
      cur_.kind = Tok::number;
      cur_.text = text_.substr(start, pos_ - start);
      cur_.value = v;
      return;
    }
    static const std::string punct = "=,+-*^():";
    if (punct.find(c) != std::string::npos) {
      cur_.kind = Tok::punct;
      cur_.text = std::string(1, c);
      bump();
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     col_);
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token cur_;
};

[[noreturn]] void fail(const Token& t, const std::string& expected) {
  throw ParseError("expected " + expected + ", found '" + t.text + "'", t.line,
                   t.col);
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  ParsedFile file() {
    ParsedFile out;
    out.ring = ring_header();
    ring_ = out.ring;
    while (lex_.peek().kind != Tok::end) {
      Token kw = lex_.take();
      if (kw.kind != Tok::ident || kw.text != "ideal") fail(kw, "'ideal'");
      Token name = lex_.take();
      if (name.kind != Tok::ident) fail(name, "an ideal name");
      if (name.text == "ring" || name.text == "ideal")
        throw ParseError("'" + name.text + "' is reserved", name.line,
                         name.col);
      if (out.find(name.text))
        throw ParseError("duplicate ideal name '" + name.text + "'", name.line,
                         name.col);
      expect_punct("=");
      if (at_block_end())
        throw UsageError("ideal '" + name.text + "' has no generators");
      std::vector<Polynomial> gens;
      gens.push_back(expression());
      while (lex_.peek().kind == Tok::punct && lex_.peek().text == ",") {
        lex_.take();
        gens.push_back(expression());
      }
      out.ideals.emplace_back(name.text, Ideal(ring_, std::move(gens)));
    }
    return out;
  }

  Polynomial bare_expression(const RingPtr& ring) {
    ring_ = ring;
    Polynomial f = expression();
    Token t = lex_.peek();
    if (t.kind != Tok::end) fail(t, "end of input");
    return f;
  }

 private:
  bool at_block_end() {
    const Token& t = lex_.peek();
    return t.kind == Tok::end || (t.kind == Tok::ident && t.text == "ideal");
  }

  void expect_punct(const std::string& p) {
    Token t = lex_.take();
    if (t.kind != Tok::punct || t.text != p) fail(t, "'" + p + "'");
  }

  void expect_keyword(const std::string& kw) {
    Token t = lex_.take();
    if (t.kind != Tok::ident || t.text != kw) fail(t, "'" + kw + "'");
  }

  long long expect_number() {
    Token t = lex_.take();
    if (t.kind != Tok::number) fail(t, "an integer");
    return t.value;
  }

  RingPtr ring_header() {
    expect_keyword("ring");
    expect_keyword("p");
    expect_punct("=");
    Token pt = lex_.peek();
    long long p = expect_number();
    if (p < 2 || p >= (1LL << 31) || !is_prime(static_cast<std::uint32_t>(p)))
      throw ParseError("p=" + std::to_string(p) + " is not a machine prime",
                       pt.line, pt.col);
    expect_keyword("vars");
    expect_punct("=");
    std::vector<std::string> names;
    names.push_back(variable_name());
    while (lex_.peek().kind == Tok::punct && lex_.peek().text == ",") {
      lex_.take();
      Token vt = lex_.peek();
      std::string v = variable_name();
      for (const auto& seen : names)
        if (seen == v)
          throw ParseError("duplicate variable '" + v + "'", vt.line, vt.col);
      names.push_back(std::move(v));
    }
    expect_keyword("order");
    expect_punct("=");
    Token ot = lex_.take();
    if (ot.kind != Tok::ident) fail(ot, "an order name");
    int n = static_cast<int>(names.size());
    MonomialOrder order = MonomialOrder::grevlex(n);
    if (ot.text == "grevlex") {
      order = MonomialOrder::grevlex(n);
    } else if (ot.text == "lex") {
      order = MonomialOrder::lex(n);
    } else if (ot.text == "elim") {
      expect_punct(":");
      Token kt = lex_.peek();
      long long k = expect_number();
      if (k <= 0 || k >= n)
        throw ParseError("elimination block size " + std::to_string(k) +
                             " must lie strictly between 0 and " +
                             std::to_string(n),
                         kt.line, kt.col);
      order = MonomialOrder::block(n, static_cast<int>(k));
    } else {
      fail(ot, "'grevlex', 'lex', or 'elim:<k>'");
    }
    return Ring::make(static_cast<std::uint32_t>(p), names, order);
  }

  std::string variable_name() {
    Token t = lex_.take();
    if (t.kind != Tok::ident) fail(t, "a variable name");
    if (t.text == "ring" || t.text == "ideal")
      throw ParseError("'" + t.text + "' is reserved", t.line, t.col);
    return t.text;
  }

  Polynomial expression() {
    bool negate = false;
    if (lex_.peek().kind == Tok::punct &&
        (lex_.peek().text == "+" || lex_.peek().text == "-"))
      negate = lex_.take().text == "-";
    Polynomial acc = term();
    if (negate) acc = acc.negated();
    while (lex_.peek().kind == Tok::punct &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      bool sub = lex_.take().text == "-";
      Polynomial rhs = term();
      acc = sub ? acc.minus(rhs) : acc.plus(rhs);
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (lex_.peek().kind == Tok::punct && lex_.peek().text == "*") {
      lex_.take();
      acc = acc.times(factor());
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (lex_.peek().kind == Tok::punct && lex_.peek().text == "^") {
      lex_.take();
      Token et = lex_.peek();
      long long e = expect_number();
      if (e > (1 << 20))
        throw ParseError("exponent " + std::to_string(e) + " too large",
                         et.line, et.col);
      b = power(std::move(b), e);
    }
    return b;
  }

  Polynomial power(Polynomial b, long long e) {
    Polynomial r = Polynomial::constant(ring_, 1);
    while (e > 0) {
      if (e & 1) r = r.times(b);
      e >>= 1;
      if (e) b = b.times(b);
    }
    return r;
  }

  Polynomial base() {
    Token t = lex_.take();
    if (t.kind == Tok::number) return Polynomial::constant(ring_, t.value);
    if (t.kind == Tok::ident) {
      if (t.text == "ring" || t.text == "ideal")
        fail(t, "a variable, integer, or '('");
      auto idx = ring_->var_index(t.text);
      if (!idx)
        throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
      return Polynomial::variable(ring_, *idx);
    }
    if (t.kind == Tok::punct && t.text == "(") {
      Polynomial inner = expression();
      expect_punct(")");
      return inner;
    }
    fail(t, "a variable, integer, or '('");
  }

  Lexer lex_;
  RingPtr ring_;
};

}  // namespace

const Ideal* ParsedFile::find(const std::string& name) const {
  for (const auto& [n, ideal] : ideals)
    if (n == name) return &ideal;
  return nullptr;
}

ParsedFile parse_ideal_file(const std::string& text) {
  return Parser(text).file();
}

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  return Parser(text).bare_expression(ring);
}

}  // namespace charpreg
