#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "thetacorr/charlattice.hpp"

namespace thetacorr::detail {

enum class Tok { Ident, Number, Punct, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
  size_t offset = 0;  // byte offset of the first character
};

// Splits source into identifiers, unsigned integers and single-char punctuation.
// '#' starts a comment running to end of line.
std::vector<Token> lex(std::string_view src);

class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool is_punct(char c, size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::Punct && t.text[0] == c;
  }
  bool is_ident(std::string_view s, size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::Ident && t.text == s;
  }
  bool accept(char c) {
    if (!is_punct(c)) return false;
    next();
    return true;
  }
  void expect(char c);
  std::string expect_ident();
  long long expect_integer();
  [[noreturn]] void fail(const std::string& msg) const;
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const;
  size_t position() const { return pos_; }
  void reset(size_t pos) { pos_ = pos; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool at_end_of_statement() const {
    return peek().kind == Tok::Newline || peek().kind == Tok::End;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

// expr := factor (('*'|'/') factor)* ; factor := primary ('^' power)* ;
// primary := ident | '1' | 'nu' | '(' expr ')' ; power := int | '(' rational ')'
Character parse_char_expr(Cursor& cur, const ContextPtr& ctx);
Rational parse_signed_rational(Cursor& cur);

}  // namespace thetacorr::detail
