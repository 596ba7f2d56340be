#include "lexer.hpp"

#include <cctype>

namespace thetacorr::detail {

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n') {
      out.push_back({Tok::Newline, "\n", line, col, i});
      advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int l0 = line, c0 = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l0, c0, i});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), l0, c0, i});
      advance(j - i);
      continue;
    }
    out.push_back({Tok::Punct, std::string(1, c), l0, c0, i});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col, src.size()});
  return out;
}

void Cursor::fail_at(const Token& t, const std::string& msg) const {
  throw ParseError(msg, t.line, t.col);
}

void Cursor::fail(const std::string& msg) const { fail_at(peek(), msg); }

void Cursor::expect(char c) {
  if (!accept(c)) {
    const Token& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : t.kind == Tok::Newline ? "end of line" : "'" + t.text + "'";
    fail(std::string("expected '") + c + "', got " + got);
  }
}

std::string Cursor::expect_ident() {
  if (peek().kind != Tok::Ident) fail("expected identifier");
  return next().text;
}

long long Cursor::expect_integer() {
  bool neg = false;
  if (accept('-')) neg = true;
  else accept('+');
  if (peek().kind != Tok::Number) fail("expected integer");
  const Token& t = next();
  long long v = 0;
  try {
    v = std::stoll(t.text);
  } catch (const std::exception&) {
    fail_at(t, "integer out of range");
  }
  return neg ? -v : v;
}

Rational parse_signed_rational(Cursor& cur) {
  long long num = cur.expect_integer();
  long long den = 1;
  if (cur.accept('/')) {
    const Token& t = cur.peek();
    den = cur.expect_integer();
    if (den == 0) cur.fail_at(t, "zero denominator");
  }
  return Rational(num, den);
}

namespace {

Rational parse_power(Cursor& cur) {
  if (cur.accept('(')) {
    Rational q = parse_signed_rational(cur);
    cur.expect(')');
    return q;
  }
  return Rational(cur.expect_integer());
}

Character parse_factor(Cursor& cur, const ContextPtr& ctx);

Character parse_primary(Cursor& cur, const ContextPtr& ctx) {
  const Token& t = cur.peek();
  if (cur.accept('(')) {
    Character c = parse_char_expr(cur, ctx);
    cur.expect(')');
    return c;
  }
  if (t.kind == Tok::Number) {
    if (t.text != "1") cur.fail("only the literal 1 is a character");
    cur.next();
    return Character::trivial(ctx);
  }
  if (t.kind == Tok::Ident) {
    Token id = cur.next();
    if (id.text == "nu") return Character::nu(1, ctx);
    if (!ctx || !ctx->find(id.text)) cur.fail_at(id, "unknown character symbol '" + id.text + "'");
    return Character::symbol(ctx, id.text);
  }
  cur.fail("expected character");
}

Character parse_factor(Cursor& cur, const ContextPtr& ctx) {
  Character c = parse_primary(cur, ctx);
  while (cur.is_punct('^')) {
    const Token& at = cur.next();
    Rational q = parse_power(cur);
    if (q.denominator() != 1) {
      if (!c.unitary_exponents().empty())
        cur.fail_at(at, "fractional power of a character with a unitary part");
      c = Character::nu(c.norm_exponent() * q, ctx);
    } else {
      c = pow(c, q.numerator());
    }
  }
  return c;
}

}  // namespace

Character parse_char_expr(Cursor& cur, const ContextPtr& ctx) {
  Character c = parse_factor(cur, ctx);
  for (;;) {
    if (cur.accept('*')) {
      c = mul(c, parse_factor(cur, ctx));
    } else if (cur.is_punct('/') ) {
      cur.next();
      c = mul(c, inv(parse_factor(cur, ctx)));
    } else {
      return c;
    }
  }
}

}  // namespace thetacorr::detail
