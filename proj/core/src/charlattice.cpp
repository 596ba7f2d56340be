#include "thetacorr/charlattice.hpp"

#include <sstream>

#include "lexer.hpp"

namespace thetacorr {

std::string format_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::strong_ordering compare_rational(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::shared_ptr<CharContext> CharContext::create() {
  return std::shared_ptr<CharContext>(new CharContext());
}

const CharacterSymbol& CharContext::declare(const std::string& name, std::optional<long long> order,
                                            bool unramified) {
  if (name.empty()) throw ValidationError("empty character symbol name");
  if (name == "nu") throw ValidationError("'nu' is reserved for the normalized absolute value");
  if (symbols_.count(name)) throw ValidationError("character symbol '" + name + "' already declared");
  if (order && *order < 1) throw ValidationError("order of '" + name + "' must be positive");
  auto [it, _] = symbols_.emplace(name, CharacterSymbol{name, order, unramified});
  return it->second;
}

const CharacterSymbol* CharContext::find(std::string_view name) const {
  auto it = symbols_.find(name);
  return it == symbols_.end() ? nullptr : &it->second;
}

namespace {

long long reduce(long long e, const CharacterSymbol& sym) {
  if (!sym.order) return e;
  long long m = *sym.order;
  long long r = e % m;
  return r < 0 ? r + m : r;
}

const ContextPtr& join(const Character& a, const Character& b) {
  const ContextPtr& ca = a.context();
  const ContextPtr& cb = b.context();
  if (ca && cb && ca != cb) throw ContextError("characters from different symbol contexts");
  return ca ? ca : cb;
}

}  // namespace

Character::Character(ContextPtr ctx, Exponents unitary, Rational s) : ctx_(std::move(ctx)), s_(s) {
  for (auto& [name, e] : unitary) {
    if (!ctx_) throw ContextError("character symbol '" + name + "' used without a context");
    const CharacterSymbol* sym = ctx_->find(name);
    if (!sym) throw ContextError("unknown character symbol '" + name + "'");
    long long r = reduce(e, *sym);
    if (r != 0) exps_.emplace(name, r);
  }
}

Character Character::symbol(ContextPtr ctx, std::string_view name, long long power) {
  return Character(std::move(ctx), {{std::string(name), power}}, 0);
}

std::strong_ordering Character::operator<=>(const Character& o) const {
  if (auto c = exps_ <=> o.exps_; c != 0) return c;
  return compare_rational(s_, o.s_);
}

Character mul(const Character& a, const Character& b) {
  const ContextPtr& ctx = join(a, b);
  Character::Exponents e = a.unitary_exponents();
  for (auto& [name, v] : b.unitary_exponents()) e[name] += v;
  return Character(ctx, std::move(e), a.norm_exponent() + b.norm_exponent());
}

Character inv(const Character& a) { return pow(a, -1); }

Character pow(const Character& a, long long n) {
  Character::Exponents e;
  for (auto& [name, v] : a.unitary_exponents()) e[name] = v * n;
  return Character(a.context(), std::move(e), a.norm_exponent() * n);
}

bool is_trivial(const Character& a) {
  return a.unitary_exponents().empty() && a.norm_exponent() == 0;
}

bool is_quadratic(const Character& a) { return is_trivial(mul(a, a)); }

Rational abs_exponent(const Character& a) { return a.norm_exponent(); }

Character unitary_part(const Character& a) {
  return Character(a.context(), a.unitary_exponents(), 0);
}

bool is_unitary(const Character& a) { return a.norm_exponent() == 0; }

bool is_unramified(const Character& a) {
  for (auto& [name, _] : a.unitary_exponents()) {
    const CharacterSymbol* sym = a.context()->find(name);
    if (!sym || !sym->unramified) return false;
  }
  return true;
}

std::string format(const Character& c) {
  std::ostringstream os;
  bool first = true;
  for (auto& [name, e] : c.unitary_exponents()) {
    if (!first) os << '*';
    first = false;
    os << name;
    if (e != 1) os << '^' << e;
  }
  const Rational& s = c.norm_exponent();
  if (s != 0) {
    if (!first) os << '*';
    first = false;
    os << "nu";
    if (s.denominator() != 1) {
      os << "^(" << format_rational(s) << ')';
    } else if (s != 1) {
      os << '^' << s.numerator();
    }
  }
  if (first) os << '1';
  return os.str();
}

Character parse_character(std::string_view text, const ContextPtr& ctx) {
  detail::Cursor cur(detail::lex(text));
  while (cur.peek().kind == detail::Tok::Newline) cur.next();
  Character c = detail::parse_char_expr(cur, ctx);
  while (cur.peek().kind == detail::Tok::Newline) cur.next();
  if (cur.peek().kind != detail::Tok::End) cur.fail("unexpected '" + cur.peek().text + "'");
  return c;
}

}  // namespace thetacorr
