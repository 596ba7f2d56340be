#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "thetacorr/errors.hpp"

// Under C++20 rewritten comparisons, boost's mixed (int, rational) operator==
// resolves to its own reversed form and recurses. Exact non-template
// overloads take precedence.
namespace boost {
inline bool operator==(const rational<long long>& a, long long b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(long long a, const rational<long long>& b) { return b == a; }
inline bool operator==(const rational<long long>& a, int b) { return a == static_cast<long long>(b); }
inline bool operator==(int a, const rational<long long>& b) { return b == static_cast<long long>(a); }
}  // namespace boost

namespace thetacorr {

using Rational = boost::rational<long long>;

std::string format_rational(const Rational& q);
std::strong_ordering compare_rational(const Rational& a, const Rational& b);

struct CharacterSymbol {
  std::string name;
  std::optional<long long> order;  // absent: infinite order
  bool unramified = false;
};

class Character;

// Declared symbols. Append-only; characters keep a pointer to the context
// they were built in and refuse to mix with characters of another context.
class CharContext {
 public:
  static std::shared_ptr<CharContext> create();

  const CharacterSymbol& declare(const std::string& name,
                                 std::optional<long long> order = std::nullopt,
                                 bool unramified = false);
  const CharacterSymbol* find(std::string_view name) const;
  const std::map<std::string, CharacterSymbol, std::less<>>& symbols() const { return symbols_; }

 private:
  CharContext() = default;
  std::map<std::string, CharacterSymbol, std::less<>> symbols_;
};

using ContextPtr = std::shared_ptr<const CharContext>;

// Formal character of F^x: a word in declared unitary symbols times |.|^s.
class Character {
 public:
  using Exponents = std::map<std::string, long long>;

  Character() = default;
  Character(ContextPtr ctx, Exponents unitary, Rational s);

  static Character trivial(ContextPtr ctx = nullptr) { return Character(std::move(ctx), {}, 0); }
  static Character nu(Rational s, ContextPtr ctx = nullptr) { return Character(std::move(ctx), {}, s); }
  static Character symbol(ContextPtr ctx, std::string_view name, long long power = 1);

  const Exponents& unitary_exponents() const { return exps_; }
  const Rational& norm_exponent() const { return s_; }
  const ContextPtr& context() const { return ctx_; }

  bool operator==(const Character& o) const { return s_ == o.s_ && exps_ == o.exps_; }
  std::strong_ordering operator<=>(const Character& o) const;

 private:
  ContextPtr ctx_;
  Exponents exps_;
  Rational s_{0};
};

Character mul(const Character& a, const Character& b);
Character inv(const Character& a);
Character pow(const Character& a, long long n);
bool is_trivial(const Character& a);
bool is_quadratic(const Character& a);
Rational abs_exponent(const Character& a);
Character unitary_part(const Character& a);
bool is_unitary(const Character& a);
bool is_unramified(const Character& a);

inline Character operator*(const Character& a, const Character& b) { return mul(a, b); }
inline Character operator/(const Character& a, const Character& b) { return mul(a, inv(b)); }

// Text form: "1", "chi0", "chi0^-1*mu^2*nu^(-1/2)".
std::string format(const Character& c);
// Accepts the text form plus parentheses, "/" and postfix powers on groups.
Character parse_character(std::string_view text, const ContextPtr& ctx);

}  // namespace thetacorr
