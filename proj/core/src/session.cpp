#include "thetacorr/session.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "lexer.hpp"
#include "thetacorr/format.hpp"
#include "thetacorr/jacquet.hpp"
#include "thetacorr/langlands.hpp"
#include "thetacorr/theta.hpp"

namespace thetacorr {

using json = nlohmann::ordered_json;
using detail::Cursor;
using detail::Tok;
using detail::Token;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const std::set<std::string, std::less<>>& reserved_words() {
  static const std::set<std::string, std::less<>> words{
      "nu",       "char",    "sc",      "rep",       "lift",      "preimage", "dichotomy", "lparam",
      "adjoint",  "generic_check", "classify", "satake", "jacquet", "show",     "st",        "ps",
      "J",        "one",     "twist",   "dual",      "D",         "D1",       "St",        "Sp",
      "St_PGSp4", "pi_gen",  "pi_ng",   "JQ",        "JP",        "JB",       "SC",        "theta22",
      "theta40",  "Klingen", "Siegel",  "Borel",     "order",     "unramified"};
  return words;
}

bool is_constructor(std::string_view w) {
  static const std::set<std::string, std::less<>> ctors{
      "sc", "st", "ps", "J",  "one", "twist",    "dual",   "D",     "D1",  "St",      "Sp",
      "St_PGSp4", "pi_gen", "pi_ng", "JQ", "JP", "JB", "SC", "theta22", "theta40"};
  return ctors.count(w) > 0;
}

std::string kind_name(const Value& v) {
  static const char* names[] = {"character", "GL2 representation", "D^x representation", "GSO(2,2) representation",
                                "GSO(4,0) representation", "GSp4 representation"};
  return names[v.index()];
}

// Splits the token stream into statements. Newlines inside brackets are
// dropped; a top-level ';' ends a statement.
std::vector<std::vector<Token>> split_statements(const std::vector<Token>& toks) {
  std::vector<std::vector<Token>> out;
  std::vector<Token> cur;
  int depth = 0;
  auto flush = [&](const Token& end) {
    if (!cur.empty()) {
      cur.push_back({Tok::End, "", end.line, end.col, end.offset});
      out.push_back(std::move(cur));
    }
    cur.clear();
  };
  for (const Token& t : toks) {
    if (t.kind == Tok::End) {
      flush(t);
      break;
    }
    if (t.kind == Tok::Punct && (t.text == "(" || t.text == "{")) ++depth;
    if (t.kind == Tok::Punct && (t.text == ")" || t.text == "}")) depth = std::max(0, depth - 1);
    if (t.kind == Tok::Newline) {
      if (depth == 0) flush(t);
      continue;
    }
    if (depth == 0 && t.kind == Tok::Punct && t.text == ";") {
      flush(t);
      continue;
    }
    cur.push_back(t);
  }
  return out;
}

json character_list(const std::vector<Character>& cs) {
  json arr = json::array();
  for (const auto& c : cs) arr.push_back(format(c));
  return arr;
}

json parameter_json(const LParameter& phi) {
  json pieces = json::array();
  for (const auto& p : phi.pieces)
    pieces.push_back({{"core", format(p.core)}, {"twist", format(p.twist)}, {"r", p.r}});
  return {{"pieces", pieces}, {"sim", format(phi.sim)}, {"det", format(determinant(phi))}};
}

std::string opt_rational(const std::optional<Rational>& q) { return q ? format_rational(*q) : "n/a"; }

}  // namespace

std::string format(const Value& v) {
  return std::visit([](const auto& x) { return thetacorr::format(x); }, v);
}

bool CommandResult::checks_pass() const {
  return std::all_of(invariant_checks.begin(), invariant_checks.end(), [](const auto& c) { return c.second; });
}

std::string CommandResult::to_json() const {
  json checks = json::object();
  for (const auto& [name, ok] : invariant_checks) checks[name] = ok;
  json doc;
  doc["input"] = input;
  doc["operation"] = operation;
  doc["output"] = output_json.empty() ? json(output) : json::parse(output_json);
  doc["provenance"] = provenance;
  doc["invariant_checks"] = checks;
  return doc.dump();
}

// ---------------------------------------------------------------------------

class StatementParser {
 public:
  StatementParser(Session& s, std::vector<Token> toks, std::string_view source)
      : s_(s), cur_(std::move(toks)), source_(source) {}

  std::optional<CommandResult> statement();
  Value expression_only();

 private:
  Session& s_;
  Cursor cur_;
  std::string_view source_;

  ContextPtr ctx() const { return s_.ctx_; }

  // values
  Value value();
  Value call(const Token& head);
  Character character() { return detail::parse_char_expr(cur_, ctx()); }
  std::vector<Value> arguments();
  SCToken token_argument();

  Character as_char(const Value& v, const Token& at);
  GL2Rep as_gl2(const Value& v, const Token& at);
  DRep as_drep(const Value& v, const Token& at);
  GSp4Rep as_gsp4(const Value& v, const Token& at);
  GSO22Rep as_gso22(const Value& v, const Token& at);
  GSO40Rep as_gso40(const Value& v, const Token& at);
  template <class F>
  auto located(const Token& at, F&& f) -> decltype(f());

  // statements
  void declare_char();
  void declare_sc();
  void declare_rep();
  std::string new_name();
  void finish();
  std::string statement_text(const Token& first) const;

  CommandResult lift(const Token& head);
  CommandResult preimage(const Token& head);
  CommandResult dichotomy_cmd(const Token& head);
  CommandResult lparam_cmd(const Token& head);
  CommandResult adjoint_cmd(const Token& head);
  CommandResult generic_check(const Token& head);
  CommandResult classify(const Token& head);
  CommandResult satake(const Token& head);
  CommandResult jacquet(const Token& head);
  CommandResult show(const Token& head);
};

template <class F>
auto StatementParser::located(const Token& at, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const LocatedError&) {
    throw;
  } catch (const Error& e) {
    throw LocatedError(e.code(), e.what(), at.line, at.col);
  }
}

Character StatementParser::as_char(const Value& v, const Token& at) {
  if (auto* c = std::get_if<Character>(&v)) return *c;
  cur_.fail_at(at, "expected a character, got a " + kind_name(v));
}

GL2Rep StatementParser::as_gl2(const Value& v, const Token& at) {
  if (auto* r = std::get_if<GL2Rep>(&v)) return *r;
  cur_.fail_at(at, "expected a GL2 representation, got a " + kind_name(v));
}

DRep StatementParser::as_drep(const Value& v, const Token& at) {
  if (auto* r = std::get_if<DRep>(&v)) return *r;
  cur_.fail_at(at, "expected a D^x representation, got a " + kind_name(v));
}

GSp4Rep StatementParser::as_gsp4(const Value& v, const Token& at) {
  if (auto* r = std::get_if<GSp4Rep>(&v)) return *r;
  cur_.fail_at(at, "expected a GSp4 representation, got a " + kind_name(v));
}

GSO22Rep StatementParser::as_gso22(const Value& v, const Token& at) {
  if (auto* r = std::get_if<GSO22Rep>(&v)) return *r;
  cur_.fail_at(at, "expected a GSO(2,2) pair (tau1, tau2), got a " + kind_name(v));
}

GSO40Rep StatementParser::as_gso40(const Value& v, const Token& at) {
  if (auto* r = std::get_if<GSO40Rep>(&v)) return *r;
  cur_.fail_at(at, "expected a GSO(4,0) pair (D(..), D(..)), got a " + kind_name(v));
}

Value StatementParser::value() {
  const Token& t = cur_.peek();
  if (t.kind == Tok::Ident) {
    if (is_constructor(t.text) && cur_.is_punct('(', 1)) {
      Token head = cur_.next();
      return call(head);
    }
    if (auto it = s_.reps_.find(t.text); it != s_.reps_.end()) {
      cur_.next();
      return it->second;
    }
    if (auto it = s_.tokens_.find(t.text); it != s_.tokens_.end()) {
      cur_.next();
      return gl2_supercuspidal(it->second);
    }
  }
  if (t.kind == Tok::Punct && t.text == "(") {
    Token open = t;
    size_t mark = cur_.position();
    cur_.next();
    std::optional<Value> first;
    try {
      first = value();
    } catch (const ParseError&) {
      first.reset();
    }
    if (first && cur_.accept(',')) {
      Value second = value();
      cur_.expect(')');
      return located(open, [&]() -> Value {
        if (std::holds_alternative<GL2Rep>(*first) && std::holds_alternative<GL2Rep>(second))
          return make_gso22(std::get<GL2Rep>(*first), std::get<GL2Rep>(second));
        if (std::holds_alternative<DRep>(*first) && std::holds_alternative<DRep>(second))
          return make_gso40(std::get<DRep>(*first), std::get<DRep>(second));
        cur_.fail_at(open, "a pair needs two GL2 or two D^x representations");
      });
    }
    cur_.reset(mark);
  }
  return character();
}

std::vector<Value> StatementParser::arguments() {
  std::vector<Value> args;
  cur_.expect('(');
  if (cur_.accept(')')) return args;
  for (;;) {
    args.push_back(value());
    if (cur_.accept(',') || cur_.accept(';')) continue;
    cur_.expect(')');
    return args;
  }
}

SCToken StatementParser::token_argument() {
  const Token& t = cur_.peek();
  std::string name = cur_.expect_ident();
  auto it = s_.tokens_.find(name);
  if (it == s_.tokens_.end()) cur_.fail_at(t, "unknown supercuspidal token '" + name + "'");
  return it->second;
}

Value StatementParser::call(const Token& head) {
  const std::string& f = head.text;
  auto arity = [&](const std::vector<Value>& a, size_t lo, size_t hi) {
    if (a.size() < lo || a.size() > hi)
      cur_.fail_at(head, f + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi)) +
                             " argument(s), got " + std::to_string(a.size()));
  };

  if (f == "sc" || f == "D") {
    cur_.expect('(');
    SCToken tok = token_argument();
    Character w = Character::trivial(ctx());
    if (cur_.accept(',')) w = as_char(value(), head);
    cur_.expect(')');
    return located(head, [&]() -> Value {
      if (f == "sc") return gl2_supercuspidal(tok, w);
      return d_jl_of_sc(tok, w);
    });
  }
  if (f == "SC") {
    cur_.expect('(');
    std::string name = cur_.expect_ident();
    cur_.expect(',');
    Character w = as_char(value(), head);
    cur_.expect(')');
    return gsp4_sc_nonlift(name, w);
  }

  std::vector<Value> a = arguments();
  return located(head, [&]() -> Value {
    if (f == "st") {
      arity(a, 1, 1);
      return gl2_steinberg(as_char(a[0], head));
    }
    if (f == "ps") {
      arity(a, 2, 2);
      return gl2_principal_series(as_char(a[0], head), as_char(a[1], head));
    }
    if (f == "J") {
      arity(a, 2, 2);
      return gl2_langlands_quotient(as_char(a[0], head), as_char(a[1], head));
    }
    if (f == "one") {
      arity(a, 1, 1);
      return gl2_one_dim(as_char(a[0], head));
    }
    if (f == "twist") {
      arity(a, 2, 2);
      return gl2_twist(as_gl2(a[0], head), as_char(a[1], head));
    }
    if (f == "dual") {
      arity(a, 1, 1);
      return gl2_dual(as_gl2(a[0], head));
    }
    if (f == "D1") {
      arity(a, 1, 1);
      return d_one_dim(as_char(a[0], head));
    }
    if (f == "St" || f == "Sp") {
      arity(a, 2, 2);
      bool klingen = std::holds_alternative<Character>(a[0]);
      if (klingen) {
        Character chi = as_char(a[0], head);
        GL2Rep tau = as_gl2(a[1], head);
        if (f == "St") return canonicalize_gsp4(gsp4::StKlingen{chi, tau});
        return canonicalize_gsp4(gsp4::SpKlingen{chi, tau});
      }
      GL2Rep tau = as_gl2(a[0], head);
      Character mu = as_char(a[1], head);
      if (f == "St") return canonicalize_gsp4(gsp4::StSiegel{tau, mu});
      return canonicalize_gsp4(gsp4::SpSiegel{tau, mu});
    }
    if (f == "St_PGSp4") {
      arity(a, 1, 1);
      return canonicalize_gsp4(gsp4::TwSt{as_char(a[0], head)});
    }
    if (f == "pi_gen") {
      arity(a, 1, 1);
      return canonicalize_gsp4(gsp4::PiGen{as_gl2(a[0], head)});
    }
    if (f == "pi_ng") {
      arity(a, 1, 1);
      return canonicalize_gsp4(gsp4::PiNg{as_gl2(a[0], head)});
    }
    if (f == "JQ") {
      arity(a, 2, 2);
      return canonicalize_gsp4(gsp4::JQZ{as_char(a[0], head), as_gl2(a[1], head)});
    }
    if (f == "JP") {
      arity(a, 2, 2);
      return canonicalize_gsp4(gsp4::JPY{as_gl2(a[0], head), as_char(a[1], head)});
    }
    if (f == "JB") {
      arity(a, 3, 3);
      return gsp4_jb(as_char(a[0], head), as_char(a[1], head), as_char(a[2], head));
    }
    if (f == "theta22") {
      arity(a, 2, 2);
      return theta_22_to_gsp4(make_gso22(as_gl2(a[0], head), as_gl2(a[1], head)));
    }
    if (f == "theta40") {
      arity(a, 2, 2);
      return theta_40_to_gsp4(make_gso40(as_drep(a[0], head), as_drep(a[1], head)));
    }
    cur_.fail_at(head, "unknown constructor '" + f + "'");
  });
}

// ---------------------------------------------------------------------------
// statements

std::string StatementParser::statement_text(const Token& first) const {
  const Token& end = cur_.peek();
  size_t a = first.offset, b = std::min(end.offset, source_.size());
  if (b < a) b = a;
  std::string s(source_.substr(a, b - a));
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

void StatementParser::finish() {
  if (!cur_.at_end()) cur_.fail("unexpected '" + cur_.peek().text + "'");
}

std::string StatementParser::new_name() {
  const Token& t = cur_.peek();
  std::string name = cur_.expect_ident();
  if (reserved_words().count(name)) cur_.fail_at(t, "'" + name + "' is a reserved word");
  if (ctx()->find(name) || s_.tokens_.count(name) || s_.reps_.count(name))
    cur_.fail_at(t, "'" + name + "' is already declared");
  return name;
}

void StatementParser::declare_char() {
  std::string name = new_name();
  std::optional<long long> order;
  bool unramified = false;
  while (!cur_.at_end()) {
    const Token& t = cur_.peek();
    if (cur_.is_ident("order")) {
      cur_.next();
      if (order) cur_.fail_at(t, "order given twice");
      const Token& n = cur_.peek();
      long long v = cur_.expect_integer();
      if (v <= 0) cur_.fail_at(n, "order must be a positive integer");
      order = v;
    } else if (cur_.is_ident("unramified")) {
      cur_.next();
      unramified = true;
    } else {
      cur_.fail("expected 'order' or 'unramified'");
    }
  }
  s_.ctx_->declare(name, order, unramified);
}

void StatementParser::declare_sc() {
  const Token& at = cur_.peek();
  std::string name = new_name();
  Character omega = Character::trivial(ctx());
  std::vector<Character> gens;
  bool seen_omega = false, seen_twists = false;
  cur_.expect('{');
  if (!cur_.accept('}')) {
    for (;;) {
      const Token& key = cur_.peek();
      std::string k = cur_.expect_ident();
      cur_.expect('=');
      if (k == "omega") {
        if (seen_omega) cur_.fail_at(key, "omega given twice");
        seen_omega = true;
        omega = character();
      } else if (k == "selftwists") {
        if (seen_twists) cur_.fail_at(key, "selftwists given twice");
        seen_twists = true;
        cur_.expect('{');
        if (!cur_.accept('}')) {
          for (;;) {
            gens.push_back(character());
            if (cur_.accept(',')) continue;
            cur_.expect('}');
            break;
          }
        }
      } else {
        cur_.fail_at(key, "unknown field '" + k + "' (expected omega or selftwists)");
      }
      if (cur_.accept(',')) continue;
      cur_.expect('}');
      break;
    }
  }
  finish();
  SCToken tok = located(at, [&] { return make_sc_token(name, omega, gens); });
  s_.tokens_.emplace(name, tok);
}

void StatementParser::declare_rep() {
  std::string name = new_name();
  cur_.expect('=');
  Value v = value();
  finish();
  s_.reps_.emplace(name, std::move(v));
}

Value StatementParser::expression_only() {
  Value v = value();
  finish();
  return v;
}

std::optional<CommandResult> StatementParser::statement() {
  Token head = cur_.peek();
  if (head.kind == Tok::Ident && !cur_.is_punct('(', 1)) {
    const std::string& w = head.text;
    if (w == "char") {
      cur_.next();
      declare_char();
      return std::nullopt;
    }
    if (w == "sc") {
      cur_.next();
      declare_sc();
      return std::nullopt;
    }
    if (w == "rep") {
      cur_.next();
      declare_rep();
      return std::nullopt;
    }
  }
  CommandResult r;
  if (head.kind == Tok::Ident) {
    const std::string& w = head.text;
    bool generic_dash = w == "generic" && cur_.is_punct('-', 1) && cur_.is_ident("check", 2);
    if (generic_dash) {
      cur_.next();
      cur_.next();
    }
    if (w == "lift") r = (cur_.next(), lift(head));
    else if (w == "preimage") r = (cur_.next(), preimage(head));
    else if (w == "dichotomy") r = (cur_.next(), dichotomy_cmd(head));
    else if (w == "lparam") r = (cur_.next(), lparam_cmd(head));
    else if (w == "adjoint") r = (cur_.next(), adjoint_cmd(head));
    else if (w == "generic_check" || generic_dash) r = (cur_.next(), generic_check(head));
    else if (w == "classify") r = (cur_.next(), classify(head));
    else if (w == "satake") r = (cur_.next(), satake(head));
    else if (w == "jacquet") r = (cur_.next(), jacquet(head));
    else if (w == "show" && !cur_.is_punct('(', 1)) r = (cur_.next(), show(head));
    else r = show(head);
  } else {
    r = show(head);
  }
  finish();
  r.line = head.line;
  r.input = statement_text(head);
  return r;
}

namespace {

json gsp4_json(const GSp4Rep& pi) { return {{"rep", format(pi)}, {"kind", gsp4_kind(pi)}}; }

}  // namespace

CommandResult StatementParser::lift(const Token&) {
  std::string from;
  if (cur_.is_ident("gso22") || cur_.is_ident("gso40") || cur_.is_ident("gsp4")) from = cur_.next().text;
  const Token& at = cur_.peek();
  Value v = value();
  if (from.empty()) {
    if (std::holds_alternative<GSO22Rep>(v)) from = "gso22";
    else if (std::holds_alternative<GSO40Rep>(v)) from = "gso40";
    else from = "gsp4";
  }
  CommandResult r;
  r.operation = "lift:" + from;
  return located(at, [&] {
    if (from == "gso22") {
      GSO22Rep s = as_gso22(v, at);
      GSp4Lift l = theta_22_lift(s);
      auto pre = theta_22_preimage(l.value);
      r.output = format(l.value);
      r.output_json = gsp4_json(l.value).dump();
      r.provenance = l.provenance;
      r.invariant_checks = {{"swap_invariance", gsp4_equal(theta_22_lift(swapped(s)).value, l.value)},
                            {"preimage_roundtrip", pre && same_orbit(*pre, s)},
                            {"central_character_law", central_character_law(s, l.value)}};
    } else if (from == "gso40") {
      GSO40Rep s = as_gso40(v, at);
      GSp4Lift l = theta_40_lift(s);
      auto pre = theta_40_preimage(l.value);
      r.output = format(l.value);
      r.output_json = gsp4_json(l.value).dump();
      r.provenance = l.provenance;
      r.invariant_checks = {{"swap_invariance", gsp4_equal(theta_40_lift(swapped(s)).value, l.value)},
                            {"preimage_roundtrip", pre && same_orbit(*pre, s)},
                            {"central_character_law", central_character_law(s, l.value)}};
    } else {
      GSp4Rep pi = as_gsp4(v, at);
      ThetaResult t = theta_gsp4_to_33(pi);
      json out;
      if (t.value) {
        r.output = format(*t.value);
        out = {{"gso33", r.output}, {"gl4", format(t.value->gl4)}, {"mu", format(t.value->mu)}, {"zero", false}};
      } else {
        r.output = "0";
        out = {{"gso33", nullptr}, {"zero", true}};
      }
      r.output_json = out.dump();
      r.provenance = t.provenance;
      bool zero_locus = !t.value == gsp4_is_tempered_ng(pi);
      bool law = !t.value || central_character_law(pi, *t.value);
      bool generic = !t.value || !gsp4_is_generic(pi) || gl4_is_generic(t.value->gl4);
      r.invariant_checks = {{"zero_locus", zero_locus}, {"central_character_law", law}, {"generic_transfer", generic}};
    }
    return r;
  });
}

CommandResult StatementParser::preimage(const Token&) {
  const Token& at = cur_.peek();
  GSp4Rep pi = as_gsp4(value(), at);
  return located(at, [&] {
    CommandResult r;
    r.operation = "preimage";
    auto p40 = theta_40_preimage(pi);
    auto p22 = theta_22_preimage(pi);
    json out = {{"gso40", p40 ? json(format(*p40)) : json(nullptr)}, {"gso22", p22 ? json(format(*p22)) : json(nullptr)}};
    r.output_json = out.dump();
    r.output = std::string("gso40: ") + (p40 ? format(*p40) : "none") + ", gso22: " + (p22 ? format(*p22) : "none");
    if (p40) r.provenance = theta_40_lift(*p40).provenance;
    else if (p22) r.provenance = theta_22_lift(*p22).provenance;
    r.invariant_checks = {{"gso40_roundtrip", !p40 || gsp4_equal(theta_40_to_gsp4(*p40), pi)},
                          {"gso22_roundtrip", !p22 || gsp4_equal(theta_22_to_gsp4(*p22), pi)}};
    return r;
  });
}

CommandResult StatementParser::dichotomy_cmd(const Token&) {
  const Token& at = cur_.peek();
  GSp4Rep pi = as_gsp4(value(), at);
  return located(at, [&] {
    CommandResult r;
    r.operation = "dichotomy";
    Tower t = dichotomy(pi);
    r.output = to_string(t);
    r.output_json = json{{"tower", r.output}}.dump();
    r.provenance = t == Tower::GSO40 ? theta_40_lift(*theta_40_preimage(pi)).provenance : theta_gsp4_to_33(pi).provenance;
    r.invariant_checks = {{"exactly_one_tower", dichotomy_consistent(pi)}};
    return r;
  });
}

CommandResult StatementParser::lparam_cmd(const Token&) {
  const Token& at = cur_.peek();
  Value v = value();
  return located(at, [&] {
    CommandResult r;
    r.operation = "lparam";
    if (auto* rho = std::get_if<GL2Rep>(&v)) {
      LParameter phi = lparam_gl2(*rho);
      r.output = format(phi);
      r.output_json = parameter_json(phi).dump();
      r.invariant_checks = {{"dimension_2", dimension(phi) == 2},
                            {"det_is_central", determinant(phi) == gl2_central_character(*rho)}};
      return r;
    }
    GSp4Rep pi = as_gsp4(v, at);
    LParameter phi = lparam_gsp4(pi);
    r.output = format(phi);
    r.output_json = parameter_json(phi).dump();
    r.invariant_checks = {{"dimension_4", dimension(phi) == 4},
                          {"symplectic_closure", symplectic_closure(phi)},
                          {"sim_is_central", phi.sim == gsp4_central_character(pi)}};
    return r;
  });
}

CommandResult StatementParser::adjoint_cmd(const Token&) {
  const Token& at = cur_.peek();
  GSp4Rep pi = as_gsp4(value(), at);
  return located(at, [&] {
    CommandResult r;
    r.operation = "adjoint";
    LParameter ad = adjoint(lparam_gsp4(pi));
    bool pole = has_pole_at_one(ad);
    json out = parameter_json(ad);
    out["dimension"] = dimension(ad);
    out["pole_at_1"] = pole;
    r.output = format(ad);
    r.output_json = out.dump();
    r.invariant_checks = {{"dimension_10", dimension(ad) == 10}, {"self_dual", self_dual(ad)}};
    return r;
  });
}

CommandResult StatementParser::generic_check(const Token&) {
  const Token& at = cur_.peek();
  GSp4Rep pi = as_gsp4(value(), at);
  return located(at, [&] {
    CommandResult r;
    r.operation = "generic-check";
    auto [generic, holomorphic] = generic_iff_holomorphic(pi);
    r.output = std::string("generic=") + (generic ? "true" : "false") + " holomorphic=" + (holomorphic ? "true" : "false");
    r.output_json = json{{"packet", packet_of(pi).key}, {"generic", generic}, {"holomorphic", holomorphic}}.dump();
    r.invariant_checks = {{"generic_iff_holomorphic", generic == holomorphic}};
    return r;
  });
}

CommandResult StatementParser::classify(const Token&) {
  const Token& at = cur_.peek();
  std::string which = cur_.expect_ident();
  if (which != "Klingen" && which != "Siegel" && which != "Borel")
    cur_.fail_at(at, "expected Klingen(chi, tau), Siegel(tau, chi) or Borel(chi1, chi2; chi)");
  std::vector<Value> a = arguments();
  size_t want = which == "Borel" ? 3 : 2;
  if (a.size() != want) cur_.fail_at(at, which + " takes " + std::to_string(want) + " arguments");
  StandardModule data;
  ReducibilityReport red{Reducibility::Delegated, ""};
  if (which == "Klingen") {
    KlingenInduced k{as_char(a[0], at), as_gl2(a[1], at)};
    red = located(at, [&] { return klingen_reducible(k.chi, k.tau); });
    data = k;
  } else if (which == "Siegel") {
    SiegelInduced s{as_gl2(a[0], at), as_char(a[1], at)};
    red = located(at, [&] { return siegel_reducible(s.tau, s.chi); });
    data = s;
  } else {
    BorelInduced b{as_char(a[0], at), as_char(a[1], at), as_char(a[2], at)};
    bool reducible = borel_reducible(b.chi1, b.chi2);
    red = {reducible ? Reducibility::OtherReducible : Reducibility::Irreducible, ""};
    data = b;
  }
  return located(at, [&] {
    CommandResult r;
    r.operation = "classify";
    auto subs = classify_standard_module(data);
    json arr = json::array();
    bool roundtrip = true;
    for (const auto& s : subs) {
      arr.push_back(gsp4_json(s));
      auto back = standard_module_of(s);
      bool found = false;
      if (back)
        for (const auto& t : classify_standard_module(*back)) found = found || gsp4_equal(t, s);
      roundtrip = roundtrip && found;
      if (!r.output.empty()) r.output += " + ";
      r.output += format(s);
    }
    r.output_json = json{{"submodules", arr}, {"reducibility", to_string(red.tag)}, {"detail", red.detail}}.dump();
    r.invariant_checks = {{"standard_module_roundtrip", roundtrip}};
    return r;
  });
}

CommandResult StatementParser::satake(const Token& head) {
  std::vector<Value> a = arguments();
  if (a.size() != 3) cur_.fail_at(head, "satake takes 3 characters (t1, t2, v)");
  SatakeClass s{as_char(a[0], head), as_char(a[1], head), as_char(a[2], head)};
  return located(head, [&] {
    CommandResult r;
    r.operation = "satake";
    IotaImage img = iota(s);
    r.output_json = json{{"entries", character_list(img.entries)}, {"sim", format(img.sim)}}.dump();
    for (const auto& e : img.entries) r.output += (r.output.empty() ? "" : ", ") + format(e);
    r.output = "diag(" + r.output + "), sim " + format(img.sim);
    r.invariant_checks = {{"unramified_transfer", check_unramified_transfer(s.t1, s.t2, s.v)}};
    return r;
  });
}

CommandResult StatementParser::jacquet(const Token& head) {
  FiltrationSpec spec;
  std::optional<int> m, n, t, k;
  while (!cur_.at_end()) {
    const Token& key = cur_.peek();
    std::string name = cur_.expect_ident();
    if (name == "isometry") {
      spec.isometry = true;
      continue;
    }
    cur_.expect('=');
    if (name == "side") {
      const Token& sv = cur_.peek();
      std::string side = cur_.expect_ident();
      if (side == "orth" || side == "orthogonal") spec.side = Side::Orthogonal;
      else if (side == "sympl" || side == "symplectic") spec.side = Side::Symplectic;
      else cur_.fail_at(sv, "side must be orth or sympl");
      continue;
    }
    long long v = cur_.expect_integer();
    int iv = static_cast<int>(v);
    if (name == "m") m = iv;
    else if (name == "n") n = iv;
    else if (name == "t") t = iv;
    else if (name == "k") k = iv;
    else if (name == "r") spec.witt_index = iv;
    else cur_.fail_at(key, "unknown jacquet parameter '" + name + "'");
  }
  if (!m || !n) cur_.fail_at(head, "jacquet needs m= and n=");
  if (t.has_value() == k.has_value()) cur_.fail_at(head, "jacquet needs exactly one of t= or k=");
  spec.m = *m;
  spec.n = *n;
  spec.side = t ? Side::Orthogonal : Side::Symplectic;
  spec.parabolic = t ? *t : *k;
  return located(head, [&] {
    CommandResult r;
    r.operation = "jacquet";
    auto qs = filtration(spec);
    json arr = json::array();
    bool absorption = true;
    std::optional<bool> coincidence;
    for (const auto& fq : qs) {
      json o{{"index", fq.index},
             {"inducing", fq.inducing_levi},
             {"schwartz", fq.schwartz_factor},
             {"character", fq.character_factor},
             {"inner", {fq.inner_m, fq.inner_n}},
             {"weil", fq.inner_weil},
             {"e0", opt_rational(fq.e0)},
             {"e1", opt_rational(fq.e1)},
             {"f0", opt_rational(fq.f0)},
             {"e2", format_rational(fq.e2)},
             {"f1", format_rational(fq.f1)},
             {"f0_raw", opt_rational(fq.f0_raw)},
             {"reduced_e0", opt_rational(fq.reduced_e0)}};
      arr.push_back(o);
      if (!r.output.empty()) r.output += "\n";
      r.output += format(fq);
      if (!spec.isometry && spec.witt_index < 0) {
        int tt = spec.side == Side::Orthogonal ? spec.parabolic : fq.index;
        int kk = spec.side == Side::Orthogonal ? fq.index : spec.parabolic;
        absorption = absorption && absorption_identity(spec.m, spec.n, tt, kk);
      }
      if (!spec.isometry && fq.index == spec.parabolic) coincidence = *fq.e0 == *fq.f0;
    }
    r.output_json = json{{"m", spec.m},
                         {"n", spec.n},
                         {"side", spec.side == Side::Orthogonal ? "orth" : "sympl"},
                         {spec.side == Side::Orthogonal ? "t" : "k", spec.parabolic},
                         {"isometry", spec.isometry},
                         {"quotients", arr}}
                        .dump();
    r.invariant_checks.push_back({"absorption_identity", absorption});
    if (coincidence) r.invariant_checks.push_back({"k_eq_t_coincidence", *coincidence});
    return r;
  });
}

CommandResult StatementParser::show(const Token&) {
  Value v = value();
  CommandResult r;
  r.operation = "show";
  r.output = format(v);
  json out{{"value", r.output}, {"kind", kind_name(v)}};
  if (auto* pi = std::get_if<GSp4Rep>(&v)) out["variant"] = gsp4_kind(*pi);
  r.output_json = out.dump();
  // The printed form must evaluate back to the same value.
  bool reparse = false;
  try {
    auto toks = split_statements(detail::lex(r.output));
    if (toks.size() == 1) {
      StatementParser p(s_, toks.front(), r.output);
      reparse = p.expression_only() == v;
    }
  } catch (const Error&) {
    reparse = false;
  }
  r.invariant_checks = {{"format_roundtrip", reparse}};
  return r;
}

// ---------------------------------------------------------------------------

Session::Session() : ctx_(CharContext::create()) {}

std::vector<CommandResult> Session::run(std::string_view source) {
  std::vector<CommandResult> out;
  for (auto& toks : split_statements(detail::lex(source))) {
    StatementParser p(*this, std::move(toks), source);
    if (auto r = p.statement()) {
      history_.push_back(r->input);
      out.push_back(std::move(*r));
    }
  }
  return out;
}

CommandResult Session::query(std::string_view command) {
  auto stmts = split_statements(detail::lex(command));
  if (stmts.size() != 1) throw ParseError("expected exactly one statement", 1, 1);
  StatementParser p(*this, std::move(stmts.front()), command);
  auto r = p.statement();
  if (!r) throw ParseError("expected a query, got a declaration", 1, 1);
  history_.push_back(r->input);
  return *r;
}

Value Session::evaluate(std::string_view expression) {
  auto stmts = split_statements(detail::lex(expression));
  if (stmts.size() != 1) throw ParseError("expected exactly one expression", 1, 1);
  StatementParser p(*this, std::move(stmts.front()), expression);
  return p.expression_only();
}

std::optional<SCToken> Session::token(std::string_view name) const {
  auto it = tokens_.find(name);
  if (it == tokens_.end()) return std::nullopt;
  return it->second;
}

std::optional<Value> Session::lookup(std::string_view name) const {
  auto it = reps_.find(name);
  if (it == reps_.end()) return std::nullopt;
  return it->second;
}

}  // namespace thetacorr
