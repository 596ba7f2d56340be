#include "thetacorr/langlands.hpp"

#include <algorithm>
#include <set>

#include "thetacorr/format.hpp"
#include "thetacorr/theta.hpp"

namespace thetacorr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Character nu(Rational s) { return Character::nu(s); }

std::vector<Character> product_group(const std::vector<SCToken>& tokens) {
  std::set<Character> g{Character::trivial()};
  for (const SCToken& t : tokens) {
    std::set<Character> next;
    for (const auto& a : g)
      for (const auto& b : t.self_twists()) next.insert(a * b);
    g = std::move(next);
  }
  return {g.begin(), g.end()};
}

Core irr2_core(const SCToken& t) { return Core{CoreKind::Irr2, {t}, "", Character()}; }
Core ad3_core(const SCToken& t) { return Core{CoreKind::Ad3, {t}, "", Character()}; }
Core one_core() { return Core{}; }
Core opaque_core(const std::string& label, const Character& pairing) {
  return Core{CoreKind::Irr4, {}, label, pairing};
}

// Symmetric and alternating squares of S_r.
std::vector<int> sym2_sl2(int r) {
  std::vector<int> out;
  for (int d = 2 * r - 1; d >= 1; d -= 4) out.push_back(d);
  return out;
}
std::vector<int> alt2_sl2(int r) {
  std::vector<int> out;
  for (int d = 2 * r - 3; d >= 1; d -= 4) out.push_back(d);
  return out;
}
std::vector<int> clebsch_gordan(int a, int b) {
  std::vector<int> out;
  for (int k = 0; k < std::min(a, b); ++k) out.push_back(a + b - 1 - 2 * k);
  return out;
}

void sort_pieces(std::vector<LPiece>& v) { std::sort(v.begin(), v.end()); }

std::vector<LPiece> tensor(const LPiece& p, const LPiece& q) {
  std::vector<std::pair<Core, Character>> cores;
  Character w = p.twist * q.twist;
  if (p.core.kind == CoreKind::One) {
    cores.push_back({q.core, w});
  } else if (q.core.kind == CoreKind::One) {
    cores.push_back({p.core, w});
  } else if (p.core.kind == CoreKind::Irr2 && q.core.kind == CoreKind::Irr2) {
    const SCToken& a = p.core.tokens[0];
    const SCToken& b = q.core.tokens[0];
    if (a == b) {
      Character c = a.central() * w;
      cores.push_back({one_core(), c});
      cores.push_back({ad3_core(a), c});
    } else {
      std::vector<SCToken> ts{a, b};
      std::sort(ts.begin(), ts.end());
      cores.push_back({Core{CoreKind::Irr4, ts, "", a.central() * b.central()}, w});
    }
  } else {
    throw UnsupportedError("tensor product of " + format(p.core) + " and " + format(q.core) + " is not modeled");
  }
  std::vector<LPiece> out;
  for (int d : clebsch_gordan(p.r, q.r))
    for (const auto& [core, tw] : cores) out.push_back(make_piece(core, tw, d));
  return out;
}

std::vector<LPiece> sym2(const LPiece& p) {
  std::vector<LPiece> out;
  switch (p.core.kind) {
    case CoreKind::One:
      for (int d : sym2_sl2(p.r)) out.push_back(make_piece(one_core(), pow(p.twist, 2), d));
      break;
    case CoreKind::Irr2: {
      const SCToken& t = p.core.tokens[0];
      Character det = t.central() * pow(p.twist, 2);
      for (int d : sym2_sl2(p.r)) out.push_back(make_piece(ad3_core(t), det, d));
      for (int d : alt2_sl2(p.r)) out.push_back(make_piece(one_core(), det, d));
      break;
    }
    default:
      throw UnsupportedError("adjoint of a parameter with core " + format(p.core) + " is not supported");
  }
  return out;
}

std::vector<LPiece> shifted(const std::vector<LPiece>& pieces, const Character& chi) {
  std::vector<LPiece> out;
  for (const auto& p : pieces) out.push_back(twist(p, chi));
  return out;
}

std::vector<LPiece> dual_pieces(const std::vector<LPiece>& pieces, const Character& sim) {
  std::vector<LPiece> out;
  for (const auto& p : pieces) out.push_back(twist(dual(p), sim));
  sort_pieces(out);
  return out;
}

std::vector<LPiece> gl2_pieces(const GL2Rep& rho) { return lparam_gl2(rho).pieces; }

std::vector<LPiece> concat(std::vector<LPiece> a, const std::vector<LPiece>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<LPiece> one(const Character& chi, int r = 1) { return {make_piece(one_core(), chi, r)}; }

std::vector<LPiece> with_r(std::vector<LPiece> pieces, int r) {
  for (auto& p : pieces) p.r *= r;
  return pieces;
}

}  // namespace

int core_dimension(const Core& c) {
  switch (c.kind) {
    case CoreKind::One: return 1;
    case CoreKind::Irr2: return 2;
    case CoreKind::Ad3: return 3;
    case CoreKind::Irr4: return 4;
  }
  return 0;
}

std::string format(const Core& c) {
  switch (c.kind) {
    case CoreKind::One: return "1";
    case CoreKind::Irr2: return "phi(" + c.tokens[0].name() + ")";
    case CoreKind::Ad3: return "Ad(" + c.tokens[0].name() + ")";
    case CoreKind::Irr4:
      if (c.tokens.empty()) return "Irr4(" + c.label + ")";
      return "phi(" + c.tokens[0].name() + ")*phi(" + c.tokens[1].name() + ")";
  }
  return "?";
}

LPiece make_piece(Core core, const Character& tw, int r) {
  if (r < 1) throw ValidationError("S_r needs r >= 1");
  Character t = tw;
  if (core.kind == CoreKind::Irr2) {
    t = canonical_twist(core.tokens[0], tw);
  } else if (core.kind == CoreKind::Irr4 && !core.tokens.empty()) {
    std::sort(core.tokens.begin(), core.tokens.end());
    for (const Character& g : product_group(core.tokens)) t = std::min(t, tw * g);
  }
  return LPiece{std::move(core), t, r};
}

int dimension(const LPiece& p) { return core_dimension(p.core) * p.r; }

Character determinant(const LPiece& p) {
  switch (p.core.kind) {
    case CoreKind::One: return pow(p.twist, p.r);
    case CoreKind::Irr2: return pow(p.core.tokens[0].central() * pow(p.twist, 2), p.r);
    case CoreKind::Ad3: return pow(p.twist, 3 * p.r);
    case CoreKind::Irr4: return pow(pow(p.core.pairing, 2) * pow(p.twist, 4), p.r);
  }
  return Character();
}

LPiece dual(const LPiece& p) {
  switch (p.core.kind) {
    case CoreKind::One:
    case CoreKind::Ad3: return make_piece(p.core, inv(p.twist), p.r);
    case CoreKind::Irr2: return make_piece(p.core, inv(p.core.tokens[0].central() * p.twist), p.r);
    case CoreKind::Irr4: return make_piece(p.core, inv(p.core.pairing * p.twist), p.r);
  }
  return p;
}

LPiece twist(const LPiece& p, const Character& chi) { return make_piece(p.core, p.twist * chi, p.r); }

std::string format(const LPiece& p) {
  std::string core = p.core.kind == CoreKind::One ? format(p.twist)
                                                  : format(p.core) + (is_trivial(p.twist) ? "" : "*" + format(p.twist));
  return core + " x S" + std::to_string(p.r);
}

LParameter make_parameter(std::vector<LPiece> pieces, const Character& sim) {
  sort_pieces(pieces);
  return LParameter{std::move(pieces), sim};
}

int dimension(const LParameter& phi) {
  int d = 0;
  for (const auto& p : phi.pieces) d += dimension(p);
  return d;
}

Character determinant(const LParameter& phi) {
  Character d = Character::trivial();
  for (const auto& p : phi.pieces) d = d * determinant(p);
  return d;
}

std::string format(const LParameter& phi) {
  std::string out;
  for (const auto& p : phi.pieces) out += (out.empty() ? "" : " + ") + format(p);
  return out + "; sim " + format(phi.sim);
}

LParameter lparam_gl2(const GL2Rep& rho0) {
  GL2Rep rho = canonicalize_gl2(rho0);
  std::vector<LPiece> pieces = std::visit(
      overloaded{
          [](const gl2::Supercuspidal& r) {
            return std::vector<LPiece>{make_piece(irr2_core(r.token), r.twist, 1)};
          },
          [](const gl2::SteinbergTwist& r) { return one(r.chi, 2); },
          [](const gl2::PrincipalSeriesIrr& r) { return concat(one(r.chi1), one(r.chi2)); },
          [](const gl2::LanglandsQ& r) { return concat(one(r.chi_prime), one(r.chi)); },
      },
      rho);
  return make_parameter(std::move(pieces), gl2_central_character(rho));
}

LParameter lparam_gsp4(const GSp4Rep& pi0) {
  GSp4Rep pi = canonicalize_gsp4(pi0);
  Character sim = gsp4_central_character(pi);
  std::vector<LPiece> pieces = std::visit(
      overloaded{
          [&](const gsp4::SC& r) {
            return std::visit(overloaded{
                                  [&](const gsp4::NonLiftGeneric&) {
                                    return std::vector<LPiece>{make_piece(opaque_core(r.name, sim), Character(), 1)};
                                  },
                                  [](const gsp4::Lift22& o) {
                                    return concat(gl2_pieces(o.source.first), gl2_pieces(o.source.second));
                                  },
                                  [](const gsp4::Lift40& o) {
                                    return concat(gl2_pieces(jl(o.source.first)), gl2_pieces(jl(o.source.second)));
                                  },
                              },
                              r.origin);
          },
          [](const gsp4::StKlingen& r) { return with_r(gl2_pieces(r.tau), 2); },
          [](const gsp4::StSiegel& r) { return concat(gl2_pieces(gl2_twist(r.tau, r.mu)), one(r.mu, 2)); },
          [](const gsp4::TwSt& r) { return one(r.chi, 4); },
          [](const gsp4::PiGen& r) { return concat(gl2_pieces(r.tau), gl2_pieces(r.tau)); },
          [](const gsp4::PiNg& r) { return concat(gl2_pieces(r.tau), gl2_pieces(r.tau)); },
          [](const gsp4::JQZ& r) { return concat(gl2_pieces(r.tau), gl2_pieces(gl2_twist(r.tau, r.chi))); },
          [](const gsp4::JPY& r) {
            Character w = gl2_central_character(r.tau);
            return concat(concat(one(r.chi), gl2_pieces(gl2_twist(r.tau, r.chi))), one(r.chi * w));
          },
          [](const gsp4::JB& r) {
            const Character& c = r.chi;
            return concat(concat(one(c * r.chi1 * r.chi2), one(c)), concat(one(c * r.chi1), one(c * r.chi2)));
          },
          [](const auto&) -> std::vector<LPiece> { throw ValidationError("non-canonical GSp4 datum"); },
      },
      pi);
  return make_parameter(std::move(pieces), sim);
}

LParameter lparam_gso33(const GSO33Rep& s) {
  std::vector<LPiece> pieces = std::visit(
      overloaded{
          [&](const gl4::Supercuspidal& r) {
            return std::vector<LPiece>{make_piece(opaque_core(r.name, s.mu), Character(), 1)};
          },
          [](const gl4::InducedP& r) { return concat(gl2_pieces(r.tau1), gl2_pieces(r.tau2)); },
          [](const gl4::StOfTau& r) { return with_r(gl2_pieces(r.tau), 2); },
          [](const gl4::SpOfTau& r) {
            return concat(gl2_pieces(gl2_twist(r.tau, nu(Rational(1, 2)))),
                          gl2_pieces(gl2_twist(r.tau, nu(Rational(-1, 2)))));
          },
          [](const gl4::TwSt& r) { return one(r.chi, 4); },
          [](const gl4::JQ& r) { return concat(concat(one(r.chi1), gl2_pieces(r.tau)), one(r.chi2)); },
          [](const gl4::JP& r) { return concat(gl2_pieces(r.tau1), gl2_pieces(r.tau2)); },
          [](const gl4::JB0& r) {
            std::vector<LPiece> out;
            for (const auto& c : r.chis) out.push_back(make_piece(one_core(), c, 1));
            return out;
          },
      },
      s.gl4);
  return make_parameter(std::move(pieces), s.mu);
}

LParameter adjoint(const LParameter& phi) {
  std::vector<LPiece> out;
  for (size_t i = 0; i < phi.pieces.size(); ++i) {
    out = concat(std::move(out), sym2(phi.pieces[i]));
    for (size_t j = i + 1; j < phi.pieces.size(); ++j) out = concat(std::move(out), tensor(phi.pieces[i], phi.pieces[j]));
  }
  return make_parameter(shifted(out, inv(phi.sim)), Character::trivial());
}

bool has_pole_at_one(const LParameter& ad) {
  for (const auto& p : ad.pieces) {
    Character target = nu(Rational(-(p.r + 1), 2));
    if (p.core.kind == CoreKind::One && p.twist == target) return true;
    if (p.core.kind == CoreKind::Ad3)
      for (const Character& k : p.core.tokens[0].self_twists())
        if (!is_trivial(k) && k * p.twist == target) return true;
  }
  return false;
}

std::pair<bool, bool> generic_iff_holomorphic(const GSp4Rep& pi) {
  if (gsp4_is_supercuspidal(pi)) throw UnsupportedError("generic_iff_holomorphic excludes supercuspidal input");
  bool generic = packet_has_generic(packet_of(pi));
  bool holomorphic = !has_pole_at_one(adjoint(lparam_gsp4(pi)));
  return {generic, holomorphic};
}

std::vector<LPiece> semisimplify(const std::vector<LPiece>& pieces) {
  std::vector<LPiece> out;
  for (const auto& p : pieces)
    for (int i = 0; i < p.r; ++i) out.push_back(make_piece(p.core, p.twist * nu(Rational(p.r - 1, 2) - i), 1));
  sort_pieces(out);
  return out;
}

bool symplectic_closure(const LParameter& phi) {
  std::vector<LPiece> a = phi.pieces;
  sort_pieces(a);
  return a == dual_pieces(a, phi.sim) && determinant(phi) == pow(phi.sim, 2);
}

bool self_dual(const LParameter& phi) {
  std::vector<LPiece> a = phi.pieces;
  sort_pieces(a);
  return a == dual_pieces(a, Character::trivial());
}

bool opaque_parameter(const LParameter& phi) {
  return std::any_of(phi.pieces.begin(), phi.pieces.end(),
                     [](const LPiece& p) { return p.core.kind == CoreKind::Irr4 && p.core.tokens.empty(); });
}

bool is_discrete_series_parameter(const LParameter& phi) {
  std::vector<LPiece> a = phi.pieces;
  sort_pieces(a);
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
  return std::all_of(a.begin(), a.end(), [&](const LPiece& p) { return twist(dual(p), phi.sim) == p; });
}

IotaImage iota(const SatakeClass& s) {
  for (const Character* c : {&s.t1, &s.t2, &s.v})
    if (!is_unramified(*c)) throw DomainError("Satake entry " + format(*c) + " is ramified");
  std::vector<Character> e{s.v * s.t1 * s.t2, s.v * s.t1, s.v * s.t2, s.v};
  std::sort(e.begin(), e.end());
  return IotaImage{e, pow(s.v, 2) * s.t1 * s.t2};
}

namespace {

std::optional<std::vector<Character>> as_characters(const std::vector<LPiece>& pieces) {
  std::vector<Character> out;
  for (const auto& p : semisimplify(pieces)) {
    if (p.core.kind != CoreKind::One) return std::nullopt;
    out.push_back(p.twist);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool check_unramified_transfer(const Character& chi1, const Character& chi2, const Character& chi) {
  IotaImage expected = iota(SatakeClass{chi1, chi2, chi});
  GSp4Rep pi = classify_standard_module(BorelInduced{chi1, chi2, chi}).front();
  ThetaResult lift = theta_gsp4_to_33(pi);
  if (!lift.value) return false;
  LParameter big = lparam_gso33(*lift.value);
  LParameter small = lparam_gsp4(pi);
  return as_characters(big.pieces) == expected.entries && big.sim == expected.sim &&
         as_characters(small.pieces) == expected.entries && small.sim == expected.sim;
}

bool check_parameter_compat(const GSO22Rep& sigma) {
  GSp4Rep pi = theta_22_to_gsp4(sigma);
  ThetaResult lift = theta_gsp4_to_33(pi);
  if (!lift.value) return false;
  std::vector<LPiece> expected = semisimplify(concat(gl2_pieces(sigma.first), gl2_pieces(sigma.second)));
  LParameter big = lparam_gso33(*lift.value);
  LParameter small = lparam_gsp4(pi);
  Character omega = gsp4_central_character(pi);
  return semisimplify(big.pieces) == expected && big.sim == omega && semisimplify(small.pieces) == expected &&
         small.sim == omega && omega == central_character(sigma);
}

}  // namespace thetacorr
