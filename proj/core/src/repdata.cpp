#include "thetacorr/repdata.hpp"

#include <algorithm>
#include <set>

#include "thetacorr/format.hpp"

namespace thetacorr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Character nu(Rational s) { return Character::nu(s); }

bool equals_nu(const Character& c, Rational s) { return c == nu(s); }

}  // namespace

// ---------------------------------------------------------------------------
// SC tokens

bool SCToken::fixes(const Character& chi) const {
  const auto& g = self_twists();
  return std::find(g.begin(), g.end(), chi) != g.end();
}

SCToken make_sc_token(const std::string& name, const Character& central, const std::vector<Character>& generators) {
  std::set<Character> group{Character::trivial(central.context())};
  for (const Character& g : generators) {
    if (!is_quadratic(g))
      throw ValidationError("self-twist '" + format(g) + "' of '" + name + "' is not quadratic");
    group.insert(g);
  }
  for (bool grown = true; grown;) {
    grown = false;
    std::vector<Character> snapshot(group.begin(), group.end());
    for (const auto& a : snapshot)
      for (const auto& b : snapshot)
        if (group.insert(mul(a, b)).second) grown = true;
    if (group.size() > 64) throw ValidationError("self-twist group of '" + name + "' is too large");
  }
  auto d = std::make_shared<SCTokenData>();
  d->name = name;
  d->central = central;
  d->self_twists.assign(group.begin(), group.end());
  return SCToken(std::move(d));
}

Character canonical_twist(const SCToken& token, const Character& twist) {
  Character best = mul(twist, token.self_twists().front());
  for (const Character& g : token.self_twists()) best = std::min(best, mul(twist, g));
  return best;
}

// ---------------------------------------------------------------------------
// GL2

GL2Rep gl2_supercuspidal(const SCToken& token, const Character& twist) {
  return gl2::Supercuspidal{token, canonical_twist(token, twist)};
}

GL2Rep gl2_supercuspidal(const SCToken& token) {
  return gl2_supercuspidal(token, Character::trivial(token.central().context()));
}

GL2Rep gl2_steinberg(const Character& chi) { return gl2::SteinbergTwist{chi}; }

GL2Rep gl2_principal_series(const Character& a, const Character& b) {
  Character r = a / b;
  if (equals_nu(r, 1) || equals_nu(r, -1))
    throw ValidationError("pi(" + format(a) + ", " + format(b) + ") is reducible");
  return a <= b ? gl2::PrincipalSeriesIrr{a, b} : gl2::PrincipalSeriesIrr{b, a};
}

GL2Rep gl2_langlands_quotient(const Character& chi_prime, const Character& chi) {
  Character r = chi_prime / chi;
  if (abs_exponent(r) >= 0)
    throw ValidationError("Langlands data (" + format(chi_prime) + ", " + format(chi) +
                          ") needs abs_exponent(chi'/chi) < 0");
  if (equals_nu(r, -1)) return gl2::LanglandsQ{chi_prime, chi};
  return gl2_principal_series(chi_prime, chi);
}

GL2Rep gl2_one_dim(const Character& chi) {
  return gl2::LanglandsQ{chi * nu(Rational(-1, 2)), chi * nu(Rational(1, 2))};
}

GL2Rep gl2_nontempered_from_pair(const Character& big, const Character& small) {
  if (abs_exponent(big) < abs_exponent(small))
    throw DomainError("pair (" + format(big) + ", " + format(small) + ") is not in decreasing exponent order");
  if (equals_nu(big / small, 1)) return gl2::LanglandsQ{small, big};
  return gl2_principal_series(big, small);
}

GL2Rep canonicalize_gl2(const GL2Rep& rho) {
  return std::visit(overloaded{
                        [](const gl2::Supercuspidal& r) { return gl2_supercuspidal(r.token, r.twist); },
                        [](const gl2::SteinbergTwist& r) { return gl2_steinberg(r.chi); },
                        [](const gl2::PrincipalSeriesIrr& r) { return gl2_principal_series(r.chi1, r.chi2); },
                        [](const gl2::LanglandsQ& r) { return gl2_langlands_quotient(r.chi_prime, r.chi); },
                    },
                    rho);
}

GL2Rep gl2_twist(const GL2Rep& rho, const Character& chi) {
  return std::visit(overloaded{
                        [&](const gl2::Supercuspidal& r) { return gl2_supercuspidal(r.token, r.twist * chi); },
                        [&](const gl2::SteinbergTwist& r) { return gl2_steinberg(r.chi * chi); },
                        [&](const gl2::PrincipalSeriesIrr& r) {
                          return gl2_principal_series(r.chi1 * chi, r.chi2 * chi);
                        },
                        [&](const gl2::LanglandsQ& r) {
                          return GL2Rep(gl2::LanglandsQ{r.chi_prime * chi, r.chi * chi});
                        },
                    },
                    rho);
}

Character gl2_central_character(const GL2Rep& rho) {
  return std::visit(overloaded{
                        [](const gl2::Supercuspidal& r) { return r.token.central() * pow(r.twist, 2); },
                        [](const gl2::SteinbergTwist& r) { return pow(r.chi, 2); },
                        [](const gl2::PrincipalSeriesIrr& r) { return r.chi1 * r.chi2; },
                        [](const gl2::LanglandsQ& r) { return r.chi_prime * r.chi; },
                    },
                    rho);
}

GL2Rep gl2_dual(const GL2Rep& rho) { return gl2_twist(rho, inv(gl2_central_character(rho))); }

bool gl2_is_supercuspidal(const GL2Rep& rho) { return std::holds_alternative<gl2::Supercuspidal>(rho); }

bool gl2_is_discrete_series(const GL2Rep& rho) {
  return gl2_is_supercuspidal(rho) || std::holds_alternative<gl2::SteinbergTwist>(rho);
}

std::pair<Character, Character> gl2_exponent_pair(const GL2Rep& rho) {
  if (auto* p = std::get_if<gl2::PrincipalSeriesIrr>(&rho)) {
    auto c = compare_rational(abs_exponent(p->chi1), abs_exponent(p->chi2));
    if (c > 0 || (c == 0 && p->chi2 < p->chi1)) return {p->chi1, p->chi2};
    return {p->chi2, p->chi1};
  }
  if (auto* q = std::get_if<gl2::LanglandsQ>(&rho)) return {q->chi, q->chi_prime};
  throw DomainError("discrete series representation has no principal-series pair");
}

ContextPtr context_of(const GL2Rep& rho) {
  return std::visit(overloaded{
                        [](const gl2::Supercuspidal& r) { return r.token.central().context(); },
                        [](const gl2::SteinbergTwist& r) { return r.chi.context(); },
                        [](const gl2::PrincipalSeriesIrr& r) {
                          return r.chi1.context() ? r.chi1.context() : r.chi2.context();
                        },
                        [](const gl2::LanglandsQ& r) {
                          return r.chi.context() ? r.chi.context() : r.chi_prime.context();
                        },
                    },
                    rho);
}

// ---------------------------------------------------------------------------
// D^x

DRep d_jl_of_sc(const SCToken& token, const Character& twist) {
  return drep::JLofSC{token, canonical_twist(token, twist)};
}

DRep d_one_dim(const Character& chi) { return drep::OneDim{chi}; }

GL2Rep jl(const DRep& d) {
  return std::visit(overloaded{
                        [](const drep::JLofSC& r) { return gl2_supercuspidal(r.token, r.twist); },
                        [](const drep::OneDim& r) { return gl2_steinberg(r.chi); },
                    },
                    d);
}

DRep jl_inverse(const GL2Rep& rho) {
  if (auto* s = std::get_if<gl2::Supercuspidal>(&rho)) return d_jl_of_sc(s->token, s->twist);
  if (auto* st = std::get_if<gl2::SteinbergTwist>(&rho)) return d_one_dim(st->chi);
  throw DomainError("jl_inverse: " + format(rho) + " is not a discrete series");
}

Character d_central_character(const DRep& d) { return gl2_central_character(jl(d)); }

// ---------------------------------------------------------------------------
// GSO(2,2), GSO(4,0)

GSO22Rep make_gso22(const GL2Rep& a, const GL2Rep& b) {
  GL2Rep ca = canonicalize_gl2(a), cb = canonicalize_gl2(b);
  Character wa = gl2_central_character(ca), wb = gl2_central_character(cb);
  if (wa != wb)
    throw ValidationError("central characters differ: " + format(wa) + " vs " + format(wb));
  return GSO22Rep{ca, cb};
}

GSO40Rep make_gso40(const DRep& a, const DRep& b) {
  Character wa = d_central_character(a), wb = d_central_character(b);
  if (wa != wb)
    throw ValidationError("central characters differ: " + format(wa) + " vs " + format(wb));
  DRep ca = jl_inverse(jl(a)), cb = jl_inverse(jl(b));
  return GSO40Rep{ca, cb};
}

GSO22Rep swapped(const GSO22Rep& s) { return GSO22Rep{s.second, s.first}; }
GSO40Rep swapped(const GSO40Rep& s) { return GSO40Rep{s.second, s.first}; }

GSO22Rep orbit_representative(const GSO22Rep& s) { return s.second < s.first ? swapped(s) : s; }
GSO40Rep orbit_representative(const GSO40Rep& s) { return s.second < s.first ? swapped(s) : s; }

bool same_orbit(const GSO22Rep& a, const GSO22Rep& b) {
  return orbit_representative(a) == orbit_representative(b);
}
bool same_orbit(const GSO40Rep& a, const GSO40Rep& b) {
  return orbit_representative(a) == orbit_representative(b);
}

Character central_character(const GSO22Rep& s) { return gl2_central_character(s.first); }
Character central_character(const GSO40Rep& s) { return d_central_character(s.first); }

// ---------------------------------------------------------------------------
// GL4, GSO(3,3)

namespace {

bool exponent_then_order_less(const Character& a, const Character& b) {
  auto c = compare_rational(abs_exponent(a), abs_exponent(b));
  if (c != 0) return c > 0;
  return a < b;
}

}  // namespace

GL4Rep canonicalize_gl4(const GL4Rep& pi) {
  return std::visit(overloaded{
                        [](const gl4::Supercuspidal& r) -> GL4Rep { return r; },
                        [](const gl4::InducedP& r) -> GL4Rep {
                          GL2Rep a = canonicalize_gl2(r.tau1), b = canonicalize_gl2(r.tau2);
                          if (b < a) std::swap(a, b);
                          return gl4::InducedP{a, b};
                        },
                        [](const gl4::StOfTau& r) -> GL4Rep { return gl4::StOfTau{canonicalize_gl2(r.tau)}; },
                        [](const gl4::SpOfTau& r) -> GL4Rep { return gl4::SpOfTau{canonicalize_gl2(r.tau)}; },
                        [](const gl4::TwSt& r) -> GL4Rep { return r; },
                        [](const gl4::JQ& r) -> GL4Rep {
                          return gl4::JQ{r.chi1, canonicalize_gl2(r.tau), r.chi2};
                        },
                        [](const gl4::JP& r) -> GL4Rep {
                          return gl4::JP{canonicalize_gl2(r.tau1), canonicalize_gl2(r.tau2)};
                        },
                        [](const gl4::JB0& r) -> GL4Rep {
                          gl4::JB0 out = r;
                          std::sort(out.chis.begin(), out.chis.end(), exponent_then_order_less);
                          return out;
                        },
                    },
                    pi);
}

Character gl4_central_character(const GL4Rep& pi) {
  return std::visit(overloaded{
                        [](const gl4::Supercuspidal& r) { return r.central; },
                        [](const gl4::InducedP& r) { return gl2_central_character(r.tau1) * gl2_central_character(r.tau2); },
                        [](const gl4::StOfTau& r) { return pow(gl2_central_character(r.tau), 2); },
                        [](const gl4::SpOfTau& r) { return pow(gl2_central_character(r.tau), 2); },
                        [](const gl4::TwSt& r) { return pow(r.chi, 4); },
                        [](const gl4::JQ& r) { return r.chi1 * gl2_central_character(r.tau) * r.chi2; },
                        [](const gl4::JP& r) { return gl2_central_character(r.tau1) * gl2_central_character(r.tau2); },
                        [](const gl4::JB0& r) { return r.chis[0] * r.chis[1] * r.chis[2] * r.chis[3]; },
                    },
                    pi);
}

GSO33Rep make_gso33(const GL4Rep& pi, const Character& mu) {
  GL4Rep c = canonicalize_gl4(pi);
  Character w = gl4_central_character(c);
  if (w != pow(mu, 2))
    throw ValidationError("GSO(3,3) datum needs omega_Pi = mu^2: " + format(w) + " vs " + format(pow(mu, 2)));
  return GSO33Rep{c, mu};
}

// ---------------------------------------------------------------------------
// GSp4

std::string gsp4_kind(const GSp4Rep& pi) {
  static const char* names[] = {"SC",   "StKlingen", "SpKlingen", "StSiegel", "SpSiegel", "TwSt",
                                "PiGen", "PiNg",     "JQZ",       "JPY",      "JB"};
  return names[pi.index()];
}

GSp4Rep gsp4_sc_lift22(const GSO22Rep& source) {
  GSO22Rep s = orbit_representative(make_gso22(source.first, source.second));
  if (!gl2_is_supercuspidal(s.first) || !gl2_is_supercuspidal(s.second))
    throw ValidationError("GSO(2,2) supercuspidal lift needs two supercuspidal components");
  if (s.first == s.second) throw ValidationError("GSO(2,2) supercuspidal lift needs distinct components");
  return gsp4::SC{"theta22(" + format(s.first) + ", " + format(s.second) + ")", central_character(s),
                  gsp4::Lift22{s}};
}

GSp4Rep gsp4_sc_lift40(const GSO40Rep& source) {
  GSO40Rep s = orbit_representative(make_gso40(source.first, source.second));
  if (s.first == s.second) throw ValidationError("GSO(4,0) supercuspidal lift needs distinct components");
  return gsp4::SC{"theta40(" + format(s.first) + ", " + format(s.second) + ")", central_character(s),
                  gsp4::Lift40{s}};
}

GSp4Rep gsp4_sc_nonlift(const std::string& name, const Character& central) {
  return gsp4::SC{name, central, gsp4::NonLiftGeneric{}};
}

namespace {

using Triple = std::array<Character, 3>;  // (chi1, chi2, chi)

std::vector<Triple> weyl_orbit(const Triple& t0) {
  std::vector<Triple> orbit{t0};
  for (size_t i = 0; i < orbit.size(); ++i) {
    const auto [x, y, c] = orbit[i];
    for (Triple n : {Triple{y, x, c}, Triple{inv(x), y, c * x}, Triple{x, inv(y), c * y}})
      if (std::find(orbit.begin(), orbit.end(), n) == orbit.end()) orbit.push_back(n);
  }
  return orbit;
}

GL2Rep require_ds(const GL2Rep& tau, const char* what) {
  GL2Rep t = canonicalize_gl2(tau);
  if (!gl2_is_discrete_series(t))
    throw ValidationError(std::string(what) + " needs a discrete series, got " + format(t));
  return t;
}

GL2Rep require_sc(const GL2Rep& tau, const char* what) {
  GL2Rep t = canonicalize_gl2(tau);
  if (!gl2_is_supercuspidal(t)) throw ValidationError(std::string(what) + " needs a supercuspidal, got " + format(t));
  return t;
}

void check_klingen_st(const Character& chi, const GL2Rep& tau) {
  const auto& sc = std::get<gl2::Supercuspidal>(tau);
  if (is_trivial(chi) || !is_quadratic(chi))
    throw ValidationError("St(chi, tau) needs chi non-trivial quadratic, got " + format(chi));
  if (!sc.token.fixes(chi))
    throw ValidationError("St(chi, tau) needs tau (x) chi = tau; " + format(chi) + " is not a self-twist of " +
                          sc.token.name());
}

void check_siegel_st(const GL2Rep& tau) {
  if (!is_trivial(gl2_central_character(tau)))
    throw ValidationError("St(tau, mu) needs trivial central character of tau, got " +
                          format(gl2_central_character(tau)));
  if (auto* st = std::get_if<gl2::SteinbergTwist>(&tau); st && is_trivial(st->chi))
    throw ValidationError("St(tau, mu) needs tau != st");
}

// Two equivalent quotient data at exponent zero: keep the smaller.
template <class T>
T smaller(const T& a, const T& b) {
  return b < a ? b : a;
}

}  // namespace

GSp4Rep gsp4_jb(const Character& chi1, const Character& chi2, const Character& chi) {
  std::optional<Triple> best;
  for (const Triple& t : weyl_orbit({chi1, chi2, chi})) {
    Rational s1 = abs_exponent(t[0]), s2 = abs_exponent(t[1]);
    if (!(s1 >= s2 && s2 >= 0)) continue;
    if (!best || t < *best) best = t;
  }
  return gsp4::JB{(*best)[0], (*best)[1], (*best)[2]};
}

GSp4Rep canonicalize_gsp4(const GSp4Rep& pi) {
  return std::visit(
      overloaded{
          [](const gsp4::SC& r) -> GSp4Rep {
            return std::visit(overloaded{
                                  [&](const gsp4::NonLiftGeneric&) { return gsp4_sc_nonlift(r.name, r.central); },
                                  [](const gsp4::Lift22& o) { return gsp4_sc_lift22(o.source); },
                                  [](const gsp4::Lift40& o) { return gsp4_sc_lift40(o.source); },
                              },
                              r.origin);
          },
          [](const gsp4::StKlingen& r) -> GSp4Rep {
            GL2Rep tau = require_sc(r.tau, "St(chi, tau)");
            check_klingen_st(r.chi, tau);
            return gsp4::StKlingen{r.chi, tau};
          },
          [](const gsp4::SpKlingen& r) -> GSp4Rep {
            GL2Rep tau = require_sc(r.tau, "Sp(chi, tau)");
            check_klingen_st(r.chi, tau);
            return canonicalize_gsp4(gsp4::JQZ{r.chi * nu(1), gl2_twist(tau, nu(Rational(-1, 2)))});
          },
          [](const gsp4::StSiegel& r) -> GSp4Rep {
            GL2Rep tau = require_ds(r.tau, "St(tau, mu)");
            check_siegel_st(tau);
            Character mu = r.mu;
            if (auto* st = std::get_if<gl2::SteinbergTwist>(&tau)) mu = std::min(mu, mu * st->chi);
            return gsp4::StSiegel{tau, mu};
          },
          [](const gsp4::SpSiegel& r) -> GSp4Rep {
            GL2Rep tau = require_ds(r.tau, "Sp(tau, mu)");
            check_siegel_st(tau);
            return canonicalize_gsp4(gsp4::JPY{gl2_twist(tau, nu(Rational(1, 2))), r.mu * nu(Rational(-1, 2))});
          },
          [](const gsp4::TwSt& r) -> GSp4Rep { return r; },
          [](const gsp4::PiGen& r) -> GSp4Rep { return gsp4::PiGen{require_ds(r.tau, "pi_gen(tau)")}; },
          [](const gsp4::PiNg& r) -> GSp4Rep { return gsp4::PiNg{require_ds(r.tau, "pi_ng(tau)")}; },
          [](const gsp4::JQZ& r) -> GSp4Rep {
            GL2Rep tau = canonicalize_gl2(r.tau);
            if (!gl2_is_discrete_series(tau)) {
              auto [a, b] = gl2_exponent_pair(tau);
              return gsp4_jb(b / a, r.chi, a);
            }
            if (is_trivial(r.chi))
              throw ValidationError("J_Q(Z)(1, tau) is not a Langlands quotient; use pi_gen / pi_ng");
            gsp4::JQZ flipped{inv(r.chi), gl2_twist(tau, r.chi)};
            gsp4::JQZ same{r.chi, tau};
            Rational s = abs_exponent(r.chi);
            if (s > 0) return same;
            if (s < 0) return flipped;
            return smaller(same, flipped);
          },
          [](const gsp4::JPY& r) -> GSp4Rep {
            GL2Rep tau = canonicalize_gl2(r.tau);
            if (!gl2_is_discrete_series(tau)) {
              auto [a, b] = gl2_exponent_pair(tau);
              return gsp4_jb(a, b, r.chi);
            }
            Character w = gl2_central_character(tau);
            gsp4::JPY flipped{gl2_dual(tau), w * r.chi};
            gsp4::JPY same{tau, r.chi};
            Rational s = abs_exponent(w);
            if (s > 0) return same;
            if (s < 0) return flipped;
            return smaller(same, flipped);
          },
          [](const gsp4::JB& r) -> GSp4Rep { return gsp4_jb(r.chi1, r.chi2, r.chi); },
      },
      pi);
}

bool gsp4_equal(const GSp4Rep& a, const GSp4Rep& b) { return canonicalize_gsp4(a) == canonicalize_gsp4(b); }

Character gsp4_central_character(const GSp4Rep& pi) {
  return std::visit(overloaded{
                        [](const gsp4::SC& r) { return r.central; },
                        [](const gsp4::StKlingen& r) { return gl2_central_character(r.tau) * r.chi; },
                        [](const gsp4::SpKlingen& r) { return gl2_central_character(r.tau) * r.chi; },
                        [](const gsp4::StSiegel& r) { return gl2_central_character(r.tau) * pow(r.mu, 2); },
                        [](const gsp4::SpSiegel& r) { return gl2_central_character(r.tau) * pow(r.mu, 2); },
                        [](const gsp4::TwSt& r) { return pow(r.chi, 2); },
                        [](const gsp4::PiGen& r) { return gl2_central_character(r.tau); },
                        [](const gsp4::PiNg& r) { return gl2_central_character(r.tau); },
                        [](const gsp4::JQZ& r) { return r.chi * gl2_central_character(r.tau); },
                        [](const gsp4::JPY& r) { return gl2_central_character(r.tau) * pow(r.chi, 2); },
                        [](const gsp4::JB& r) { return pow(r.chi, 2) * r.chi1 * r.chi2; },
                    },
                    pi);
}

bool gsp4_is_supercuspidal(const GSp4Rep& pi) { return std::holds_alternative<gsp4::SC>(pi); }

bool gsp4_is_discrete_series(const GSp4Rep& pi) {
  return std::holds_alternative<gsp4::SC>(pi) || std::holds_alternative<gsp4::StKlingen>(pi) ||
         std::holds_alternative<gsp4::StSiegel>(pi) || std::holds_alternative<gsp4::TwSt>(pi);
}

bool gsp4_is_generic(const GSp4Rep& pi0) {
  GSp4Rep pi = canonicalize_gsp4(pi0);
  return std::visit(overloaded{
                        [](const gsp4::SC& r) { return !std::holds_alternative<gsp4::Lift40>(r.origin); },
                        [](const gsp4::StKlingen&) { return true; },
                        [](const gsp4::SpKlingen&) { return false; },
                        [](const gsp4::StSiegel&) { return true; },
                        [](const gsp4::SpSiegel&) { return false; },
                        [](const gsp4::TwSt&) { return true; },
                        [](const gsp4::PiGen&) { return true; },
                        [](const gsp4::PiNg&) { return false; },
                        [](const gsp4::JQZ& r) { return !klingen_reducible(r.chi, r.tau).reducible(); },
                        [](const gsp4::JPY& r) { return !siegel_reducible(r.tau, r.chi).reducible(); },
                        [](const gsp4::JB& r) { return !borel_reducible(r.chi1, r.chi2); },
                    },
                    pi);
}

bool gsp4_is_tempered_ng(const GSp4Rep& pi0) {
  GSp4Rep pi = canonicalize_gsp4(pi0);
  if (std::holds_alternative<gsp4::PiNg>(pi)) return true;
  if (auto* sc = std::get_if<gsp4::SC>(&pi)) return std::holds_alternative<gsp4::Lift40>(sc->origin);
  return false;
}

PacketId packet_of(const GSp4Rep& pi0) {
  GSp4Rep pi = canonicalize_gsp4(pi0);
  const GL2Rep* tau = nullptr;
  if (auto* g = std::get_if<gsp4::PiGen>(&pi)) tau = &g->tau;
  if (auto* n = std::get_if<gsp4::PiNg>(&pi)) tau = &n->tau;
  if (tau) return PacketId{"I_Q(1, " + format(*tau) + ")", {gsp4::PiGen{*tau}, gsp4::PiNg{*tau}}};
  return PacketId{format(pi), {pi}};
}

bool packet_has_generic(const PacketId& p) {
  return std::any_of(p.members.begin(), p.members.end(), [](const GSp4Rep& m) { return gsp4_is_generic(m); });
}

// ---------------------------------------------------------------------------
// Reducibility

std::string to_string(Reducibility r) {
  switch (r) {
    case Reducibility::Irreducible: return "Irreducible";
    case Reducibility::TemperedSplit: return "TemperedSplit";
    case Reducibility::GenSteinbergPoint: return "GenSteinbergPoint";
    case Reducibility::TwStPoint: return "TwStPoint";
    case Reducibility::OtherReducible: return "OtherReducible";
    case Reducibility::SiegelA: return "SiegelA";
    case Reducibility::SiegelBi: return "SiegelBi";
    case Reducibility::SiegelBii: return "SiegelBii";
    case Reducibility::SiegelBiii: return "SiegelBiii";
    case Reducibility::StSpSplit: return "StSpSplit";
    case Reducibility::SteinbergSubmodule: return "SteinbergSubmodule";
    case Reducibility::SteinbergNonDS: return "SteinbergNonDS";
    case Reducibility::Delegated: return "Delegated";
  }
  return "?";
}

bool borel_reducible(const Character& chi1, const Character& chi2) {
  const Character target = nu(-1);
  for (const Character& c : {chi1, chi2, chi1 * chi2, chi1 / chi2})
    if (c == target || inv(c) == target) return true;
  return false;
}

ReducibilityReport klingen_reducible(const Character& chi, const GL2Rep& tau0) {
  GL2Rep tau = canonicalize_gl2(tau0);
  if (!gl2_is_discrete_series(tau)) {
    auto [a, b] = gl2_exponent_pair(tau);
    std::string via = "I_B(" + format(chi) + ", " + format(a / b) + "; " + format(b) + ")";
    if (borel_reducible(chi, a / b)) return {Reducibility::OtherReducible, via};
    return {Reducibility::Irreducible, via};
  }
  if (is_trivial(chi)) return {Reducibility::TemperedSplit, "chi = 1"};
  if (auto* sc = std::get_if<gl2::Supercuspidal>(&tau)) {
    Character chi0 = unitary_part(chi);
    Rational s = abs_exponent(chi);
    if ((s == 1 || s == -1) && !is_trivial(chi0) && is_quadratic(chi0) && sc->token.fixes(chi0))
      return {Reducibility::GenSteinbergPoint, "chi0 = " + format(chi0)};
    return {Reducibility::Irreducible, ""};
  }
  if (equals_nu(chi, 2) || equals_nu(chi, -2)) return {Reducibility::TwStPoint, "chi = " + format(chi)};
  return {Reducibility::Irreducible, ""};
}

ReducibilityReport siegel_reducible(const GL2Rep& tau0, const Character& mu) {
  GL2Rep tau = canonicalize_gl2(tau0);
  if (!gl2_is_discrete_series(tau)) {
    auto [a, b] = gl2_exponent_pair(tau);
    std::string via = "I_B(" + format(a) + ", " + format(b) + "; " + format(mu) + ")";
    if (borel_reducible(a, b)) return {Reducibility::OtherReducible, via};
    return {Reducibility::Irreducible, via};
  }
  if (gl2_is_supercuspidal(tau)) {
    Character w = gl2_central_character(tau);
    if (equals_nu(w, 1) || equals_nu(w, -1)) return {Reducibility::SiegelA, "omega_tau = " + format(w)};
    return {Reducibility::Irreducible, ""};
  }
  const Character& psi = std::get<gl2::SteinbergTwist>(tau).chi;
  if (equals_nu(psi, Rational(1, 2)) || equals_nu(psi, Rational(-1, 2))) return {Reducibility::SiegelBi, ""};
  Character sq = pow(psi, 2);
  if (equals_nu(sq, 1) || equals_nu(sq, -1))
    return {Reducibility::SiegelBii, "chi = " + format(unitary_part(psi))};
  if (equals_nu(psi, Rational(3, 2)) || equals_nu(psi, Rational(-3, 2))) return {Reducibility::SiegelBiii, ""};
  return {Reducibility::Irreducible, ""};
}

ReducibilityReport gl4_ip_reducible(const GL2Rep& a0, const GL2Rep& b0) {
  GL2Rep a = canonicalize_gl2(a0), b = canonicalize_gl2(b0);
  if (!gl2_is_discrete_series(a) || !gl2_is_discrete_series(b))
    return {Reducibility::Delegated, "non-discrete-series input"};
  if (gl2_is_supercuspidal(a) && gl2_is_supercuspidal(b)) {
    if (gl2_twist(a, nu(1)) == b || gl2_twist(a, nu(-1)) == b) return {Reducibility::StSpSplit, ""};
    return {Reducibility::Irreducible, ""};
  }
  auto* sa = std::get_if<gl2::SteinbergTwist>(&a);
  auto* sb = std::get_if<gl2::SteinbergTwist>(&b);
  if (sa && sb) {
    Character r = sa->chi / sb->chi;
    if (equals_nu(r, 2) || equals_nu(r, -2)) return {Reducibility::SteinbergSubmodule, ""};
    if (equals_nu(r, 1) || equals_nu(r, -1)) return {Reducibility::SteinbergNonDS, ""};
  }
  return {Reducibility::Irreducible, ""};
}

// ---------------------------------------------------------------------------
// Standard modules

std::vector<GSp4Rep> classify_standard_module(const StandardModule& data) {
  return std::visit(
      overloaded{
          [](const KlingenInduced& d) -> std::vector<GSp4Rep> {
            GL2Rep tau = canonicalize_gl2(d.tau);
            if (!gl2_is_discrete_series(tau)) {
              auto [a, b] = gl2_exponent_pair(tau);
              return {gsp4_jb(d.chi, a / b, b)};
            }
            if (is_trivial(d.chi)) return {gsp4::PiGen{tau}, gsp4::PiNg{tau}};
            Rational s = abs_exponent(d.chi);
            if (s > 0) {
              ReducibilityReport rep = klingen_reducible(d.chi, tau);
              if (rep.tag == Reducibility::GenSteinbergPoint)
                return {canonicalize_gsp4(
                    gsp4::StKlingen{unitary_part(d.chi), gl2_twist(tau, nu(Rational(1, 2)))})};
              if (rep.tag == Reducibility::TwStPoint)
                return {gsp4::TwSt{std::get<gl2::SteinbergTwist>(tau).chi * nu(1)}};
              return {canonicalize_gsp4(gsp4::JQZ{d.chi, tau})};
            }
            if (s < 0) return {canonicalize_gsp4(gsp4::JQZ{inv(d.chi), gl2_twist(tau, d.chi)})};
            return {canonicalize_gsp4(gsp4::JQZ{d.chi, tau})};
          },
          [](const SiegelInduced& d) -> std::vector<GSp4Rep> {
            GL2Rep tau = canonicalize_gl2(d.tau);
            if (!gl2_is_discrete_series(tau)) {
              auto [a, b] = gl2_exponent_pair(tau);
              return {gsp4_jb(a, b, d.chi)};
            }
            Character w = gl2_central_character(tau);
            Rational s = abs_exponent(w);
            if (s < 0) return {canonicalize_gsp4(gsp4::JPY{gl2_dual(tau), w * d.chi})};
            if (s == 0) return {canonicalize_gsp4(gsp4::JPY{tau, d.chi})};
            const Character half = nu(Rational(1, 2));
            switch (siegel_reducible(tau, d.chi).tag) {
              case Reducibility::SiegelA:
                return {canonicalize_gsp4(gsp4::StSiegel{gl2_twist(tau, inv(half)), d.chi * half})};
              case Reducibility::SiegelBi:
                return {gsp4::PiGen{gl2_steinberg(d.chi * half)}};
              case Reducibility::SiegelBii:
                return {canonicalize_gsp4(gsp4::StSiegel{gl2_twist(tau, inv(half)), d.chi * half})};
              case Reducibility::SiegelBiii:
                return {gsp4::TwSt{d.chi * nu(Rational(3, 2))}};
              default:
                return {canonicalize_gsp4(gsp4::JPY{tau, d.chi})};
            }
          },
          [](const BorelInduced& d) -> std::vector<GSp4Rep> { return {gsp4_jb(d.chi1, d.chi2, d.chi)}; },
      },
      data);
}

std::optional<StandardModule> standard_module_of(const GSp4Rep& pi0) {
  GSp4Rep pi = canonicalize_gsp4(pi0);
  const Character half = nu(Rational(1, 2));
  return std::visit(
      overloaded{
          [](const gsp4::SC&) -> std::optional<StandardModule> { return std::nullopt; },
          [&](const gsp4::StKlingen& r) -> std::optional<StandardModule> {
            return KlingenInduced{r.chi * nu(1), gl2_twist(r.tau, inv(half))};
          },
          [](const gsp4::SpKlingen&) -> std::optional<StandardModule> { return std::nullopt; },
          [&](const gsp4::StSiegel& r) -> std::optional<StandardModule> {
            return SiegelInduced{gl2_twist(r.tau, half), r.mu * inv(half)};
          },
          [](const gsp4::SpSiegel&) -> std::optional<StandardModule> { return std::nullopt; },
          [](const gsp4::TwSt& r) -> std::optional<StandardModule> {
            return KlingenInduced{nu(2), gl2_steinberg(r.chi * nu(-1))};
          },
          [](const gsp4::PiGen& r) -> std::optional<StandardModule> {
            return KlingenInduced{Character::trivial(context_of(r.tau)), r.tau};
          },
          [](const gsp4::PiNg& r) -> std::optional<StandardModule> {
            return KlingenInduced{Character::trivial(context_of(r.tau)), r.tau};
          },
          [](const gsp4::JQZ& r) -> std::optional<StandardModule> {
            return KlingenInduced{inv(r.chi), gl2_twist(r.tau, r.chi)};
          },
          [](const gsp4::JPY& r) -> std::optional<StandardModule> {
            return SiegelInduced{gl2_dual(r.tau), gl2_central_character(r.tau) * r.chi};
          },
          [](const gsp4::JB& r) -> std::optional<StandardModule> {
            return BorelInduced{inv(r.chi1), inv(r.chi2), r.chi * r.chi1 * r.chi2};
          },
      },
      pi);
}

}  // namespace thetacorr

// ---------------------------------------------------------------------------
// GL4 genericity via segments

namespace thetacorr {

namespace {

// A segment base|.|^lo, ..., base|.|^hi with unit steps.
struct Segment {
  std::string line;  // cuspidal support up to unramified shifts
  Rational lo, hi;
};

void append_segments(const GL2Rep& rho, std::vector<Segment>& out) {
  auto single = [&](const Character& c) {
    out.push_back({"1:" + format(unitary_part(c)), abs_exponent(c), abs_exponent(c)});
  };
  std::visit(overloaded{
                 [&](const gl2::Supercuspidal& r) {
                   Rational s = abs_exponent(r.twist);
                   std::string line = "sc:" + r.token.name() + ":" + format(canonical_twist(r.token, unitary_part(r.twist)));
                   out.push_back({line, s, s});
                 },
                 [&](const gl2::SteinbergTwist& r) {
                   Rational s = abs_exponent(r.chi);
                   out.push_back({"1:" + format(unitary_part(r.chi)), s - Rational(1, 2), s + Rational(1, 2)});
                 },
                 [&](const gl2::PrincipalSeriesIrr& r) {
                   single(r.chi1);
                   single(r.chi2);
                 },
                 [&](const gl2::LanglandsQ& r) {
                   single(r.chi_prime);
                   single(r.chi);
                 },
             },
             rho);
}

bool linked(const Segment& a, const Segment& b) {
  if (a.line != b.line) return false;
  if ((a.lo - b.lo).denominator() != 1) return false;
  auto precedes = [](const Segment& x, const Segment& y) {
    return x.lo < y.lo && y.lo <= x.hi + 1 && x.hi < y.hi;
  };
  return precedes(a, b) || precedes(b, a);
}

}  // namespace

bool gl4_is_generic(const GL4Rep& pi) {
  std::vector<Segment> segs;
  auto single = [&](const Character& c) {
    segs.push_back({"1:" + format(unitary_part(c)), abs_exponent(c), abs_exponent(c)});
  };
  bool langlands = std::visit(overloaded{
                                  [](const gl4::Supercuspidal&) { return false; },
                                  [](const gl4::InducedP&) { return false; },
                                  [](const gl4::StOfTau&) { return false; },
                                  [](const gl4::SpOfTau&) { return false; },
                                  [](const gl4::TwSt&) { return false; },
                                  [&](const gl4::JQ& r) {
                                    single(r.chi1);
                                    append_segments(r.tau, segs);
                                    single(r.chi2);
                                    return true;
                                  },
                                  [&](const gl4::JP& r) {
                                    append_segments(r.tau1, segs);
                                    append_segments(r.tau2, segs);
                                    return true;
                                  },
                                  [&](const gl4::JB0& r) {
                                    for (const auto& c : r.chis) single(c);
                                    return true;
                                  },
                              },
                              pi);
  if (!langlands) return !std::holds_alternative<gl4::SpOfTau>(pi);
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j)
      if (linked(segs[i], segs[j])) return false;
  return true;
}

}  // namespace thetacorr
