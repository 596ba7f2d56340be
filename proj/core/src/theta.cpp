#include "thetacorr/theta.hpp"

#include "thetacorr/format.hpp"

namespace thetacorr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const gl2::SteinbergTwist* as_st(const GL2Rep& r) { return std::get_if<gl2::SteinbergTwist>(&r); }

}  // namespace

GSp4Lift theta_40_lift(const GSO40Rep& sigma) {
  GSO40Rep s = orbit_representative(make_gso40(sigma.first, sigma.second));
  if (s.first == s.second) return {gsp4::PiNg{jl(s.first)}, "Table3.a"};
  return {gsp4_sc_lift40(s), "Table3.b"};
}

GSp4Lift theta_22_lift(const GSO22Rep& sigma) {
  GSO22Rep s = orbit_representative(make_gso22(sigma.first, sigma.second));
  const GL2Rep& a = s.first;
  const GL2Rep& b = s.second;
  bool ds_a = gl2_is_discrete_series(a), ds_b = gl2_is_discrete_series(b);

  if (ds_a && ds_b && a == b) return {gsp4::PiGen{a}, "Table2.a"};

  // Steinberg slots are examined before supercuspidal ones.
  const auto* st_a = as_st(a);
  const auto* st_b = as_st(b);
  if (st_a && st_b)
    return {canonicalize_gsp4(gsp4::StSiegel{gl2_steinberg(st_a->chi / st_b->chi), st_b->chi}), "Table2.d"};
  if ((st_a && gl2_is_supercuspidal(b)) || (st_b && gl2_is_supercuspidal(a))) {
    const GL2Rep& sc = st_a ? b : a;
    const Character& chi = st_a ? st_a->chi : st_b->chi;
    return {canonicalize_gsp4(gsp4::StSiegel{gl2_twist(sc, inv(chi)), chi}), "Table2.c"};
  }
  if (gl2_is_supercuspidal(a) && gl2_is_supercuspidal(b)) return {gsp4_sc_lift22(s), "Table2.b"};

  if (ds_a != ds_b) {
    const GL2Rep& ds = ds_a ? a : b;
    const GL2Rep& nds = ds_a ? b : a;
    Character small = gl2_exponent_pair(nds).second;
    std::string tag = std::holds_alternative<gl2::LanglandsQ>(nds) ? "Table2.e[one-dim]" : "Table2.e";
    return {canonicalize_gsp4(gsp4::JPY{gl2_twist(ds, inv(small)), small}), tag};
  }

  auto [big1, small1] = gl2_exponent_pair(a);
  auto [big2, small2] = gl2_exponent_pair(b);
  return {gsp4_jb(big2 / small1, small2 / small1, small1), "Table2.f"};
}

GSp4Rep theta_40_to_gsp4(const GSO40Rep& sigma) { return theta_40_lift(sigma).value; }
GSp4Rep theta_22_to_gsp4(const GSO22Rep& sigma) { return theta_22_lift(sigma).value; }

ThetaResult theta_gsp4_to_33(const GSp4Rep& pi0) {
  GSp4Rep pi = canonicalize_gsp4(pi0);
  auto lift = [](const GL4Rep& g, const Character& mu) { return std::optional<GSO33Rep>(make_gso33(g, mu)); };
  return std::visit(
      overloaded{
          [&](const gsp4::SC& r) -> ThetaResult {
            return std::visit(
                overloaded{
                    [&](const gsp4::NonLiftGeneric&) -> ThetaResult {
                      return {lift(gl4::Supercuspidal{r.name, pow(r.central, 2)}, r.central),
                              "Table1.SC(a)"};
                    },
                    [&](const gsp4::Lift22& o) -> ThetaResult {
                      return {lift(gl4::InducedP{o.source.first, o.source.second}, r.central), "Table1.SC(b)"};
                    },
                    [](const gsp4::Lift40&) -> ThetaResult { return {std::nullopt, "Table1.SC(c)"}; },
                },
                r.origin);
          },
          [&](const gsp4::StKlingen& r) -> ThetaResult {
            return {lift(gl4::StOfTau{r.tau}, gl2_central_character(r.tau) * r.chi), "Table1.DS(a)"};
          },
          [&](const gsp4::StSiegel& r) -> ThetaResult {
            return {lift(gl4::InducedP{gl2_twist(r.tau, r.mu), gl2_steinberg(r.mu)}, pow(r.mu, 2)), "Table1.DS(b)"};
          },
          [&](const gsp4::TwSt& r) -> ThetaResult {
            return {lift(gl4::TwSt{r.chi}, pow(r.chi, 2)), "Table1.DS(c)"};
          },
          [&](const gsp4::JQZ& r) -> ThetaResult {
            return {lift(gl4::JP{gl2_twist(r.tau, r.chi), r.tau}, gl2_central_character(r.tau) * r.chi),
                    "Table1.NDS(a)"};
          },
          [&](const gsp4::PiGen& r) -> ThetaResult {
            return {lift(gl4::JP{r.tau, r.tau}, gl2_central_character(r.tau)), "Table1.NDS(b)"};
          },
          [](const gsp4::PiNg&) -> ThetaResult { return {std::nullopt, "Table1.NDS(c)"}; },
          [&](const gsp4::JPY& r) -> ThetaResult {
            Character w = gl2_central_character(r.tau);
            return {lift(gl4::JQ{w * r.chi, gl2_twist(r.tau, r.chi), r.chi}, pow(r.chi, 2) * w), "Table1.NDS(d)"};
          },
          [&](const gsp4::JB& r) -> ThetaResult {
            const Character& c = r.chi;
            gl4::JB0 j{{c * r.chi1 * r.chi2, c * r.chi1, c * r.chi2, c}};
            return {lift(j, pow(c, 2) * r.chi1 * r.chi2), "Table1.NDS(e)"};
          },
          [](const auto&) -> ThetaResult { throw ValidationError("non-canonical GSp4 datum"); },
      },
      pi);
}

std::optional<GSO40Rep> theta_40_preimage(const GSp4Rep& pi0) {
  GSp4Rep pi = canonicalize_gsp4(pi0);
  if (auto* ng = std::get_if<gsp4::PiNg>(&pi)) {
    DRep d = jl_inverse(ng->tau);
    return GSO40Rep{d, d};
  }
  if (auto* sc = std::get_if<gsp4::SC>(&pi))
    if (auto* o = std::get_if<gsp4::Lift40>(&sc->origin)) return orbit_representative(o->source);
  return std::nullopt;
}

std::optional<GSO22Rep> theta_22_preimage(const GSp4Rep& pi0) {
  GSp4Rep pi = canonicalize_gsp4(pi0);
  auto rep = [](const GL2Rep& a, const GL2Rep& b) {
    return std::optional<GSO22Rep>(orbit_representative(make_gso22(a, b)));
  };
  return std::visit(
      overloaded{
          [](const gsp4::SC& r) -> std::optional<GSO22Rep> {
            if (auto* o = std::get_if<gsp4::Lift22>(&r.origin)) return orbit_representative(o->source);
            return std::nullopt;
          },
          [&](const gsp4::StSiegel& r) { return rep(gl2_twist(r.tau, r.mu), gl2_steinberg(r.mu)); },
          [&](const gsp4::PiGen& r) { return rep(r.tau, r.tau); },
          [&](const gsp4::JPY& r) {
            Character w = gl2_central_character(r.tau);
            return rep(gl2_twist(r.tau, r.chi), gl2_nontempered_from_pair(w * r.chi, r.chi));
          },
          [&](const gsp4::JB& r) {
            const Character& c = r.chi;
            return rep(gl2_nontempered_from_pair(c * r.chi1, c * r.chi2),
                       gl2_nontempered_from_pair(c * r.chi1 * r.chi2, c));
          },
          [](const auto&) -> std::optional<GSO22Rep> { return std::nullopt; },
      },
      pi);
}

std::string to_string(Tower t) { return t == Tower::GSO40 ? "GSO(4,0)" : "GSO(3,3)"; }

Tower dichotomy(const GSp4Rep& pi) { return gsp4_is_tempered_ng(pi) ? Tower::GSO40 : Tower::GSO33; }

bool dichotomy_consistent(const GSp4Rep& pi) {
  bool to40 = theta_40_preimage(pi).has_value();
  bool to33 = theta_gsp4_to_33(pi).value.has_value();
  if (to40 == to33) return false;
  return to40 == (dichotomy(pi) == Tower::GSO40);
}

bool central_character_law(const GSp4Rep& pi, const GSO33Rep& lift) {
  return lift.mu == gsp4_central_character(pi) && gl4_central_character(lift.gl4) == pow(lift.mu, 2);
}

bool central_character_law(const GSO22Rep& sigma, const GSp4Rep& lift) {
  return central_character(sigma) == gsp4_central_character(lift);
}

bool central_character_law(const GSO40Rep& sigma, const GSp4Rep& lift) {
  return central_character(sigma) == gsp4_central_character(lift);
}

}  // namespace thetacorr
