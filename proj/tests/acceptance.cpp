// Acceptance suite: one PASS/FAIL line per criterion. Expected values are
// computed here, independently of the engine's own self-checks.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "thetacorr/corpus.hpp"
#include "thetacorr/format.hpp"
#include "thetacorr/jacquet.hpp"
#include "thetacorr/langlands.hpp"
#include "thetacorr/tables.hpp"
#include "thetacorr/theta.hpp"

using namespace thetacorr;

namespace {

constexpr std::uint32_t kSeed = 20240611;

struct Outcome {
  long cases = 0;
  long failures = 0;
  std::string first;
  std::string note;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok && failures++ == 0) first = what();
  }
  void guard(const std::function<bool()>& body, const std::function<std::string()>& what) {
    bool ok = false;
    std::string err;
    try {
      ok = body();
    } catch (const std::exception& e) {
      err = std::string(" threw ") + e.what();
    }
    expect(ok, [&] { return what() + err; });
  }
};

const Corpus& corpus() {
  static const Corpus c = make_corpus(kSeed);
  return c;
}

// ---------------------------------------------------------------------------
// 1. Tables

struct ExpectedRow {
  int table;
  const char* tag;
  std::vector<std::string> columns;
};

const std::vector<ExpectedRow>& expected_rows() {
  static const std::vector<ExpectedRow> rows{
      {1, "SC(a)", {"SC_GL4(pi0) ⊠ w", "0", "0"}},
      {1, "SC(b)", {"I_P(sc(tau1), sc(tau2)) ⊠ w", "(sc(tau1), sc(tau2))", "0"}},
      {1, "SC(c)", {"0", "0", "(D(tau1), D(tau2))"}},
      {1, "DS(a)", {"St(sc(tau0)) ⊠ eta*w0", "0", "0"}},
      {1, "DS(b)", {"I_P(sc(tau3, mu), st(mu)) ⊠ mu^2", "(sc(tau3, mu), st(mu))", "0"}},
      {1, "DS(c)", {"St_PGL4(chi) ⊠ chi^2", "0", "0"}},
      {1, "NDS(a)", {"J_P(sc(tau, chi*nu^(1/3)), sc(tau)) ⊠ chi*w*nu^(1/3)", "0", "0"}},
      {1, "NDS(b)", {"J_P(sc(tau), sc(tau)) ⊠ w", "(sc(tau), sc(tau))", "0"}},
      {1, "NDS(c)", {"0", "0", "(D(tau), D(tau))"}},
      {1, "NDS(d)",
       {"J_Q(chi*w*nu^(2/3), sc(tau, chi*nu^(1/3)), chi) ⊠ chi^2*w*nu^(2/3)",
        "(sc(tau, chi*nu^(1/3)), ps(chi, chi*w*nu^(2/3)))", "0"}},
      {1, "NDS(e)",
       {"J_B0(chi*chi1*chi2*nu, chi*chi1*nu^(2/3), chi*chi2*nu^(1/3), chi) ⊠ chi^2*chi1*chi2*nu",
        "(ps(chi, chi*chi1*chi2*nu), ps(chi*chi1*nu^(2/3), chi*chi2*nu^(1/3)))", "0"}},
      {2, "a", {"pi_gen(sc(tau))"}},
      {2, "b", {"theta22(sc(tau1), sc(tau2))"}},
      {2, "c", {"St(sc(tau4, chi^-1), chi)"}},
      {2, "d", {"St(st(eta), chi)"}},
      {2, "e", {"JP(sc(tau, chi*w^-1*nu^(1/3)), chi^-1*w*nu^(-1/3))"}},
      {2, "f", {"JB(b^-1*c*nu^(1/3), a*c^-1*nu^(1/6); b)"}},
      {3, "a", {"pi_ng(sc(tau))"}},
      {3, "b", {"theta40(D(tau1), D(tau2))"}},
  };
  return rows;
}

Outcome criterion_tables() {
  Outcome o;
  auto got = emit_tables();
  o.expect(got.size() == expected_rows().size(), [&] { return "row count " + std::to_string(got.size()); });
  for (size_t i = 0; i < std::min(got.size(), expected_rows().size()); ++i) {
    const auto& g = got[i];
    const auto& w = expected_rows()[i];
    o.expect(g.table == w.table && g.tag == w.tag && g.columns == w.columns, [&] { return "got " + format(g); });
  }
  o.note = "11 + 6 + 2 rows";
  return o;
}

// ---------------------------------------------------------------------------
// Parameters computed by hand from the GL2 data.

Core one_core() { return Core{}; }

std::vector<LPiece> gl2_pieces(const GL2Rep& rho) {
  std::vector<LPiece> out;
  if (auto* s = std::get_if<gl2::Supercuspidal>(&rho)) {
    out.push_back(make_piece(Core{CoreKind::Irr2, {s->token}, "", Character()}, s->twist, 1));
  } else if (auto* st = std::get_if<gl2::SteinbergTwist>(&rho)) {
    Rational h(1, 2);
    out.push_back(make_piece(one_core(), st->chi * Character::nu(h), 1));
    out.push_back(make_piece(one_core(), st->chi * Character::nu(-h), 1));
  } else if (auto* ps = std::get_if<gl2::PrincipalSeriesIrr>(&rho)) {
    out.push_back(make_piece(one_core(), ps->chi1, 1));
    out.push_back(make_piece(one_core(), ps->chi2, 1));
  } else {
    const auto& lq = std::get<gl2::LanglandsQ>(rho);
    out.push_back(make_piece(one_core(), lq.chi_prime, 1));
    out.push_back(make_piece(one_core(), lq.chi, 1));
  }
  return out;
}

std::vector<LPiece> sorted(std::vector<LPiece> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// ---------------------------------------------------------------------------
// 2. Parameter compatibility

Outcome criterion_param_compat() {
  Outcome o;
  std::set<char> rows;
  for (const auto& e : corpus().gso22) {
    rows.insert(e.row);
    o.guard(
        [&] {
          GSp4Rep pi = theta_22_to_gsp4(e.value);
          ThetaResult up = theta_gsp4_to_33(pi);
          if (!up.value) return false;
          auto want = gl2_pieces(e.value.first);
          auto second = gl2_pieces(e.value.second);
          want.insert(want.end(), second.begin(), second.end());
          auto got = semisimplify(lparam_gso33(*up.value).pieces);
          return sorted(got) == sorted(want) && up.value->mu == gsp4_central_character(pi) &&
                 check_parameter_compat(e.value);
        },
        [&] { return std::string(1, e.row) + ": " + format(e.value); });
  }
  o.expect(corpus().gso22.size() >= 200, [] { return "fewer than 200 inputs"; });
  o.expect(rows == std::set<char>{'a', 'b', 'c', 'd', 'e', 'f'}, [] { return "not all six cases"; });
  o.note = std::to_string(corpus().gso22.size()) + " GSO(2,2) inputs";
  return o;
}

// ---------------------------------------------------------------------------
// 3. Unramified transfer

bool hits_minus_one(const Character& a, const Character& b) {
  Character m1 = Character::nu(-1);
  for (const Character& c : {a, inv(a), b, inv(b), a * b, inv(a * b), a / b, b / a})
    if (c == m1) return true;
  return false;
}

Outcome criterion_unramified() {
  Outcome o;
  long boundary = 0, reducible = 0;
  for (const auto& u : corpus().unramified) {
    boundary += u.chi2 == Character::nu(-1);
    reducible += hits_minus_one(u.chi1, u.chi2);
    o.guard(
        [&] {
          std::vector<Character> want{u.chi * u.chi1 * u.chi2, u.chi * u.chi1, u.chi * u.chi2, u.chi};
          std::sort(want.begin(), want.end());
          Character sim = u.chi * u.chi * u.chi1 * u.chi2;
          IotaImage im = iota({u.chi1, u.chi2, u.chi});
          ThetaResult up = theta_gsp4_to_33(gsp4_jb(u.chi1, u.chi2, u.chi));
          if (!up.value) return false;
          std::vector<Character> lifted;
          for (const auto& p : semisimplify(lparam_gso33(*up.value).pieces)) {
            if (p.core.kind != CoreKind::One) return false;
            lifted.push_back(p.twist);
          }
          std::sort(lifted.begin(), lifted.end());
          return im.entries == want && im.sim == sim && lifted == want && up.value->mu == sim &&
                 check_unramified_transfer(u.chi1, u.chi2, u.chi);
        },
        [&] { return "(" + format(u.chi1) + ", " + format(u.chi2) + "; " + format(u.chi) + ")"; });
  }
  o.expect(corpus().unramified.size() >= 200, [] { return "fewer than 200 triples"; });
  o.expect(boundary > 0, [] { return "no chi2 = nu^-1 boundary case"; });
  o.expect(reducible > 0, [] { return "no reducible I_B"; });
  o.note = std::to_string(corpus().unramified.size()) + " triples, " + std::to_string(boundary) + " boundary, " +
           std::to_string(reducible) + " reducible";
  return o;
}

// ---------------------------------------------------------------------------
// 4. Genericity equivalence

Outcome criterion_generic() {
  Outcome o;
  std::set<std::string> variants;
  long count = 0, poles = 0, jb_roots = 0;
  for (const auto& e : corpus().gsp4) {
    if (std::holds_alternative<gsp4::SC>(e.value)) continue;
    ++count;
    variants.insert(e.built);
    if (e.note == "pole" && std::holds_alternative<gsp4::JB>(e.value)) ++jb_roots;
    o.guard(
        [&] {
          auto [generic, holomorphic] = generic_iff_holomorphic(e.value);
          poles += !holomorphic;
          bool ok = generic == holomorphic;
          if (e.note == "pole") ok = ok && !holomorphic && !gsp4_is_generic(e.value);
          if (std::holds_alternative<gsp4::PiNg>(e.value)) ok = ok && generic && !gsp4_is_generic(e.value);
          if (auto* jb = std::get_if<gsp4::JB>(&e.value)) ok = ok && generic == !hits_minus_one(jb->chi1, jb->chi2);
          return ok;
        },
        [&] { return format(e.value); });
  }
  for (const char* v : {"StKlingen", "SpKlingen", "StSiegel", "SpSiegel", "TwSt", "PiGen", "PiNg", "JQZ", "JPY", "JB"})
    o.expect(variants.count(v) > 0, [&] { return std::string("variant missing: ") + v; });
  o.expect(count >= 500, [] { return "fewer than 500 cases"; });
  o.expect(jb_roots >= 8, [] { return "Borel root cases missing"; });
  o.note = std::to_string(count) + " cases, " + std::to_string(poles) + " with a pole";
  return o;
}

// ---------------------------------------------------------------------------
// 5. Dichotomy

bool participates_in_40(const GSp4Rep& p) {
  if (std::holds_alternative<gsp4::PiNg>(p)) return true;
  auto* sc = std::get_if<gsp4::SC>(&p);
  return sc && std::holds_alternative<gsp4::Lift40>(sc->origin);
}

Outcome criterion_dichotomy() {
  Outcome o;
  for (const auto& e : corpus().gsp4) {
    o.guard(
        [&] {
          bool in40 = theta_40_preimage(e.value).has_value();
          bool nonzero = theta_gsp4_to_33(e.value).value.has_value();
          return in40 != nonzero && in40 == participates_in_40(e.value);
        },
        [&] { return format(e.value); });
  }
  o.note = std::to_string(corpus().gsp4.size()) + " representations";
  return o;
}

// ---------------------------------------------------------------------------
// 6. Symplectic-parameter invariants

LPiece hand_dual(const LPiece& p) {
  switch (p.core.kind) {
    case CoreKind::One:
    case CoreKind::Ad3: return make_piece(p.core, inv(p.twist), p.r);
    case CoreKind::Irr2: return make_piece(p.core, inv(p.twist * p.core.tokens[0].central()), p.r);
    case CoreKind::Irr4: return make_piece(p.core, inv(p.twist * p.core.pairing), p.r);
  }
  return p;
}

Character hand_det(const LPiece& p) {
  switch (p.core.kind) {
    case CoreKind::One: return pow(p.twist, p.r);
    case CoreKind::Irr2: return pow(p.core.tokens[0].central() * p.twist * p.twist, p.r);
    case CoreKind::Ad3: return pow(p.twist, 3 * p.r);
    case CoreKind::Irr4: return pow(p.core.pairing * p.core.pairing * pow(p.twist, 4), p.r);
  }
  return Character();
}

int hand_dim(const std::vector<LPiece>& v) {
  static const std::map<CoreKind, int> dims{{CoreKind::One, 1}, {CoreKind::Irr2, 2}, {CoreKind::Ad3, 3}, {CoreKind::Irr4, 4}};
  int d = 0;
  for (const auto& p : v) d += dims.at(p.core.kind) * p.r;
  return d;
}

Outcome criterion_closure() {
  Outcome o;
  long adjoints = 0, refused = 0;
  for (const auto& e : corpus().gsp4) {
    o.guard(
        [&] {
          LParameter phi = lparam_gsp4(e.value);
          std::vector<LPiece> image;
          Character det = Character::trivial();
          for (const auto& p : phi.pieces) {
            LPiece d = hand_dual(p);
            image.push_back(make_piece(d.core, d.twist * phi.sim, d.r));
            det = det * hand_det(p);
          }
          bool ok = hand_dim(phi.pieces) == 4 && sorted(image) == sorted(phi.pieces) && det == phi.sim * phi.sim;
          if (opaque_parameter(phi)) {
            ++refused;
            try {
              adjoint(phi);
              return false;
            } catch (const UnsupportedError&) {
              return ok;
            }
          }
          ++adjoints;
          LParameter ad = adjoint(phi);
          std::vector<LPiece> dual_ad;
          for (const auto& p : ad.pieces) dual_ad.push_back(hand_dual(p));
          return ok && hand_dim(ad.pieces) == 10 && sorted(dual_ad) == sorted(ad.pieces);
        },
        [&] { return format(e.value); });
  }
  o.note = std::to_string(corpus().gsp4.size()) + " parameters, " + std::to_string(adjoints) + " adjoints, " +
           std::to_string(refused) + " opaque";
  return o;
}

// ---------------------------------------------------------------------------
// 7. Theta structural laws

bool tempered_ng(const GSp4Rep& p) { return participates_in_40(p); }

Outcome criterion_theta_laws() {
  Outcome o;
  for (const auto& e : corpus().gso22) {
    o.guard(
        [&] {
          GSp4Rep pi = theta_22_to_gsp4(e.value);
          auto back = theta_22_preimage(pi);
          bool orbit = back && (*back == e.value || *back == swapped(e.value));
          return gsp4_equal(pi, theta_22_to_gsp4(swapped(e.value))) && orbit &&
                 gsp4_central_character(pi) == gl2_central_character(e.value.first);
        },
        [&] { return format(e.value); });
  }
  for (const auto& s : corpus().gso40) {
    o.guard(
        [&] {
          GSp4Rep pi = theta_40_to_gsp4(s);
          auto back = theta_40_preimage(pi);
          bool orbit = back && (*back == s || *back == swapped(s));
          return gsp4_equal(pi, theta_40_to_gsp4(swapped(s))) && orbit &&
                 gsp4_central_character(pi) == d_central_character(s.first);
        },
        [&] { return format(s); });
  }
  for (const auto& e : corpus().gsp4) {
    o.guard(
        [&] {
          ThetaResult up = theta_gsp4_to_33(e.value);
          if (!up.value != tempered_ng(e.value)) return false;
          if (!up.value) return true;
          Character w = gsp4_central_character(e.value);
          return up.value->mu == w && gl4_central_character(up.value->gl4) == w * w;
        },
        [&] { return format(e.value); });
  }
  o.note = "swap, preimage, zero locus and central characters";
  return o;
}

// ---------------------------------------------------------------------------
// 8. Jacquet calculus

struct Hand {
  Rational e0, f0, e2, f0_raw;
};

Hand orth_hand(int m, int n, int t, int k) {
  using R = Rational;
  return {-R(m - 2 * t, 4) * k - R(t * n, 2) + R(m * t, 4) - R(t * (t + 1), 4), -R(k * n, 2) + R(k * (k - 1), 4),
          R(n) - R(k - 1, 2), R(k * n, 2) - R(k * (k - 1), 4)};
}

Hand sympl_hand(int m, int n, int k, int t) {
  using R = Rational;
  return {-R(t * (n - k), 2) - R(m * k, 4) + R(k * n, 2) - R(k * (k - 1), 4), -R(m * t, 4) + R(t * (t + 1), 4),
          R(m, 2) - R(t + 1, 2), R(m * t, 4) - R(t * (t + 1), 4)};
}

struct Special {
  FiltrationSpec spec;
  std::vector<std::pair<Rational, Rational>> e0_f0;  // top quotient first
  std::vector<std::optional<Rational>> e1;
};

Outcome criterion_jacquet() {
  using R = Rational;
  Outcome o;
  for (int m = 2; m <= 12; m += 2)
    for (int n = 1; n <= 6; ++n) {
      for (int t = 0; t <= m / 2; ++t) {
        auto q = filtration({m, n, -1, Side::Orthogonal, t, false});
        for (const auto& fq : q) {
          Hand h = orth_hand(m, n, t, fq.index);
          o.expect(*fq.e0 == h.e0 && *fq.f0 == h.f0 && fq.e2 == h.e2 && h.f0_raw - R(fq.index) * h.e2 == h.f0 &&
                       absorption_identity(m, n, t, fq.index) && (fq.index != t || *fq.e0 == *fq.f0),
                   [&] { return "orthogonal " + std::to_string(m) + "," + std::to_string(n) + " " + format(fq); });
        }
      }
      for (int k = 0; k <= n; ++k) {
        auto q = filtration({m, n, -1, Side::Symplectic, k, false});
        for (const auto& fq : q) {
          Hand h = sympl_hand(m, n, k, fq.index);
          o.expect(*fq.e0 == h.e0 && *fq.f0 == h.f0 && fq.e2 == h.e2 && h.f0_raw - R(fq.index) * h.e2 == h.f0 &&
                       absorption_identity(m, n, fq.index, k) && (fq.index != k || *fq.e0 == *fq.f0),
                   [&] { return "symplectic " + std::to_string(m) + "," + std::to_string(n) + " " + format(fq); });
        }
      }
    }
  // Exponents read off the four explicit filtrations.
  const std::vector<std::pair<Specialization, Special>> specials{
      {Specialization::P9_1,
       {{4, 2, -1, Side::Orthogonal, 2, false},
        {{R(-3, 2), R(0)}, {R(-3, 2), R(-1)}, {R(-3, 2), R(-3, 2)}},
        {R(3, 2), R(1), std::nullopt}}},
      {Specialization::P10_1,
       {{6, 2, -1, Side::Orthogonal, 1, false}, {{R(0), R(0)}, {R(-1), R(-1)}}, {R(0), std::nullopt}}},
      {Specialization::P10_2,
       {{6, 2, -1, Side::Symplectic, 1, false}, {{R(-1, 2), R(0)}, {R(-1), R(-1)}}, {R(1), std::nullopt}}},
      {Specialization::P10_3,
       {{6, 2, -1, Side::Symplectic, 2, false},
        {{R(-3, 2), R(0)}, {R(-3, 2), R(-1)}, {R(-3, 2), R(-3, 2)}},
        {R(3, 2), R(1), std::nullopt}}},
  };
  for (const auto& [which, sp] : specials) {
    o.guard(
        [&, &sp = sp, which = which] {
          auto q = filtration(sp.spec);
          if (q.size() != sp.e0_f0.size()) return false;
          for (size_t i = 0; i < q.size(); ++i)
            if (*q[i].e0 != sp.e0_f0[i].first || *q[i].f0 != sp.e0_f0[i].second || q[i].e1 != sp.e1[i]) return false;
          return specialize_check(which);
        },
        [which = which] { return "specialization " + to_string(which); });
  }
  o.note = "m <= 12, n <= 6 and four explicit filtrations";
  return o;
}

// ---------------------------------------------------------------------------
// 9. Discrete-series classifier

Outcome criterion_ds() {
  Outcome o;
  long ds = 0;
  for (const auto& e : corpus().gsp4) {
    if (std::holds_alternative<gsp4::SC>(e.value)) continue;
    bool tag = std::holds_alternative<gsp4::StKlingen>(e.value) || std::holds_alternative<gsp4::StSiegel>(e.value) ||
               std::holds_alternative<gsp4::TwSt>(e.value);
    ds += tag;
    o.guard([&] { return is_discrete_series_parameter(lparam_gsp4(e.value)) == tag && gsp4_is_discrete_series(e.value) == tag; },
            [&] { return format(e.value); });
  }
  o.note = std::to_string(ds) + " discrete series";
  return o;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  auto start = Clock::now();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table reproduction", criterion_tables},
      {"parameter compatibility", criterion_param_compat},
      {"unramified transfer", criterion_unramified},
      {"genericity equivalence", criterion_generic},
      {"dichotomy", criterion_dichotomy},
      {"symplectic-parameter invariants", criterion_closure},
      {"theta structural laws", criterion_theta_laws},
      {"jacquet calculus", criterion_jacquet},
      {"discrete-series classifier", criterion_ds},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.failures = 1;
      o.first = std::string("threw ") + e.what();
    }
    bool pass = o.failures == 0;
    failed += !pass;
    std::printf("%s %zu %s: %ld checks; %s\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.cases,
                pass ? o.note.c_str() : (std::to_string(o.failures) + " failed, first: " + o.first).c_str());
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool fast = secs < 10.0;
  std::printf("%s runtime %.2f s (limit 10 s)\n", fast ? "PASS" : "FAIL", secs);
  return failed == 0 && fast ? 0 : 1;
}
