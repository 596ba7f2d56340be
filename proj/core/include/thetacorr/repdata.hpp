#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "thetacorr/charlattice.hpp"

namespace thetacorr {

// ---------------------------------------------------------------------------
// Supercuspidal tokens of GL2

struct SCTokenData {
  std::string name;
  Character central;
  std::vector<Character> self_twists;  // sorted subgroup of quadratic characters, contains 1
};

// Opaque supercuspidal of GL2. Tokens compare by name; distinct names are
// inequivalent up to any twist.
class SCToken {
 public:
  SCToken() = default;
  explicit SCToken(std::shared_ptr<const SCTokenData> d) : d_(std::move(d)) {}

  const std::string& name() const { return d_->name; }
  const Character& central() const { return d_->central; }
  const std::vector<Character>& self_twists() const { return d_->self_twists; }
  bool fixes(const Character& chi) const;  // tau (x) chi == tau

  bool operator==(const SCToken& o) const { return name() == o.name(); }
  std::strong_ordering operator<=>(const SCToken& o) const { return name() <=> o.name(); }

 private:
  std::shared_ptr<const SCTokenData> d_;
};

// Closes `generators` under multiplication; every generator must be quadratic.
SCToken make_sc_token(const std::string& name, const Character& central,
                      const std::vector<Character>& generators = {});

// Smallest character of the coset twist * self_twists(token).
Character canonical_twist(const SCToken& token, const Character& twist);

// ---------------------------------------------------------------------------
// GL2

namespace gl2 {
struct Supercuspidal {
  SCToken token;
  Character twist;
  auto operator<=>(const Supercuspidal&) const = default;
};
struct SteinbergTwist {
  Character chi;
  auto operator<=>(const SteinbergTwist&) const = default;
};
// Irreducible principal series; chi1 <= chi2 in the character order.
struct PrincipalSeriesIrr {
  Character chi1, chi2;
  auto operator<=>(const PrincipalSeriesIrr&) const = default;
};
// Stored with abs_exponent(chi_prime / chi) < 0. Only the reducible case
// chi_prime / chi = |.|^-1 (a one-dimensional representation) is kept in this
// form; irreducible pairs are normalized to PrincipalSeriesIrr.
struct LanglandsQ {
  Character chi_prime, chi;
  auto operator<=>(const LanglandsQ&) const = default;
};
}  // namespace gl2

using GL2Rep = std::variant<gl2::Supercuspidal, gl2::SteinbergTwist, gl2::PrincipalSeriesIrr, gl2::LanglandsQ>;

GL2Rep gl2_supercuspidal(const SCToken& token, const Character& twist);
GL2Rep gl2_supercuspidal(const SCToken& token);
GL2Rep gl2_steinberg(const Character& chi);
GL2Rep gl2_principal_series(const Character& a, const Character& b);
GL2Rep gl2_langlands_quotient(const Character& chi_prime, const Character& chi);
GL2Rep gl2_one_dim(const Character& chi);  // chi o det
// The irreducible representation with L-parameter big (+) small that is not
// the Steinberg: requires abs_exponent(big) >= abs_exponent(small).
GL2Rep gl2_nontempered_from_pair(const Character& big, const Character& small);
GL2Rep canonicalize_gl2(const GL2Rep& rho);

GL2Rep gl2_twist(const GL2Rep& rho, const Character& chi);
GL2Rep gl2_dual(const GL2Rep& rho);
Character gl2_central_character(const GL2Rep& rho);
bool gl2_is_discrete_series(const GL2Rep& rho);
bool gl2_is_supercuspidal(const GL2Rep& rho);
// Characters of a non-discrete-series rho ordered by decreasing exponent
// (ties by the character order). Domain error on discrete series.
std::pair<Character, Character> gl2_exponent_pair(const GL2Rep& rho);
ContextPtr context_of(const GL2Rep& rho);

// ---------------------------------------------------------------------------
// D^x (quaternion units)

namespace drep {
struct JLofSC {
  SCToken token;
  Character twist;
  auto operator<=>(const JLofSC&) const = default;
};
struct OneDim {
  Character chi;
  auto operator<=>(const OneDim&) const = default;
};
}  // namespace drep

using DRep = std::variant<drep::JLofSC, drep::OneDim>;

DRep d_jl_of_sc(const SCToken& token, const Character& twist);
DRep d_one_dim(const Character& chi);
Character d_central_character(const DRep& d);
GL2Rep jl(const DRep& d);
DRep jl_inverse(const GL2Rep& rho);

// ---------------------------------------------------------------------------
// GSO(2,2), GSO(4,0): ordered pairs with equal central characters; orbits are
// taken modulo swap.

struct GSO22Rep {
  GL2Rep first, second;
  auto operator<=>(const GSO22Rep&) const = default;
};
struct GSO40Rep {
  DRep first, second;
  auto operator<=>(const GSO40Rep&) const = default;
};

GSO22Rep make_gso22(const GL2Rep& a, const GL2Rep& b);
GSO40Rep make_gso40(const DRep& a, const DRep& b);
GSO22Rep swapped(const GSO22Rep& s);
GSO40Rep swapped(const GSO40Rep& s);
GSO22Rep orbit_representative(const GSO22Rep& s);
GSO40Rep orbit_representative(const GSO40Rep& s);
bool same_orbit(const GSO22Rep& a, const GSO22Rep& b);
bool same_orbit(const GSO40Rep& a, const GSO40Rep& b);
Character central_character(const GSO22Rep& s);
Character central_character(const GSO40Rep& s);

// ---------------------------------------------------------------------------
// GL4 and GSO(3,3)

namespace gl4 {
struct Supercuspidal {
  std::string name;
  Character central;
  auto operator<=>(const Supercuspidal&) const = default;
};
struct InducedP {  // irreducible I_P(tau1, tau2), pair sorted
  GL2Rep tau1, tau2;
  auto operator<=>(const InducedP&) const = default;
};
struct StOfTau {
  GL2Rep tau;
  auto operator<=>(const StOfTau&) const = default;
};
struct SpOfTau {
  GL2Rep tau;
  auto operator<=>(const SpOfTau&) const = default;
};
struct TwSt {  // St_PGL4 (x) chi
  Character chi;
  auto operator<=>(const TwSt&) const = default;
};
struct JQ {  // (1,2,1) parabolic
  Character chi1;
  GL2Rep tau;
  Character chi2;
  auto operator<=>(const JQ&) const = default;
};
struct JP {  // (2,2) parabolic
  GL2Rep tau1, tau2;
  auto operator<=>(const JP&) const = default;
};
struct JB0 {  // Borel, ordered by decreasing exponent
  std::array<Character, 4> chis;
  auto operator<=>(const JB0&) const = default;
};
}  // namespace gl4

using GL4Rep = std::variant<gl4::Supercuspidal, gl4::InducedP, gl4::StOfTau, gl4::SpOfTau, gl4::TwSt, gl4::JQ,
                            gl4::JP, gl4::JB0>;

GL4Rep canonicalize_gl4(const GL4Rep& pi);
Character gl4_central_character(const GL4Rep& pi);
// Langlands quotients are generic iff no two inducing segments are linked.
bool gl4_is_generic(const GL4Rep& pi);

struct GSO33Rep {
  GL4Rep gl4;
  Character mu;
  auto operator<=>(const GSO33Rep&) const = default;
};
GSO33Rep make_gso33(const GL4Rep& pi, const Character& mu);

// ---------------------------------------------------------------------------
// GSp4

namespace gsp4 {
struct NonLiftGeneric {
  auto operator<=>(const NonLiftGeneric&) const = default;
};
struct Lift22 {
  GSO22Rep source;
  auto operator<=>(const Lift22&) const = default;
};
struct Lift40 {
  GSO40Rep source;
  auto operator<=>(const Lift40&) const = default;
};
using Origin = std::variant<NonLiftGeneric, Lift22, Lift40>;

struct SC {
  std::string name;
  Character central;
  Origin origin;
  auto operator<=>(const SC&) const = default;
};
struct StKlingen {  // St(chi, tau): chi non-trivial quadratic, tau supercuspidal, tau (x) chi = tau
  Character chi;
  GL2Rep tau;
  auto operator<=>(const StKlingen&) const = default;
};
struct SpKlingen {  // Sp(chi, tau); canonical form is the equivalent JQZ
  Character chi;
  GL2Rep tau;
  auto operator<=>(const SpKlingen&) const = default;
};
struct StSiegel {  // St(tau, mu): tau discrete series, trivial central character, tau != st
  GL2Rep tau;
  Character mu;
  auto operator<=>(const StSiegel&) const = default;
};
struct SpSiegel {  // Sp(tau, mu); canonical form is the equivalent JPY
  GL2Rep tau;
  Character mu;
  auto operator<=>(const SpSiegel&) const = default;
};
struct TwSt {  // St_PGSp4 (x) chi
  Character chi;
  auto operator<=>(const TwSt&) const = default;
};
struct PiGen {
  GL2Rep tau;
  auto operator<=>(const PiGen&) const = default;
};
struct PiNg {
  GL2Rep tau;
  auto operator<=>(const PiNg&) const = default;
};
// Langlands quotients, stored in quotient arrangement (positive exponents).
struct JQZ {
  Character chi;
  GL2Rep tau;
  auto operator<=>(const JQZ&) const = default;
};
struct JPY {
  GL2Rep tau;
  Character chi;
  auto operator<=>(const JPY&) const = default;
};
struct JB {
  Character chi1, chi2, chi;
  auto operator<=>(const JB&) const = default;
};
}  // namespace gsp4

using GSp4Rep = std::variant<gsp4::SC, gsp4::StKlingen, gsp4::SpKlingen, gsp4::StSiegel, gsp4::SpSiegel, gsp4::TwSt,
                             gsp4::PiGen, gsp4::PiNg, gsp4::JQZ, gsp4::JPY, gsp4::JB>;

std::string gsp4_kind(const GSp4Rep& pi);
GSp4Rep canonicalize_gsp4(const GSp4Rep& pi);
bool gsp4_equal(const GSp4Rep& a, const GSp4Rep& b);
Character gsp4_central_character(const GSp4Rep& pi);
bool gsp4_is_supercuspidal(const GSp4Rep& pi);
bool gsp4_is_discrete_series(const GSp4Rep& pi);  // variant-level tag
bool gsp4_is_generic(const GSp4Rep& pi);
bool gsp4_is_tempered_ng(const GSp4Rep& pi);
// Supercuspidal lifted from GSO(2,2) / GSO(4,0); name derived from the orbit.
GSp4Rep gsp4_sc_lift22(const GSO22Rep& source);
GSp4Rep gsp4_sc_lift40(const GSO40Rep& source);
GSp4Rep gsp4_sc_nonlift(const std::string& name, const Character& central);
// Canonical JB from arbitrary Borel data (any Weyl arrangement).
GSp4Rep gsp4_jb(const Character& chi1, const Character& chi2, const Character& chi);

struct PacketId {
  std::string key;
  std::vector<GSp4Rep> members;
  bool operator==(const PacketId& o) const { return key == o.key; }
  bool operator<(const PacketId& o) const { return key < o.key; }
};
PacketId packet_of(const GSp4Rep& pi);
bool packet_has_generic(const PacketId& p);

// ---------------------------------------------------------------------------
// Reducibility

enum class Reducibility {
  Irreducible,
  TemperedSplit,      // I_Q(1, tau), tau discrete series
  GenSteinbergPoint,  // I_Q(chi0 |.|^{+-1}, tau), tau (x) chi0 = tau
  TwStPoint,          // I_Q(|.|^{+-2}, st_mu)
  OtherReducible,     // non-discrete-series tau, decided at the Borel level
  SiegelA,            // tau supercuspidal, omega_tau = |.|^{+-1}
  SiegelBi,           // st |.|^{+-1/2}
  SiegelBii,          // st_chi |.|^{+-1/2}, chi non-trivial quadratic
  SiegelBiii,         // st |.|^{+-3/2}
  StSpSplit,          // I_P(tau|.|^{1/2}, tau|.|^{-1/2}), tau supercuspidal
  SteinbergSubmodule, // I_P(st_chi|.|, st_chi|.|^{-1})
  SteinbergNonDS,     // I_P(st_chi|.|^{1/2}, st_chi|.|^{-1/2})
  Delegated,          // input outside the predicate's domain
};

struct ReducibilityReport {
  Reducibility tag;
  std::string detail;
  bool reducible() const { return tag != Reducibility::Irreducible && tag != Reducibility::Delegated; }
};

std::string to_string(Reducibility r);
ReducibilityReport klingen_reducible(const Character& chi, const GL2Rep& tau);
ReducibilityReport siegel_reducible(const GL2Rep& tau, const Character& mu);
bool borel_reducible(const Character& chi1, const Character& chi2);
ReducibilityReport gl4_ip_reducible(const GL2Rep& tau1, const GL2Rep& tau2);

// ---------------------------------------------------------------------------
// Standard modules

struct KlingenInduced {  // I_Q(Z)(chi, tau)
  Character chi;
  GL2Rep tau;
};
struct SiegelInduced {  // I_P(Y)(tau, chi)
  GL2Rep tau;
  Character chi;
};
struct BorelInduced {  // I_B(chi1, chi2; chi)
  Character chi1, chi2, chi;
};
using StandardModule = std::variant<KlingenInduced, SiegelInduced, BorelInduced>;

// Unique irreducible submodule(s): two entries only for I_Q(1, tau) with tau
// discrete series.
std::vector<GSp4Rep> classify_standard_module(const StandardModule& data);
// Submodule-arrangement standard module whose classification contains pi.
std::optional<StandardModule> standard_module_of(const GSp4Rep& pi);

}  // namespace thetacorr
