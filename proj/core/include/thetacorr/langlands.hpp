#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thetacorr/repdata.hpp"

namespace thetacorr {

enum class CoreKind { One, Irr2, Ad3, Irr4 };

// Irr2/Ad3 carry one token. Irr4 is either the tensor product of two
// distinct tokens (sorted) or opaque (no tokens, a label). Irr4 also carries
// its pairing character p with core^dual = core (x) p^-1.
struct Core {
  CoreKind kind = CoreKind::One;
  std::vector<SCToken> tokens;
  std::string label;
  Character pairing;
  auto operator<=>(const Core&) const = default;
};

int core_dimension(const Core& c);
std::string format(const Core& c);

struct LPiece {
  Core core;
  Character twist;
  int r = 1;  // the S_r factor
  auto operator<=>(const LPiece&) const = default;
};

// Twist reduced modulo the self-twists of the core where applicable.
LPiece make_piece(Core core, const Character& twist, int r);
int dimension(const LPiece& p);
Character determinant(const LPiece& p);
LPiece dual(const LPiece& p);
LPiece twist(const LPiece& p, const Character& chi);
std::string format(const LPiece& p);

struct LParameter {
  std::vector<LPiece> pieces;  // sorted multiset
  Character sim;
};

LParameter make_parameter(std::vector<LPiece> pieces, const Character& sim);
int dimension(const LParameter& phi);
Character determinant(const LParameter& phi);
std::string format(const LParameter& phi);

// 2-dimensional; sim is the determinant.
LParameter lparam_gl2(const GL2Rep& rho);
LParameter lparam_gsp4(const GSp4Rep& pi);
// Parameter of Pi with sim = mu.
LParameter lparam_gso33(const GSO33Rep& s);

// Sym^2(phi) (x) sim^-1; sim of the result is trivial.
LParameter adjoint(const LParameter& phi);
bool has_pole_at_one(const LParameter& ad);
// (packet has a generic member, adjoint L-factor holomorphic at 1).
std::pair<bool, bool> generic_iff_holomorphic(const GSp4Rep& pi);

// Multiset of (core, twist) with every S_r expanded into r shifted copies.
std::vector<LPiece> semisimplify(const std::vector<LPiece>& pieces);

bool symplectic_closure(const LParameter& phi);  // pieces = dual(pieces) (x) sim, det = sim^2
bool self_dual(const LParameter& phi);           // pieces = dual(pieces)
// Contains an opaque Irr4 core; adjoint() refuses such parameters.
bool opaque_parameter(const LParameter& phi);
// Multiplicity free and every piece fixed by dual (x) sim.
bool is_discrete_series_parameter(const LParameter& phi);

struct SatakeClass {
  Character t1, t2, v;
};
struct IotaImage {
  std::vector<Character> entries;  // sorted
  Character sim;
};
IotaImage iota(const SatakeClass& s);
bool check_unramified_transfer(const Character& chi1, const Character& chi2, const Character& chi);
bool check_parameter_compat(const GSO22Rep& sigma);

}  // namespace thetacorr
