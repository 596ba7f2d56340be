#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetacorr/charlattice.hpp"

namespace thetacorr {

enum class Side { Orthogonal, Symplectic };

// Jacquet module of the induced Weil representation for (V_m, W_n) along
// the parabolic P(X_t) of GO(V_m) (Orthogonal, parabolic = t) or Q(Y_k) of
// GSp(W_n) (Symplectic, parabolic = k). witt_index < 0 means m/2.
struct FiltrationSpec {
  int m = 0;
  int n = 0;
  int witt_index = -1;
  Side side = Side::Orthogonal;
  int parabolic = 0;
  bool isometry = false;
};

struct FiltrationQuotient {
  int index = 0;  // k on the orthogonal side, t on the symplectic side
  std::string inducing_levi;
  std::string schwartz_factor;
  std::string character_factor;
  int inner_m = 0, inner_n = 0;
  std::string inner_weil;  // "S(F^x)" when inner_m or inner_n is 0
  std::optional<Rational> e0, e1, f0;  // e1 only below the top index; e0/f0 dropped for isometries
  Rational e2, f1;
  std::optional<Rational> f0_raw;
  std::optional<Rational> reduced_e0;  // e0 - f0, with f0 replaced by 0
};

std::vector<FiltrationQuotient> filtration(const FiltrationSpec& spec);
std::string format(const FiltrationQuotient& q);

enum class Specialization { P9_1, P10_1, P10_2, P10_3 };
std::string to_string(Specialization s);
FiltrationSpec specialization_spec(Specialization s);
bool specialize_check(Specialization s);

// f0' - index * e2 == f0 on each side where the indices are admissible.
bool absorption_identity(int m, int n, int t, int k);

}  // namespace thetacorr
