#pragma once

#include <optional>
#include <string>

#include "thetacorr/repdata.hpp"

namespace thetacorr {

// Lift into GSO(3,3); an empty value is the zero lift.
struct ThetaResult {
  std::optional<GSO33Rep> value;
  std::string provenance;  // e.g. "Table1.NDS(e)"
};

struct GSp4Lift {
  GSp4Rep value;
  std::string provenance;
};

GSp4Lift theta_40_lift(const GSO40Rep& sigma);
GSp4Lift theta_22_lift(const GSO22Rep& sigma);
GSp4Rep theta_40_to_gsp4(const GSO40Rep& sigma);
GSp4Rep theta_22_to_gsp4(const GSO22Rep& sigma);
ThetaResult theta_gsp4_to_33(const GSp4Rep& pi);

// Swap-orbit representatives; empty when pi is outside the image.
std::optional<GSO40Rep> theta_40_preimage(const GSp4Rep& pi);
std::optional<GSO22Rep> theta_22_preimage(const GSp4Rep& pi);

enum class Tower { GSO40, GSO33 };
std::string to_string(Tower t);
Tower dichotomy(const GSp4Rep& pi);
// Exactly one of: a GSO(4,0) preimage exists, the GSO(3,3) lift is nonzero.
bool dichotomy_consistent(const GSp4Rep& pi);

// omega of the lift against omega_pi (chi_V^2 is trivial here).
bool central_character_law(const GSp4Rep& pi, const GSO33Rep& lift);
bool central_character_law(const GSO22Rep& sigma, const GSp4Rep& lift);
bool central_character_law(const GSO40Rep& sigma, const GSp4Rep& lift);

}  // namespace thetacorr
