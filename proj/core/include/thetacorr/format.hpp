#pragma once

#include <string>

#include "thetacorr/repdata.hpp"

namespace thetacorr {

// Text forms match the declaration language so that formatted values reparse.
std::string format(const GL2Rep& rho);
std::string format(const DRep& d);
std::string format(const GSO22Rep& s);
std::string format(const GSO40Rep& s);
std::string format(const GL4Rep& pi);
std::string format(const GSO33Rep& s);
std::string format(const GSp4Rep& pi);

}  // namespace thetacorr
