#include "thetacorr/format.hpp"

#include <initializer_list>

namespace thetacorr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string call(const std::string& head, std::initializer_list<std::string> args, const char* sep = ", ") {
  std::string out = head + "(";
  bool first = true;
  for (const auto& a : args) {
    if (!first) out += sep;
    out += a;
    first = false;
  }
  return out + ")";
}

}  // namespace

std::string format(const GL2Rep& rho) {
  return std::visit(overloaded{
                        [](const gl2::Supercuspidal& r) {
                          if (is_trivial(r.twist)) return call("sc", {r.token.name()});
                          return call("sc", {r.token.name(), format(r.twist)});
                        },
                        [](const gl2::SteinbergTwist& r) { return call("st", {format(r.chi)}); },
                        [](const gl2::PrincipalSeriesIrr& r) { return call("ps", {format(r.chi1), format(r.chi2)}); },
                        [](const gl2::LanglandsQ& r) { return call("J", {format(r.chi_prime), format(r.chi)}); },
                    },
                    rho);
}

std::string format(const DRep& d) {
  return std::visit(overloaded{
                        [](const drep::JLofSC& r) {
                          if (is_trivial(r.twist)) return call("D", {r.token.name()});
                          return call("D", {r.token.name(), format(r.twist)});
                        },
                        [](const drep::OneDim& r) { return call("D1", {format(r.chi)}); },
                    },
                    d);
}

std::string format(const GSO22Rep& s) { return "(" + format(s.first) + ", " + format(s.second) + ")"; }
std::string format(const GSO40Rep& s) { return "(" + format(s.first) + ", " + format(s.second) + ")"; }

std::string format(const GL4Rep& pi) {
  return std::visit(
      overloaded{
          [](const gl4::Supercuspidal& r) { return call("SC_GL4", {r.name}); },
          [](const gl4::InducedP& r) { return call("I_P", {format(r.tau1), format(r.tau2)}); },
          [](const gl4::StOfTau& r) { return call("St", {format(r.tau)}); },
          [](const gl4::SpOfTau& r) { return call("Sp", {format(r.tau)}); },
          [](const gl4::TwSt& r) { return call("St_PGL4", {format(r.chi)}); },
          [](const gl4::JQ& r) { return call("J_Q", {format(r.chi1), format(r.tau), format(r.chi2)}); },
          [](const gl4::JP& r) { return call("J_P", {format(r.tau1), format(r.tau2)}); },
          [](const gl4::JB0& r) {
            return call("J_B0", {format(r.chis[0]), format(r.chis[1]), format(r.chis[2]), format(r.chis[3])});
          },
      },
      pi);
}

std::string format(const GSO33Rep& s) { return format(s.gl4) + " ⊠ " + format(s.mu); }

std::string format(const GSp4Rep& pi) {
  return std::visit(
      overloaded{
          [](const gsp4::SC& r) {
            if (std::holds_alternative<gsp4::NonLiftGeneric>(r.origin)) return call("SC", {r.name, format(r.central)});
            return r.name;
          },
          [](const gsp4::StKlingen& r) { return call("St", {format(r.chi), format(r.tau)}); },
          [](const gsp4::SpKlingen& r) { return call("Sp", {format(r.chi), format(r.tau)}); },
          [](const gsp4::StSiegel& r) { return call("St", {format(r.tau), format(r.mu)}); },
          [](const gsp4::SpSiegel& r) { return call("Sp", {format(r.tau), format(r.mu)}); },
          [](const gsp4::TwSt& r) { return call("St_PGSp4", {format(r.chi)}); },
          [](const gsp4::PiGen& r) { return call("pi_gen", {format(r.tau)}); },
          [](const gsp4::PiNg& r) { return call("pi_ng", {format(r.tau)}); },
          [](const gsp4::JQZ& r) { return call("JQ", {format(r.chi), format(r.tau)}); },
          [](const gsp4::JPY& r) { return call("JP", {format(r.tau), format(r.chi)}); },
          [](const gsp4::JB& r) { return "JB(" + format(r.chi1) + ", " + format(r.chi2) + "; " + format(r.chi) + ")"; },
      },
      pi);
}

}  // namespace thetacorr
