#pragma once

#include <random>
#include <string>
#include <vector>

#include "thetacorr/charlattice.hpp"

namespace testgen {

// Context with a fixed stock of symbols: o2a, o2b (order 2), o3 (order 3),
// fa, fb (infinite order).
inline std::shared_ptr<thetacorr::CharContext> stock_context() {
  auto ctx = thetacorr::CharContext::create();
  ctx->declare("o2a", 2);
  ctx->declare("o2b", 2);
  ctx->declare("o3", 3);
  ctx->declare("fa");
  ctx->declare("fb");
  return ctx;
}

inline const std::vector<std::string>& stock_symbols() {
  static const std::vector<std::string> names{"o2a", "o2b", "o3", "fa", "fb"};
  return names;
}

struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool coin() { return uniform(0, 1) == 1; }

  thetacorr::Rational exponent() {
    static const int dens[] = {1, 2, 3, 4};
    return thetacorr::Rational(uniform(-8, 8), dens[uniform(0, 3)]);
  }

  thetacorr::Character character(const thetacorr::ContextPtr& ctx, bool with_norm = true) {
    thetacorr::Character::Exponents e;
    for (const auto& s : stock_symbols())
      if (coin()) e[s] = uniform(-3, 3);
    return thetacorr::Character(ctx, e, with_norm ? exponent() : thetacorr::Rational(0));
  }
};

}  // namespace testgen
