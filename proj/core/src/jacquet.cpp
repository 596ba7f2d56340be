#include "thetacorr/jacquet.hpp"

#include <algorithm>

namespace thetacorr {

namespace {

Rational q(long long a, long long b = 1) { return Rational(a, b); }

std::string weil(int m, int n) {
  if (m == 0 || n == 0) return "S(F^x)";
  return "Omega(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

void validate(const FiltrationSpec& s, int r) {
  if (s.m <= 0 || s.m % 2 != 0) throw DomainError("m must be even and positive");
  if (s.n <= 0) throw DomainError("n must be positive");
  if (r < 0 || 2 * r > s.m) throw DomainError("Witt index out of range");
  if (s.side == Side::Orthogonal && (s.parabolic < 0 || s.parabolic > r))
    throw DomainError("t must satisfy 0 <= t <= Witt index");
  if (s.side == Side::Symplectic && (s.parabolic < 0 || s.parabolic > s.n))
    throw DomainError("k must satisfy 0 <= k <= n");
}

FiltrationQuotient orthogonal(int m, int n, int t, int k) {
  FiltrationQuotient out;
  out.index = k;
  out.inducing_levi = "P(X_" + std::to_string(t - k) + ",X_" + std::to_string(t) + ") x Q(Y_" + std::to_string(k) + ")";
  out.schwartz_factor = "S(Isom(X'_" + std::to_string(k) + ",Y_" + std::to_string(k) + "))";
  out.character_factor = k > 0 ? "chi_V(det a2)" : "";
  out.inner_m = m - 2 * t;
  out.inner_n = n - k;
  out.e0 = -q(m - 2 * t, 4) * k - q(t * n, 2) + q(m * t, 4) - q(t * (t + 1), 4);
  if (k < t) out.e1 = q(n) - q(m, 2) + q(t, 2) - q(k - 1, 2);
  out.f0 = -q(k * n, 2) + q(k * (k - 1), 4);
  out.e2 = q(n) - q(k - 1, 2);
  out.f0_raw = q(k * n, 2) - q(k * (k - 1), 4);
  out.f1 = -out.e2;
  return out;
}

FiltrationQuotient symplectic(int m, int n, int k, int t) {
  FiltrationQuotient out;
  out.index = t;
  out.inducing_levi = "P(X_" + std::to_string(t) + ") x Q(Y_" + std::to_string(k - t) + ",Y_" + std::to_string(k) + ")";
  out.schwartz_factor = "S(Isom(Y'_" + std::to_string(t) + ",X_" + std::to_string(t) + "))";
  std::string b1 = k - t > 0 ? "chi_V(det b1)" : "";
  std::string b2 = t > 0 ? "chi_V(det b2)" : "";
  out.character_factor = b1 + (!b1.empty() && !b2.empty() ? " " : "") + b2;
  out.inner_m = m - 2 * t;
  out.inner_n = n - k;
  out.e0 = -q(t * (n - k), 2) - q(m * k, 4) + q(k * n, 2) - q(k * (k - 1), 4);
  if (t < k) out.e1 = q(m, 2) - q(n) + q(k, 2) - q(t + 1, 2);
  out.f0 = -q(m * t, 4) + q(t * (t + 1), 4);
  out.e2 = q(m, 2) - q(t + 1, 2);
  out.f0_raw = q(m * t, 4) - q(t * (t + 1), 4);
  out.f1 = -out.e2;
  return out;
}

}  // namespace

std::vector<FiltrationQuotient> filtration(const FiltrationSpec& spec) {
  int r = spec.witt_index < 0 ? spec.m / 2 : spec.witt_index;
  validate(spec, r);
  std::vector<FiltrationQuotient> out;
  if (spec.side == Side::Orthogonal) {
    for (int k = 0; k <= std::min(spec.parabolic, spec.n); ++k) out.push_back(orthogonal(spec.m, spec.n, spec.parabolic, k));
  } else {
    for (int t = 0; t <= std::min(spec.parabolic, r); ++t) out.push_back(symplectic(spec.m, spec.n, spec.parabolic, t));
  }
  for (auto& fq : out) {
    fq.inner_weil = weil(fq.inner_m, fq.inner_n);
    if (spec.isometry) {
      fq.e0.reset();
      fq.f0.reset();
      fq.f0_raw.reset();
    } else {
      fq.reduced_e0 = *fq.e0 - *fq.f0;
    }
  }
  return out;
}

std::string format(const FiltrationQuotient& fq) {
  auto opt = [](const std::optional<Rational>& v) { return v ? format_rational(*v) : std::string("n/a"); };
  return "J^" + std::to_string(fq.index) + ": Ind[" + fq.inducing_levi + "](" + fq.schwartz_factor + " (x) " +
         fq.inner_weil + ")" + (fq.character_factor.empty() ? "" : " [" + fq.character_factor + "]") +
         " e0=" + opt(fq.e0) + " e1=" + opt(fq.e1) + " f0=" + opt(fq.f0) + " e2=" + format_rational(fq.e2) +
         " f1=" + format_rational(fq.f1) + " f0'=" + opt(fq.f0_raw) + " reduced=(" + opt(fq.reduced_e0) + ", 0)";
}

std::string to_string(Specialization s) {
  switch (s) {
    case Specialization::P9_1: return "P9.1";
    case Specialization::P10_1: return "P10.1";
    case Specialization::P10_2: return "P10.2";
    case Specialization::P10_3: return "P10.3";
  }
  return "?";
}

FiltrationSpec specialization_spec(Specialization s) {
  switch (s) {
    case Specialization::P9_1: return {4, 2, -1, Side::Orthogonal, 2, false};
    case Specialization::P10_1: return {6, 2, -1, Side::Orthogonal, 1, false};
    case Specialization::P10_2: return {6, 2, -1, Side::Symplectic, 1, false};
    case Specialization::P10_3: return {6, 2, -1, Side::Symplectic, 2, false};
  }
  return {};
}

namespace {

// Expected data of the four explicit filtrations, top quotient first.
struct Expected {
  Rational e0;
  std::optional<Rational> e1;
  Rational f0;
  int inner_m, inner_n;
  int isom_rank;  // rank of the Isom(.,.) Schwartz factor
};

std::vector<Expected> expected_for(Specialization s) {
  using R = Rational;
  switch (s) {
    case Specialization::P9_1:  // C, B, A
      return {{R(-3, 2), R(3, 2), R(0), 0, 2, 0}, {R(-3, 2), R(1), R(-1), 0, 1, 1}, {R(-3, 2), std::nullopt, R(-3, 2), 0, 0, 2}};
    case Specialization::P10_1:  // B, A
      return {{R(0), R(0), R(0), 4, 2, 0}, {R(-1), std::nullopt, R(-1), 4, 1, 1}};
    case Specialization::P10_2:  // B', A'
      return {{R(-1, 2), R(1), R(0), 6, 1, 0}, {R(-1), std::nullopt, R(-1), 4, 1, 1}};
    case Specialization::P10_3:  // A'', B'', C''
      return {{R(-3, 2), R(3, 2), R(0), 6, 0, 0}, {R(-3, 2), R(1), R(-1), 4, 0, 1}, {R(-3, 2), std::nullopt, R(-3, 2), 2, 0, 2}};
  }
  return {};
}

}  // namespace

bool specialize_check(Specialization s) {
  auto got = filtration(specialization_spec(s));
  auto want = expected_for(s);
  if (got.size() != want.size()) return false;
  for (size_t i = 0; i < got.size(); ++i) {
    const auto& g = got[i];
    const auto& w = want[i];
    std::string isom = std::to_string(w.isom_rank);
    bool isom_ok = g.schwartz_factor.find("_" + isom + ",") != std::string::npos &&
                   g.schwartz_factor.find("_" + isom + "))") != std::string::npos;
    if (*g.e0 != w.e0 || g.e1 != w.e1 || *g.f0 != w.f0 || g.inner_m != w.inner_m || g.inner_n != w.inner_n || !isom_ok)
      return false;
  }
  // The bottom piece has equal indices, so its reduced exponent vanishes.
  return *got.back().reduced_e0 == 0;
}

bool absorption_identity(int m, int n, int t, int k) {
  bool ok = true;
  if (k <= std::min(t, n) && 2 * t <= m) {
    FiltrationQuotient o = filtration({m, n, -1, Side::Orthogonal, t, false})[k];
    ok = ok && *o.f0_raw - Rational(k) * o.e2 == *o.f0;
  }
  if (t <= std::min(k, m / 2) && k <= n) {
    FiltrationQuotient sy = filtration({m, n, -1, Side::Symplectic, k, false})[t];
    ok = ok && *sy.f0_raw - Rational(t) * sy.e2 == *sy.f0;
  }
  return ok;
}

}  // namespace thetacorr
