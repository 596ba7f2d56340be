#include "thetacorr/corpus.hpp"

#include <random>

#include "thetacorr/theta.hpp"

namespace thetacorr {

namespace {

class Generator {
 public:
  Generator(std::uint32_t seed, std::shared_ptr<CharContext> ctx) : rng_(seed), ctx_(std::move(ctx)) {
    std::uniform_int_distribution<int> kind(0, 2);
    const long long orders[] = {2, 3, 0};
    for (int i = 0; i < 5; ++i) {
      long long o = orders[kind(rng_)];
      std::string name = "x" + std::to_string(i);
      ctx_->declare(name, o ? std::optional<long long>(o) : std::nullopt);
      unitary_.push_back(name);
    }
    ctx_->declare("q", 2);
    quadratic_.push_back("q");
    ctx_->declare("r", 2);
    quadratic_.push_back("r");
    for (const auto& n : unitary_)
      if (ctx_->find(n)->order == 2) quadratic_.push_back(n);
    ctx_->declare("u0", std::nullopt, true);
    ctx_->declare("u1", 2, true);
    ctx_->declare("u2", 3, true);
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Character nu(Rational s) const { return Character::nu(s, ctx_); }
  Character one() const { return Character::trivial(ctx_); }

  Rational exponent(int max_abs = 2) {
    const int dens[] = {1, 2, 4};
    int d = dens[uniform(0, 2)];
    return Rational(uniform(-max_abs * d, max_abs * d), d);
  }

  Character unitary() {
    Character c = one();
    for (const auto& n : unitary_)
      if (uniform(0, 2) == 0) c = c * Character::symbol(ctx_, n, uniform(-2, 2));
    return c;
  }

  Character any() { return unitary() * nu(exponent()); }

  Character quadratic_nontrivial() {
    for (;;) {
      Character c = one();
      for (const auto& n : quadratic_)
        if (coin()) c = c * Character::symbol(ctx_, n);
      if (!is_trivial(c)) return c;
    }
  }

  Character unramified_char() {
    Character c = nu(exponent());
    if (coin()) c = c * Character::symbol(ctx_, "u0", uniform(-2, 2));
    if (coin()) c = c * Character::symbol(ctx_, "u1");
    if (coin()) c = c * Character::symbol(ctx_, "u2", uniform(1, 2));
    return c;
  }

  SCToken token(const Character& central, bool with_twists = true) {
    std::vector<Character> gens;
    if (with_twists && uniform(0, 3) == 0) gens.push_back(quadratic_nontrivial());
    return make_sc_token("s" + std::to_string(next_token_++), central, gens);
  }

  // Supercuspidal with prescribed central character.
  GL2Rep sc_with_central(const Character& omega) {
    Character t = any();
    return gl2_supercuspidal(token(omega / pow(t, 2)), t);
  }
  GL2Rep sc() { return sc_with_central(any()); }

  GL2Rep ds() { return coin() ? sc() : gl2_steinberg(any()); }

  Character maybe_quadratic() { return coin() ? one() : quadratic_nontrivial(); }

  GL2Rep nds() {
    if (uniform(0, 4) == 0) return gl2_one_dim(any());
    return pair_rep(any(), any());
  }

  // Irreducible representation with L-parameter a + b, a and b not Steinberg.
  GL2Rep pair_rep(const Character& a, const Character& b) {
    Character big = a, small = b;
    if (abs_exponent(a) < abs_exponent(b)) std::swap(big, small);
    return gl2_nontempered_from_pair(big, small);
  }

  std::mt19937& rng() { return rng_; }
  const std::shared_ptr<CharContext>& ctx() const { return ctx_; }

 private:
  std::mt19937 rng_;
  std::shared_ptr<CharContext> ctx_;
  std::vector<std::string> unitary_;
  std::vector<std::string> quadratic_;
  int next_token_ = 0;
};

void add(Corpus& c, const GSp4Rep& raw, std::string note = "") {
  c.gsp4.push_back({canonicalize_gsp4(raw), gsp4_kind(raw), std::move(note)});
}

void gso22_cases(Generator& g, Corpus& c, int n) {
  for (int i = 0; i < n; ++i) {
    // (a) equal discrete series
    GL2Rep t = g.ds();
    c.gso22.push_back({make_gso22(t, t), 'a'});

    // (b) distinct supercuspidals
    Character w = g.any();
    GL2Rep s1 = g.sc_with_central(w);
    GL2Rep s2 = g.coin() ? g.sc_with_central(w) : gl2_twist(s1, g.quadratic_nontrivial());
    if (s1 != s2) c.gso22.push_back({make_gso22(s1, s2), 'b'});

    // (c) supercuspidal with a Steinberg twist
    Character chi = g.any();
    GL2Rep sc = g.sc_with_central(pow(chi, 2));
    c.gso22.push_back(g.coin() ? CorpusEntry22{make_gso22(sc, gl2_steinberg(chi)), 'c'}
                               : CorpusEntry22{make_gso22(gl2_steinberg(chi), sc), 'c'});

    // (d) two Steinberg twists
    Character chi1 = g.any();
    c.gso22.push_back({make_gso22(gl2_steinberg(chi1), gl2_steinberg(chi1 * g.quadratic_nontrivial())), 'd'});

    // (e) discrete series with a non-discrete-series partner
    bool steinberg = g.coin();
    GL2Rep d, e;
    if (g.uniform(0, 3) == 0) {
      Character y = g.any();
      e = gl2_one_dim(y);
      d = steinberg ? gl2_steinberg(y * g.maybe_quadratic()) : g.sc_with_central(pow(y, 2));
    } else {
      Character x = g.any();
      Character omega = steinberg ? pow(x, 2) : g.any();
      d = steinberg ? gl2_steinberg(x) : g.sc_with_central(omega);
      Character a = g.any();
      e = g.pair_rep(a, omega / a);
    }
    c.gso22.push_back(g.coin() ? CorpusEntry22{make_gso22(d, e), 'e'} : CorpusEntry22{make_gso22(e, d), 'e'});

    // (f) both non-discrete series
    GL2Rep f1, f2;
    if (g.uniform(0, 3) == 0) {
      Character root = g.any();
      Character z = g.unitary() * g.nu(g.exponent(1));
      f1 = g.coin() ? gl2_one_dim(root * g.maybe_quadratic()) : g.pair_rep(root * z, root / z);
      f2 = gl2_one_dim(root * g.maybe_quadratic());
    } else {
      f1 = g.nds();
      Character a2 = g.any();
      f2 = g.pair_rep(a2, gl2_central_character(f1) / a2);
    }
    c.gso22.push_back({make_gso22(f1, f2), 'f'});
  }
  // Boundary data on the GL2 reducibility lines.
  Character x = g.unitary();
  c.gso22.push_back({make_gso22(gl2_one_dim(x), gl2_one_dim(x)), 'f'});
  c.gso22.push_back({make_gso22(gl2_steinberg(x), gl2_one_dim(x)), 'e'});
  c.gso22.push_back({make_gso22(gl2_principal_series(x * g.nu(1), x * g.nu(-1)), gl2_steinberg(x * g.quadratic_nontrivial())), 'e'});
}

DRep d_with_central(Generator& g, const Character& root) {
  if (g.coin()) return d_one_dim(root * g.maybe_quadratic());
  Character t = g.any();
  return d_jl_of_sc(g.token(pow(root, 2) / pow(t, 2)), t);
}

void gso40_cases(Generator& g, Corpus& c, int n) {
  for (int i = 0; i < n; ++i) {
    Character root = g.any();
    DRep d1 = d_with_central(g, root);
    c.gso40.push_back(make_gso40(d1, d1));
    DRep d2 = d_with_central(g, root);
    if (d1 != d2) c.gso40.push_back(make_gso40(d1, d2));
    Character t = g.any();
    SCToken tok = g.token(g.any());
    c.gso40.push_back(make_gso40(d_jl_of_sc(tok, t), d_jl_of_sc(tok, t * g.quadratic_nontrivial())));
  }
}

void gsp4_cases(Generator& g, Corpus& c, int n) {
  for (int i = 0; i < n; ++i) {
    c.gsp4.push_back({gsp4_sc_nonlift("nl" + std::to_string(i), g.any()), "SC", ""});

    Character eps = g.quadratic_nontrivial();
    Character t = g.any();
    GL2Rep fixed = gl2_supercuspidal(make_sc_token("k" + std::to_string(i), g.any(), {eps}), t);
    add(c, gsp4::StKlingen{eps, fixed});
    add(c, gsp4::SpKlingen{eps, fixed});

    GL2Rep trivial_central = g.coin() ? g.sc_with_central(g.one()) : gl2_steinberg(g.quadratic_nontrivial());
    Character mu = g.any();
    add(c, gsp4::StSiegel{trivial_central, mu});
    add(c, gsp4::SpSiegel{trivial_central, mu});

    add(c, gsp4::TwSt{g.any()});
    GL2Rep d = g.ds();
    add(c, gsp4::PiGen{d});
    add(c, gsp4::PiNg{d});

    Character chi = g.any();
    if (is_trivial(chi)) chi = g.nu(1);
    add(c, gsp4::JQZ{chi, g.coin() ? g.ds() : g.nds()});
    add(c, gsp4::JPY{g.coin() ? g.ds() : g.nds(), g.any()});
    add(c, gsp4::JB{g.any(), g.any(), g.any()});
  }

  // Pole-forcing data at reducibility points.
  for (int i = 0; i < n; ++i) {
    Character mu = g.any();
    add(c, gsp4::JQZ{g.nu(-2), gl2_steinberg(mu)}, "pole");
    add(c, gsp4::JQZ{g.nu(2), gl2_steinberg(mu)}, "pole");

    Character eps = g.quadratic_nontrivial();
    GL2Rep fixed = gl2_supercuspidal(make_sc_token("p" + std::to_string(i), g.any(), {eps}), g.any());
    add(c, gsp4::JQZ{eps * g.nu(1), fixed}, "pole");
    add(c, gsp4::JQZ{eps * g.nu(-1), fixed}, "pole");

    // omega_tau = |.|^-1 on the Siegel side
    GL2Rep tau = gl2_supercuspidal(g.token(g.one(), false), g.nu(Rational(-1, 2)) * (g.coin() ? g.one() : eps));
    add(c, gsp4::JPY{tau, g.any()}, "pole");
    add(c, gsp4::JPY{gl2_steinberg(g.nu(Rational(-1, 2))), g.any()}, "pole");
    add(c, gsp4::JPY{gl2_steinberg(eps * g.nu(Rational(-1, 2))), g.any()}, "pole");
    add(c, gsp4::JPY{gl2_steinberg(g.nu(Rational(-3, 2))), g.any()}, "pole");

    // Each of the eight roots of the Borel data equal to |.|^-1.
    Character x = g.any(), chi = g.any();
    Character m1 = g.nu(-1), p1 = g.nu(1);
    add(c, gsp4::JB{m1, x, chi}, "pole");
    add(c, gsp4::JB{p1, x, chi}, "pole");
    add(c, gsp4::JB{x, m1, chi}, "pole");
    add(c, gsp4::JB{x, p1, chi}, "pole");
    add(c, gsp4::JB{x, m1 / x, chi}, "pole");
    add(c, gsp4::JB{x, p1 / x, chi}, "pole");
    add(c, gsp4::JB{x, x * p1, chi}, "pole");
    add(c, gsp4::JB{x, x * m1, chi}, "pole");
  }
}

void unramified_cases(Generator& g, Corpus& c, int n) {
  for (int i = 0; i < n; ++i) c.unramified.push_back({g.unramified_char(), g.unramified_char(), g.unramified_char(), ""});
  for (int i = 0; i < std::max(1, n / 4); ++i) {
    Character a = g.unramified_char(), chi = g.unramified_char();
    c.unramified.push_back({a, g.nu(-1), chi, "chi2=nu^-1"});
    c.unramified.push_back({g.nu(1), a, chi, "reducible"});
    c.unramified.push_back({a, g.nu(1) / a, chi, "reducible"});
    c.unramified.push_back({a, a * g.nu(-1), chi, "reducible"});
    c.unramified.push_back({g.nu(2), g.nu(1), chi, "reducible"});
    c.unramified.push_back({g.nu(-1), g.nu(-1), chi, "reducible"});
  }
}

}  // namespace

Corpus make_corpus(std::uint32_t seed, int scale) {
  Corpus c;
  c.context = CharContext::create();
  Generator g(seed, c.context);
  int n = 40 * std::max(1, scale);
  gso22_cases(g, c, n);
  gso40_cases(g, c, n / 2);
  gsp4_cases(g, c, n);
  unramified_cases(g, c, 5 * n);
  for (const auto& s : c.gso22) c.gsp4.push_back({theta_22_to_gsp4(s.value), "lift22", std::string(1, s.row)});
  for (const auto& s : c.gso40) c.gsp4.push_back({theta_40_to_gsp4(s), "lift40", ""});
  return c;
}

}  // namespace thetacorr
