#include <gtest/gtest.h>

#include "thetacorr/format.hpp"
#include "thetacorr/session.hpp"
#include "thetacorr/tables.hpp"
#include "thetacorr/theta.hpp"

using namespace thetacorr;

namespace {

struct Theta : ::testing::Test {
  Session s;
  Theta() { s.run(tables_prelude()); }

  GSp4Rep pi(const char* e) { return std::get<GSp4Rep>(s.evaluate(e)); }
  GSO22Rep g22(const char* e) { return std::get<GSO22Rep>(s.evaluate(e)); }
  GSO40Rep g40(const char* e) { return std::get<GSO40Rep>(s.evaluate(e)); }
  GL2Rep gl2(const char* e) { return std::get<GL2Rep>(s.evaluate(e)); }
  Character ch(const char* e) { return std::get<Character>(s.evaluate(e)); }
};

}  // namespace

TEST_F(Theta, EqualQuaternionPairGivesNonGenericSummand) {
  EXPECT_TRUE(gsp4_equal(theta_40_to_gsp4(g40("(D(tau), D(tau))")), pi("pi_ng(sc(tau))")));
}

TEST_F(Theta, DistinctQuaternionPairGivesNonGenericSupercuspidal) {
  GSp4Rep out = theta_40_to_gsp4(g40("(D(tau1), D(tau2))"));
  auto* sc = std::get_if<gsp4::SC>(&out);
  ASSERT_NE(sc, nullptr);
  EXPECT_TRUE(std::holds_alternative<gsp4::Lift40>(sc->origin));
  EXPECT_FALSE(gsp4_is_generic(out));
}

TEST_F(Theta, OneDimensionalQuaternionPair) {
  EXPECT_TRUE(gsp4_equal(theta_40_to_gsp4(g40("(D1(chi), D1(chi))")), pi("pi_ng(st(chi))")));
}

TEST_F(Theta, SteinbergPair) {
  // chi1 = chi*eta, chi2 = chi share the central character chi^2.
  GSp4Rep out = theta_22_to_gsp4(g22("(st(chi*eta), st(chi))"));
  GSp4Rep want = gsp4::StSiegel{gl2_steinberg(ch("eta")), ch("chi")};
  EXPECT_TRUE(gsp4_equal(out, want));
  EXPECT_TRUE(gsp4_equal(out, gsp4::StSiegel{gl2_steinberg(ch("eta")), ch("chi*eta")}));
}

TEST_F(Theta, EqualDiscreteSeriesPairGivesGenericSummand) {
  EXPECT_TRUE(gsp4_equal(theta_22_to_gsp4(g22("(sc(tau), sc(tau))")), pi("pi_gen(sc(tau))")));
}

TEST_F(Theta, PrincipalSeriesPairGivesBorelQuotient) {
  GSp4Rep out = theta_22_to_gsp4(g22("(ps(a*nu^(1/2), b), ps(c*nu^(1/3), a*b/c*nu^(1/6)))"));
  EXPECT_TRUE(gsp4_equal(out, gsp4_jb(ch("c/b*nu^(1/3)"), ch("a/c*nu^(1/6)"), ch("b"))));
}

TEST_F(Theta, CentralCharacterMismatchRejected) {
  EXPECT_THROW(s.evaluate("(st(chi1), st(chi2*nu))"), Error);
}

TEST_F(Theta, TwistedSteinbergLift) {
  ThetaResult r = theta_gsp4_to_33(pi("St_PGSp4(chi)"));
  ASSERT_TRUE(r.value);
  EXPECT_EQ(r.value->gl4, GL4Rep(gl4::TwSt{ch("chi")}));
  EXPECT_EQ(r.value->mu, ch("chi^2"));
  EXPECT_EQ(r.provenance, "Table1.DS(c)");
}

TEST_F(Theta, NonGenericTemperedLiftsToZero) {
  EXPECT_FALSE(theta_gsp4_to_33(pi("pi_ng(sc(tau))")).value.has_value());
  EXPECT_FALSE(theta_gsp4_to_33(theta_40_to_gsp4(g40("(D(tau1), D(tau2))"))).value.has_value());
}

TEST_F(Theta, SiegelSteinbergLift) {
  ThetaResult r = theta_gsp4_to_33(pi("St(sc(tau3), mu)"));
  ASSERT_TRUE(r.value);
  GL4Rep want = canonicalize_gl4(gl4::InducedP{gl2("sc(tau3, mu)"), gl2("st(mu)")});
  EXPECT_EQ(r.value->gl4, want);
  EXPECT_EQ(r.value->mu, ch("mu^2"));
}

TEST_F(Theta, Preimages) {
  auto p40 = theta_40_preimage(pi("pi_ng(st(chi))"));
  ASSERT_TRUE(p40);
  EXPECT_TRUE(same_orbit(*p40, g40("(D1(chi), D1(chi))")));
  EXPECT_FALSE(theta_22_preimage(pi("St(eta, sc(tau0))")).has_value());
  GSp4Rep jpy = pi("JP(sc(tau, chi^-1*nu^(1/3)), chi)");
  auto p22 = theta_22_preimage(jpy);
  ASSERT_TRUE(p22);
  EXPECT_TRUE(gsp4_equal(theta_22_to_gsp4(*p22), jpy));
}

TEST_F(Theta, Dichotomy) {
  EXPECT_EQ(dichotomy(pi("pi_ng(sc(tau))")), Tower::GSO40);
  EXPECT_EQ(dichotomy(pi("St(eta, sc(tau0))")), Tower::GSO33);
  EXPECT_EQ(dichotomy(theta_40_to_gsp4(g40("(D(tau1), D(tau2))"))), Tower::GSO40);
  for (const char* e : {"pi_ng(sc(tau))", "St(eta, sc(tau0))", "pi_gen(sc(tau))", "St_PGSp4(chi)"})
    EXPECT_TRUE(dichotomy_consistent(pi(e))) << e;
}

TEST_F(Theta, CentralCharacterLawOnTableOne) {
  for (const char* e : {"St_PGSp4(chi)", "St(sc(tau3), mu)", "St(eta, sc(tau0))", "JQ(chi*nu^(1/3), sc(tau))",
                        "pi_gen(sc(tau))", "JP(sc(tau, nu^(1/3)), chi)", "JB(chi1*nu^(2/3), chi2*nu^(1/3), chi)"}) {
    GSp4Rep p = pi(e);
    ThetaResult r = theta_gsp4_to_33(p);
    ASSERT_TRUE(r.value) << e;
    EXPECT_EQ(r.value->mu, gsp4_central_character(p)) << e;
    EXPECT_TRUE(central_character_law(p, *r.value)) << e;
  }
}

TEST_F(Theta, SwapInvarianceOfLifts) {
  for (const char* e : {"(sc(tau1), sc(tau2))", "(sc(tau4), st(chi))", "(st(chi), st(chi*eta))",
                        "(sc(tau), ps(chi*nu^(1/3), w/chi*nu^(-1/3)))"}) {
    GSO22Rep x = g22(e);
    EXPECT_TRUE(gsp4_equal(theta_22_to_gsp4(x), theta_22_to_gsp4(swapped(x)))) << e;
  }
  GSO40Rep y = g40("(D(tau1), D(tau2))");
  EXPECT_TRUE(gsp4_equal(theta_40_to_gsp4(y), theta_40_to_gsp4(swapped(y))));
}
