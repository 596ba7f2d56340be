#include <gtest/gtest.h>

#include <json.hpp>

#include "gen.hpp"
#include "thetacorr/format.hpp"
#include "thetacorr/session.hpp"
#include "thetacorr/tables.hpp"

using namespace thetacorr;
using nlohmann::json;

TEST(Session, QuadraticSquareIsTrivial) {
  Session s;
  s.run("char chi0 order 2");
  EXPECT_EQ(format(s.evaluate("chi0*chi0")), "1");
}

TEST(Session, SelfTwistClosure) {
  Session s;
  s.run("char chi0 order 2\nchar chi1 order 2\nsc tau { omega = 1, selftwists = {chi0, chi1} }");
  auto t = s.token("tau");
  ASSERT_TRUE(t);
  EXPECT_EQ(t->self_twists().size(), 4u);
  EXPECT_TRUE(t->fixes(std::get<Character>(s.evaluate("chi0*chi1"))));
}

TEST(Session, LiftTwistedSteinberg) {
  Session s;
  s.run("char chi");
  CommandResult r = s.query("lift gsp4 St_PGSp4(chi)");
  EXPECT_EQ(r.output, "St_PGL4(chi) ⊠ chi^2");
  EXPECT_EQ(r.provenance, "Table1.DS(c)");
  EXPECT_TRUE(r.checks_pass());
}

TEST(Session, RepDeclarationAndDichotomy) {
  Session s;
  s.run(tables_prelude());
  s.run("rep pi = St(eta, sc(tau0))");
  CommandResult r = s.query("dichotomy pi");
  EXPECT_EQ(json::parse(r.output_json), json({{"tower", "GSO(3,3)"}}));
  json doc = json::parse(r.to_json());
  for (const char* k : {"input", "operation", "output", "provenance", "invariant_checks"})
    EXPECT_TRUE(doc.contains(k)) << k;
}

TEST(Session, LParamJson) {
  Session s;
  s.run("char chi");
  json out = json::parse(s.query("lparam St_PGSp4(chi)").output_json);
  EXPECT_EQ(out["pieces"], json::array({{{"core", "1"}, {"twist", "chi"}, {"r", 4}}}));
  EXPECT_EQ(out["sim"], "chi^2");
}

TEST(Session, JacquetQuery) {
  Session s;
  CommandResult r = s.query("jacquet m=6 n=2 k=1");
  json out = json::parse(r.output_json);
  ASSERT_TRUE(out.contains("quotients"));
  ASSERT_EQ(out["quotients"].size(), 2u);
  EXPECT_EQ(out["quotients"][0]["e0"], "-1/2");
  EXPECT_EQ(out["quotients"][1]["e0"], "-1");
  EXPECT_TRUE(r.checks_pass());
}

TEST(Session, ParseErrorsCarryLocation) {
  Session s;
  s.run("char chi");
  try {
    s.run("char psi\nrep p = st(chi * )");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 1);
  }
}

TEST(Session, ShadowingRejected) {
  Session s;
  s.run("char chi0 order 2");
  EXPECT_THROW(s.run("char chi0"), Error);
  EXPECT_THROW(s.run("sc chi0 { omega = 1 }"), Error);
  EXPECT_THROW(s.run("rep st = st(chi0)"), Error);
}

TEST(Session, UnknownSymbol) {
  Session s;
  EXPECT_THROW(s.evaluate("st(zeta)"), ParseError);
}

TEST(Session, CentralCharacterViolationNamed) {
  Session s;
  s.run("char a\nchar b");
  try {
    s.evaluate("(st(a), st(b))");
    FAIL() << "expected a validation error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "validation");
    EXPECT_NE(std::string(e.what()).find("central"), std::string::npos);
  }
}

TEST(Session, TablesAreDeterministic) {
  auto a = tables_to_json(emit_tables());
  auto b = tables_to_json(emit_tables());
  EXPECT_EQ(a, b);
  EXPECT_EQ(emit_tables().size(), 19u);
}

TEST(Session, PropertyFormatReparses) {
  Session s;
  s.run(tables_prelude());
  const char* samples[] = {
      "St(eta, sc(tau0))", "St(sc(tau3), mu)", "St_PGSp4(chi)", "JQ(chi*nu^(1/3), sc(tau))",
      "pi_gen(sc(tau))", "pi_ng(st(chi))", "JP(sc(tau, nu^(1/3)), chi)", "JB(chi1*nu^(2/3), chi2*nu^(1/3), chi)",
      "(sc(tau4), st(chi))", "(D(tau1), D(tau2))", "theta22(sc(tau1), sc(tau2))", "theta40(D(tau1), D(tau2))",
      "one(chi)", "ps(a*nu^(1/2), b)"};
  for (const char* e : samples) {
    Value v = s.evaluate(e);
    std::string f = format(v);
    Value back = s.evaluate(f);
    ASSERT_EQ(format(back), f) << e;
    ASSERT_TRUE(v == back) << e;
  }
}

TEST(Session, PropertyRandomCharactersReparse) {
  Session s;
  s.run("char o2a order 2\nchar o2b order 2\nchar o3 order 3\nchar fa\nchar fb");
  testgen::Gen g(41);
  for (int i = 0; i < 300; ++i) {
    Character c = g.character(s.context());
    std::string text = format(c);
    ASSERT_EQ(format(s.evaluate(text)), text);
    // Steinberg and principal series built from the same text reparse too.
    std::string st = "st(" + text + ")";
    ASSERT_EQ(format(s.evaluate(format(s.evaluate(st)))), format(s.evaluate(st)));
  }
}
