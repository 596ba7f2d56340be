#include <gtest/gtest.h>

#include "thetacorr/jacquet.hpp"

using namespace thetacorr;

namespace {

using R = Rational;

// Orthogonal-side exponents written out by hand for quotient index k.
struct OrthHand {
  R e0, f0, e2;
};

OrthHand orth_hand(int m, int n, int t, int k) {
  R e0 = -R(m - 2 * t, 4) * k - R(t * n, 2) + R(m * t, 4) - R(t * (t + 1), 4);
  R f0 = -R(k * n, 2) + R(k * (k - 1), 4);
  return {e0, f0, R(n) - R(k - 1, 2)};
}

}  // namespace

TEST(Jacquet, SymplecticTopQuotient) {
  auto q = filtration({6, 2, -1, Side::Symplectic, 1, false});
  ASSERT_EQ(q.size(), 2u);
  EXPECT_EQ(*q[0].e0, R(-1, 2));
  EXPECT_EQ(*q[0].e1, R(1));
  EXPECT_EQ(q[0].inner_m, 6);
  EXPECT_EQ(q[0].inner_n, 1);
}

TEST(Jacquet, OrthogonalTopQuotient) {
  auto q = filtration({4, 2, -1, Side::Orthogonal, 2, false});
  ASSERT_EQ(q.size(), 3u);
  EXPECT_EQ(*q[0].e0, R(-3, 2));
  EXPECT_EQ(*q[0].e1, R(3, 2));
  EXPECT_EQ(q[0].inner_weil, "S(F^x)");
}

TEST(Jacquet, SplitCaseMiddlePiece) {
  auto q = filtration(specialization_spec(Specialization::P9_1));
  ASSERT_EQ(q.size(), 3u);
  // |a| |lambda|^{-3/2}
  EXPECT_EQ(*q[1].e1, R(1));
  EXPECT_EQ(*q[1].e0, R(-3, 2));
}

TEST(Jacquet, BottomPieceOfSiegelCase) {
  auto q = filtration(specialization_spec(Specialization::P10_3));
  ASSERT_EQ(q.size(), 3u);
  EXPECT_EQ(q[2].inducing_levi.substr(0, 6), "P(X_2)");
  EXPECT_EQ(q[2].inner_m, 2);
  EXPECT_EQ(q[2].inner_n, 0);
}

TEST(Jacquet, KlingenCaseSubmodule) {
  auto q = filtration(specialization_spec(Specialization::P10_1));
  ASSERT_EQ(q.size(), 2u);
  EXPECT_EQ(q[1].inner_weil, "Omega(4,1)");
  EXPECT_NE(q[1].inducing_levi.find("Q(Y_1)"), std::string::npos);
}

TEST(Jacquet, Specializations) {
  for (auto s : {Specialization::P9_1, Specialization::P10_1, Specialization::P10_2, Specialization::P10_3})
    EXPECT_TRUE(specialize_check(s)) << to_string(s);
}

TEST(Jacquet, IsometryDropsCentralExponents) {
  auto q = filtration({6, 2, -1, Side::Orthogonal, 1, true});
  for (const auto& fq : q) {
    EXPECT_FALSE(fq.e0.has_value());
    EXPECT_FALSE(fq.f0.has_value());
    EXPECT_FALSE(fq.reduced_e0.has_value());
  }
}

TEST(Jacquet, DomainErrors) {
  EXPECT_THROW(filtration({5, 2, -1, Side::Orthogonal, 1, false}), DomainError);
  EXPECT_THROW(filtration({6, 2, -1, Side::Orthogonal, 4, false}), DomainError);
  EXPECT_THROW(filtration({6, 2, -1, Side::Symplectic, 3, false}), DomainError);
  EXPECT_THROW(filtration({6, 0, -1, Side::Symplectic, 0, false}), DomainError);
}

TEST(Jacquet, SweepAgainstHandFormulas) {
  for (int m = 2; m <= 12; m += 2)
    for (int n = 1; n <= 6; ++n)
      for (int t = 0; t <= m / 2; ++t) {
        auto q = filtration({m, n, -1, Side::Orthogonal, t, false});
        for (const auto& fq : q) {
          OrthHand h = orth_hand(m, n, t, fq.index);
          ASSERT_EQ(*fq.e0, h.e0);
          ASSERT_EQ(*fq.f0, h.f0);
          ASSERT_EQ(fq.e2, h.e2);
          ASSERT_EQ(fq.f1, -h.e2);
          ASSERT_EQ(*fq.f0_raw - R(fq.index) * fq.e2, *fq.f0);
          if (fq.index == t) {
            ASSERT_EQ(*fq.e0, *fq.f0);
            ASSERT_EQ(*fq.reduced_e0, R(0));
          }
        }
        for (int k = 0; k <= n; ++k) ASSERT_TRUE(absorption_identity(m, n, t, k));
      }
}

TEST(Jacquet, SymplecticDiagonalCoincidence) {
  for (int m = 2; m <= 12; m += 2)
    for (int n = 1; n <= 6; ++n)
      for (int k = 0; k <= n; ++k) {
        auto q = filtration({m, n, -1, Side::Symplectic, k, false});
        for (const auto& fq : q)
          if (fq.index == k) ASSERT_EQ(*fq.e0, *fq.f0) << m << " " << n << " " << k;
      }
}

TEST(Jacquet, FormatMentionsExponents) {
  auto q = filtration({6, 2, -1, Side::Symplectic, 1, false});
  std::string s = format(q[0]);
  EXPECT_NE(s.find("e0=-1/2"), std::string::npos);
  EXPECT_NE(s.find("J^0"), std::string::npos);
}
