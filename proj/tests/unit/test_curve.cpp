#include <gtest/gtest.h>

#include "realspin/curve.hpp"
#include "realspin/error.hpp"

using namespace realspin;

namespace {

ErrorCode make_error(int g, int k, bool sep) {
  try {
    (void)RealCurve::make(g, k, sep);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidInput;
}

F2Vector sum(std::initializer_list<F2Vector> parts) {
  F2Vector acc(parts.begin()->size());
  for (const auto& p : parts) acc += p;
  return acc;
}

}  // namespace

TEST(MakeCurve, AcceptsValidTypes) {
  const RealCurve torus = RealCurve::make(1, 1, false);
  EXPECT_EQ(torus.genus(), 1);
  EXPECT_EQ(torus.m(), 0);
  const RealCurve c = RealCurve::make(4, 3, true);
  EXPECT_EQ(c.m(), 1);
  const RealCurve sphere = RealCurve::make(0, 1, true);
  EXPECT_EQ(sphere.dimension(), 0U);
  EXPECT_TRUE(sphere.f_plus_basis().empty());
}

TEST(MakeCurve, RejectsInvalidTypes) {
  EXPECT_EQ(make_error(2, 2, true), ErrorCode::InvalidTopology);
  EXPECT_EQ(make_error(1, 0, true), ErrorCode::InvalidTopology);
  EXPECT_EQ(make_error(2, 4, true), ErrorCode::InvalidTopology);
  EXPECT_EQ(make_error(0, 1, false), ErrorCode::InvalidTopology);
  EXPECT_EQ(make_error(-1, 1, true), ErrorCode::InvalidTopology);
  // k = g + 1 forces a separating curve.
  EXPECT_EQ(make_error(2, 3, false), ErrorCode::InvalidTopology);
}

TEST(MakeCurve, ErrorMessageNamesCondition) {
  try {
    (void)RealCurve::make(2, 2, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("separating"), std::string::npos);
  }
}

TEST(ValidTopologies, CountsUpToGenusThree) {
  // g=0: 1; g=1: (1,n),(2,s); g=2: (1,n),(2,n),(1,s),(3,s); g=3: (1..3,n),(2,s),(4,s).
  EXPECT_EQ(valid_topologies(0).size(), 1U);
  EXPECT_EQ(valid_topologies(1).size(), 3U);
  EXPECT_EQ(valid_topologies(2).size(), 7U);
  EXPECT_EQ(valid_topologies(3).size(), 12U);
  for (const auto& t : valid_topologies(6)) EXPECT_NO_THROW((void)RealCurve::make(t));
}

TEST(CStar, NonSeparatingTorus) {
  const RealCurve c = RealCurve::make(1, 1, false);
  const IntMatrix& m = c.c_star_integer();
  // a1 -> a1, b1 -> a1 - b1.
  EXPECT_EQ(m(0, 0), 1);
  EXPECT_EQ(m(1, 0), 0);
  EXPECT_EQ(m(0, 1), 1);
  EXPECT_EQ(m(1, 1), -1);
}

TEST(CStar, SeparatingTorus) {
  const RealCurve c = RealCurve::make(1, 2, true);
  const IntMatrix& m = c.c_star_integer();
  EXPECT_EQ(m(0, 0), 1);
  EXPECT_EQ(m(1, 1), -1);
  EXPECT_EQ(m(0, 1), 0);
  EXPECT_EQ(m(1, 0), 0);
}

TEST(CStar, SeparatingSwapsPairs) {
  const RealCurve c = RealCurve::make(3, 2, true);  // m = 1, pair (a2, a3)
  const IntMatrix& m = c.c_star_integer();
  EXPECT_EQ(m(c.a_index(3), c.a_index(2)), 1);
  EXPECT_EQ(m(c.a_index(2), c.a_index(3)), 1);
  EXPECT_EQ(m(c.b_index(3), c.b_index(2)), -1);
  EXPECT_EQ(m(c.b_index(2), c.b_index(3)), -1);
  EXPECT_EQ(m(c.b_index(1), c.b_index(1)), -1);
}

TEST(CStar, InvolutionSymplecticAndFixDimension) {
  for (const auto& t : valid_topologies(6)) {
    const RealCurve c = RealCurve::make(t);
    const auto n = c.dimension();
    EXPECT_EQ(c.c_star_integer() * c.c_star_integer(), IntMatrix::identity(n)) << t.to_string();
    const F2Matrix& m = c.c_star_mod2();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(c.pairing(m.column(i), m.column(j)), c.pairing(F2Vector::unit(n, i), F2Vector::unit(n, j)));
      }
    }
    EXPECT_EQ(n - gf2_rank(m + F2Matrix::identity(n)), static_cast<std::size_t>(t.genus + t.components - 1))
        << t.to_string();
  }
}

TEST(RealComponentClass, Examples) {
  const RealCurve c = RealCurve::make(3, 2, false);
  EXPECT_EQ(c.real_component_class(1), c.a(1));
  EXPECT_EQ(c.real_component_class(0), sum({c.a(1), c.a(2), c.a(3)}));
  const RealCurve s = RealCurve::make(4, 3, true);
  EXPECT_EQ(s.real_component_class(0), sum({s.a(1), s.a(2)}));
  EXPECT_THROW((void)s.real_component_class(3), Error);
  EXPECT_THROW((void)s.real_component_class(-1), Error);
}

TEST(RealComponentClass, FixedByInvolution) {
  for (const auto& t : valid_topologies(6)) {
    const RealCurve c = RealCurve::make(t);
    for (int i = 0; i < t.components; ++i) {
      EXPECT_EQ(c.c_star_mod2() * c.real_component_class(i), c.real_component_class(i));
    }
  }
}

TEST(FPlus, Examples) {
  const RealCurve n = RealCurve::make(2, 1, false);
  EXPECT_EQ(n.f_plus_basis(), (std::vector<F2Vector>{n.a(1), n.a(2)}));
  const RealCurve t = RealCurve::make(1, 2, true);
  EXPECT_EQ(t.f_plus_basis(), (std::vector<F2Vector>{t.a(1)}));
  const RealCurve s = RealCurve::make(3, 2, true);
  EXPECT_EQ(s.f_plus_basis(), (std::vector<F2Vector>{s.a(1), s.a(2) + s.a(3), s.b(2) + s.b(3)}));
}

TEST(FPlus, LagrangianAndDualToFMinus) {
  for (const auto& t : valid_topologies(6)) {
    const RealCurve c = RealCurve::make(t);
    const auto& fp = c.f_plus_basis();
    const auto& fm = c.f_minus_basis();
    ASSERT_EQ(fp.size(), static_cast<std::size_t>(t.genus));
    ASSERT_EQ(fm.size(), fp.size());
    EXPECT_EQ(gf2_rank(F2Matrix(fp, c.dimension())), fp.size());
    for (std::size_t i = 0; i < fp.size(); ++i) {
      EXPECT_EQ(fm[i], c.poincare_dual(fp[i]));
      for (std::size_t j = 0; j < fp.size(); ++j) {
        EXPECT_FALSE(c.pairing(fp[i], fp[j]));
        EXPECT_FALSE(fm[i](fp[j]));
      }
    }
  }
}

TEST(FMinus, NonSeparatingGenusTwo) {
  const RealCurve c = RealCurve::make(2, 1, false);
  EXPECT_EQ(c.f_minus_basis()[0].coefficients(), c.b(1));
  EXPECT_EQ(c.f_minus_basis()[1].coefficients(), c.b(2));
}

TEST(PoincareDuality, BasisImages) {
  const RealCurve c = RealCurve::make(1, 1, false);
  EXPECT_EQ(c.poincare_dual(c.a(1)).coefficients(), c.b(1));
  EXPECT_EQ(c.poincare_dual(c.b(1)).coefficients(), c.a(1));
}

TEST(PoincareDuality, RoundTripGenusTwoExhaustive) {
  const RealCurve c = RealCurve::make(2, 1, false);
  for (int code = 0; code < 16; ++code) {
    F2Vector x(4);
    for (int i = 0; i < 4; ++i) x.set(static_cast<std::size_t>(i), ((code >> i) & 1) != 0);
    EXPECT_EQ(c.pd_inverse(c.poincare_dual(x)), x);
    EXPECT_EQ(c.poincare_dual(c.pd_inverse(Covector(x))), Covector(x));
    for (int y = 0; y < 16; ++y) {
      F2Vector v(4);
      for (int i = 0; i < 4; ++i) v.set(static_cast<std::size_t>(i), ((y >> i) & 1) != 0);
      EXPECT_EQ(c.poincare_dual(x)(v), c.pairing(x, v));
    }
  }
}

TEST(CheckW1, LengthMustMatch) {
  const RealCurve c = RealCurve::make(4, 3, true);
  EXPECT_NO_THROW(c.check_w1(RealW1{0, 1, 1}));
  EXPECT_THROW(c.check_w1(RealW1{0, 1}), Error);
}
