#include <gtest/gtest.h>

#include "bubbleton/cylinder.hpp"

using namespace bubbleton;

TEST(CylinderFrame, IdentityAtOrigin) {
  for (cplx l : {cplx(1.0), cplx(0.3, 0.2), cplx(-2.0, 0.5)})
    EXPECT_LT(distance(frame(cplx(0.0), l), Mat2<cplx>::identity()), 1e-15);
}

TEST(CylinderFrame, UnimodularAndUnitaryOnTheUnitCircle) {
  for (int i = 0; i < 32; ++i) {
    const cplx l = std::polar(1.0, 2.0 * kPi * i / 32.0 - kPi + 1e-3);
    for (cplx z : {cplx(0.3, 0.0), cplx(0.7, 0.4), cplx(-1.2, 2.0)}) {
      const Mat2<cplx> f = frame(z, l);
      EXPECT_NEAR(std::abs(f.det() - 1.0), 0.0, 1e-12);
      EXPECT_LT(unitarity_defect(f), 1e-11) << "z=" << z << " lambda=" << l;
    }
  }
}

TEST(CylinderFrame, SheetIndependent) {
  for (cplx l : {cplx(1.0), cplx(0.25), cplx(-0.5, 0.5), cplx(3.0, -1.0)}) {
    const Mat2<cplx> a = frame(cplx(0.4, 0.3), l, Sheet::principal);
    const Mat2<cplx> b = frame(cplx(0.4, 0.3), l, Sheet::negated);
    EXPECT_LT(distance(a, b), 1e-13);
  }
}

TEST(CylinderFrame, DerivativeMatchesFiniteDifference) {
  const cplx z(0.37, 0.21);
  const cplx l0(0.8, 0.1);
  const Mat2<cplx> d = derivative_part(frame(z, Jet::variable(l0)));
  const double h = 1e-6;
  const Mat2<cplx> fd = (1.0 / (2.0 * h)) * (frame(z, l0 + h) - frame(z, l0 - h));
  EXPECT_LT(distance(d, fd), 1e-7);
}

TEST(CylinderFrame, ZeroLambdaRejected) {
  try {
    frame(cplx(0.5), cplx(0.0));
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::zero_lambda);
  }
}

TEST(CylinderMonodromy, ClosesAtOneWithPeriodOne) {
  const ClosingReport r = check_closing(1.0, 1.0);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.sign, -1);
  EXPECT_LT(r.value_deviation, 1e-12);
  EXPECT_LT(r.derivative_norm, 1e-12);
}

TEST(CylinderMonodromy, FailsAwayFromTheSymPoint) {
  EXPECT_FALSE(check_closing(0.5, 1.0).pass);
  EXPECT_FALSE(check_closing(1.0, 0.5).pass);
  // Two periods close with sign +1.
  const ClosingReport r = check_closing(1.0, 2.0);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.sign, 1);
}

TEST(CylinderMonodromy, TranslationPeriodOnTheUnitCircleOnlyClosesAtOne) {
  for (double theta : {0.3, 1.0, 2.5}) EXPECT_FALSE(check_closing(std::polar(1.0, theta), 1.0).pass);
}

TEST(CylinderFrame, TranslationByTheMonodromy) {
  for (cplx z : {cplx(0.2, 0.1), cplx(-0.7, 0.5), cplx(1.3, -0.4)}) {
    for (cplx l : {cplx(1.0), cplx(0.6, 0.3), cplx(-1.1, 0.2)}) {
      const Mat2<cplx> lhs = frame(z + 1.0, l);
      const Mat2<cplx> rhs = monodromy(cplx(1.0), l) * frame(z, l);
      EXPECT_LT(distance(lhs, rhs), 1e-12 * std::max(1.0, norm(lhs)));
    }
  }
}

TEST(CylinderFrame, ReflectionSymmetryOffTheUnitCircle) {
  for (cplx z : {cplx(0.2, 0.1), cplx(-0.7, 0.5), cplx(0.9, -0.8)}) {
    for (cplx l : {cplx(0.3, 0.1), cplx(2.0, -0.5), cplx(-0.4, 0.6)}) {
      const Mat2<cplx> lhs = conj_transpose(frame(z, 1.0 / std::conj(l)));
      const Mat2<cplx> rhs = frame(z, l).inverse();
      EXPECT_LT(distance(lhs, rhs), 1e-10 * std::max(1.0, norm(rhs)));
    }
  }
}
