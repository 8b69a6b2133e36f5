#include "twolocal/quat.hpp"

#include <gtest/gtest.h>

#include <array>
#include <vector>

namespace tl = twolocal;

// ============================================================================
// Rational
// ============================================================================

TEST(Rational, NormalizesSignAndGcd) {
  tl::Rational r(6, -4);
  EXPECT_EQ(r.num, -3);
  EXPECT_EQ(r.den, 2);
  EXPECT_EQ(tl::Rational(0, 7), tl::Rational(0));
  EXPECT_EQ(tl::Rational(10, 5), tl::Rational(2));
}

TEST(Rational, Arithmetic) {
  tl::Rational a(1, 2), b(1, 3);
  EXPECT_EQ(a + b, tl::Rational(5, 6));
  EXPECT_EQ(a - b, tl::Rational(1, 6));
  EXPECT_EQ(a * b, tl::Rational(1, 6));
  EXPECT_EQ(a / b, tl::Rational(3, 2));
  EXPECT_EQ(-a, tl::Rational(-1, 2));
  EXPECT_TRUE(b < a);
  EXPECT_FALSE(a < b);
}

TEST(Rational, Str) {
  EXPECT_EQ(tl::Rational(3).str(), "3");
  EXPECT_EQ(tl::Rational(-1, 2).str(), "-1/2");
  EXPECT_EQ(tl::Rational(0).str(), "0");
}

// ============================================================================
// CycNumber
// ============================================================================

TEST(CycNumber, ModulusRangeGuard) {
  EXPECT_THROW(tl::CycNumber::zero(0), std::domain_error);
  EXPECT_THROW(tl::CycNumber::zero(17), std::domain_error);
  EXPECT_NO_THROW(tl::CycNumber::zero(1));
  EXPECT_NO_THROW(tl::CycNumber::zero(16));
}

TEST(CycNumber, ZetaPowWrapsWithSign) {
  // zeta^(2^(m-1)) = -1, and exponents reduce mod 2^m.
  int m = 3;
  auto z1 = tl::CycNumber::zeta_pow(m, 1);
  EXPECT_EQ(tl::CycNumber::zeta_pow(m, 4), -tl::CycNumber::one(m));
  EXPECT_EQ(tl::CycNumber::zeta_pow(m, 5), -z1);
  EXPECT_EQ(tl::CycNumber::zeta_pow(m, 8), tl::CycNumber::one(m));
  EXPECT_EQ(tl::CycNumber::zeta_pow(m, -1), tl::CycNumber::zeta_pow(m, 7));
  EXPECT_EQ(z1 * z1 * z1 * z1, -tl::CycNumber::one(m));
}

TEST(CycNumber, IUnitSquaresToMinusOne) {
  for (int m = 2; m <= 5; ++m) {
    auto i = tl::CycNumber::i_unit(m);
    EXPECT_EQ(i * i, -tl::CycNumber::one(m)) << "m=" << m;
  }
  EXPECT_THROW(tl::CycNumber::i_unit(1), tl::precision_error);
}

TEST(CycNumber, Sqrt2SquaresToTwo) {
  for (int m = 3; m <= 5; ++m) {
    auto s = tl::CycNumber::sqrt2(m);
    EXPECT_EQ(s * s, tl::CycNumber::from_rational(m, tl::Rational(2))) << "m=" << m;
  }
  EXPECT_THROW(tl::CycNumber::sqrt2(2), tl::precision_error);
}

TEST(CycNumber, ConjugationFixesRationalsAndInvertsZeta) {
  int m = 4;
  auto z = tl::CycNumber::zeta_pow(m, 3);
  EXPECT_EQ(z.conj(), tl::CycNumber::zeta_pow(m, -3));
  EXPECT_EQ(z.conj().conj(), z);
  auto r = tl::CycNumber::from_rational(m, tl::Rational(-7, 3));
  EXPECT_EQ(r.conj(), r);
  // |zeta^k| = 1.
  EXPECT_EQ(z.norm2(), tl::CycNumber::one(m));
}

TEST(CycNumber, PromoteIsCompatibleWithArithmetic) {
  auto z2 = tl::CycNumber::zeta_pow(2, 1);  // i at modulus 2
  EXPECT_EQ(z2.promote(4), tl::CycNumber::zeta_pow(4, 4));
  EXPECT_EQ(z2.promote(4), tl::CycNumber::i_unit(4));
  auto a = tl::CycNumber::zeta_pow(3, 1) + tl::CycNumber::one(3);
  EXPECT_EQ(a.promote(5) * a.promote(5), (a * a).promote(5));
  EXPECT_EQ(a.promote(3), a);
  EXPECT_THROW(a.promote(2), tl::precision_error);
}

TEST(CycNumber, MixedModuliRefused) {
  auto a = tl::CycNumber::one(2);
  auto b = tl::CycNumber::one(3);
  EXPECT_THROW(a + b, tl::precision_error);
  EXPECT_THROW(a * b, tl::precision_error);
}

TEST(CycNumber, RationalDetection) {
  int m = 3;
  auto r = tl::CycNumber::from_rational(m, tl::Rational(5, 4));
  EXPECT_TRUE(r.is_rational());
  EXPECT_EQ(r.rational_value(), tl::Rational(5, 4));
  auto z = tl::CycNumber::zeta_pow(m, 1);
  EXPECT_FALSE(z.is_rational());
  EXPECT_THROW((void)z.rational_value(), std::domain_error);
  // sqrt(2) is real but not rational; its coefficient vector shows it.
  EXPECT_FALSE(tl::CycNumber::sqrt2(3).is_rational());
}

TEST(CycNumber, VerificationErrorCarriesCheckName) {
  tl::verification_error e("sample_check");
  EXPECT_EQ(e.check, "sample_check");
  EXPECT_STREQ(e.what(), "verification failed: sample_check");
}

// ============================================================================
// DyadicAngle
// ============================================================================

TEST(DyadicAngle, NormalizesToOddNumerator) {
  tl::DyadicAngle a(2, 2);  // 2/4 = 1/2
  EXPECT_EQ(a.num, 1);
  EXPECT_EQ(a.level, 1);
  tl::DyadicAngle z(8, 3);  // 8/8 = 0
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.level, 0);
  tl::DyadicAngle n(-1, 2);  // -1/4 = 3/4
  EXPECT_EQ(n.num, 3);
  EXPECT_EQ(n.level, 2);
  EXPECT_THROW(tl::DyadicAngle(1, -1), std::domain_error);
}

TEST(DyadicAngle, ArithmeticInQModZ) {
  tl::DyadicAngle q(1, 2);  // 1/4
  EXPECT_EQ(q + q, tl::DyadicAngle(1, 1));
  EXPECT_EQ(q + q + q + q, tl::DyadicAngle(0, 0));
  EXPECT_EQ(-q, tl::DyadicAngle(3, 2));
  EXPECT_EQ(q - q, tl::DyadicAngle(0, 0));
  EXPECT_EQ(q.doubled(), tl::DyadicAngle(1, 1));
  EXPECT_EQ(q.halved(), tl::DyadicAngle(1, 3));
  EXPECT_EQ(q.halved().doubled(), q);
  EXPECT_EQ(q.order(), 4);
  EXPECT_EQ(tl::dyadic_half().order(), 2);
  EXPECT_TRUE(q < tl::DyadicAngle(1, 1));
  EXPECT_EQ(q.str(), "1/4");
  EXPECT_EQ(tl::DyadicAngle(0, 0).str(), "0");
}

// ============================================================================
// SElement group laws
// ============================================================================

namespace {

std::vector<tl::SElement> truncated_elements(int level) {
  std::vector<tl::SElement> out;
  for (int f = 0; f < 2; ++f)
    for (long long t = 0; t < (1LL << level); ++t)
      out.push_back(tl::SElement{tl::DyadicAngle(t, level), f == 1});
  return out;
}

}  // namespace

TEST(SElement, FlipSquareDependsOnAmbient) {
  tl::SElement flip{tl::DyadicAngle(0, 0), true};
  auto sq_su2 = tl::s_mul(tl::Ambient::SU2, flip, flip);
  EXPECT_EQ(sq_su2, (tl::SElement{tl::dyadic_half(), false}));
  auto sq_so3 = tl::s_mul(tl::Ambient::SO3, flip, flip);
  EXPECT_EQ(sq_so3, tl::s_identity());
}

TEST(SElement, ExhaustiveGroupLawsAtLevelTwo) {
  auto els = truncated_elements(2);
  ASSERT_EQ(els.size(), 8u);
  for (auto amb : {tl::Ambient::SU2, tl::Ambient::SO3}) {
    for (const auto& x : els) {
      EXPECT_EQ(tl::s_mul(amb, x, tl::s_identity()), x);
      EXPECT_EQ(tl::s_mul(amb, tl::s_identity(), x), x);
      EXPECT_EQ(tl::s_mul(amb, x, tl::s_inv(amb, x)), tl::s_identity());
      EXPECT_EQ(tl::s_mul(amb, tl::s_inv(amb, x), x), tl::s_identity());
      for (const auto& y : els)
        for (const auto& z : els)
          EXPECT_EQ(tl::s_mul(amb, tl::s_mul(amb, x, y), z),
                    tl::s_mul(amb, x, tl::s_mul(amb, y, z)));
    }
  }
}

TEST(SElement, ConjugationFormulas) {
  // Conjugating a flip by a torus element adds twice the torus angle;
  // conjugating by another flip reflects the angle through its own.
  auto conj = [](tl::Ambient amb, const tl::SElement& g, const tl::SElement& x) {
    return tl::s_mul(amb, tl::s_mul(amb, g, x), tl::s_inv(amb, g));
  };
  for (auto amb : {tl::Ambient::SU2, tl::Ambient::SO3}) {
    for (long long s = 0; s < 8; ++s) {
      tl::SElement tor{tl::DyadicAngle(s, 3), false};
      for (long long t = 0; t < 8; ++t) {
        tl::SElement fl{tl::DyadicAngle(t, 3), true};
        tl::DyadicAngle th(t, 3);
        EXPECT_EQ(conj(amb, tor, fl),
                  (tl::SElement{th + tl::DyadicAngle(s, 3).doubled(), true}));
        tl::SElement fl2{tl::DyadicAngle(s, 3), true};
        EXPECT_EQ(conj(amb, fl2, fl),
                  (tl::SElement{tl::DyadicAngle(s, 3).doubled() - th, true}));
        // A flip inverts the torus.
        EXPECT_EQ(conj(amb, fl2, tor),
                  (tl::SElement{-tl::DyadicAngle(s, 3), false}));
      }
    }
  }
}

TEST(SElement, Orders) {
  EXPECT_EQ(tl::s_order(tl::Ambient::SU2, tl::s_identity()), 1);
  EXPECT_EQ(tl::s_order(tl::Ambient::SU2, {tl::dyadic_half(), false}), 2);
  EXPECT_EQ(tl::s_order(tl::Ambient::SU2, {tl::DyadicAngle(1, 2), false}), 4);
  EXPECT_EQ(tl::s_order(tl::Ambient::SO3, {tl::DyadicAngle(3, 3), false}), 8);
  tl::SElement flip{tl::DyadicAngle(1, 2), true};
  EXPECT_EQ(tl::s_order(tl::Ambient::SU2, flip), 4);
  EXPECT_EQ(tl::s_order(tl::Ambient::SO3, flip), 2);
  // Order is exact: x^order = 1 and no earlier power is.
  for (auto amb : {tl::Ambient::SU2, tl::Ambient::SO3}) {
    for (const auto& x : truncated_elements(3)) {
      long long n = tl::s_order(amb, x);
      tl::SElement p = x;
      for (long long k = 1; k < n; ++k) {
        EXPECT_NE(p, tl::s_identity());
        p = tl::s_mul(amb, p, x);
      }
      EXPECT_EQ(p, tl::s_identity());
    }
  }
}

TEST(SElement, StrAndAmbientNames) {
  EXPECT_EQ((tl::SElement{tl::DyadicAngle(1, 2), true}).str(), "(1/4,1)");
  EXPECT_EQ(tl::s_identity().str(), "(0,0)");
  EXPECT_EQ(tl::ambient_name(tl::Ambient::SU2), "su2");
  EXPECT_EQ(tl::ambient_name(tl::Ambient::SO3), "so3");
}

// ============================================================================
// CycQuaternion against an independent 2x2 matrix oracle
// ============================================================================

namespace {

// Row-major complex 2x2 matrix over the cyclotomic field.
using Mat2 = std::array<tl::CycNumber, 4>;

Mat2 to_matrix(const tl::CycQuaternion& q) {
  return {q.a, q.b, -q.b.conj(), q.a.conj()};
}

Mat2 mat_mul(const Mat2& p, const Mat2& q) {
  return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3],
          p[2] * q[0] + p[3] * q[2], p[2] * q[1] + p[3] * q[3]};
}

std::vector<tl::CycQuaternion> sample_quaternions(int m) {
  std::vector<tl::CycQuaternion> s = {
      tl::quat_identity(m), tl::quat_minus_identity(m),
      tl::quat_i(m),        tl::quat_j(m),
      tl::quat_k(m),        tl::omega_unit(m),
      tl::tau_unit(m),      tl::omega_unit(m) * tl::tau_unit(m),
      tl::CycQuaternion(tl::CycNumber::zeta_pow(m, 1), tl::CycNumber::zero(m)),
      tl::CycQuaternion(tl::CycNumber::zero(m), tl::CycNumber::zeta_pow(m, 3)),
  };
  return s;
}

}  // namespace

TEST(CycQuaternion, MultiplicationMatchesMatrixProduct) {
  int m = 4;
  auto samples = sample_quaternions(m);
  for (const auto& p : samples)
    for (const auto& q : samples) {
      Mat2 lhs = to_matrix(p * q);
      Mat2 rhs = mat_mul(to_matrix(p), to_matrix(q));
      EXPECT_EQ(lhs, rhs) << p.str() << " * " << q.str();
    }
}

TEST(CycQuaternion, MatrixShapePreserved) {
  // Products keep the [[a, b], [-conj(b), conj(a)]] shape: rows 1 of the
  // matrix product must agree with the shape rebuilt from rows 0.
  int m = 4;
  auto samples = sample_quaternions(m);
  for (const auto& p : samples)
    for (const auto& q : samples) {
      Mat2 prod = mat_mul(to_matrix(p), to_matrix(q));
      EXPECT_EQ(prod[2], -prod[1].conj());
      EXPECT_EQ(prod[3], prod[0].conj());
    }
}

TEST(CycQuaternion, UnitRelations) {
  int m = 3;
  auto i = tl::quat_i(m), j = tl::quat_j(m), k = tl::quat_k(m);
  auto e = tl::quat_identity(m), n = tl::quat_minus_identity(m);
  EXPECT_EQ(i * i, n);
  EXPECT_EQ(j * j, n);
  EXPECT_EQ(k * k, n);
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(i * j * k, n);
  EXPECT_EQ(n * n, e);
}

TEST(CycQuaternion, OmegaPermutesTheUnits) {
  int m = 3;
  auto w = tl::omega_unit(m);
  auto conj = [&](const tl::CycQuaternion& x) { return w * x * w.inverse(); };
  EXPECT_EQ(conj(tl::quat_i(m)), tl::quat_k(m));
  EXPECT_EQ(conj(tl::quat_k(m)), tl::quat_j(m));
  EXPECT_EQ(conj(tl::quat_j(m)), tl::quat_i(m));
  EXPECT_EQ(tl::order_of_quat(w), 3);
  EXPECT_EQ(w * w * w, tl::quat_identity(m));
}

TEST(CycQuaternion, TauSquaresToI) {
  int m = 3;
  auto t = tl::tau_unit(m);
  EXPECT_EQ(t * t, tl::quat_i(m));
  EXPECT_EQ(tl::order_of_quat(t), 8);
}

TEST(CycQuaternion, FrozenCoordinates) {
  int m = 3;
  auto half = tl::Rational(1, 2);
  auto as_cyc = [&](const tl::Rational& r) {
    return tl::CycNumber::from_rational(m, r);
  };
  auto cw = tl::omega_unit(m).coords();
  EXPECT_EQ(cw[0], as_cyc(-half));
  EXPECT_EQ(cw[1], as_cyc(half));
  EXPECT_EQ(cw[2], as_cyc(half));
  EXPECT_EQ(cw[3], as_cyc(half));
  auto ct = tl::tau_unit(m).coords();
  auto s2h = tl::CycNumber::sqrt2(m).scaled(half);
  EXPECT_EQ(ct[0], s2h);
  EXPECT_EQ(ct[1], s2h);
  EXPECT_TRUE(ct[2].is_zero());
  EXPECT_TRUE(ct[3].is_zero());
  auto ci = tl::quat_i(m).coords();
  EXPECT_TRUE(ci[0].is_zero());
  EXPECT_EQ(ci[1], as_cyc(tl::Rational(1)));
  auto cj = tl::quat_j(m).coords();
  EXPECT_EQ(cj[2], as_cyc(tl::Rational(1)));
  auto ck = tl::quat_k(m).coords();
  EXPECT_EQ(ck[3], as_cyc(tl::Rational(1)));
}

TEST(CycQuaternion, TraceAndDeterminant) {
  int m = 3;
  EXPECT_TRUE(tl::quat_i(m).trace().is_zero());
  EXPECT_TRUE(tl::quat_j(m).trace().is_zero());
  EXPECT_EQ(tl::omega_unit(m).trace(),
            tl::CycNumber::from_rational(m, tl::Rational(-1)));
  EXPECT_EQ(tl::tau_unit(m).trace(), tl::CycNumber::sqrt2(m));
  EXPECT_EQ(tl::quat_identity(m).trace(),
            tl::CycNumber::from_rational(m, tl::Rational(2)));
  for (const auto& q : sample_quaternions(4)) {
    EXPECT_TRUE(q.is_unit()) << q.str();
    EXPECT_EQ(q * q.inverse(), tl::quat_identity(4)) << q.str();
    EXPECT_EQ(q.inverse() * q, tl::quat_identity(4)) << q.str();
  }
}

TEST(CycQuaternion, CentralElements) {
  int m = 3;
  EXPECT_TRUE(tl::quat_identity(m).is_central());
  EXPECT_TRUE(tl::quat_minus_identity(m).is_central());
  EXPECT_FALSE(tl::quat_i(m).is_central());
  EXPECT_FALSE(tl::quat_j(m).is_central());
  EXPECT_FALSE(tl::omega_unit(m).is_central());
}

TEST(CycQuaternion, MixedModuliRefused) {
  EXPECT_THROW(
      tl::CycQuaternion(tl::CycNumber::one(2), tl::CycNumber::zero(3)),
      tl::precision_error);
  EXPECT_EQ(tl::quat_i(2).promote(4), tl::quat_i(4));
}

TEST(CycQuaternion, OrderValuesAndBudget) {
  int m = 3;
  EXPECT_EQ(tl::order_of_quat(tl::quat_identity(m)), 1);
  EXPECT_EQ(tl::order_of_quat(tl::quat_minus_identity(m)), 2);
  EXPECT_EQ(tl::order_of_quat(tl::quat_i(m)), 4);
  EXPECT_EQ(tl::order_of_quat(tl::quat_k(m)), 4);
  EXPECT_THROW(tl::order_of_quat(tl::tau_unit(m), 2), tl::budget_error);
}

// ============================================================================
// Embeddings of the symbolic groups
// ============================================================================

TEST(Embedding, TorusAndFlipImages) {
  int m = 2;
  tl::SElement quarter{tl::DyadicAngle(1, 2), false};
  EXPECT_EQ(tl::s_to_quaternion(quarter, m), tl::quat_j(m));
  tl::SElement flip{tl::DyadicAngle(0, 0), true};
  EXPECT_EQ(tl::s_to_quaternion(flip, m), tl::quat_i(m));
  tl::SElement half{tl::dyadic_half(), false};
  EXPECT_EQ(tl::s_to_quaternion(half, m), tl::quat_minus_identity(m));
}

TEST(Embedding, Su2HomomorphismExhaustiveAtLevelTwo) {
  int m = 3;
  auto els = truncated_elements(2);
  std::vector<tl::CycQuaternion> imgs;
  for (const auto& x : els) imgs.push_back(tl::s_to_quaternion(x, m));
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = 0; j < els.size(); ++j) {
      auto prod = tl::s_mul(tl::Ambient::SU2, els[i], els[j]);
      EXPECT_EQ(tl::s_to_quaternion(prod, m), imgs[i] * imgs[j]);
      if (i != j) { EXPECT_NE(imgs[i], imgs[j]); }
    }
    auto inv = tl::s_inv(tl::Ambient::SU2, els[i]);
    EXPECT_EQ(tl::s_to_quaternion(inv, m), imgs[i].inverse());
  }
}

TEST(Embedding, So3HomomorphismExhaustiveAtLevelTwo) {
  int m = 3;  // needs level + 1
  auto els = truncated_elements(2);
  std::vector<tl::ProjQuaternion> imgs;
  for (const auto& x : els) imgs.push_back(tl::sbar_to_quaternion(x, m));
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = 0; j < els.size(); ++j) {
      auto prod = tl::s_mul(tl::Ambient::SO3, els[i], els[j]);
      EXPECT_EQ(tl::sbar_to_quaternion(prod, m), imgs[i] * imgs[j]);
      if (i != j) { EXPECT_NE(imgs[i], imgs[j]); }
    }
    auto inv = tl::s_inv(tl::Ambient::SO3, els[i]);
    EXPECT_EQ(tl::sbar_to_quaternion(inv, m), imgs[i].inverse());
  }
}

TEST(Embedding, PrecisionGuards) {
  tl::SElement deep{tl::DyadicAngle(1, 3), false};
  EXPECT_THROW(tl::s_to_quaternion(deep, 2), tl::precision_error);
  EXPECT_NO_THROW(tl::s_to_quaternion(deep, 3));
  EXPECT_THROW(tl::sbar_to_quaternion(deep, 3), tl::precision_error);
  EXPECT_NO_THROW(tl::sbar_to_quaternion(deep, 4));
}

// ============================================================================
// ProjQuaternion
// ============================================================================

TEST(ProjQuaternion, IdentifiesAntipodes) {
  int m = 3;
  for (const auto& q : sample_quaternions(m)) {
    EXPECT_EQ(tl::ProjQuaternion(q), tl::ProjQuaternion(-q));
  }
  EXPECT_EQ(tl::ProjQuaternion(tl::quat_minus_identity(m)), tl::proj_identity(m));
  EXPECT_NE(tl::ProjQuaternion(tl::quat_i(m)), tl::proj_identity(m));
}

TEST(ProjQuaternion, RotationTraces) {
  // Rotation by angle t has matrix trace 1 + 2cos(t).
  int m = 3;
  auto as_cyc = [&](long long v) {
    return tl::CycNumber::from_rational(m, tl::Rational(v));
  };
  EXPECT_EQ(tl::proj_identity(m).rotation_trace(), as_cyc(3));
  // i, j, k are half turns: trace -1.
  EXPECT_EQ(tl::ProjQuaternion(tl::quat_i(m)).rotation_trace(), as_cyc(-1));
  EXPECT_EQ(tl::ProjQuaternion(tl::quat_j(m)).rotation_trace(), as_cyc(-1));
  // omega is a third turn: trace 0.
  EXPECT_EQ(tl::ProjQuaternion(tl::omega_unit(m)).rotation_trace(), as_cyc(0));
  // tau is a quarter turn: trace 1.
  EXPECT_EQ(tl::ProjQuaternion(tl::tau_unit(m)).rotation_trace(), as_cyc(1));
}

TEST(ProjQuaternion, StrShowsNormalizedLift) {
  int m = 2;
  auto p = tl::ProjQuaternion(tl::quat_minus_identity(m));
  EXPECT_EQ(p.str(), "+-" + tl::quat_identity(m).str());
}

// ============================================================================
// Commutant classification
// ============================================================================

TEST(Commutant, CentralSet) {
  int m = 3;
  auto r = tl::commutant_class({tl::quat_identity(m), tl::quat_minus_identity(m)});
  EXPECT_EQ(r.kind, tl::CommutantKind::Central);
  EXPECT_FALSE(r.axis.has_value());
  EXPECT_EQ(tl::commutant_class({}).kind, tl::CommutantKind::Central);
}

TEST(Commutant, SingleAxis) {
  int m = 3;
  auto r = tl::commutant_class({tl::quat_i(m)});
  EXPECT_EQ(r.kind, tl::CommutantKind::AxisLine);
  ASSERT_TRUE(r.axis.has_value());
  EXPECT_EQ(*r.axis, tl::quat_i(m));
  // tau shares the i axis; adding it keeps the line.
  auto r2 = tl::commutant_class(
      {tl::quat_i(m), tl::tau_unit(m), tl::quat_minus_identity(m)});
  EXPECT_EQ(r2.kind, tl::CommutantKind::AxisLine);
}

TEST(Commutant, GenericPair) {
  int m = 3;
  EXPECT_EQ(tl::commutant_class({tl::quat_i(m), tl::quat_j(m)}).kind,
            tl::CommutantKind::Generic);
  EXPECT_EQ(tl::commutant_class({tl::quat_j(m), tl::quat_k(m)}).kind,
            tl::CommutantKind::Generic);
  EXPECT_EQ(tl::commutant_class({tl::quat_i(m), tl::omega_unit(m)}).kind,
            tl::CommutantKind::Generic);
}

TEST(Commutant, KindNames) {
  EXPECT_EQ(tl::commutant_kind_name(tl::CommutantKind::Central), "central");
  EXPECT_EQ(tl::commutant_kind_name(tl::CommutantKind::AxisLine), "axis-line");
  EXPECT_EQ(tl::commutant_kind_name(tl::CommutantKind::Generic), "generic");
}

// ============================================================================
// Octahedral closures
// ============================================================================

TEST(Octahedral, BinaryClosureHasOrder48) {
  auto O = tl::binary_octahedral_group(3);
  EXPECT_EQ(O.carrier.size(), 48u);
  EXPECT_EQ(O.group.n, 48);
  // The closure carries a faithful copy of the generators.
  for (const auto& g : tl::octahedral_gens(3))
    EXPECT_TRUE(O.index_of(g).has_value());
}

TEST(Octahedral, RotationImageHasOrder24) {
  auto O = tl::octahedral_rotation_group(3);
  EXPECT_EQ(O.carrier.size(), 24u);
  EXPECT_EQ(O.group.n, 24);
}

TEST(Octahedral, ClosureBudgetGuard) {
  int m = 3;
  auto mul = [](const tl::CycQuaternion& p, const tl::CycQuaternion& q) {
    return p * q;
  };
  EXPECT_THROW(tl::closure_group<tl::CycQuaternion>(
                   tl::quat_identity(m), tl::octahedral_gens(m), mul, 8),
               tl::budget_error);
}
