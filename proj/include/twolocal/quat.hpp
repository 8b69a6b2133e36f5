#pragma once

/// @file quat.hpp
/// Exact unit quaternions over 2-power cyclotomic fields, the discrete
/// 2-toral groups sitting inside them, and their projective (rotation)
/// images. A quaternion is stored as the matrix [[a, b], [-conj(b), conj(a)]]
/// with a, b cyclotomic; the distinguished maximal torus is {(a, 0)} and the
/// standard flip is i = (0, 1).

#include "fingroup.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace twolocal {

// ============================================================================
// DyadicAngle
// ============================================================================

/// An angle num / 2^level in Q/Z with 2-power denominator, kept normalized:
/// 0 <= num < 2^level and num odd, or num = 0 with level = 0.
struct DyadicAngle {
  long long num = 0;
  int level = 0;

  DyadicAngle() = default;
  DyadicAngle(long long n, int lv) : num(n), level(lv) { normalize(); }

  void normalize() {
    if (level < 0) throw std::domain_error("DyadicAngle: negative level");
    long long full = 1LL << level;
    num %= full;
    if (num < 0) num += full;
    while (level > 0 && num % 2 == 0) {
      num /= 2;
      --level;
      if (num == 0) { level = 0; break; }
    }
  }

  [[nodiscard]] bool is_zero() const { return num == 0; }
  /// The order of the angle in Q/Z.
  [[nodiscard]] long long order() const { return 1LL << level; }

  friend DyadicAngle operator+(const DyadicAngle& a, const DyadicAngle& b) {
    int lv = std::max(a.level, b.level);
    long long n = (a.num << (lv - a.level)) + (b.num << (lv - b.level));
    return DyadicAngle(n, lv);
  }
  DyadicAngle operator-() const { return DyadicAngle(-num, level); }
  friend DyadicAngle operator-(const DyadicAngle& a, const DyadicAngle& b) {
    return a + (-b);
  }

  /// 2 * angle (loses one level).
  [[nodiscard]] DyadicAngle doubled() const { return DyadicAngle(2 * num, level); }
  /// angle / 2 (the lift gaining one level; the other preimage differs by 1/2).
  [[nodiscard]] DyadicAngle halved() const { return DyadicAngle(num, level + 1); }

  friend bool operator==(const DyadicAngle& a, const DyadicAngle& b) {
    return a.num == b.num && a.level == b.level;
  }
  friend bool operator!=(const DyadicAngle& a, const DyadicAngle& b) {
    return !(a == b);
  }
  friend bool operator<(const DyadicAngle& a, const DyadicAngle& b) {
    // Order by value in [0, 1).
    return a.num * (1LL << (std::max(a.level, b.level) - a.level)) <
           b.num * (1LL << (std::max(a.level, b.level) - b.level));
  }

  [[nodiscard]] std::string str() const {
    return Rational(num, 1LL << level).str();
  }
};

inline DyadicAngle dyadic_half() { return DyadicAngle(1, 1); }

// ============================================================================
// SElement: the discrete 2-toral groups
// ============================================================================

/// Which ambient Lie group the 2-toral group sits in.
enum class Ambient { SU2, SO3 };

inline std::string ambient_name(Ambient a) {
  return a == Ambient::SU2 ? "su2" : "so3";
}

/// Element (theta, eps) of the infinite discrete group: for SU2 the torus
/// extension is non-split (the flip squares to the half turn), for SO3 it
/// splits (the flip is an involution).
struct SElement {
  DyadicAngle a;
  bool flip = false;

  friend bool operator==(const SElement& x, const SElement& y) {
    return x.a == y.a && x.flip == y.flip;
  }
  friend bool operator!=(const SElement& x, const SElement& y) {
    return !(x == y);
  }
  friend bool operator<(const SElement& x, const SElement& y) {
    if (x.flip != y.flip) return x.flip < y.flip;
    if (x.a.level != y.a.level) return x.a.level < y.a.level;
    return x.a.num < y.a.num;
  }

  [[nodiscard]] std::string str() const {
    return "(" + a.str() + "," + (flip ? "1" : "0") + ")";
  }
};

inline SElement s_identity() { return SElement{}; }

inline SElement s_mul(Ambient amb, const SElement& x, const SElement& y) {
  DyadicAngle t = x.a + (x.flip ? -y.a : y.a);
  if (amb == Ambient::SU2 && x.flip && y.flip) t = t + dyadic_half();
  return SElement{t, x.flip != y.flip};
}

inline SElement s_inv(Ambient amb, const SElement& x) {
  if (!x.flip) return SElement{-x.a, false};
  if (amb == Ambient::SU2) return SElement{x.a + dyadic_half(), true};
  return x;  // SO3 reflections are involutions
}

inline long long s_order(Ambient amb, const SElement& x) {
  if (!x.flip) return x.a.order();
  return amb == Ambient::SU2 ? 4 : 2;
}

// ============================================================================
// CycQuaternion
// ============================================================================

/// Unit quaternion as the SU(2) matrix [[a, b], [-conj(b), conj(a)]].
/// In coordinates w + x i + y j + z k: a = w + y*sqrt(-1), b = x - z*sqrt(-1).
struct CycQuaternion {
  CycNumber a, b;

  CycQuaternion() = default;
  CycQuaternion(CycNumber aa, CycNumber bb) : a(std::move(aa)), b(std::move(bb)) {
    if (a.m != b.m) throw precision_error("CycQuaternion: mixed moduli");
  }

  [[nodiscard]] int modulus() const { return a.m; }

  friend CycQuaternion operator*(const CycQuaternion& p, const CycQuaternion& q) {
    return CycQuaternion(p.a * q.a - p.b * q.b.conj(),
                         p.a * q.b + p.b * q.a.conj());
  }
  CycQuaternion operator-() const { return CycQuaternion(-a, -b); }

  /// Inverse of a unit quaternion (the conjugate transpose).
  [[nodiscard]] CycQuaternion inverse() const {
    return CycQuaternion(a.conj(), -b);
  }

  /// Matrix trace a + conj(a) = 2w.
  [[nodiscard]] CycNumber trace() const { return a + a.conj(); }

  /// Determinant a*conj(a) + b*conj(b); 1 exactly for unit quaternions.
  [[nodiscard]] CycNumber det() const { return a * a.conj() + b * b.conj(); }
  [[nodiscard]] bool is_unit() const { return det() == CycNumber::one(a.m); }

  /// Coordinates {w, x, y, z}; needs modulus >= 2 (uses sqrt(-1)).
  [[nodiscard]] std::array<CycNumber, 4> coords() const {
    int m = a.m;
    CycNumber i = CycNumber::i_unit(m);
    Rational half(1, 2);
    CycNumber w = (a + a.conj()).scaled(half);
    CycNumber y = ((a - a.conj()) * i).scaled(Rational(-1, 2));
    CycNumber x = (b + b.conj()).scaled(half);
    CycNumber z = ((b - b.conj()) * i).scaled(half);
    return {w, x, y, z};
  }

  [[nodiscard]] CycQuaternion promote(int m2) const {
    return CycQuaternion(a.promote(m2), b.promote(m2));
  }

  /// True for +1 and -1, the center of SU(2).
  [[nodiscard]] bool is_central() const {
    return b.is_zero() && a.is_rational();
  }

  friend bool operator==(const CycQuaternion& p, const CycQuaternion& q) {
    return p.a == q.a && p.b == q.b;
  }
  friend bool operator!=(const CycQuaternion& p, const CycQuaternion& q) {
    return !(p == q);
  }
  friend bool operator<(const CycQuaternion& p, const CycQuaternion& q) {
    if (p.a != q.a) return p.a < q.a;
    return p.b < q.b;
  }

  [[nodiscard]] std::string str() const {
    return "[" + a.str() + "; " + b.str() + "]";
  }
};

inline CycQuaternion quat_identity(int m) {
  return CycQuaternion(CycNumber::one(m), CycNumber::zero(m));
}
inline CycQuaternion quat_minus_identity(int m) {
  return CycQuaternion(-CycNumber::one(m), CycNumber::zero(m));
}
inline CycQuaternion quat_i(int m) {
  return CycQuaternion(CycNumber::zero(m), CycNumber::one(m));
}
inline CycQuaternion quat_j(int m) {
  return CycQuaternion(CycNumber::i_unit(m), CycNumber::zero(m));
}
inline CycQuaternion quat_k(int m) {
  return CycQuaternion(CycNumber::zero(m), -CycNumber::i_unit(m));
}

/// (-1 + i + j + k)/2, of order 3; permutes i -> k -> j by conjugation.
inline CycQuaternion omega_unit(int m) {
  CycNumber one = CycNumber::one(m);
  CycNumber iu = CycNumber::i_unit(m);
  Rational half(1, 2);
  return CycQuaternion((iu - one).scaled(half), (one - iu).scaled(half));
}

/// (1 + i)/sqrt(2), of order 8; squares to i. Needs modulus >= 3.
inline CycQuaternion tau_unit(int m) {
  CycNumber s = CycNumber::sqrt2(m).scaled(Rational(1, 2));  // sqrt(2)/2
  return CycQuaternion(s, s);
}

inline long long order_of_quat(const CycQuaternion& q, long long cap = 1024) {
  CycQuaternion e = quat_identity(q.modulus());
  CycQuaternion p = q;
  for (long long k = 1; k <= cap; ++k) {
    if (p == e) return k;
    p = p * q;
  }
  throw budget_error("order_of_quat: order above cap");
}

/// Faithful quaternion image of an SU2 torus-extension element.
/// (theta, 0) -> diag torus element, (theta, 1) -> that element times i.
/// Needs m >= level of theta, else the root of unity is not representable.
inline CycQuaternion s_to_quaternion(const SElement& x, int m) {
  if (m < x.a.level)
    throw precision_error("s_to_quaternion: modulus below angle level");
  CycNumber tor = CycNumber::zeta_pow(m, x.a.num << (m - x.a.level));
  if (!x.flip) return CycQuaternion(tor, CycNumber::zero(m));
  return CycQuaternion(CycNumber::zero(m), tor);
}

// ============================================================================
// ProjQuaternion: the rotation group carrier
// ============================================================================

/// Element of SO(3) = SU(2)/{+-1}: a unit quaternion normalized so the first
/// nonzero coefficient (scanning a then b) is positive.
struct ProjQuaternion {
  CycQuaternion q;

  ProjQuaternion() = default;
  explicit ProjQuaternion(CycQuaternion lift) : q(std::move(lift)) { normalize(); }

  void normalize() {
    for (const auto& coef : {&q.a, &q.b}) {
      for (const auto& r : coef->c) {
        if (r.is_zero()) continue;
        if (r.num < 0) q = -q;
        return;
      }
    }
  }

  [[nodiscard]] int modulus() const { return q.modulus(); }

  friend ProjQuaternion operator*(const ProjQuaternion& p, const ProjQuaternion& r) {
    return ProjQuaternion(p.q * r.q);
  }
  [[nodiscard]] ProjQuaternion inverse() const {
    return ProjQuaternion(q.inverse());
  }

  /// Trace of the associated rotation matrix: 4w^2 - 1.
  [[nodiscard]] CycNumber rotation_trace() const {
    CycNumber tr = q.trace();  // 2w, sign-independent after squaring
    return tr * tr - CycNumber::one(q.a.m);
  }

  [[nodiscard]] ProjQuaternion promote(int m2) const {
    return ProjQuaternion(q.promote(m2));
  }

  friend bool operator==(const ProjQuaternion& p, const ProjQuaternion& r) {
    return p.q == r.q;
  }
  friend bool operator!=(const ProjQuaternion& p, const ProjQuaternion& r) {
    return !(p == r);
  }
  friend bool operator<(const ProjQuaternion& p, const ProjQuaternion& r) {
    return p.q < r.q;
  }

  [[nodiscard]] std::string str() const { return "+-" + q.str(); }
};

inline ProjQuaternion proj_identity(int m) {
  return ProjQuaternion(quat_identity(m));
}

/// Faithful rotation image of an SO3 torus-extension element: lift the angle
/// to half its value one level up, then project. Needs m >= level + 1.
inline ProjQuaternion sbar_to_quaternion(const SElement& x, int m) {
  SElement lift{x.a.halved(), x.flip};
  return ProjQuaternion(s_to_quaternion(lift, m));
}

// ============================================================================
// Commutants
// ============================================================================

/// Shape of the centralizer in SU(2) of a finite set of unit quaternions:
/// the whole group (all generators central), a maximal torus (all pure parts
/// on one axis), or the center {+-1}.
enum class CommutantKind { Central, AxisLine, Generic };

struct CommutantClass {
  CommutantKind kind = CommutantKind::Central;
  std::optional<CycQuaternion> axis;  // a non-central generator, when AxisLine
};

inline std::string commutant_kind_name(CommutantKind k) {
  switch (k) {
    case CommutantKind::Central: return "central";
    case CommutantKind::AxisLine: return "axis-line";
    default: return "generic";
  }
}

/// Classifies the common centralizer by exact pure-part cross products.
/// Needs modulus >= 2.
inline CommutantClass commutant_class(const std::vector<CycQuaternion>& gens) {
  std::vector<std::array<CycNumber, 3>> pure;
  std::optional<CycQuaternion> first;
  for (const auto& g : gens) {
    if (g.is_central()) continue;
    auto c = g.coords();
    pure.push_back({c[1], c[2], c[3]});
    if (!first) first = g;
  }
  if (pure.empty()) return CommutantClass{CommutantKind::Central, std::nullopt};
  for (std::size_t i = 0; i + 1 < pure.size(); ++i) {
    const auto& u = pure[i];
    const auto& v = pure[i + 1];
    CycNumber cx = u[1] * v[2] - u[2] * v[1];
    CycNumber cy = u[2] * v[0] - u[0] * v[2];
    CycNumber cz = u[0] * v[1] - u[1] * v[0];
    if (!(cx.is_zero() && cy.is_zero() && cz.is_zero()))
      return CommutantClass{CommutantKind::Generic, std::nullopt};
  }
  return CommutantClass{CommutantKind::AxisLine, first};
}

// ============================================================================
// The binary octahedral group and its rotation image
// ============================================================================

inline std::vector<CycQuaternion> octahedral_gens(int m) {
  return {quat_i(m), quat_j(m), omega_unit(m), tau_unit(m)};
}

/// Closure of {i, j, omega, tau}: order 48. Needs modulus >= 3.
inline ConcreteGroup<CycQuaternion> binary_octahedral_group(int m) {
  return closure_group<CycQuaternion>(
      quat_identity(m), octahedral_gens(m),
      [](const CycQuaternion& p, const CycQuaternion& q) { return p * q; }, 64);
}

/// Rotation image of the binary octahedral group: order 24.
inline ConcreteGroup<ProjQuaternion> octahedral_rotation_group(int m) {
  std::vector<ProjQuaternion> gens;
  for (const auto& g : octahedral_gens(m)) gens.push_back(ProjQuaternion(g));
  return closure_group<ProjQuaternion>(
      proj_identity(m), gens,
      [](const ProjQuaternion& p, const ProjQuaternion& q) { return p * q; }, 32);
}

}  // namespace twolocal
