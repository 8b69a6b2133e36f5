#pragma once

/// @file storal.hpp
/// Closed subgroups of the discrete 2-toral groups, handled symbolically.
/// Every closed subgroup is conjugate to either a torus truncation Torus(k)
/// (the angles of level <= k) or an extension Ext(k, theta0) = Torus(k)
/// together with the flip coset through (theta0, 1); k may be infinite.
/// Centralizers, normalizers, quotients and truncations all stay symbolic,
/// and finite subgroups materialize to explicit multiplication tables.

#include "quat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twolocal {

/// Reduces a flip angle modulo the torus part: theta0 mod 1/2^k.
/// Infinite k absorbs every angle.
inline DyadicAngle canonical_ext_angle(const DyadicAngle& t,
                                       const std::optional<int>& k) {
  if (!k) return DyadicAngle();
  if (t.level <= *k) return DyadicAngle();
  long long window = 1LL << (t.level - *k);
  return DyadicAngle(t.num % window, t.level);
}

/// Symbolic closed subgroup of the ambient 2-toral group.
struct SSubgroup {
  Ambient ambient = Ambient::SU2;
  std::optional<int> level;   // torus level; nullopt means the full torus
  bool ext = false;           // whether flip elements are present
  DyadicAngle ext_angle;      // canonical flip angle, meaningful when ext

  [[nodiscard]] bool is_finite() const { return level.has_value(); }

  /// Number of elements; nullopt when infinite.
  [[nodiscard]] std::optional<long long> order() const {
    if (!level) return std::nullopt;
    long long torus = 1LL << *level;
    return ext ? 2 * torus : torus;
  }

  [[nodiscard]] bool member(const SElement& x) const {
    if (!x.flip) return !level || x.a.level <= *level;
    if (!ext) return false;
    DyadicAngle d = x.a - ext_angle;
    return !level || d.level <= *level;
  }

  /// Class name: Torus(k) or Ext(k, theta0), with k = inf allowed.
  [[nodiscard]] std::string name() const {
    std::string k = level ? std::to_string(*level) : "inf";
    if (!ext) return "Torus(" + k + ")";
    return "Ext(" + k + "," + ext_angle.str() + ")";
  }

  /// Isomorphism-type label of the underlying group.
  [[nodiscard]] std::string group_name() const {
    if (!level) {
      if (!ext) return ambient == Ambient::SU2 ? "T" : "Tbar";
      return ambient == Ambient::SU2 ? "S" : "Sbar";
    }
    int k = *level;
    if (!ext) {
      if (k == 0) return "1";
      return "Z/" + std::to_string(1LL << k);
    }
    if (ambient == Ambient::SU2) {
      // Non-split: Ext(1) is cyclic of order 4, Ext(2) the quaternion group,
      // higher levels generalized quaternion.
      if (k == 1) return "Z/4";
      return "Q" + std::to_string(1LL << (k + 1));
    }
    // Split: Ext(0) is a reflection, Ext(1) the Klein group, then dihedral.
    if (k == 0) return "Z/2";
    if (k == 1) return "V";
    return "D" + std::to_string(1LL << k);
  }

  friend bool operator==(const SSubgroup& p, const SSubgroup& q) {
    return p.ambient == q.ambient && p.level == q.level && p.ext == q.ext &&
           (!p.ext || p.ext_angle == q.ext_angle);
  }
  friend bool operator!=(const SSubgroup& p, const SSubgroup& q) {
    return !(p == q);
  }
  friend bool operator<(const SSubgroup& p, const SSubgroup& q) {
    auto lev = [](const SSubgroup& s) { return s.level ? *s.level : 1 << 30; };
    if (lev(p) != lev(q)) return lev(p) < lev(q);
    if (p.ext != q.ext) return p.ext < q.ext;
    if (!p.ext) return false;
    return p.ext_angle < q.ext_angle;
  }
};

inline SSubgroup make_torus(Ambient amb, std::optional<int> k) {
  if (k && *k < 0) throw std::domain_error("make_torus: negative level");
  SSubgroup s;
  s.ambient = amb;
  s.level = k;
  return s;
}

inline SSubgroup make_ext(Ambient amb, std::optional<int> k, DyadicAngle theta0) {
  if (k) {
    int lo = amb == Ambient::SU2 ? 1 : 0;  // non-split flips square to -1
    if (*k < lo)
      throw std::domain_error("make_ext: torus level below minimum for ambient");
  }
  SSubgroup s;
  s.ambient = amb;
  s.level = k;
  s.ext = true;
  s.ext_angle = canonical_ext_angle(theta0, k);
  return s;
}

/// Containment of symbolic subgroups (same ambient).
inline bool subgroup_leq(const SSubgroup& p, const SSubgroup& q) {
  if (p.ambient != q.ambient)
    throw std::domain_error("subgroup_leq: mixed ambients");
  auto lev_le = [](const std::optional<int>& a, const std::optional<int>& b) {
    if (!b) return true;
    if (!a) return false;
    return *a <= *b;
  };
  if (!lev_le(p.level, q.level)) return false;
  if (!p.ext) return true;
  if (!q.ext) return false;
  DyadicAngle d = p.ext_angle - q.ext_angle;
  return !q.level || d.level <= *q.level;
}

/// Conjugacy-class representatives of closed subgroups with level <= L,
/// followed by the two infinite ones. Flip angles normalize to 0 because any
/// angle is twice some finer angle.
inline std::vector<SSubgroup> enumerate_subgroup_classes(Ambient amb, int L) {
  if (L < 1) throw std::domain_error("enumerate_subgroup_classes: level >= 1");
  std::vector<SSubgroup> out;
  int ext_lo = amb == Ambient::SU2 ? 1 : 0;
  for (int k = 0; k <= L; ++k) {
    out.push_back(make_torus(amb, k));
    if (k >= ext_lo) out.push_back(make_ext(amb, k, DyadicAngle()));
  }
  out.push_back(make_torus(amb, std::nullopt));
  out.push_back(make_ext(amb, std::nullopt, DyadicAngle()));
  return out;
}

/// Centralizer inside the full 2-toral group, symbolically.
inline SSubgroup s_centralizer(const SSubgroup& p) {
  Ambient amb = p.ambient;
  if (!p.ext) {
    // Flips invert the torus, so they survive only against angles of order
    // at most 2; the torus itself is abelian.
    if (p.level && *p.level <= 1) return make_ext(amb, std::nullopt, DyadicAngle());
    return make_torus(amb, std::nullopt);
  }
  if (!p.level || *p.level >= 2) {
    // Torus elements of order > 2 rule out flips in the centralizer, and a
    // flip commutes with only the identity and half-turn of the torus.
    return make_torus(amb, 1);
  }
  // Low level: exactly the flips at theta0 and theta0 + 1/2 commute with
  // (theta0, 1), giving Ext(1, theta0 mod 1/2) in both ambients.
  return make_ext(amb, 1, p.ext_angle);
}

/// Normalizer inside the full 2-toral group, symbolically.
inline SSubgroup s_normalizer(const SSubgroup& p) {
  Ambient amb = p.ambient;
  if (!p.ext) {
    // Every subgroup of the torus is normal in the whole group.
    return make_ext(amb, std::nullopt, DyadicAngle());
  }
  if (!p.level) return p;  // the whole group
  // Conjugation moves the flip angle by twice a torus angle, so the
  // normalizer gains exactly one level.
  return make_ext(amb, *p.level + 1, p.ext_angle);
}

/// Image under the double cover SU2 -> SO3 quotient phi(theta, eps) =
/// (2 theta, eps). Defined only for subgroups containing the kernel {+-1},
/// i.e. torus level >= 1.
inline SSubgroup so3_quotient(const SSubgroup& p) {
  if (p.ambient == Ambient::SO3)
    throw std::domain_error("so3_quotient: already a rotation subgroup");
  if (p.level && *p.level < 1)
    throw std::domain_error("so3_quotient: subgroup misses the kernel");
  std::optional<int> k = p.level ? std::optional<int>(*p.level - 1) : std::nullopt;
  if (!p.ext) return make_torus(Ambient::SO3, k);
  return make_ext(Ambient::SO3, k, p.ext_angle.doubled());
}

/// Intersection with the level-n truncation of the ambient group.
inline SSubgroup intersect_truncate(const SSubgroup& p, int n) {
  int k = p.level ? std::min(*p.level, n) : n;
  if (!p.ext) return make_torus(p.ambient, k);
  bool flips_survive = p.ext_angle.is_zero() || p.ext_angle.level <= n;
  if (!flips_survive) return make_torus(p.ambient, k);
  return make_ext(p.ambient, k, p.ext_angle);
}

/// Explicit multiplication table of a finite symbolic subgroup.
inline ConcreteGroup<SElement> materialize(const SSubgroup& p) {
  if (!p.level) throw std::domain_error("materialize: infinite subgroup");
  int k = *p.level;
  if (k > 20) throw budget_error("materialize: level too large");
  std::vector<SElement> carrier;
  long long torus = 1LL << k;
  for (long long t = 0; t < torus; ++t)
    carrier.push_back(SElement{DyadicAngle(t, k), false});
  if (p.ext) {
    for (long long t = 0; t < torus; ++t)
      carrier.push_back(SElement{p.ext_angle + DyadicAngle(t, k), true});
  }
  std::map<SElement, int> index;
  for (int i = 0; i < static_cast<int>(carrier.size()); ++i)
    index.emplace(carrier[i], i);
  int n = static_cast<int>(carrier.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      SElement prod = s_mul(p.ambient, carrier[a], carrier[b]);
      auto it = index.find(prod);
      if (it == index.end())
        throw std::logic_error("materialize: subgroup not closed");
      table[a][b] = it->second;
    }
  ConcreteGroup<SElement> out;
  out.group = group_from_table(std::move(table), /*check_assoc=*/false);
  out.group.labels.reserve(n);
  for (const auto& el : carrier) out.group.labels.push_back(el.str());
  out.carrier = std::move(carrier);
  return out;
}

/// The level-n truncation of the whole ambient group.
inline ConcreteGroup<SElement> truncated_group(Ambient amb, int n) {
  return materialize(make_ext(amb, n, DyadicAngle()));
}

}  // namespace twolocal
