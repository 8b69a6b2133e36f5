#pragma once

/// @file fusion.hpp
/// Fusion data of the 2-toral groups inside their compact ambient groups:
/// character-based conjugacy, character-preserving automorphism groups,
/// centric and radical tests, and the bullet (unstable closure) operator.
/// Two finite subgroups fuse exactly when some isomorphism between them
/// preserves the ambient character, so everything reduces to labeled
/// isomorphism searches over exact cyclotomic values.

#include "storal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twolocal {

// ============================================================================
// Characters
// ============================================================================

/// Trace of the ambient representation at a 2-toral element: the defining
/// 2-dimensional character for SU2, the 3-dimensional rotation character
/// for SO3. Needs m >= the angle level.
inline CycNumber element_character(Ambient amb, const SElement& x, int m) {
  if (m < x.a.level)
    throw precision_error("element_character: modulus below angle level");
  long long u = x.a.num << (m - x.a.level);
  if (amb == Ambient::SU2) {
    if (x.flip) return CycNumber::zero(m);
    return CycNumber::zeta_pow(m, u) + CycNumber::zeta_pow(m, -u);
  }
  if (x.flip) return CycNumber::from_rational(m, Rational(-1));
  return CycNumber::one(m) + CycNumber::zeta_pow(m, u) + CycNumber::zeta_pow(m, -u);
}

inline std::vector<CycNumber> character_labels(Ambient amb,
                                               const std::vector<SElement>& carrier,
                                               int m) {
  std::vector<CycNumber> out;
  out.reserve(carrier.size());
  for (const auto& x : carrier) out.push_back(element_character(amb, x, m));
  return out;
}

// ============================================================================
// Fusion between subgroups
// ============================================================================

/// Whether two finite subgroups are conjugate in the ambient compact group:
/// tested as existence of a character-preserving isomorphism.
inline bool f_conjugate_concrete(Ambient amb, const SSubgroup& a,
                                 const SSubgroup& b, int m) {
  if (!a.is_finite() || !b.is_finite())
    throw std::domain_error("f_conjugate_concrete: finite subgroups only");
  if (a.order() != b.order()) return false;
  auto ca = materialize(a);
  auto cb = materialize(b);
  auto la = character_labels(amb, ca.carrier, m);
  auto lb = character_labels(amb, cb.carrier, m);
  return find_isomorphism_labeled(ca.group, cb.group, la, lb).has_value();
}

/// Fusion on symbolic subgroups; infinite subgroups fuse only with
/// themselves (conjugation preserves the identity component and order).
inline bool is_F_conjugate(Ambient amb, const SSubgroup& a, const SSubgroup& b,
                           int m) {
  if (a.is_finite() != b.is_finite()) return false;
  if (!a.is_finite()) return a == b;
  return f_conjugate_concrete(amb, a, b, m);
}

// ============================================================================
// Character-preserving automorphisms
// ============================================================================

/// Aut_F of a finite subgroup: all character-preserving automorphisms of its
/// multiplication table, as a concrete permutation group.
inline ConcreteGroup<Perm> aut_F_group(const SSubgroup& p, int m) {
  if (!p.is_finite()) throw std::domain_error("aut_F_group: finite subgroups only");
  auto cp = materialize(p);
  auto labels = character_labels(p.ambient, cp.carrier, m);
  auto maps = all_isomorphisms_labeled(cp.group, cp.group, labels, labels);
  std::vector<Perm> perms;
  perms.reserve(maps.size());
  for (auto& f : maps) perms.push_back(f.img);
  Perm idperm(cp.group.n);
  for (int x = 0; x < cp.group.n; ++x) idperm[x] = x;
  return closure_group<Perm>(
      idperm, perms,
      [](const Perm& a, const Perm& b) { return compose_perm(a, b); },
      perms.size() + 1);
}

/// |Aut_F(P)|; nullopt when infinite. The full group has only inner
/// F-automorphisms (infinitely many); the torus has identity and inversion.
inline std::optional<long long> aut_F_order(const SSubgroup& p, int m) {
  if (p.is_finite()) return aut_F_group(p, m).group.n;
  return p.ext ? std::nullopt : std::optional<long long>(2);
}

/// Out_F(P) = Aut_F(P) / inner automorphisms, as an explicit finite group.
/// For the infinite subgroups this is Z/2 (torus) and trivial (whole group).
inline FiniteGroup out_F_model(const SSubgroup& p, int m) {
  if (!p.is_finite()) return make_cyclic(p.ext ? 1 : 2);
  auto cp = materialize(p);
  auto aut = aut_F_group(p, m);
  auto inner = inner_automorphism_indices(cp.group, aut);
  return quotient_group(aut.group, inner).group;
}

inline long long out_F_order(const SSubgroup& p, int m) {
  return out_F_model(p, m).n;
}

/// Small-group isomorphism-type label for Out_F reports.
inline std::string iso_type_tag(const FiniteGroup& g) {
  struct Ref {
    const char* tag;
    FiniteGroup group;
  };
  static const std::vector<Ref> refs = [] {
    std::vector<Ref> v;
    v.push_back({"1", make_cyclic(1)});
    v.push_back({"Z/2", make_cyclic(2)});
    v.push_back({"Z/3", make_cyclic(3)});
    v.push_back({"Z/4", make_cyclic(4)});
    v.push_back({"Z/2xZ/2", make_klein_four()});
    v.push_back({"S3", make_symmetric(3)});
    v.push_back({"D4", make_dihedral(4)});
    v.push_back({"Q8", make_generalized_quaternion(8)});
    v.push_back({"S4", make_symmetric(4)});
    return v;
  }();
  for (const auto& r : refs)
    if (g.n == r.group.n && find_isomorphism(g, r.group)) return r.tag;
  return "order" + std::to_string(g.n);
}

inline std::string out_F_iso_tag(const SSubgroup& p, int m) {
  return iso_type_tag(out_F_model(p, m));
}

// ============================================================================
// Centric, radical, bullet
// ============================================================================

/// P is centric when every fused copy contains its own 2-toral centralizer.
/// The classes vector must contain representatives of all fused copies.
inline bool is_centric(const SSubgroup& p, const std::vector<SSubgroup>& classes,
                       int m) {
  for (const auto& q : classes) {
    if (!is_F_conjugate(p.ambient, p, q, m)) continue;
    if (!subgroup_leq(s_centralizer(q), q)) return false;
  }
  return true;
}

/// P is radical when Out_F(P) has trivial 2-core.
inline bool is_radical(const SSubgroup& p, int m) {
  return o2_radical(out_F_model(p, m)).size() == 1;
}

/// The bullet operator. The controlling quantity is the torus level of the
/// subgroup generated by squares: at most 1 the subgroup is already closed
/// under the relevant fusion and is fixed; above 1 it absorbs the full torus.
inline SSubgroup bullet_of(const SSubgroup& p) {
  std::optional<int> sq_level;
  if (p.level) {
    int k = *p.level;
    if (!p.ext) {
      sq_level = std::max(k - 1, 0);
    } else if (p.ambient == Ambient::SU2) {
      // Flip squares give the half-turn, so the square subgroup keeps level 1.
      sq_level = std::max(k - 1, 1);
    } else {
      sq_level = std::max(k - 1, 0);
    }
  }
  if (sq_level && *sq_level <= 1) return p;
  if (!p.ext) return make_torus(p.ambient, std::nullopt);
  return make_ext(p.ambient, std::nullopt, DyadicAngle());
}

// ============================================================================
// Classification reports
// ============================================================================

struct FusionClassReport {
  SSubgroup subgroup;
  std::string class_name;
  std::string group_name;
  std::optional<long long> order;
  bool centric = false;
  bool radical = false;
  std::string bullet_name;
  std::optional<long long> aut_f_order;  // nullopt when infinite
  long long out_f_order = 1;
  std::string out_f_tag;
};

/// Full fusion report over the subgroup classes visible at the given level.
inline std::vector<FusionClassReport> classify_centric_radical(Ambient amb,
                                                               int level, int m) {
  auto classes = enumerate_subgroup_classes(amb, level);
  std::vector<FusionClassReport> out;
  out.reserve(classes.size());
  for (const auto& p : classes) {
    FusionClassReport r;
    r.subgroup = p;
    r.class_name = p.name();
    r.group_name = p.group_name();
    r.order = p.order();
    r.centric = is_centric(p, classes, m);
    r.radical = is_radical(p, m);
    r.bullet_name = bullet_of(p).name();
    r.aut_f_order = aut_F_order(p, m);
    r.out_f_order = out_F_order(p, m);
    r.out_f_tag = out_F_iso_tag(p, m);
    out.push_back(std::move(r));
  }
  return out;
}

/// The expected centric-and-radical collection: the rank-2 finite subgroup
/// and the whole 2-toral group.
inline std::vector<std::string> expected_cr_class_names(Ambient amb) {
  if (amb == Ambient::SU2) return {"Ext(2,0)", "Ext(inf,0)"};
  return {"Ext(1,0)", "Ext(inf,0)"};
}

inline std::vector<std::string> centric_radical_class_names(
    const std::vector<FusionClassReport>& reports) {
  std::vector<std::string> out;
  for (const auto& r : reports)
    if (r.centric && r.radical) out.push_back(r.class_name);
  return out;
}

}  // namespace twolocal
