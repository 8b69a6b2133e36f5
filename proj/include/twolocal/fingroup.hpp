#pragma once

/// @file fingroup.hpp
/// Finite groups as explicit multiplication tables, plus the machinery used
/// throughout: closures of generating sets over an arbitrary carrier type,
/// subgroup/normalizer/centralizer/quotient computations, isomorphism and
/// automorphism searches (optionally constrained by element labels), the
/// 2-core, and small reference groups with presentation witnesses.

#include "cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace twolocal {

// ============================================================================
// FiniteGroup
// ============================================================================

/// A finite group on elements {0, ..., n-1} given by its multiplication table.
/// Invariants: mul is n x n, id is two-sided identity, inv[x] is the inverse.
struct FiniteGroup {
  int n = 0;
  std::vector<std::vector<int>> mul;
  int id = 0;
  std::vector<int> inv;
  std::vector<int> gens;             // generator indices when known
  std::vector<std::string> labels;   // optional element names

  [[nodiscard]] int at(int a, int b) const { return mul[a][b]; }
};

/// Builds a FiniteGroup from a raw table, locating identity and inverses.
/// With check_assoc the full associativity law is verified (cubic).
inline FiniteGroup group_from_table(std::vector<std::vector<int>> mul,
                                    bool check_assoc = true) {
  FiniteGroup G;
  G.n = static_cast<int>(mul.size());
  if (G.n == 0) throw std::domain_error("group_from_table: empty table");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != G.n)
      throw std::domain_error("group_from_table: table not square");
    for (int v : row)
      if (v < 0 || v >= G.n)
        throw std::domain_error("group_from_table: entry out of range");
  }
  G.mul = std::move(mul);
  int e = -1;
  for (int x = 0; x < G.n && e < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < G.n; ++y)
      if (G.mul[x][y] != y || G.mul[y][x] != y) { ok = false; break; }
    if (ok) e = x;
  }
  if (e < 0) throw std::domain_error("group_from_table: no identity");
  G.id = e;
  G.inv.assign(G.n, -1);
  for (int x = 0; x < G.n; ++x) {
    for (int y = 0; y < G.n; ++y)
      if (G.mul[x][y] == e && G.mul[y][x] == e) { G.inv[x] = y; break; }
    if (G.inv[x] < 0) throw std::domain_error("group_from_table: no inverse");
  }
  if (check_assoc) {
    for (int a = 0; a < G.n; ++a)
      for (int b = 0; b < G.n; ++b)
        for (int c = 0; c < G.n; ++c)
          if (G.mul[G.mul[a][b]][c] != G.mul[a][G.mul[b][c]])
            throw std::domain_error("group_from_table: not associative");
  }
  return G;
}

inline int order_of(const FiniteGroup& G, int x) {
  int k = 1, y = x;
  while (y != G.id) { y = G.mul[y][x]; ++k; }
  return k;
}

inline int power_of(const FiniteGroup& G, int x, long long e) {
  if (e < 0) { x = G.inv[x]; e = -e; }
  int r = G.id;
  while (e > 0) {
    if (e & 1) r = G.mul[r][x];
    x = G.mul[x][x];
    e >>= 1;
  }
  return r;
}

/// g x g^(-1).
inline int conj_of(const FiniteGroup& G, int g, int x) {
  return G.mul[G.mul[g][x]][G.inv[g]];
}

inline bool is_power_of_two(long long k) { return k > 0 && (k & (k - 1)) == 0; }

// ============================================================================
// ConcreteGroup and closures
// ============================================================================

/// A FiniteGroup together with the carrier elements its indices stand for.
template <class T>
struct ConcreteGroup {
  FiniteGroup group;
  std::vector<T> carrier;

  [[nodiscard]] std::optional<int> index_of(const T& t) const {
    for (int k = 0; k < static_cast<int>(carrier.size()); ++k)
      if (carrier[k] == t) return k;
    return std::nullopt;
  }
};

/// Closes a generating set inside an ambient (possibly infinite) group given
/// by a multiplication callable. Throws budget_error once the closure would
/// exceed cap elements. T needs operator< and operator==.
template <class T, class Mul>
ConcreteGroup<T> closure_group(const T& identity, const std::vector<T>& gens,
                               Mul mul, std::size_t cap) {
  std::vector<T> carrier;
  std::map<T, int> index;
  std::queue<int> work;
  auto add = [&](const T& t) -> int {
    auto it = index.find(t);
    if (it != index.end()) return it->second;
    if (carrier.size() >= cap)
      throw budget_error("closure_group: not finite at this cap");
    carrier.push_back(t);
    int k = static_cast<int>(carrier.size()) - 1;
    index.emplace(t, k);
    work.push(k);
    return k;
  };
  add(identity);
  std::vector<int> genidx;
  genidx.reserve(gens.size());
  for (const auto& g : gens) genidx.push_back(add(g));
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    for (int gi : genidx) {
      T prod = mul(carrier[x], carrier[gi]);
      add(prod);
    }
  }
  int n = static_cast<int>(carrier.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(mul(carrier[a], carrier[b]));
      if (it == index.end())
        throw std::logic_error("closure_group: carrier not closed");
      table[a][b] = it->second;
    }
  ConcreteGroup<T> out;
  out.group = group_from_table(std::move(table), /*check_assoc=*/false);
  out.group.gens = genidx;
  out.carrier = std::move(carrier);
  return out;
}

// ============================================================================
// Subgroups
// ============================================================================

/// Elements of the subgroup generated by gens, as a sorted index vector.
inline std::vector<int> subgroup_generated(const FiniteGroup& G,
                                           const std::vector<int>& gens) {
  std::vector<char> in(G.n, 0);
  std::vector<int> members;
  std::queue<int> work;
  auto add = [&](int x) {
    if (in[x]) return;
    in[x] = 1;
    members.push_back(x);
    work.push(x);
  };
  add(G.id);
  for (int g : gens) add(g);
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    for (int g : gens) add(G.mul[x][g]);
  }
  std::sort(members.begin(), members.end());
  return members;
}

inline bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elems) {
  std::vector<char> in(G.n, 0);
  for (int x : elems) in[x] = 1;
  if (!in[G.id]) return false;
  for (int a : elems)
    for (int b : elems)
      if (!in[G.mul[a][b]]) return false;
  return true;
}

/// The group structure on a subgroup's elements; old_index maps new -> old.
inline FiniteGroup restrict_to(const FiniteGroup& G, const std::vector<int>& elems,
                               std::vector<int>* old_index = nullptr) {
  if (!is_subgroup(G, elems))
    throw std::domain_error("restrict_to: not a subgroup");
  std::vector<int> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> newidx(G.n, -1);
  for (int k = 0; k < static_cast<int>(sorted.size()); ++k) newidx[sorted[k]] = k;
  int n = static_cast<int>(sorted.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = newidx[G.mul[sorted[a]][sorted[b]]];
  FiniteGroup H = group_from_table(std::move(table), /*check_assoc=*/false);
  if (!G.labels.empty()) {
    H.labels.resize(n);
    for (int k = 0; k < n; ++k) H.labels[k] = G.labels[sorted[k]];
  }
  if (old_index) *old_index = sorted;
  return H;
}

inline std::vector<int> centralizer_in(const FiniteGroup& G,
                                       const std::vector<int>& sub) {
  std::vector<int> out;
  for (int g = 0; g < G.n; ++g) {
    bool ok = true;
    for (int h : sub)
      if (G.mul[g][h] != G.mul[h][g]) { ok = false; break; }
    if (ok) out.push_back(g);
  }
  return out;
}

inline std::vector<int> normalizer_in(const FiniteGroup& G,
                                      const std::vector<int>& sub) {
  std::vector<char> in(G.n, 0);
  for (int x : sub) in[x] = 1;
  std::vector<int> out;
  for (int g = 0; g < G.n; ++g) {
    bool ok = true;
    for (int h : sub)
      if (!in[conj_of(G, g, h)]) { ok = false; break; }
    if (ok) out.push_back(g);
  }
  return out;
}

inline std::vector<int> center_of(const FiniteGroup& G) {
  std::vector<int> all(G.n);
  for (int k = 0; k < G.n; ++k) all[k] = k;
  return centralizer_in(G, all);
}

inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G) {
  std::vector<char> seen(G.n, 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < G.n; ++x) {
    if (seen[x]) continue;
    std::set<int> cls;
    for (int g = 0; g < G.n; ++g) cls.insert(conj_of(G, g, x));
    std::vector<int> v(cls.begin(), cls.end());
    for (int y : v) seen[y] = 1;
    classes.push_back(std::move(v));
  }
  return classes;
}

inline std::vector<int> normal_closure(const FiniteGroup& G,
                                       const std::vector<int>& xs) {
  std::set<int> gens;
  for (int x : xs)
    for (int g = 0; g < G.n; ++g) gens.insert(conj_of(G, g, x));
  return subgroup_generated(G, std::vector<int>(gens.begin(), gens.end()));
}

inline std::vector<int> commutator_subgroup(const FiniteGroup& G) {
  std::set<int> comms;
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b)
      comms.insert(G.mul[G.mul[a][b]][G.inv[G.mul[b][a]]]);
  return subgroup_generated(G, std::vector<int>(comms.begin(), comms.end()));
}

inline bool is_normal(const FiniteGroup& G, const std::vector<int>& sub) {
  std::vector<char> in(G.n, 0);
  for (int x : sub) in[x] = 1;
  for (int g = 0; g < G.n; ++g)
    for (int h : sub)
      if (!in[conj_of(G, g, h)]) return false;
  return true;
}

/// Quotient by a normal subgroup; proj maps ambient indices to cosets.
struct QuotientResult {
  FiniteGroup group;
  std::vector<int> proj;
};

inline QuotientResult quotient_group(const FiniteGroup& G,
                                     const std::vector<int>& normal_sub) {
  if (!is_subgroup(G, normal_sub) || !is_normal(G, normal_sub))
    throw std::domain_error("quotient_group: subgroup not normal");
  std::vector<int> rep(G.n, -1);  // canonical (minimal) member of each coset
  for (int g = 0; g < G.n; ++g) {
    int r = g;
    for (int h : normal_sub) r = std::min(r, G.mul[g][h]);
    rep[g] = r;
  }
  std::vector<int> reps;
  std::vector<int> coset(G.n, -1);
  for (int g = 0; g < G.n; ++g) {
    if (rep[g] == g) {
      coset[g] = static_cast<int>(reps.size());
      reps.push_back(g);
    }
  }
  std::vector<int> proj(G.n);
  for (int g = 0; g < G.n; ++g) proj[g] = coset[rep[g]];
  int n = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = proj[G.mul[reps[a]][reps[b]]];
  QuotientResult out;
  out.group = group_from_table(std::move(table), /*check_assoc=*/false);
  out.proj = std::move(proj);
  return out;
}

/// O_2(G): the largest normal 2-subgroup. Generated by the elements of
/// 2-power order whose normal closure is a 2-group.
inline std::vector<int> o2_radical(const FiniteGroup& G) {
  std::vector<int> gens;
  for (int x = 0; x < G.n; ++x) {
    if (!is_power_of_two(order_of(G, x))) continue;
    auto nc = normal_closure(G, {x});
    if (is_power_of_two(static_cast<long long>(nc.size()))) gens.push_back(x);
  }
  return subgroup_generated(G, gens);
}

// ============================================================================
// Homomorphisms, isomorphisms, automorphisms
// ============================================================================

/// A map between groups given by images of every element.
struct GroupMap {
  std::vector<int> img;
};

inline bool is_homomorphism(const FiniteGroup& G, const FiniteGroup& H,
                            const GroupMap& f) {
  if (static_cast<int>(f.img.size()) != G.n) return false;
  for (int v : f.img)
    if (v < 0 || v >= H.n) return false;
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b)
      if (f.img[G.mul[a][b]] != H.mul[f.img[a]][f.img[b]]) return false;
  return true;
}

inline bool is_monomorphism(const FiniteGroup& G, const FiniteGroup& H,
                            const GroupMap& f) {
  if (!is_homomorphism(G, H, f)) return false;
  std::set<int> img(f.img.begin(), f.img.end());
  return static_cast<int>(img.size()) == G.n;
}

/// A short generating sequence found greedily (each step at least doubles
/// the generated subgroup, so the length is at most log2 |G|).
inline std::vector<int> greedy_generators(const FiniteGroup& G) {
  std::vector<int> gens;
  std::vector<int> cur = subgroup_generated(G, {});
  std::vector<char> in(G.n, 0);
  for (int x : cur) in[x] = 1;
  while (static_cast<int>(cur.size()) < G.n) {
    int pick = -1;
    for (int x = 0; x < G.n; ++x)
      if (!in[x]) { pick = x; break; }
    gens.push_back(pick);
    cur = subgroup_generated(G, gens);
    std::fill(in.begin(), in.end(), 0);
    for (int x : cur) in[x] = 1;
  }
  return gens;
}

namespace detail {

/// Generator-image backtracking over partial maps with forced closure.
/// compatible(a, A) constrains every assignment (forced ones included).
template <class Compat>
class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& G, const FiniteGroup& H, Compat compatible)
      : G_(G), H_(H), compatible_(std::move(compatible)),
        pmap_(G.n, -1), ipmap_(H.n, -1) {
    ordG_.resize(G.n);
    for (int x = 0; x < G_.n; ++x) ordG_[x] = order_of(G_, x);
    ordH_.resize(H.n);
    for (int x = 0; x < H_.n; ++x) ordH_[x] = order_of(H_, x);
    gens_ = greedy_generators(G_);
  }

  /// Collects isomorphisms G -> H; stops after `limit` results.
  std::vector<GroupMap> run(std::size_t limit) {
    results_.clear();
    limit_ = limit;
    if (G_.n != H_.n) return {};
    if (!assign(G_.id, H_.id)) return {};
    recurse(0);
    // Undo the identity seeding so the object can be reused.
    undo_to(0);
    return std::move(results_);
  }

 private:
  bool assign(int a, int A) {
    std::size_t qhead = trail_.size();
    if (!define(a, A)) return false;
    while (qhead < trail_.size()) {
      int x = trail_[qhead++];
      int X = pmap_[x];
      // Force both product orders against every element defined so far.
      for (std::size_t t = 0; t < trail_.size(); ++t) {
        int y = trail_[t];
        int Y = pmap_[y];
        if (!define(G_.mul[x][y], H_.mul[X][Y])) return false;
        if (!define(G_.mul[y][x], H_.mul[Y][X])) return false;
      }
    }
    return true;
  }

  bool define(int a, int A) {
    if (pmap_[a] != -1) return pmap_[a] == A;
    if (ipmap_[A] != -1) return false;
    if (ordG_[a] != ordH_[A]) return false;
    if (!compatible_(a, A)) return false;
    pmap_[a] = A;
    ipmap_[A] = a;
    trail_.push_back(a);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      int a = trail_.back();
      trail_.pop_back();
      ipmap_[pmap_[a]] = -1;
      pmap_[a] = -1;
    }
  }

  void recurse(std::size_t t) {
    if (results_.size() >= limit_) return;
    if (t == gens_.size()) {
      results_.push_back(GroupMap{pmap_});
      return;
    }
    int g = gens_[t];
    if (pmap_[g] != -1) {
      recurse(t + 1);
      return;
    }
    for (int A = 0; A < H_.n; ++A) {
      if (ipmap_[A] != -1 || ordH_[A] != ordG_[g]) continue;
      std::size_t mark = trail_.size();
      if (assign(g, A)) recurse(t + 1);
      undo_to(mark);
      if (results_.size() >= limit_) return;
    }
  }

  const FiniteGroup& G_;
  const FiniteGroup& H_;
  Compat compatible_;
  std::vector<int> pmap_, ipmap_, ordG_, ordH_, gens_;
  std::vector<int> trail_;
  std::vector<GroupMap> results_;
  std::size_t limit_ = 0;
};

inline std::map<int, int> order_histogram(const FiniteGroup& G) {
  std::map<int, int> h;
  for (int x = 0; x < G.n; ++x) ++h[order_of(G, x)];
  return h;
}

}  // namespace detail

/// Cheap isomorphism invariants; a mismatch proves G and H non-isomorphic.
inline bool invariants_match(const FiniteGroup& G, const FiniteGroup& H) {
  if (G.n != H.n) return false;
  if (detail::order_histogram(G) != detail::order_histogram(H)) return false;
  if (center_of(G).size() != center_of(H).size()) return false;
  if (commutator_subgroup(G).size() != commutator_subgroup(H).size()) return false;
  return true;
}

inline std::optional<GroupMap> find_isomorphism(const FiniteGroup& G,
                                                const FiniteGroup& H) {
  if (!invariants_match(G, H)) return std::nullopt;
  auto compat = [](int, int) { return true; };
  detail::IsoSearch<decltype(compat)> search(G, H, compat);
  auto found = search.run(1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

/// Isomorphisms required to carry the label of each element to the label of
/// its image. Labels prune the search and encode fusion constraints.
template <class L>
std::vector<GroupMap> all_isomorphisms_labeled(const FiniteGroup& G,
                                               const FiniteGroup& H,
                                               const std::vector<L>& labG,
                                               const std::vector<L>& labH,
                                               std::size_t limit = 1000000) {
  if (G.n != H.n) return {};
  auto compat = [&](int a, int A) { return labG[a] == labH[A]; };
  detail::IsoSearch<decltype(compat)> search(G, H, compat);
  return search.run(limit);
}

template <class L>
std::optional<GroupMap> find_isomorphism_labeled(const FiniteGroup& G,
                                                 const FiniteGroup& H,
                                                 const std::vector<L>& labG,
                                                 const std::vector<L>& labH) {
  auto found = all_isomorphisms_labeled(G, H, labG, labH, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

/// An automorphism as the image list of every element.
using Perm = std::vector<int>;

inline Perm compose_perm(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
  return r;
}

/// Full automorphism group as a concrete group of permutations.
/// Budgeted: refuses groups of order above 64.
inline ConcreteGroup<Perm> automorphism_group(const FiniteGroup& G) {
  if (G.n > 64)
    throw budget_error("automorphism_group: order above budget");
  auto compat = [](int, int) { return true; };
  detail::IsoSearch<decltype(compat)> search(G, G, compat);
  auto maps = search.run(200000);
  Perm idperm(G.n);
  for (int x = 0; x < G.n; ++x) idperm[x] = x;
  std::vector<Perm> perms;
  perms.reserve(maps.size());
  for (auto& m : maps) perms.push_back(m.img);
  return closure_group<Perm>(idperm, perms,
                             [](const Perm& p, const Perm& q) { return compose_perm(p, q); },
                             perms.size() + 1);
}

/// Indices (in aut.carrier) of the inner automorphisms of G, sorted.
inline std::vector<int> inner_automorphism_indices(const FiniteGroup& G,
                                                   const ConcreteGroup<Perm>& aut) {
  std::set<int> out;
  for (int g = 0; g < G.n; ++g) {
    Perm p(G.n);
    for (int x = 0; x < G.n; ++x) p[x] = conj_of(G, g, x);
    auto idx = aut.index_of(p);
    if (!idx)
      throw std::logic_error("inner_automorphism_indices: missing inner map");
    out.insert(*idx);
  }
  return std::vector<int>(out.begin(), out.end());
}

// ============================================================================
// Reference groups
// ============================================================================

inline FiniteGroup make_cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return group_from_table(std::move(t), false);
}

inline FiniteGroup make_klein_four() {
  // Elements are bit pairs; multiplication is xor.
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return group_from_table(std::move(t), false);
}

/// Dihedral group of order 2*rot: index i + rot*j stands for r^i s^j.
inline FiniteGroup make_dihedral(int rot) {
  int n = 2 * rot;
  auto enc = [rot](int i, int j) { return ((i % rot + rot) % rot) + rot * j; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i1 = 0; i1 < rot; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < rot; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = j1 == 0 ? i1 + i2 : i1 - i2;
          t[enc(i1, j1)][enc(i2, j2)] = enc(i, j1 ^ j2);
        }
  return group_from_table(std::move(t), false);
}

/// Generalized quaternion group of order n = 2^k >= 8:
/// index i + (n/2)*j stands for a^i b^j with a^(n/2) = 1, b^2 = a^(n/4),
/// b a b^(-1) = a^(-1).
inline FiniteGroup make_generalized_quaternion(int n) {
  if (n < 8 || !is_power_of_two(n))
    throw std::domain_error("make_generalized_quaternion: order must be 2^k >= 8");
  int r = n / 2;
  auto enc = [r](int i, int j) { return ((i % r + r) % r) + r * j; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i1 = 0; i1 < r; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < r; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = j1 == 0 ? i1 + i2 : i1 - i2;
          int j = j1 ^ j2;
          if (j1 == 1 && j2 == 1) i += r / 2;  // b^2 = a^(n/4)
          t[enc(i1, j1)][enc(i2, j2)] = enc(i, j);
        }
  return group_from_table(std::move(t), false);
}

/// Symmetric group on n <= 4 symbols; elements are permutations in
/// lexicographic order, multiplication is composition (left acts after right).
inline FiniteGroup make_symmetric(int n) {
  if (n < 1 || n > 4) throw std::domain_error("make_symmetric: n out of range");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  for (int k = 0; k < n; ++k) p[k] = k;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto find = [&](const std::vector<int>& q) {
    for (int k = 0; k < static_cast<int>(perms.size()); ++k)
      if (perms[k] == q) return k;
    throw std::logic_error("make_symmetric: composition escaped");
  };
  int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> q(n);
      for (int x = 0; x < n; ++x) q[x] = perms[a][perms[b][x]];
      t[a][b] = find(q);
    }
  return group_from_table(std::move(t), false);
}

// ============================================================================
// Presentation witnesses
// ============================================================================

/// Looks for (a, b) with a^(n/2) = 1, b^2 = a^(n/4), b a b^(-1) = a^(-1),
/// and <a, b> = G, where n = |G|. Such a pair exhibits G as generalized
/// quaternion of order n.
inline std::optional<std::pair<int, int>>
find_quaternion_presentation_witness(const FiniteGroup& G) {
  int n = G.n;
  if (n < 8 || !is_power_of_two(n)) return std::nullopt;
  for (int a = 0; a < n; ++a) {
    if (order_of(G, a) != n / 2) continue;
    int a_quarter = power_of(G, a, n / 4);
    for (int b = 0; b < n; ++b) {
      if (G.mul[b][b] != a_quarter) continue;
      if (conj_of(G, b, a) != G.inv[a]) continue;
      if (static_cast<int>(subgroup_generated(G, {a, b}).size()) != n) continue;
      return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

/// Looks for (a, b) with a of order n/2, b^2 = 1, b a b^(-1) = a^(-1), and
/// <a, b> = G. Such a pair exhibits G as dihedral of order n = |G|.
inline std::optional<std::pair<int, int>>
find_dihedral_presentation_witness(const FiniteGroup& G) {
  int n = G.n;
  if (n < 4 || n % 2 != 0) return std::nullopt;
  for (int a = 0; a < n; ++a) {
    if (order_of(G, a) != n / 2) continue;
    for (int b = 0; b < n; ++b) {
      if (b == G.id || G.mul[b][b] != G.id) continue;
      if (conj_of(G, b, a) != G.inv[a]) continue;
      if (static_cast<int>(subgroup_generated(G, {a, b}).size()) != n) continue;
      return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace twolocal
