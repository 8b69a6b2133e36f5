#include "twolocal/fingroup.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

namespace tl = twolocal;

namespace {

// Every subgroup, found by closing each known subgroup with one new element.
std::set<std::vector<int>> all_subgroups_of(const tl::FiniteGroup& G) {
  std::set<std::vector<int>> done;
  std::set<std::vector<int>> frontier = {tl::subgroup_generated(G, {})};
  while (!frontier.empty()) {
    auto cur = *frontier.begin();
    frontier.erase(frontier.begin());
    if (done.count(cur)) continue;
    std::vector<char> in(G.n, 0);
    for (int x : cur) in[x] = 1;
    for (int x = 0; x < G.n; ++x) {
      if (in[x]) continue;
      auto gens = cur;
      gens.push_back(x);
      frontier.insert(tl::subgroup_generated(G, gens));
    }
    done.insert(std::move(cur));
  }
  return done;
}

// Largest normal 2-subgroup, computed from the full subgroup lattice.
std::vector<int> o2_via_lattice(const tl::FiniteGroup& G) {
  std::set<int> gens;
  for (const auto& H : all_subgroups_of(G)) {
    if (!tl::is_power_of_two(static_cast<long long>(H.size()))) continue;
    if (!tl::is_normal(G, H)) continue;
    gens.insert(H.begin(), H.end());
  }
  auto big = tl::subgroup_generated(G, std::vector<int>(gens.begin(), gens.end()));
  EXPECT_TRUE(tl::is_normal(G, big));
  EXPECT_TRUE(tl::is_power_of_two(static_cast<long long>(big.size())));
  return big;
}

// Largest normal 2-subgroup as the intersection of all Sylow 2-subgroups.
std::vector<int> o2_via_sylow_intersection(const tl::FiniteGroup& G) {
  long long two_part = 1;
  while (G.n % (two_part * 2) == 0) two_part *= 2;
  std::set<int> meet;
  bool first = true;
  for (const auto& H : all_subgroups_of(G)) {
    if (static_cast<long long>(H.size()) != two_part) continue;
    std::set<int> h(H.begin(), H.end());
    if (first) {
      meet = h;
      first = false;
    } else {
      std::set<int> next;
      for (int x : meet)
        if (h.count(x)) next.insert(x);
      meet = next;
    }
  }
  EXPECT_FALSE(first);  // at least one Sylow 2-subgroup exists
  return {meet.begin(), meet.end()};
}

}  // namespace

// ============================================================================
// Table construction
// ============================================================================

TEST(GroupFromTable, FindsIdentityAndInverses) {
  // Z3 written with the identity at index 2.
  std::vector<std::vector<int>> t = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  auto G = tl::group_from_table(t);
  EXPECT_EQ(G.n, 3);
  EXPECT_EQ(G.id, 2);
  EXPECT_EQ(G.inv[0], 1);
  EXPECT_EQ(G.inv[1], 0);
  EXPECT_EQ(G.inv[2], 2);
  EXPECT_EQ(G.at(0, 0), 1);
}

TEST(GroupFromTable, RejectsMalformedTables) {
  EXPECT_THROW(tl::group_from_table({}), std::domain_error);
  EXPECT_THROW(tl::group_from_table({{0, 1}, {1}}), std::domain_error);
  EXPECT_THROW(tl::group_from_table({{0, 2}, {1, 0}}), std::domain_error);
  // No two-sided identity.
  EXPECT_THROW(tl::group_from_table({{0, 1}, {0, 1}}), std::domain_error);
  // Identity exists but 1 has no inverse.
  EXPECT_THROW(tl::group_from_table({{0, 1, 2}, {1, 1, 1}, {2, 1, 1}}),
               std::domain_error);
}

TEST(GroupFromTable, DetectsNonAssociativeLoop) {
  // Order-5 loop with two-sided identity and inverses; it cannot be a group
  // (a group of order 5 is cyclic, this one has every element an involution).
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}};
  EXPECT_THROW(tl::group_from_table(loop, true), std::domain_error);
  EXPECT_NO_THROW(tl::group_from_table(loop, false));
}

TEST(Basics, OrderPowerConjugate) {
  auto Q8 = tl::make_generalized_quaternion(8);
  // Index i + 4j encodes a^i b^j.
  EXPECT_EQ(tl::order_of(Q8, 0), 1);
  EXPECT_EQ(tl::order_of(Q8, 1), 4);
  EXPECT_EQ(tl::order_of(Q8, 2), 2);
  EXPECT_EQ(tl::order_of(Q8, 4), 4);
  EXPECT_EQ(tl::power_of(Q8, 1, 6), 2);
  EXPECT_EQ(tl::power_of(Q8, 1, -1), Q8.inv[1]);
  EXPECT_EQ(tl::power_of(Q8, 1, 0), Q8.id);
  // b a b^(-1) = a^(-1).
  EXPECT_EQ(tl::conj_of(Q8, 4, 1), Q8.inv[1]);
}

TEST(Basics, PowerOfTwoPredicate) {
  EXPECT_TRUE(tl::is_power_of_two(1));
  EXPECT_TRUE(tl::is_power_of_two(2));
  EXPECT_TRUE(tl::is_power_of_two(1024));
  EXPECT_FALSE(tl::is_power_of_two(0));
  EXPECT_FALSE(tl::is_power_of_two(3));
  EXPECT_FALSE(tl::is_power_of_two(-4));
}

// ============================================================================
// Subgroups
// ============================================================================

TEST(Subgroups, GeneratedAndMembership) {
  auto Q8 = tl::make_generalized_quaternion(8);
  EXPECT_EQ(tl::subgroup_generated(Q8, {}), (std::vector<int>{0}));
  EXPECT_EQ(tl::subgroup_generated(Q8, {1}), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(tl::subgroup_generated(Q8, {2}), (std::vector<int>{0, 2}));
  EXPECT_EQ(tl::subgroup_generated(Q8, {1, 4}).size(), 8u);
  EXPECT_TRUE(tl::is_subgroup(Q8, {0, 1, 2, 3}));
  EXPECT_FALSE(tl::is_subgroup(Q8, {0, 1}));
  EXPECT_FALSE(tl::is_subgroup(Q8, {1, 2, 3}));  // missing identity
}

TEST(Subgroups, RestrictTo) {
  auto Q8 = tl::make_generalized_quaternion(8);
  std::vector<int> old_index;
  auto C4 = tl::restrict_to(Q8, {0, 1, 2, 3}, &old_index);
  EXPECT_EQ(C4.n, 4);
  EXPECT_EQ(old_index, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_TRUE(tl::find_isomorphism(C4, tl::make_cyclic(4)).has_value());
  EXPECT_THROW(tl::restrict_to(Q8, {0, 1}), std::domain_error);
}

TEST(Subgroups, CentralizerNormalizerCenter) {
  auto Q8 = tl::make_generalized_quaternion(8);
  EXPECT_EQ(tl::center_of(Q8), (std::vector<int>{0, 2}));
  EXPECT_EQ(tl::centralizer_in(Q8, {1}), (std::vector<int>{0, 1, 2, 3}));
  // The cyclic maximal subgroup is self-centralizing and normal.
  EXPECT_EQ(tl::centralizer_in(Q8, {0, 1, 2, 3}), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(tl::normalizer_in(Q8, {0, 1, 2, 3}).size(), 8u);
  EXPECT_EQ(tl::normalizer_in(Q8, {0, 2}).size(), 8u);
}

TEST(Subgroups, SylowTwoOfS4IsSelfNormalizingDihedral) {
  auto S4 = tl::make_symmetric(4);
  int count = 0;
  for (const auto& H : all_subgroups_of(S4)) {
    if (H.size() != 8) continue;
    ++count;
    EXPECT_EQ(tl::normalizer_in(S4, H), H);
    EXPECT_TRUE(
        tl::find_isomorphism(tl::restrict_to(S4, H), tl::make_dihedral(4))
            .has_value());
  }
  EXPECT_EQ(count, 3);
}

TEST(Subgroups, ConjugacyClassSizes) {
  auto Q8 = tl::make_generalized_quaternion(8);
  std::multiset<std::size_t> sizes;
  for (const auto& c : tl::conjugacy_classes(Q8)) sizes.insert(c.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 1, 2, 2, 2}));
  auto S4 = tl::make_symmetric(4);
  sizes.clear();
  for (const auto& c : tl::conjugacy_classes(S4)) sizes.insert(c.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 3, 6, 6, 8}));
}

TEST(Subgroups, NormalClosureAndCommutator) {
  auto S4 = tl::make_symmetric(4);
  // A transposition normally generates the whole of S4.
  EXPECT_EQ(tl::order_of(S4, 1), 2);
  EXPECT_EQ(tl::normal_closure(S4, {1}).size(), 24u);
  EXPECT_EQ(tl::commutator_subgroup(S4).size(), 12u);
  auto Q8 = tl::make_generalized_quaternion(8);
  EXPECT_EQ(tl::commutator_subgroup(Q8), (std::vector<int>{0, 2}));
  EXPECT_EQ(tl::commutator_subgroup(tl::make_dihedral(4)).size(), 2u);
  EXPECT_TRUE(tl::is_normal(Q8, {0, 1, 2, 3}));
  EXPECT_FALSE(tl::is_normal(S4, tl::subgroup_generated(S4, {1})));
}

// ============================================================================
// Quotients
// ============================================================================

TEST(Quotients, CentralQuotientsAreKleinFour) {
  for (auto G : {tl::make_generalized_quaternion(8), tl::make_dihedral(4)}) {
    auto q = tl::quotient_group(G, tl::center_of(G));
    EXPECT_EQ(q.group.n, 4);
    EXPECT_TRUE(tl::find_isomorphism(q.group, tl::make_klein_four()).has_value());
    EXPECT_TRUE(tl::is_homomorphism(G, q.group, tl::GroupMap{q.proj}));
    EXPECT_FALSE(tl::is_monomorphism(G, q.group, tl::GroupMap{q.proj}));
  }
}

TEST(Quotients, RejectsNonNormalSubgroup) {
  auto S4 = tl::make_symmetric(4);
  EXPECT_THROW(tl::quotient_group(S4, tl::subgroup_generated(S4, {1})),
               std::domain_error);
  EXPECT_THROW(tl::quotient_group(S4, {0, 1}), std::domain_error);
}

TEST(Quotients, S4ModuloKleinFourIsS3) {
  auto S4 = tl::make_symmetric(4);
  auto V = o2_via_lattice(S4);
  ASSERT_EQ(V.size(), 4u);
  auto q = tl::quotient_group(S4, V);
  EXPECT_TRUE(tl::find_isomorphism(q.group, tl::make_symmetric(3)).has_value());
}

// ============================================================================
// The 2-core against two independent oracles
// ============================================================================

TEST(O2Radical, MatchesLatticeAndSylowOracles) {
  struct Case {
    tl::FiniteGroup G;
    std::size_t expected;
  };
  std::vector<Case> cases;
  cases.push_back({tl::make_symmetric(4), 4});   // the Klein four subgroup
  cases.push_back({tl::make_symmetric(3), 1});
  cases.push_back({tl::make_generalized_quaternion(8), 8});
  cases.push_back({tl::make_dihedral(4), 8});
  cases.push_back({tl::make_cyclic(8), 8});
  cases.push_back({tl::make_dihedral(6), 2});    // center of D6
  for (const auto& c : cases) {
    auto got = tl::o2_radical(c.G);
    EXPECT_EQ(got.size(), c.expected) << "order " << c.G.n;
    EXPECT_EQ(got, o2_via_lattice(c.G)) << "order " << c.G.n;
    EXPECT_EQ(got, o2_via_sylow_intersection(c.G)) << "order " << c.G.n;
  }
}

// ============================================================================
// Isomorphisms
// ============================================================================

TEST(Isomorphism, InvariantsSeparateQ8FromD4) {
  auto Q8 = tl::make_generalized_quaternion(8);
  auto D4 = tl::make_dihedral(4);
  EXPECT_FALSE(tl::invariants_match(Q8, D4));
  EXPECT_TRUE(tl::invariants_match(Q8, Q8));
  EXPECT_FALSE(tl::invariants_match(Q8, tl::make_cyclic(8)));
}

TEST(Isomorphism, PositiveAndNegativeSearches) {
  EXPECT_TRUE(
      tl::find_isomorphism(tl::make_dihedral(3), tl::make_symmetric(3)).has_value());
  auto f = tl::find_isomorphism(tl::make_dihedral(3), tl::make_symmetric(3));
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(tl::is_monomorphism(tl::make_dihedral(3), tl::make_symmetric(3), *f));
  EXPECT_FALSE(tl::find_isomorphism(tl::make_generalized_quaternion(8),
                                    tl::make_dihedral(4))
                   .has_value());
  EXPECT_FALSE(
      tl::find_isomorphism(tl::make_cyclic(4), tl::make_klein_four()).has_value());
  EXPECT_TRUE(
      tl::find_isomorphism(tl::make_cyclic(1), tl::make_symmetric(1)).has_value());
}

TEST(Isomorphism, LabelsConstrainTheSearch) {
  auto Z4 = tl::make_cyclic(4);
  std::vector<int> distinct = {0, 1, 2, 3};
  std::vector<int> constant = {7, 7, 7, 7};
  EXPECT_EQ(tl::all_isomorphisms_labeled(Z4, Z4, distinct, distinct).size(), 1u);
  EXPECT_EQ(tl::all_isomorphisms_labeled(Z4, Z4, constant, constant).size(), 2u);
  // Swapped labels force the inversion automorphism.
  std::vector<int> swapped = {0, 3, 2, 1};
  auto maps = tl::all_isomorphisms_labeled(Z4, Z4, distinct, swapped);
  ASSERT_EQ(maps.size(), 1u);
  EXPECT_EQ(maps[0].img, (std::vector<int>{0, 3, 2, 1}));
  EXPECT_EQ(tl::find_isomorphism_labeled(Z4, Z4, distinct, swapped)->img[1], 3);
  std::vector<int> clash = {0, 1, 2, 4};
  EXPECT_TRUE(tl::all_isomorphisms_labeled(Z4, Z4, distinct, clash).empty());
}

TEST(Isomorphism, HomomorphismPredicateRejectsBadMaps) {
  auto Z4 = tl::make_cyclic(4);
  EXPECT_FALSE(tl::is_homomorphism(Z4, Z4, tl::GroupMap{{0, 2, 1, 3}}));
  EXPECT_FALSE(tl::is_homomorphism(Z4, Z4, tl::GroupMap{{0, 1}}));
  EXPECT_TRUE(tl::is_homomorphism(Z4, Z4, tl::GroupMap{{0, 3, 2, 1}}));
}

// ============================================================================
// Automorphism groups
// ============================================================================

TEST(Automorphisms, FrozenOrders) {
  EXPECT_EQ(tl::automorphism_group(tl::make_generalized_quaternion(8)).group.n, 24);
  EXPECT_EQ(tl::automorphism_group(tl::make_klein_four()).group.n, 6);
  EXPECT_EQ(tl::automorphism_group(tl::make_cyclic(8)).group.n, 4);
  EXPECT_EQ(tl::automorphism_group(tl::make_cyclic(6)).group.n, 2);
  EXPECT_EQ(tl::automorphism_group(tl::make_dihedral(4)).group.n, 8);
  EXPECT_EQ(tl::automorphism_group(tl::make_symmetric(4)).group.n, 24);
  EXPECT_EQ(tl::automorphism_group(tl::make_generalized_quaternion(16)).group.n, 32);
}

TEST(Automorphisms, BudgetGuard) {
  EXPECT_THROW(tl::automorphism_group(tl::make_cyclic(128)), tl::budget_error);
}

TEST(Automorphisms, OuterGroupOfQ8IsS3) {
  auto Q8 = tl::make_generalized_quaternion(8);
  auto aut = tl::automorphism_group(Q8);
  auto inner = tl::inner_automorphism_indices(Q8, aut);
  EXPECT_EQ(inner.size(), 4u);
  ASSERT_TRUE(tl::is_normal(aut.group, inner));
  auto out = tl::quotient_group(aut.group, inner);
  EXPECT_EQ(out.group.n, 6);
  EXPECT_TRUE(tl::find_isomorphism(out.group, tl::make_symmetric(3)).has_value());
}

TEST(Automorphisms, OuterGroupSizes) {
  auto D4 = tl::make_dihedral(4);
  auto autD4 = tl::automorphism_group(D4);
  EXPECT_EQ(tl::inner_automorphism_indices(D4, autD4).size(), 4u);
  auto S4 = tl::make_symmetric(4);
  auto autS4 = tl::automorphism_group(S4);
  // S4 is complete: every automorphism is inner.
  EXPECT_EQ(tl::inner_automorphism_indices(S4, autS4).size(), 24u);
}

// ============================================================================
// Reference groups and presentation witnesses
// ============================================================================

TEST(ReferenceGroups, BasicShapes) {
  EXPECT_EQ(tl::make_cyclic(6).n, 6);
  EXPECT_EQ(tl::order_of(tl::make_cyclic(6), 1), 6);
  auto V = tl::make_klein_four();
  for (int x = 1; x < 4; ++x) EXPECT_EQ(tl::order_of(V, x), 2);
  auto D4 = tl::make_dihedral(4);
  EXPECT_EQ(D4.n, 8);
  EXPECT_EQ(tl::order_of(D4, 1), 4);
  EXPECT_EQ(tl::order_of(D4, 4), 2);
  EXPECT_EQ(tl::make_symmetric(4).n, 24);
  EXPECT_EQ(tl::make_symmetric(1).n, 1);
}

TEST(ReferenceGroups, ConstructorGuards) {
  EXPECT_THROW(tl::make_generalized_quaternion(4), std::domain_error);
  EXPECT_THROW(tl::make_generalized_quaternion(6), std::domain_error);
  EXPECT_THROW(tl::make_generalized_quaternion(12), std::domain_error);
  EXPECT_THROW(tl::make_symmetric(0), std::domain_error);
  EXPECT_THROW(tl::make_symmetric(5), std::domain_error);
}

TEST(Witnesses, QuaternionPresentation) {
  for (int n : {8, 16, 32}) {
    auto G = tl::make_generalized_quaternion(n);
    auto w = tl::find_quaternion_presentation_witness(G);
    ASSERT_TRUE(w.has_value()) << n;
    auto [a, b] = *w;
    EXPECT_EQ(tl::order_of(G, a), n / 2);
    EXPECT_EQ(G.mul[b][b], tl::power_of(G, a, n / 4));
    EXPECT_EQ(tl::conj_of(G, b, a), G.inv[a]);
    EXPECT_EQ(tl::subgroup_generated(G, {a, b}).size(), static_cast<std::size_t>(n));
  }
  EXPECT_FALSE(tl::find_quaternion_presentation_witness(tl::make_dihedral(4)));
  EXPECT_FALSE(tl::find_quaternion_presentation_witness(tl::make_cyclic(8)));
  EXPECT_FALSE(tl::find_quaternion_presentation_witness(tl::make_symmetric(3)));
}

TEST(Witnesses, DihedralPresentation) {
  for (int rot : {2, 4, 6, 8}) {
    auto G = tl::make_dihedral(rot);
    auto w = tl::find_dihedral_presentation_witness(G);
    ASSERT_TRUE(w.has_value()) << rot;
    auto [a, b] = *w;
    EXPECT_EQ(tl::order_of(G, a), rot);
    EXPECT_EQ(G.mul[b][b], G.id);
    EXPECT_EQ(tl::conj_of(G, b, a), G.inv[a]);
  }
  // The Klein four group is dihedral of order 4.
  EXPECT_TRUE(tl::find_dihedral_presentation_witness(tl::make_klein_four()));
  EXPECT_FALSE(
      tl::find_dihedral_presentation_witness(tl::make_generalized_quaternion(8)));
  EXPECT_FALSE(tl::find_dihedral_presentation_witness(tl::make_cyclic(4)));
}

TEST(Generators, GreedySetGeneratesWholeGroup) {
  for (auto G : {tl::make_generalized_quaternion(8), tl::make_dihedral(4),
                 tl::make_symmetric(4), tl::make_cyclic(8)}) {
    auto gens = tl::greedy_generators(G);
    EXPECT_EQ(tl::subgroup_generated(G, gens).size(),
              static_cast<std::size_t>(G.n));
    EXPECT_LE(gens.size(), 3u);
  }
  EXPECT_EQ(tl::greedy_generators(tl::make_cyclic(8)).size(), 1u);
  EXPECT_TRUE(tl::greedy_generators(tl::make_cyclic(1)).empty());
}

// ============================================================================
// Closures over a carrier type
// ============================================================================

TEST(Closure, BuildsCyclicGroupFromResidues) {
  auto mul = [](int a, int b) { return (a + b) % 6; };
  auto C = tl::closure_group<int>(0, {1}, mul, 6);
  EXPECT_EQ(C.group.n, 6);
  EXPECT_EQ(C.carrier.size(), 6u);
  EXPECT_TRUE(tl::find_isomorphism(C.group, tl::make_cyclic(6)).has_value());
  ASSERT_TRUE(C.index_of(3).has_value());
  EXPECT_EQ(C.carrier[*C.index_of(3)], 3);
  EXPECT_FALSE(C.index_of(7).has_value());
  EXPECT_EQ(C.group.gens.size(), 1u);
  EXPECT_THROW(tl::closure_group<int>(0, {1}, mul, 5), tl::budget_error);
}

TEST(Closure, PermutationComposition) {
  tl::Perm a = {1, 0, 2};
  tl::Perm b = {0, 2, 1};
  EXPECT_EQ(tl::compose_perm(a, b), (tl::Perm{1, 2, 0}));
  EXPECT_EQ(tl::compose_perm(b, a), (tl::Perm{2, 0, 1}));
}
