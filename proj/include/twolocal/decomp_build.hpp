#pragma once

/// @file decomp_build.hpp
/// Assembles the verified pushout diagram for one ambient case: transporter
/// summary, subdivision, Grothendieck comparison, node presentation checks,
/// and the emitters (json, dot, text). Included at the end of decomp.hpp.

namespace twolocal {

// ============================================================================
// Transporter category on the centric-radical classes
// ============================================================================

namespace detail {

/// Shared construction for both ambients once carriers are built.
template <class T, class Mul, class Inv>
TransporterSummary transporter_summary_impl(Ambient amb, int level, int m,
                                            const DecompositionCarriers<T>& car,
                                            Mul mul, Inv inv) {
  TransporterSummary ts;
  ts.ambient = amb;
  ts.level = level;
  ts.modulus = m;
  ts.object_ids = {car.q.id, car.s.id};
  ts.heights = {0, 1};
  long long octa_order = static_cast<long long>(car.octa.size());
  long long s_order = static_cast<long long>(car.s.carrier.size());
  ts.aut_orders = {octa_order, s_order};

  // Classified centric-radical set must be exactly the two expected classes.
  auto reports = classify_centric_radical(amb, level, m);
  auto cr = centric_radical_class_names(reports);
  bool cr_ok = cr == expected_cr_class_names(amb);
  std::string got;
  for (const auto& c : cr) { if (!got.empty()) got += " "; got += c; }
  ts.checks.push_back(make_check("centric_radical_set", cr_ok, "classes: " + got));

  // Hypothesis certificates (centralizer = center, finite 2-group).
  for (auto& e : verify_hypotheses(amb, m)) ts.checks.push_back(std::move(e));

  // Cross hom set {g : g Q g^-1 <= S} inside the pool: count it honestly.
  // It is the union of the two subgroups N(Q) and S (everything else in the
  // pool tilts Q onto a conjugate not inside S), so the expected count is
  // |N(Q)| + |S| - |N(Q) meet S|, and in particular not a single torsor.
  std::set<T> smem(car.s.carrier.begin(), car.s.carrier.end());
  long long count = 0;
  for (const auto& g : car.pool) {
    T gi = inv(g);
    bool inside = true;
    for (const auto& u : car.q.gens)
      if (!smem.count(mul(mul(g, u), gi))) { inside = false; break; }
    if (inside) ++count;
  }
  ts.cross_hom_count = count;
  ts.cross_free_transitive = (count == s_order);
  long long chain_order = static_cast<long long>(car.chain.size());
  long long expected_cross = octa_order + s_order - chain_order;
  bool count_ok = count == expected_cross &&
                  static_cast<long long>(car.pool.size()) == 3 * s_order;
  ts.checks.push_back(make_check(
      "transporter_pool_count", count_ok,
      "pool " + std::to_string(car.pool.size()) + " = 3 * " +
          std::to_string(s_order) + ", cross hom " + std::to_string(count) +
          " = " + std::to_string(octa_order) + " + " + std::to_string(s_order) +
          " - " + std::to_string(chain_order)));
  return ts;
}

}  // namespace detail

inline TransporterSummary build_transporter_cr(Ambient amb, int level, int m) {
  TransporterSummary ts;
  if (amb == Ambient::SU2) {
    auto car = su2_carriers(level, m);
    ts = detail::transporter_summary_impl(
        amb, level, m, car,
        [](const CycQuaternion& a, const CycQuaternion& b) { return a * b; },
        [](const CycQuaternion& a) { return a.inverse(); });
  } else {
    auto car = so3_carriers(level, m);
    ts = detail::transporter_summary_impl(
        amb, level, m, car,
        [](const ProjQuaternion& a, const ProjQuaternion& b) { return a * b; },
        [](const ProjQuaternion& a) { return a.inverse(); });
  }
  refuse_if_failed(ts.checks);
  return ts;
}

// ============================================================================
// Normalizer certificates
// ============================================================================

namespace detail {

/// Builds a finite group from a closed carrier set under the ambient mul.
template <class T, class Mul, class Inv>
FiniteGroup carrier_group(const std::vector<T>& carrier, Mul mul, Inv inv,
                          const T& id_el) {
  (void)inv;
  return closure_group<T>(id_el, carrier, mul, carrier.size() + 1).group;
}

template <class T, class Mul, class Inv>
std::vector<VerificationEntry> normalizer_certificates(
    Ambient amb, int level, const DecompositionCarriers<T>& car, Mul mul,
    Inv inv, const T& id_el) {
  std::vector<VerificationEntry> out;
  bool su2 = amb == Ambient::SU2;
  std::string qn = su2 ? "q8" : "v";
  std::string sn = su2 ? "s" : "sbar";
  std::string closure_name = su2 ? "octahedral_closure" : "rotation_closure";
  long long expect_closure = su2 ? 48 : 24;
  long long expect_chain = su2 ? 16 : 8;

  // Normalizer of the rank-2 subgroup inside the truncation, symbolically
  // and by brute force, with the presentation witness on the result.
  SSubgroup qsym = make_ext(amb, su2 ? 2 : 1, DyadicAngle());
  SSubgroup nsym = s_normalizer(qsym);
  bool sym_ok = nsym == make_ext(amb, su2 ? 3 : 2, DyadicAngle());
  auto trunc = truncated_group(amb, level);
  std::vector<int> qidx;
  for (std::size_t i = 0; i < trunc.carrier.size(); ++i)
    if (qsym.member(trunc.carrier[i])) qidx.push_back(static_cast<int>(i));
  auto nidx = normalizer_in(trunc.group, qidx);
  std::vector<SElement> nel;
  for (int i : nidx) nel.push_back(trunc.carrier[i]);
  bool brute_ok = sets_equal_selements(nel, materialize(nsym).carrier) &&
                  static_cast<long long>(nidx.size()) == expect_chain;
  auto ngrp = restrict_to(trunc.group, nidx);
  bool pres_ok = su2 ? find_quaternion_presentation_witness(ngrp).has_value()
                     : find_dihedral_presentation_witness(ngrp).has_value();
  out.push_back(make_check(
      "normalizer_in_" + sn + "_of_" + qn, sym_ok && brute_ok && pres_ok,
      "order " + std::to_string(nidx.size()) +
          (su2 ? ", quaternion presentation" : ", dihedral presentation")));

  // The octahedral closure: order, normalizing property, and fullness (the
  // induced automorphisms exhaust Aut of the rank-2 subgroup and the kernel
  // is the center of the ambient group).
  bool order_ok = static_cast<long long>(car.octa.size()) == expect_closure;
  out.push_back(make_check(closure_name + "_order_" + std::to_string(expect_closure),
                           order_ok, "closure of {i, j, omega, tau}"));

  bool normalizes = true;
  std::set<std::vector<int>> induced;
  std::map<T, int> qpos;
  for (std::size_t i = 0; i < car.q.carrier.size(); ++i)
    qpos[car.q.carrier[i]] = static_cast<int>(i);
  for (const auto& g : car.octa) {
    T gi = inv(g);
    std::vector<int> perm;
    for (const auto& q : car.q.carrier) {
      T c = mul(mul(g, q), gi);
      auto it = qpos.find(c);
      if (it == qpos.end()) { normalizes = false; break; }
      perm.push_back(it->second);
    }
    if (!normalizes) break;
    induced.insert(perm);
  }
  out.push_back(make_check(closure_name + "_normalizes_" + qn, normalizes));

  auto qgrp = carrier_group(car.q.carrier, mul, inv, id_el);
  long long aut_order = automorphism_group(qgrp).group.n;
  long long kernel = normalizes ? expect_closure / static_cast<long long>(induced.size()) : 0;
  bool full = normalizes &&
              static_cast<long long>(induced.size()) == aut_order &&
              kernel * aut_order == expect_closure && (su2 ? kernel == 2 : kernel == 4);
  out.push_back(make_check(
      closure_name + "_is_full_normalizer", full,
      std::to_string(induced.size()) + " induced automorphisms, kernel order " +
          std::to_string(kernel)));

  // The chain group is the exact intersection of the closure with the
  // truncated 2-toral group; its order matches the symbolic normalizer.
  bool chain_ok = static_cast<long long>(car.chain.size()) == expect_chain;
  out.push_back(make_check("chain_group_is_closure_intersect_" + sn, chain_ok,
                           "order " + std::to_string(car.chain.size())));
  return out;
}

}  // namespace detail

// ============================================================================
// Diagram assembly
// ============================================================================

struct DiagramNode {
  std::string id;
  std::string group_name;
  long long order = 0;
  bool presentation_check = false;
  int height = 0;
};

struct DiagramEdge {
  std::string src;
  std::string dst;
  std::string kind = "inclusion";
};

struct DecompositionResult {
  Ambient ambient = Ambient::SU2;
  int level = 0;
  int modulus = 0;
  std::vector<DiagramNode> nodes;
  std::vector<DiagramEdge> edges;
  std::vector<VerificationEntry> verifications;
  std::vector<std::string> warnings;
};

namespace detail {

template <class T, class Mul, class Inv>
DecompositionResult build_decomposition_impl(Ambient amb, int level, int m,
                                             const DecompositionCarriers<T>& car,
                                             Mul mul, Inv inv, const T& id_el) {
  DecompositionResult res;
  res.ambient = amb;
  res.level = level;
  res.modulus = m;
  bool su2 = amb == Ambient::SU2;

  auto ts = detail::transporter_summary_impl(amb, level, m, car, mul, inv);
  res.verifications = ts.checks;
  for (auto& e : detail::normalizer_certificates(amb, level, car, mul, inv, id_el))
    res.verifications.push_back(std::move(e));

  // Subdivision: chains over the two transporter objects with the pool as
  // morphism supply.
  TransporterInput<T> input;
  input.objects = {car.q, car.s};
  input.pool = car.pool;
  auto sd = subdivide_chains(input, mul, inv);
  bool three = sd.ids.size() == 3;
  res.verifications.push_back(make_check("subdivision_three_chain_classes", three));

  long long s_order = static_cast<long long>(car.s.carrier.size());
  long long expect_chain_aut = su2 ? 16 : 8;
  long long expect_octa = su2 ? 48 : 24;
  auto aut_size = [&](int i) -> long long {
    const auto* h = sd.hom_set(i, i);
    return h ? static_cast<long long>(h->size()) : 0;
  };
  // Object order: the full chain first, then {Q}, then {S}.
  bool aut_ok = three && aut_size(0) == expect_chain_aut &&
                aut_size(1) == expect_octa && aut_size(2) == s_order;
  res.verifications.push_back(make_check(
      "subdivision_aut_orders", aut_ok,
      "(" + std::to_string(aut_size(0)) + ", " + std::to_string(aut_size(1)) +
          ", " + std::to_string(aut_size(2)) + ")"));

  // The chain automorphism group equals the closure-with-truncation
  // intersection elementwise.
  bool chain_match = false;
  if (three) {
    const auto* h = sd.hom_set(0, 0);
    chain_match = h && *h == car.chain;
  }
  res.verifications.push_back(
      make_check("chain_aut_equals_intersection", chain_match));

  for (auto& e : check_chain_category(sd, mul, inv, id_el))
    res.verifications.push_back(std::move(e));
  for (auto& e : check_torsors(sd, mul)) res.verifications.push_back(std::move(e));

  // Grothendieck construction over the index poset and the witness functor.
  PosetDiagram<T> poset;
  poset.ids = {sd.keys[0], sd.keys[1], sd.keys[2]};
  poset.arrows = {{0, 1}, {0, 2}};
  poset.groups = {car.chain, *sd.hom_set(1, 1), *sd.hom_set(2, 2)};
  auto gr = grothendieck(poset, mul);
  for (auto& e : check_witness_functor(gr, sd, {0, 1, 2}, mul))
    res.verifications.push_back(std::move(e));

  // Edge inclusions: the chain group embeds in both singleton groups.
  bool incl_ok = true;
  for (const auto& x : car.chain) {
    if (!std::binary_search(sd.hom_set(1, 1)->begin(), sd.hom_set(1, 1)->end(), x) ||
        !std::binary_search(sd.hom_set(2, 2)->begin(), sd.hom_set(2, 2)->end(), x))
      incl_ok = false;
  }
  res.verifications.push_back(make_check("edge_inclusions_hold", incl_ok));

  // Nodes: named by verified isomorphism type, ordered by height then order.
  auto chain_grp = detail::carrier_group(car.chain, mul, inv, id_el);
  auto s_grp = detail::carrier_group(car.s.carrier, mul, inv, id_el);
  auto octa_grp = detail::carrier_group(car.octa, mul, inv, id_el);

  DiagramNode chain_node, s_node, octa_node;
  if (su2) {
    chain_node = {"BQ16", "Q16", 16,
                  find_quaternion_presentation_witness(chain_grp).has_value(), 0};
    s_node = {"BS", "S", s_order,
              find_quaternion_presentation_witness(s_grp).has_value(), 1};
    bool octa_pres = octa_grp.n == 48;
    if (octa_pres) {
      std::vector<int> center_idx;
      for (int i = 0; i < octa_grp.n; ++i) {
        bool central = true;
        for (int j = 0; j < octa_grp.n && central; ++j)
          if (octa_grp.at(i, j) != octa_grp.at(j, i)) central = false;
        if (central && order_of(octa_grp, i) <= 2) center_idx.push_back(i);
      }
      auto quot = quotient_group(octa_grp, center_idx);
      octa_pres = find_isomorphism(quot.group, make_symmetric(4)).has_value();
    }
    octa_node = {"BO48", "O48", 48, octa_pres, 1};
  } else {
    chain_node = {"BD4", "D4", 8,
                  find_dihedral_presentation_witness(chain_grp).has_value(), 0};
    s_node = {"BSbar", "Sbar", s_order,
              find_dihedral_presentation_witness(s_grp).has_value(), 1};
    bool octa_pres = octa_grp.n == 24 &&
                     find_isomorphism(octa_grp, make_symmetric(4)).has_value();
    octa_node = {"BO24", "O24", 24, octa_pres, 1};
    res.warnings.push_back(
        "the order-8 chain group is dihedral, not quaternion; named by its "
        "verified isomorphism type D4");
    res.verifications.push_back(
        make_check("warn_chain_group_dihedral_order_8",
                   find_dihedral_presentation_witness(chain_grp).has_value(),
                   "recorded as D4 by presentation witness"));
  }
  res.nodes.push_back(chain_node);
  if (octa_node.order <= s_node.order) {
    res.nodes.push_back(octa_node);
    res.nodes.push_back(s_node);
  } else {
    res.nodes.push_back(s_node);
    res.nodes.push_back(octa_node);
  }
  res.edges.push_back({res.nodes[0].id, res.nodes[1].id, "inclusion"});
  res.edges.push_back({res.nodes[0].id, res.nodes[2].id, "inclusion"});

  bool pres_all = chain_node.presentation_check && s_node.presentation_check &&
                  octa_node.presentation_check;
  res.verifications.push_back(make_check("node_presentation_checks", pres_all));
  return res;
}

}  // namespace detail

/// Builds the full decomposition diagram, running every verification; any
/// failed check refuses the build by throwing verification_error.
inline DecompositionResult build_decomposition(Ambient amb, int level, int m) {
  DecompositionResult res;
  if (amb == Ambient::SU2) {
    auto car = su2_carriers(level, m);
    res = detail::build_decomposition_impl(
        amb, level, m, car,
        [](const CycQuaternion& a, const CycQuaternion& b) { return a * b; },
        [](const CycQuaternion& a) { return a.inverse(); }, quat_identity(m));
  } else {
    auto car = so3_carriers(level, m);
    res = detail::build_decomposition_impl(
        amb, level, m, car,
        [](const ProjQuaternion& a, const ProjQuaternion& b) { return a * b; },
        [](const ProjQuaternion& a) { return a.inverse(); }, proj_identity(m));
  }
  refuse_if_failed(res.verifications);
  return res;
}

// ============================================================================
// Emitters
// ============================================================================

inline std::string emit_json(const DecompositionResult& r) {
  nlohmann::ordered_json doc;
  doc["ambient"] = ambient_name(r.ambient);
  doc["level"] = r.level;
  doc["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : r.nodes) {
    nlohmann::ordered_json node;
    node["id"] = n.id;
    node["group"] = {{"name", n.group_name},
                     {"order", n.order},
                     {"presentation_check", n.presentation_check}};
    doc["nodes"].push_back(node);
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : r.edges)
    doc["edges"].push_back({{"src", e.src}, {"dst", e.dst}, {"kind", e.kind}});
  doc["verifications"] = nlohmann::ordered_json::array();
  for (const auto& v : r.verifications)
    doc["verifications"].push_back({{"name", v.name}, {"pass", v.pass}});
  return doc.dump(2) + "\n";
}

inline std::string emit_dot(const DecompositionResult& r) {
  std::ostringstream os;
  os << "digraph decomposition {\n";
  for (const auto& n : r.nodes)
    os << "  \"" << n.id << "\" [label=\"" << n.id << " (" << n.group_name
       << ", " << n.order << ")\"];\n";
  for (const auto& e : r.edges)
    os << "  \"" << e.src << "\" -> \"" << e.dst << "\" [label=\"" << e.kind
       << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::string emit_text(const DecompositionResult& r) {
  std::ostringstream os;
  os << "ambient: " << ambient_name(r.ambient) << "\n";
  os << "level: " << r.level << "\n";
  for (const auto& n : r.nodes)
    os << "node " << n.id << " group=" << n.group_name << " order=" << n.order
       << " presentation_check=" << (n.presentation_check ? "true" : "false")
       << "\n";
  for (const auto& e : r.edges)
    os << "edge " << e.src << " -> " << e.dst << " kind=" << e.kind << "\n";
  for (const auto& v : r.verifications)
    os << "verification " << v.name << " " << (v.pass ? "pass" : "FAIL") << "\n";
  for (const auto& w : r.warnings) os << "WARN: " << w << "\n";
  os << "result: verified\n";
  return os.str();
}

/// Emits the decomposition in the requested format ("json", "dot", "text").
/// Precondition: all verifications passed (build_decomposition enforces it).
inline std::string emit_decomposition(const DecompositionResult& r,
                                      const std::string& format) {
  refuse_if_failed(r.verifications);
  if (format == "json") return emit_json(r);
  if (format == "dot") return emit_dot(r);
  if (format == "text") return emit_text(r);
  throw std::domain_error("emit_decomposition: unknown format " + format);
}

}  // namespace twolocal
