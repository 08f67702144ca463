#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nodal/brauer/brauer.hpp"
#include "nodal/geometry/perazzo.hpp"
#include "nodal/lattice/exact.hpp"
#include "nodal/lattice/standard.hpp"
#include "nodal/report/check.hpp"
#include "nodal/segre/segre.hpp"
#include "nodal/torsor/torsor.hpp"

namespace nodal {

inline constexpr const char* kReportSchema = "nodal-report/1";
inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Hyperplane section used by default: discriminant 113, good primes 11, 13, 17.
inline std::array<Rational, 6> default_hyperplane() { return {1, 2, 4, 3, 5, 7}; }

struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<Check> checks;
  bool passed() const { return all_passed(checks); }
};

inline nlohmann::json to_json(const CriterionResult& c) {
  return {{"criterion", c.number}, {"title", c.title}, {"passed", c.passed()}, {"checks", to_json(c.checks)}};
}

inline nlohmann::json report_envelope(const std::string& command, std::uint64_t seed) {
  return {{"schema", kReportSchema}, {"command", command}, {"seed", seed}};
}

// ---- one function per acceptance criterion ----

inline CriterionResult criterion_brauer_table() {
  CriterionResult c{1, "Brauer table over all subgroup classes", {}};
  c.checks = brauer_table_checks(brauer_table());
  const auto two = two_torsion_vanishing();
  c.checks.push_back({"brauer.two_subgroups_vanish", two.ok(),
                      {{"subgroups_checked", two.subgroups_checked}, {"vanishing", two.vanishing}}});
  return c;
}

inline CriterionResult criterion_blowup_comparison() {
  CriterionResult c{2, "Blow-up comparison on every subgroup class", {}};
  std::size_t rows = 0, pic_equal = 0, e_vanish = 0;
  for (const auto& r : brauer_table()) {
    ++rows;
    pic_equal += r.h1_pic == r.h1_pictilde;
    e_vanish += r.h1_exceptional.trivial();
  }
  c.checks.push_back({"blowup.h1_pic_equals_h1_pictilde", rows == 26 && pic_equal == rows, {{"classes", rows}, {"equal", pic_equal}}});
  c.checks.push_back({"blowup.h1_exceptional_vanishes", rows == 26 && e_vanish == rows, {{"classes", rows}, {"vanishing", e_vanish}}});
  const auto ex = verify_exact(sequence_E_PicTilde_P(), gamma_group());
  c.checks.push_back({"blowup.sequence_exact", ex.ok(), {}});
  return c;
}

inline CriterionResult criterion_lattice_structure() {
  CriterionResult c{3, "Class lattice structure", {}};
  const auto s = snf(row_minus_column_matrix());
  nlohmann::json diag = nlohmann::json::array();
  for (const auto& d : s.diagonal()) diag.push_back(d.get_str());
  c.checks.push_back({"lattice.relation_snf", s.rank == 4 && s.nontrivial_factors().empty(), {{"rank", s.rank}, {"diagonal", diag}}});
  const auto p = module_P();
  c.checks.push_back({"lattice.p_torsion_free_rank5", p.rank() == 5 && p.torsion().empty(), {{"rank", p.rank()}}});
  std::vector<Integer> v(9, Integer(0));
  v[0] = 1;   // L11
  v[2] = 1;   // L13
  v[4] = -1;  // L22
  v[7] = -1;  // L32
  const auto red = p.reduce(v);
  c.checks.push_back({"lattice.plane_relation_vanishes",
                      std::all_of(red.begin(), red.end(), [](const Integer& x) { return x == 0; }), {}});
  return c;
}

inline nlohmann::json to_json(const TorsorCensus& t) {
  return {{"q", t.q},
          {"torus_points", t.torus_points},
          {"image_size", t.image_size},
          {"fiber_min", t.fiber_min},
          {"fiber_max", t.fiber_max},
          {"expected_fiber", t.expected_fiber()},
          {"surjective", t.surjective},
          {"ok", t.ok()}};
}

inline std::size_t equivariant_elements() {
  const auto gamma = gamma_group();
  std::size_t n = 0;
  for (const auto& g : gamma.elements()) n += verify_equivariance(g);
  return n;
}

inline nlohmann::json torsor_check_json(const std::vector<std::uint32_t>& qs = {2, 3, 5}) {
  const auto d = check_double_three();
  const auto planes = double_three();
  std::size_t even = 0;
  for (const auto& p : planes) even += p.even;
  nlohmann::json census = nlohmann::json::array();
  for (auto q : qs) census.push_back(to_json(torsor_census(q)));
  return {{"identity_ok", verify_identity()},
          {"equivariance_ok", equivariant_elements()},
          {"double_three",
           {{"planes", planes.size()},
            {"even_three", even},
            {"odd_three", planes.size() - even},
            {"decompositions", d.decompositions},
            {"checks", d.generator_checks},
            {"passes", d.generator_passes},
            {"negative_control", d.negative_control},
            {"ok", d.ok()}}},
          {"census", census}};
}

inline CriterionResult criterion_torsor() {
  CriterionResult c{4, "Torsor map", {}};
  c.checks.push_back({"torsor.identity", verify_identity(), {}});
  const auto eq = equivariant_elements();
  c.checks.push_back({"torsor.equivariance", eq == 72, {{"elements", eq}}});
  const auto d = check_double_three();
  c.checks.push_back({"torsor.double_vanishing", d.generator_checks == 36 && d.generator_passes == 36 && d.negative_control,
                      {{"checks", d.generator_checks}, {"passes", d.generator_passes}}});
  c.checks.push_back({"torsor.double_three_split", d.decompositions == 1 && d.even_spans && d.odd_spans && d.cross_points &&
                                                       d.disjoint_within,
                      {{"decompositions", d.decompositions}}});
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const auto t = torsor_census(q);
    c.checks.push_back({"torsor.census_q" + std::to_string(q), t.ok(), to_json(t)});
  }
  return c;
}

struct SectionGeometry {
  NineNodalCertificate cert;
  std::vector<QSubspace> planes;
  std::vector<int> nodes_per_plane, planes_per_node;
  TorusSkeletonReport skeleton;
  bool planes_on_X = false;
  bool ok() const {
    return cert.passed() && planes.size() == 9 && planes_on_X &&
           std::all_of(nodes_per_plane.begin(), nodes_per_plane.end(), [](int n) { return n == 4; }) &&
           std::all_of(planes_per_node.begin(), planes_per_node.end(), [](int n) { return n == 4; }) && skeleton.ok();
  }
};

inline SectionGeometry section_geometry(const std::array<Rational, 6>& h) {
  SectionGeometry g;
  g.cert = nine_nodal_section(h);
  if (!g.cert.accepted) return g;
  g.planes = section_planes(h);
  g.planes_on_X = true;
  g.planes_per_node.assign(g.cert.nodes.size(), 0);
  for (const auto& pl : g.planes) {
    g.planes_on_X = g.planes_on_X && restrict_to(g.cert.X->f, pl).is_zero();
    int inside = 0;
    for (std::size_t k = 0; k < g.cert.nodes.size(); ++k)
      if (pl.contains(g.cert.nodes[k])) ++inside, ++g.planes_per_node[k];
    g.nodes_per_plane.push_back(inside);
  }
  g.skeleton = check_torus_skeleton(incidence_graph(g.planes).graph);
  return g;
}

inline nlohmann::json to_json(const TorusSkeletonReport& r) {
  return {{"vertices", r.vertices},
          {"edges", r.edges},
          {"four_regular", r.four_regular},
          {"triangles", r.triangles},
          {"unique_triangle_per_edge", r.unique_triangle_per_edge},
          {"isomorphic_to_grid", r.isomorphism.has_value()},
          {"automorphism_order", r.aut_order},
          {"ok", r.ok()}};
}

inline nlohmann::json to_json(const SectionGeometry& g) {
  return {{"certificate", to_json(g.cert)},
          {"planes", g.planes.size()},
          {"planes_on_X", g.planes_on_X},
          {"nodes_per_plane", g.nodes_per_plane},
          {"planes_per_node", g.planes_per_node},
          {"incidence_graph", to_json(g.skeleton)},
          {"passed", g.ok()}};
}

inline CriterionResult criterion_nine_nodal(const std::array<Rational, 6>& h = default_hyperplane()) {
  CriterionResult c{5, "Geometry of a certified nine-nodal section", {}};
  const auto g = section_geometry(h);
  c.checks.push_back({"nodal.certified", g.cert.passed(),
                      {{"good_primes", g.cert.good_primes()}, {"singular_points", g.cert.nodes.size()}}});
  c.checks.push_back({"nodal.all_nodes", g.cert.all_nodes(), {}});
  const bool incid = g.planes.size() == 9 && g.planes_on_X &&
                     std::all_of(g.nodes_per_plane.begin(), g.nodes_per_plane.end(), [](int n) { return n == 4; }) &&
                     std::all_of(g.planes_per_node.begin(), g.planes_per_node.end(), [](int n) { return n == 4; });
  c.checks.push_back({"nodal.plane_node_incidence", incid, {{"planes", g.planes.size()}}});
  c.checks.push_back({"nodal.incidence_graph", g.skeleton.ok(), to_json(g.skeleton)});
  return c;
}

inline CriterionResult criterion_dual_degrees() {
  CriterionResult c{6, "Dual degrees", {}};
  const auto v = numbered_vars("x", 5);
  QPoly fermat(RationalField{}, 5);
  for (std::size_t i = 0; i < 5; ++i) fermat += QPoly::variable(RationalField{}, 5, i).pow(3);
  const Hypersurface smooth(fermat, v);
  const bool smooth_ok = singular_points_fp(fermat, 7).empty();
  const long d0 = dual_degree(smooth, {});
  c.checks.push_back({"dual.smooth_cubic", smooth_ok && d0 == 24, {{"dual_degree", d0}}});
  const auto cert = nine_nodal_section(default_hyperplane());
  const long d9 = cert.passed() ? dual_degree(*cert.X, cert.reports) : -1;
  c.checks.push_back({"dual.nine_nodal", d9 == 6, {{"dual_degree", d9}}});
  const auto s = segre_standard();
  c.checks.push_back({"dual.segre", s.nodes.size() == 10 && s.dual == 4, {{"dual_degree", s.dual}}});
  return c;
}

inline CriterionResult criterion_ideal_identity() {
  CriterionResult c{7, "Row ideal identity on graded pieces", {}};
  for (unsigned d = 3; d <= 6; ++d) {
    std::size_t dim = 0;
    const bool ok = row_ideal_identity(d, &dim);
    c.checks.push_back({"ideal.degree_" + std::to_string(d), ok, {{"dimension", dim}}});
  }
  return c;
}

inline nlohmann::json to_json(const CubicCensus& c) {
  return {{"p", c.p}, {"points", c.points}, {"singular", c.singular}, {"planes", c.planes}};
}

inline CriterionResult criterion_segre(std::uint64_t seed) {
  CriterionResult c{8, "Segre cubic", {}};
  const auto s = segre_standard();
  c.checks.push_back({"segre.ten_nodes", s.fp_singular == 10 && s.nodes.size() == 10 && s.nodes_pm_one,
                      {{"singular_F7", s.fp_singular}}});
  c.checks.push_back({"segre.fifteen_planes", s.fp_planes == 15 && s.planes_match_fp, {{"planes_F7", s.fp_planes}}});
  c.checks.push_back({"segre.s6_invariant", s.s6_invariant, {}});
  const auto q = quadrics_model(seed);
  const auto m = matching_model(seed);
  const auto std7 = cubic_census(s.sigma.f, 7);
  const auto q7 = cubic_census(q.sigma.f, 7);
  const auto m7 = cubic_census(m.sigma.f, 7);
  c.checks.push_back({"segre.models_agree", q7 == std7 && m7 == std7,
                      {{"standard", to_json(std7)}, {"quadrics", to_json(q7)}, {"matching", to_json(m7)}}});
  for (std::uint32_t qq : {3u, 5u}) {
    const auto cen = segre_census(qq, m);
    c.checks.push_back({"segre.census_q" + std::to_string(qq), cen.identity_holds, to_json(cen)});
  }
  const auto fa = free_action_spot_check(200, seed);
  c.checks.push_back({"segre.free_action_q3", fa.ok(), {{"samples", fa.samples}, {"free_mod_mu2", fa.free_mod_mu2}}});
  const auto g = grassmann_counts(2);
  c.checks.push_back({"segre.grassmannian_f2", g.gaussian == 651 && g.agree(),
                      {{"gaussian", g.gaussian}, {"schubert", g.schubert}, {"bruteforce", *g.bruteforce}}});
  return c;
}

inline CriterionResult criterion_bookkeeping() {
  CriterionResult c{9, "Euler characteristic and class rank bookkeeping", {}};
  const auto a = class_rank_bookkeeping(9), b = class_rank_bookkeeping(10);
  c.checks.push_back({"bookkeeping.d9", a.euler == 30 && a.rank_cl == 5, {{"euler", a.euler}, {"rank_cl", a.rank_cl}}});
  c.checks.push_back({"bookkeeping.d10", b.euler == 34 && b.rank_cl == 6, {{"euler", b.euler}, {"rank_cl", b.rank_cl}}});
  const auto t = torus_character_rank();
  c.checks.push_back({"bookkeeping.d10_matches_torus", b.rank_cl == static_cast<long>(t), {{"torus_character_rank", t}}});
  return c;
}

inline std::vector<CriterionResult> verify_all(std::uint64_t seed = kDefaultSeed) {
  return {criterion_brauer_table(), criterion_blowup_comparison(), criterion_lattice_structure(),
          criterion_torsor(),       criterion_nine_nodal(),        criterion_dual_degrees(),
          criterion_ideal_identity(), criterion_segre(seed),       criterion_bookkeeping()};
}

}  // namespace nodal
