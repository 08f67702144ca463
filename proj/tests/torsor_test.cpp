#include <gtest/gtest.h>

#include "nodal/torsor/torsor.hpp"

using namespace nodal;

namespace {

std::vector<Rational> rv(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Torsor, IdentityHolds) {
  EXPECT_TRUE(verify_identity());
  const auto pi = TorsorChart{}.components();
  QPoly all = QPoly::constant(RationalField{}, 9, Rational(1));
  for (std::size_t k = 0; k < 9; ++k) all = all * grid_var(k);
  EXPECT_EQ(pi[0] * pi[1] * pi[2], all);
  EXPECT_EQ(pi[3] * pi[4] * pi[5], all);
}

TEST(Torsor, PerturbedMapFails) {
  auto pi = TorsorChart{}.components();
  std::swap(pi[0], pi[3]);
  pi[0] = grid_var(0) * grid_var(1) * grid_var(5);  // one monomial altered
  EXPECT_FALSE(verify_identity(pi));
  TorsorChart twisted;
  twisted.scale = {2, 3, 1, 6, 1, 1};
  EXPECT_TRUE(verify_identity(twisted));
  twisted.scale = {2, 1, 1, 1, 1, 1};
  EXPECT_FALSE(verify_identity(twisted));
}

TEST(Torsor, Eval) {
  const auto ones = std::vector<Rational>(9, Rational(1));
  EXPECT_EQ(torsor_eval(ones), std::vector<Rational>(6, Rational(1)));
  const auto delta = rv({1, 0, 0, 0, 1, 0, 0, 0, 1});
  EXPECT_THROW(torsor_eval(delta), BaseLocusError);
  const auto z = rv({1, 2, 3, 4, 5, 6, 7, 8, 9});
  const auto x = torsor_eval(z);
  EXPECT_EQ(x, rv({6, 120, 504, 28, 80, 162}));
  EXPECT_THROW(torsor_eval(rv({1, 2})), std::invalid_argument);
}

TEST(Torsor, Census) {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const auto c = torsor_census(q);
    EXPECT_TRUE(c.ok()) << q;
    EXPECT_EQ(c.fiber_min, c.expected_fiber());
    std::uint64_t t = 1;
    for (int k = 0; k < 4; ++k) t *= q - 1;
    EXPECT_EQ(c.torus_points, t);
  }
  EXPECT_THROW(torsor_census(4), std::invalid_argument);
}

TEST(DoubleThree, Structure) {
  const auto planes = double_three();
  ASSERT_EQ(planes.size(), 6u);
  // even three: {11,22,33}, {12,23,31}, {13,21,32}
  std::set<std::array<std::size_t, 3>> even, expect{{0, 4, 8}, {1, 5, 6}, {2, 3, 7}};
  for (const auto& p : planes)
    if (p.even) even.insert(p.free);
  EXPECT_EQ(even, expect);
  const auto r = check_double_three();
  EXPECT_TRUE(r.even_spans);
  EXPECT_TRUE(r.odd_spans);
  EXPECT_TRUE(r.cross_points);
  EXPECT_TRUE(r.disjoint_within);
  EXPECT_EQ(r.decompositions, 1u);
  EXPECT_EQ(r.generator_passes, 36u);
  EXPECT_TRUE(r.negative_control);
  EXPECT_TRUE(r.ok());
}

TEST(DoubleThree, RowOnIdentityPlane) {
  const auto planes = double_three();
  EXPECT_TRUE(verify_double_vanishing(row_monomial(0), planes.front().subspace));
  EXPECT_FALSE(verify_double_vanishing(grid_var(0) * grid_var(4) * grid_var(8), planes.front().subspace));
  QMatrix line(RationalField{}, 2, 9);
  line(0, 0) = line(1, 4) = 1;
  EXPECT_THROW(verify_double_vanishing(row_monomial(0), QSubspace::from_span(line)), std::invalid_argument);
}

TEST(DoubleThree, LinearSystemIsExactlyTheSixMonomials) {
  const auto mons = double_cubic_monomials();
  std::set<Exponent> got(mons.begin(), mons.end()), want;
  for (const auto& m : torsor_monomials()) want.insert(m.terms().begin()->first);
  EXPECT_EQ(got, want);
}

TEST(DoubleThree, SpanMembersAreDouble) {
  std::mt19937_64 gen(7);
  const auto planes = double_three();
  const auto mons = torsor_monomials();
  for (int t = 0; t < 5; ++t) {
    QPoly c(RationalField{}, 9);
    for (const auto& m : mons) c += m.scaled(Rational(static_cast<long>(gen() % 11) - 5));
    for (const auto& p : planes) EXPECT_TRUE(verify_double_vanishing(c, p.subspace));
  }
}

TEST(GammaLift, EquivariantForAll72) {
  const auto g = gamma_group();
  int ok = 0;
  for (const auto& e : g.elements()) ok += verify_equivariance(e);
  EXPECT_EQ(ok, 72);
}

TEST(GammaLift, NamedElements) {
  const auto id = gamma_lift(GammaElt::identity());
  for (std::size_t k = 0; k < 9; ++k) EXPECT_EQ(id[k], grid_var(k));
  // iota transposes the grid and swaps rows with columns
  const auto io = gamma_lift(GammaElt::iota());
  EXPECT_EQ(io[1], grid_var(3));
  EXPECT_EQ(row_monomial(0).substitute(io), col_monomial(0));
  // ((123),(),0): value at (i, j) is z_{rho^-1(i), j}
  const auto g = GammaElt::parse("((123),(),0)");
  const auto lift = gamma_lift(g);
  EXPECT_EQ(lift[3], grid_var(0));
  EXPECT_EQ(row_monomial(1).substitute(lift), row_monomial(0));
  // a non-equivariant candidate: transpose without swapping rows
  std::vector<QPoly> bad;
  for (std::size_t k = 0; k < 9; ++k) bad.push_back(grid_var(k));
  std::swap(bad[0], bad[1]);
  EXPECT_FALSE(row_monomial(0).substitute(bad) == row_monomial(0) && col_monomial(0).substitute(bad) == col_monomial(0));
}

TEST(SurfaceTorsor, CubicsAreDouble) {
  const auto s = surface_torsor_cubics(rv({1, 0, 0, 1, 0, 0}), rv({0, 1, 0, 0, 0, -1}));
  EXPECT_TRUE(s.double_along_all);
  EXPECT_EQ(s.cubics[0], row_monomial(0) + col_monomial(0));
  const auto t = surface_torsor_cubics(rv({1, 0, 0, 0, 0, 0}), rv({0, 0, 0, 0, 1, 0}));
  EXPECT_EQ(t.cubics[0], row_monomial(0));
  EXPECT_THROW(surface_torsor_cubics(rv({1, 0, 0, 1, 0, 0}), rv({2, 0, 0, 2, 0, 0})), std::invalid_argument);
}

TEST(SurfaceTorsor, SectionNormalForm) {
  const auto s = surface_section(rv({1, 0, 0, 1, 0, 0}), rv({0, 1, 0, 0, 0, -1}));
  EXPECT_TRUE(s.identity_ok);
  EXPECT_EQ(s.Z.ambient_dim(), 3u);
  EXPECT_EQ(s.Z.degree(), 3);
  EXPECT_EQ(s.Z.vars, (std::vector<std::string>{"x3", "y1", "y2", "y3"}));
  // x1 = -y1 and x2 = y3 on the section
  EXPECT_EQ(s.l[0], rv({0, -1, 0, 0}));
  EXPECT_EQ(s.l[1], rv({0, 0, 0, 1}));
}
