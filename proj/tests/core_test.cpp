#include <gtest/gtest.h>

#include <random>

#include "nodal/core/graded.hpp"
#include "nodal/core/poly_io.hpp"
#include "nodal/core/snf.hpp"

using namespace nodal;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 gen(20241016);
  return gen;
}

long rand_in(long lo, long hi) { return lo + static_cast<long>(rng()() % static_cast<std::uint64_t>(hi - lo + 1)); }

IntMatrix random_int_matrix(std::size_t m, std::size_t n) {
  IntMatrix a(IntegerRing{}, m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rand_in(-9, 9);
  return a;
}

// rows R_i - C_j of the 3x3 plane grid
IntMatrix row_minus_column_matrix() {
  IntMatrix a(IntegerRing{}, 9, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      for (int q = 0; q < 3; ++q) a(3 * i + j, 3 * i + q) += 1;
      for (int p = 0; p < 3; ++p) a(3 * i + j, 3 * p + j) -= 1;
    }
  return a;
}

QPoly var(std::size_t n, std::size_t i) { return QPoly::variable(RationalField{}, n, i); }

QPoly random_poly(std::size_t n, unsigned maxdeg, int terms) {
  QPoly f(RationalField{}, n);
  for (int t = 0; t < terms; ++t) {
    Exponent e(n, 0);
    unsigned budget = static_cast<unsigned>(rand_in(0, maxdeg));
    for (unsigned k = 0; k < budget; ++k) ++e[static_cast<std::size_t>(rand_in(0, static_cast<long>(n) - 1))];
    f.add_term(e, make_rational(rand_in(-7, 7), rand_in(1, 4)));
  }
  return f;
}

}  // namespace

TEST(Snf, OneByOne) {
  auto r = snf(int_matrix({{6}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.D(0, 0), 6);
}

TEST(Snf, TwoByTwoHandOracle) {
  // gcd of entries is 2, |det| = 8, so the factors are (2, 4).
  auto r = snf(int_matrix({{2, 4}, {6, 8}}));
  ASSERT_EQ(r.rank, 2u);
  EXPECT_EQ(r.D(0, 0), 2);
  EXPECT_EQ(r.D(1, 1), 4);
}

TEST(Snf, RowMinusColumnRelations) {
  const IntMatrix a = row_minus_column_matrix();
  auto r = snf(a);
  EXPECT_EQ(r.rank, 4u);
  EXPECT_TRUE(r.nontrivial_factors().empty());
  // Oracles: rank over Q by row reduction, ranks mod 2, 3, 5, and the gcd of all
  // 4x4 minors (= product of the invariant factors) by brute force.
  EXPECT_EQ(rank(to_rational(a)), 4u);
  for (std::uint32_t p : {2u, 3u, 5u}) EXPECT_EQ(rank(reduce_mod(a, PrimeField(p))), 4u) << p;
  Integer g = 0;
  std::vector<int> idx(9);
  for (int mask_r = 0; mask_r < 512; ++mask_r) {
    if (__builtin_popcount(mask_r) != 4) continue;
    for (int mask_c = 0; mask_c < 512; ++mask_c) {
      if (__builtin_popcount(mask_c) != 4) continue;
      IntMatrix minor(IntegerRing{}, 4, 4);
      int ri = 0;
      for (int i = 0; i < 9; ++i) {
        if (!(mask_r >> i & 1)) continue;
        int ci = 0;
        for (int j = 0; j < 9; ++j)
          if (mask_c >> j & 1) minor(ri, ci++) = a(i, j);
        ++ri;
      }
      g = gcd(g, determinant(minor));
    }
  }
  EXPECT_EQ(g, 1);
}

TEST(Snf, RandomRoundTripProperty) {
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rand_in(1, 12)), n = static_cast<std::size_t>(rand_in(1, 12));
    IntMatrix a = random_int_matrix(m, n);
    if (trial % 5 == 0 && m > 1)  // force dependent rows now and then
      for (std::size_t j = 0; j < n; ++j) a(m - 1, j) = 2 * a(0, j);
    auto r = snf(a);
    EXPECT_EQ(r.U * a * r.V, r.D);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j || i >= r.rank) {
          EXPECT_TRUE(is_zero(r.D(i, j)));
        }
    for (std::size_t i = 0; i < r.rank; ++i) {
      EXPECT_GT(r.D(i, i), 0);
      if (i + 1 < r.rank) {
        EXPECT_TRUE(mpz_divisible_p(r.D(i + 1, i + 1).get_mpz_t(), r.D(i, i).get_mpz_t()));
      }
    }
    EXPECT_EQ(abs(determinant(r.U)), 1);
    EXPECT_EQ(abs(determinant(r.V)), 1);
    // Fraction-field consistency.
    EXPECT_EQ(rank(to_rational(a)), r.rank);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
      bool divides = false;
      for (const auto& d : r.diagonal()) divides = divides || mpz_divisible_ui_p(d.get_mpz_t(), p);
      if (!divides) {
        EXPECT_EQ(rank(reduce_mod(a, PrimeField(p))), r.rank);
      }
    }
  }
}

TEST(IntegerKernel, SaturatedWithLeftInverse) {
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rand_in(1, 30)), n = static_cast<std::size_t>(rand_in(1, 8));
    IntMatrix a = random_int_matrix(m, n);
    if (m > 2)
      for (std::size_t i = 2; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 3 * a(0, j) - 2 * a(1, j) * (i % 2 ? 1 : -1);
    auto k = integer_kernel(a);
    EXPECT_EQ(k.dimension() + rank(to_rational(a)), n);
    EXPECT_TRUE((a * k.basis).is_zero());
    if (k.dimension() > 0) {
      EXPECT_EQ(k.left_inverse * k.basis, IntMatrix::identity(IntegerRing{}, k.dimension()));
      // Saturation: cokernel of the basis is torsion-free.
      EXPECT_TRUE(torsion_of_cokernel(k.basis).empty());
    }
  }
}

TEST(KernelBasis, Examples) {
  EXPECT_TRUE(kernel_basis(QMatrix::identity(RationalField{}, 3)).empty());
  EXPECT_EQ(kernel_basis(QMatrix(RationalField{}, 2, 3)).size(), 3u);
}

TEST(KernelBasis, VectorsAreIndependentAndAnnihilated) {
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rand_in(1, 6)), n = static_cast<std::size_t>(rand_in(1, 9));
    QMatrix a = to_rational(random_int_matrix(m, n));
    auto k = kernel_basis(a);
    EXPECT_EQ(k.size() + rank(a), n);
    for (const auto& v : k) {
      auto av = a.apply(v);
      for (const auto& x : av) EXPECT_TRUE(is_zero(x));
    }
    if (!k.empty()) {
      EXPECT_EQ(rank(QMatrix::from_rows(RationalField{}, k, n)), k.size());
    }
  }
}

TEST(PolyOps, Derivative) {
  QPoly f = var(3, 0) * var(3, 1) * var(3, 2);
  EXPECT_EQ(f.derivative(1), var(3, 0) * var(3, 2));
}

TEST(PolyOps, TorsorSubstitutionKillsPerazzo) {
  // x_i -> prod_q z_iq, y_j -> prod_p z_pj
  std::vector<QPoly> images;
  for (int i = 0; i < 3; ++i) images.push_back(var(9, 3 * i) * var(9, 3 * i + 1) * var(9, 3 * i + 2));
  for (int j = 0; j < 3; ++j) images.push_back(var(9, j) * var(9, 3 + j) * var(9, 6 + j));
  QPoly f = var(6, 0) * var(6, 1) * var(6, 2) - var(6, 3) * var(6, 4) * var(6, 5);
  EXPECT_TRUE(f.substitute(images).is_zero());
}

TEST(PolyOps, SegreFormAtSignPattern) {
  QPoly s(RationalField{}, 6);
  for (std::size_t i = 0; i < 6; ++i) s += var(6, i).pow(3);
  std::vector<Rational> pt{1, 1, 1, -1, -1, -1};
  EXPECT_TRUE(is_zero(s.evaluate(pt)));
}

TEST(PolyOps, ArityMismatchThrows) {
  QPoly f = var(2, 0);
  std::vector<QPoly> one{var(2, 0)};
  EXPECT_THROW(f.substitute(one), std::invalid_argument);
  EXPECT_THROW((void)(var(2, 0) + var(3, 0)), std::invalid_argument);
}

TEST(PolyOps, SubstitutionIsRingHomomorphism) {
  for (int trial = 0; trial < 25; ++trial) {
    QPoly f = random_poly(3, 3, 4), g = random_poly(3, 3, 4);
    std::vector<QPoly> s;
    for (int i = 0; i < 3; ++i) s.push_back(random_poly(2, 2, 3));
    EXPECT_EQ((f * g).substitute(s), f.substitute(s) * g.substitute(s));
    EXPECT_EQ((f + g).substitute(s), f.substitute(s) + g.substitute(s));
  }
}

TEST(PolyIo, TextAndJsonRoundTrip) {
  const std::vector<std::string> vars{"x1", "x2", "y3"};
  for (int trial = 0; trial < 40; ++trial) {
    QPoly f = random_poly(3, 4, 6);
    const std::string text = to_text(f, vars);
    EXPECT_EQ(parse_poly(text, vars), f) << text;
    const auto j = to_json(f, vars);
    auto back = poly_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.poly, f);
    EXPECT_EQ(to_json(back.poly, back.vars).dump(), j.dump());
  }
  EXPECT_EQ(to_text(parse_poly("3/6*x1^2*y3 - x2 + 5", vars), vars), "1/2*x1^2*y3 - x2 + 5");
  EXPECT_THROW(parse_poly("x1 + q", vars), ParseError);
}

TEST(GradedPiece, Examples) {
  const RationalField Q;
  std::vector<QPoly> g1{var(2, 0)};
  EXPECT_EQ(graded_piece<RationalField>(g1, 2, Q, 1).dimension(), 1u);
  // x2x3 * (6 linear forms) + y1y2y3 : 7
  std::vector<QPoly> g2{var(6, 1) * var(6, 2), var(6, 3) * var(6, 4) * var(6, 5)};
  EXPECT_EQ(graded_piece<RationalField>(g2, 6, Q, 3).dimension(), 7u);
  std::vector<QPoly> bad{var(2, 0) + var(2, 1) * var(2, 1)};
  EXPECT_THROW(graded_piece<RationalField>(bad, 2, Q, 2), std::invalid_argument);
}

TEST(GradedPiece, MonotoneAndMatchesEvaluationRank) {
  const RationalField Q;
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 4;
    std::vector<QPoly> gens;
    const unsigned d = 4;
    std::size_t prev = 0;
    for (int k = 0; k < 4; ++k) {
      QPoly g = random_poly(n, 2, 3).homogeneous_part(static_cast<unsigned>(rand_in(1, 2)));
      if (g.is_zero()) continue;
      gens.push_back(g);
      auto piece = graded_piece<RationalField>(gens, n, Q, d);
      EXPECT_GE(piece.dimension(), prev);
      prev = piece.dimension();
      // Oracle: evaluate every product g*m at 60 random points; the rank of the
      // value matrix is the span dimension.
      std::vector<std::vector<Rational>> pts;
      for (int s = 0; s < 60; ++s) {
        std::vector<Rational> p;
        for (std::size_t i = 0; i < n; ++i) p.emplace_back(rand_in(-50, 50));
        pts.push_back(p);
      }
      QMatrix values(Q, 0, pts.size());
      for (const auto& gg : gens)
        for (const auto& m : monomials_of_degree(n, d - static_cast<unsigned>(gg.degree()))) {
          QPoly prod = gg * QPoly::monomial(Q, m, Rational(1));
          std::vector<Rational> row;
          for (const auto& p : pts) row.push_back(prod.evaluate(p));
          values.append_row(row);
        }
      ASSERT_LE(piece.ambient_dimension(), 200u);
      EXPECT_EQ(rank(values), piece.dimension());
    }
  }
}

TEST(LocalAlgebra, Examples) {
  const RationalField Q;
  auto sq = [&](std::size_t n, std::size_t i) { return var(n, i) * var(n, i); };
  std::vector<Rational> o4(4, Rational(0)), o2(2, Rational(0)), o3(3, Rational(0));
  auto node = local_algebra_dim(sq(4, 0) + sq(4, 1) + sq(4, 2) + sq(4, 3), std::span<const Rational>(o4), 8);
  ASSERT_TRUE(node.stable());
  EXPECT_EQ(*node.mu, 1u);
  auto a2 = local_algebra_dim(sq(4, 0) + sq(4, 1) + sq(4, 2) + var(4, 3).pow(3), std::span<const Rational>(o4), 8);
  ASSERT_TRUE(a2.stable());
  EXPECT_EQ(*a2.mu, 2u);
  auto plane = local_algebra_dim(sq(2, 0) + sq(2, 1), std::span<const Rational>(o2), 8);
  EXPECT_EQ(*plane.mu, 1u);
  auto nonisolated = local_algebra_dim(var(3, 0) * var(3, 1) * var(3, 2), std::span<const Rational>(o3), 7);
  EXPECT_FALSE(nonisolated.stable());
  // Translated point: (x-1)^2 + (y+2)^3 at (1,-2) is A2.
  QPoly shifted = (var(2, 0) - QPoly::constant(Q, 2, 1)).pow(2) + (var(2, 1) + QPoly::constant(Q, 2, 2)).pow(3);
  std::vector<Rational> pt{1, -2};
  EXPECT_EQ(*local_algebra_dim(shifted, std::span<const Rational>(pt), 8).mu, 2u);
}

TEST(Fp, Arithmetic) {
  PrimeField f(7);
  EXPECT_EQ(f.from_int(3) * f.from_int(5), f.from_int(1));
  EXPECT_EQ(f.from_int(3).inverse(), f.from_int(5));
  EXPECT_EQ(f.from_rational(Rational(1, 2)), f.from_int(4));
  EXPECT_THROW(f.zero().inverse(), std::domain_error);
  EXPECT_THROW(PrimeField(9), std::invalid_argument);
  EXPECT_EQ(f.from_int(-1), f.from_int(6));
}
