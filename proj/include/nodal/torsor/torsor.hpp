#pragma once

#include <array>
#include <map>
#include <set>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nodal/geometry/perazzo.hpp"
#include "nodal/group/perm_group.hpp"
#include "nodal/report/check.hpp"

namespace nodal {

// Grid variables z_ij at index 3i+j (0-based i, j).
inline std::vector<std::string> grid_vars() {
  std::vector<std::string> v;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) v.push_back("z" + std::to_string(i) + std::to_string(j));
  return v;
}

inline QPoly grid_var(std::size_t k) { return QPoly::variable(RationalField{}, 9, k); }

inline QPoly row_monomial(std::size_t i) { return grid_var(3 * i) * grid_var(3 * i + 1) * grid_var(3 * i + 2); }
inline QPoly col_monomial(std::size_t j) { return grid_var(j) * grid_var(3 + j) * grid_var(6 + j); }

/// Map A^9 -> P^5: x_i = scale_i row_i, y_j = scale_{3+j} col_j. Unit scales give
/// the split torsor; other scales model translated (twisted) charts.
struct TorsorChart {
  std::array<Rational, 6> scale{1, 1, 1, 1, 1, 1};

  std::vector<QPoly> components() const {
    std::vector<QPoly> out;
    for (std::size_t i = 0; i < 3; ++i) out.push_back(row_monomial(i).scaled(scale[i]));
    for (std::size_t j = 0; j < 3; ++j) out.push_back(col_monomial(j).scaled(scale[3 + j]));
    return out;
  }
};

inline QPoly perazzo_equation() {
  auto v = [](std::size_t k) { return QPoly::variable(RationalField{}, 6, k); };
  return v(0) * v(1) * v(2) - v(3) * v(4) * v(5);
}

/// Pullback of x1 x2 x3 - y1 y2 y3 along the given components is zero.
inline bool verify_identity(const std::vector<QPoly>& components) {
  if (components.size() != 6) throw std::invalid_argument("verify_identity: expects six components");
  return perazzo_equation().substitute(components).is_zero();
}

inline bool verify_identity(const TorsorChart& chart = {}) { return verify_identity(chart.components()); }

struct BaseLocusError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::vector<Rational> torsor_eval(std::span<const Rational> z, const TorsorChart& chart = {}) {
  if (z.size() != 9) throw std::invalid_argument("torsor_eval: expects nine coordinates");
  std::vector<Rational> x;
  bool nonzero = false;
  for (const auto& c : chart.components()) {
    x.push_back(c.evaluate(z));
    nonzero = nonzero || !is_zero(x.back());
  }
  if (!nonzero) throw BaseLocusError("torsor_eval: point lies in the base locus");
  if (!is_zero(perazzo_equation().evaluate(std::span<const Rational>(x))) && verify_identity(chart))
    throw std::logic_error("torsor_eval: image off the fourfold");
  return x;
}

// ---- double-three ----

struct DoubleThreePlane {
  Perm pi;                         // plane where z_ij = 0 unless j = pi(i)
  bool even = false;
  std::array<std::size_t, 3> free;  // grid indices of the surviving variables
  QSubspace subspace;
};

inline std::vector<DoubleThreePlane> double_three() {
  std::vector<DoubleThreePlane> out;
  std::vector<std::uint8_t> img{0, 1, 2};
  do {
    DoubleThreePlane pl{Perm(img), false, {}, QSubspace{}};
    pl.even = pl.pi.sign() == 1;
    QMatrix span(RationalField{}, 3, 9);
    for (std::size_t i = 0; i < 3; ++i) {
      pl.free[i] = 3 * i + std::size_t{img[i]};
      span(i, pl.free[i]) = 1;
    }
    pl.subspace = QSubspace::from_span(span);
    out.push_back(std::move(pl));
  } while (std::next_permutation(img.begin(), img.end()));
  std::stable_partition(out.begin(), out.end(), [](const DoubleThreePlane& p) { return p.even; });
  return out;
}

/// c and every partial derivative vanish identically on the plane.
inline bool verify_double_vanishing(const QPoly& c, const QSubspace& plane) {
  if (c.nvars() != 9 || plane.ambient() != 9) throw std::invalid_argument("verify_double_vanishing: arity must be 9");
  if (plane.dimension() != 2) throw std::invalid_argument("verify_double_vanishing: malformed plane");
  if (!restrict_to(c, plane).is_zero()) return false;
  for (std::size_t k = 0; k < 9; ++k)
    if (!restrict_to(c.derivative(k), plane).is_zero()) return false;
  return true;
}

struct DoubleThreeReport {
  bool even_spans = false, odd_spans = false;
  bool cross_points = false;      // each L_i meets the M_j in three non-collinear points
  bool disjoint_within = false;
  std::size_t decompositions = 0;  // partitions into two threes of pairwise disjoint planes
  std::size_t generator_checks = 0, generator_passes = 0;
  bool negative_control = false;  // z11 z22 z33 is not double along the identity plane

  bool ok() const {
    return even_spans && odd_spans && cross_points && disjoint_within && decompositions == 1 &&
           generator_checks == 36 && generator_passes == 36 && negative_control;
  }
};

inline std::vector<QPoly> torsor_monomials() {
  std::vector<QPoly> m;
  for (std::size_t i = 0; i < 3; ++i) m.push_back(row_monomial(i));
  for (std::size_t j = 0; j < 3; ++j) m.push_back(col_monomial(j));
  return m;
}

inline DoubleThreeReport check_double_three() {
  const auto planes = double_three();
  DoubleThreeReport r;
  auto spans_all = [&](bool even) {
    QMatrix s(RationalField{}, 0, 9);
    for (const auto& p : planes)
      if (p.even == even) s = QMatrix::vstack(s, p.subspace.span);
    return rank(s) == 9;
  };
  r.even_spans = spans_all(true);
  r.odd_spans = spans_all(false);

  r.cross_points = true;
  for (const auto& l : planes) {
    if (!l.even) continue;
    QMatrix pts(RationalField{}, 0, 9);
    for (const auto& m : planes) {
      if (m.even) continue;
      r.cross_points = r.cross_points && intersection_dimension(l.subspace, m.subspace) == 0;
      const auto meet = QSubspace::from_forms(QMatrix::vstack(l.subspace.forms, m.subspace.forms));
      pts = QMatrix::vstack(pts, meet.span);
    }
    r.cross_points = r.cross_points && rank(pts) == 3;
  }

  r.disjoint_within = true;
  for (std::size_t a = 0; a < planes.size(); ++a)
    for (std::size_t b = a + 1; b < planes.size(); ++b)
      if (planes[a].even == planes[b].even)
        r.disjoint_within = r.disjoint_within && intersection_dimension(planes[a].subspace, planes[b].subspace) == -1;

  // Count 3+3 splits (first part containing plane 0) with both parts pairwise disjoint.
  for (unsigned mask = 0; mask < 64; ++mask) {
    if (!(mask & 1u) || __builtin_popcount(mask) != 3) continue;
    bool ok = true;
    for (std::size_t a = 0; a < 6 && ok; ++a)
      for (std::size_t b = a + 1; b < 6 && ok; ++b)
        if (((mask >> a) & 1u) == ((mask >> b) & 1u))
          ok = intersection_dimension(planes[a].subspace, planes[b].subspace) == -1;
    r.decompositions += ok;
  }

  for (const auto& m : torsor_monomials())
    for (const auto& p : planes) {
      ++r.generator_checks;
      r.generator_passes += verify_double_vanishing(m, p.subspace);
    }
  r.negative_control = !verify_double_vanishing(grid_var(0) * grid_var(4) * grid_var(8), planes.front().subspace);
  return r;
}

/// Cubic monomials double along all six planes. Restriction to a coordinate
/// plane sends distinct monomials to distinct monomials or zero, so the space of
/// such cubics is spanned by the monomials that pass individually.
inline std::vector<Exponent> double_cubic_monomials() {
  const auto planes = double_three();
  std::vector<Exponent> out;
  for (const auto& e : monomials_of_degree(9, 3)) {
    const QPoly m = QPoly::monomial(RationalField{}, e, Rational(1));
    if (std::all_of(planes.begin(), planes.end(), [&](const auto& p) { return verify_double_vanishing(m, p.subspace); }))
      out.push_back(e);
  }
  return out;
}

// ---- Gamma lift ----

/// Lift of g to A^9: the value at grid position k moves to position g(k).
inline std::vector<QPoly> gamma_lift(const GammaElt& g) {
  const Perm gp = g.grid_perm();
  const Perm inv = gp.inverse();
  std::vector<QPoly> out;
  for (std::size_t k = 0; k < 9; ++k) out.push_back(grid_var(inv(k)));
  return out;
}

/// pi(lift(g) z) = g . pi(z) as polynomial maps, with g acting on P^5 through
/// the coordinate permutation.
inline bool verify_equivariance(const GammaElt& g) {
  const auto pi = TorsorChart{}.components();
  const auto lift = gamma_lift(g);
  const Perm c = g.coord_perm();
  for (std::size_t k = 0; k < 6; ++k)
    if (!(pi[c(k)].substitute(lift) == pi[k])) return false;
  return true;
}

// ---- F_q census ----

struct TorsorCensus {
  std::uint32_t q = 0;
  std::size_t torus_points = 0;     // points of P(F_q) with all six coordinates nonzero
  std::size_t image_size = 0;
  std::uint64_t fiber_min = 0, fiber_max = 0;
  bool surjective = false;

  std::uint64_t expected_fiber() const {
    std::uint64_t f = 1;
    for (int k = 0; k < 5; ++k) f *= q - 1;
    return f;
  }
  bool ok() const {
    return surjective && image_size == torus_points && fiber_min == fiber_max && fiber_min == expected_fiber();
  }
};

inline TorsorCensus torsor_census(std::uint32_t q) {
  if (q != 2 && q != 3 && q != 5 && q != 7) throw std::invalid_argument("torsor_census: q must be a prime in {2,3,5,7}");
  TorsorCensus c;
  c.q = q;
  const FpEvaluator eq(perazzo_equation(), q);
  std::set<FpPoint> torus;
  for_each_projective_point(6, q, [&](const FpPoint& x) {
    if (std::all_of(x.begin(), x.end(), [](std::uint32_t v) { return v != 0; }) && eq(x) == 0) torus.insert(x);
  });
  c.torus_points = torus.size();

  std::map<FpPoint, std::uint64_t> fibers;
  std::array<std::uint32_t, 9> z;
  z.fill(1);
  const PrimeField field(q);
  for (;;) {
    FpPoint x(6);
    for (std::size_t i = 0; i < 3; ++i) {
      x[i] = static_cast<std::uint32_t>(std::uint64_t(z[3 * i]) * z[3 * i + 1] % q * z[3 * i + 2] % q);
      x[3 + i] = static_cast<std::uint32_t>(std::uint64_t(z[i]) * z[3 + i] % q * z[6 + i] % q);
    }
    const Fp inv = Fp(x[0], q).inverse();
    for (auto& v : x) v = (Fp(v, q) * inv).value();
    ++fibers[x];
    std::size_t k = 0;
    while (k < 9 && z[k] == q - 1) z[k++] = 1;
    if (k == 9) break;
    ++z[k];
  }
  c.image_size = fibers.size();
  c.surjective = true;
  for (const auto& t : torus) c.surjective = c.surjective && fibers.count(t);
  c.fiber_min = UINT64_MAX;
  for (const auto& [pt, n] : fibers) {
    c.fiber_min = std::min(c.fiber_min, n);
    c.fiber_max = std::max(c.fiber_max, n);
    if (!torus.count(pt)) c.surjective = false;
  }
  return c;
}

// ---- cubic surface sections ----

struct SurfaceTorsor {
  std::array<std::vector<Rational>, 2> forms;
  std::array<QPoly, 2> cubics;  // V_i = l_i(row_1, row_2, row_3, col_1, col_2, col_3)
  bool double_along_all = false;
};

inline void require_independent(const std::vector<Rational>& l1, const std::vector<Rational>& l2) {
  if (l1.size() != 6 || l2.size() != 6) throw std::invalid_argument("linear forms must have six coefficients");
  if (rank(QMatrix::from_rows(RationalField{}, {l1, l2}, 6)) != 2) throw std::invalid_argument("linear forms are dependent");
}

inline SurfaceTorsor surface_torsor_cubics(const std::vector<Rational>& l1, const std::vector<Rational>& l2) {
  require_independent(l1, l2);
  SurfaceTorsor s{{l1, l2}, {}, true};
  const auto mons = torsor_monomials();
  const auto planes = double_three();
  for (std::size_t t = 0; t < 2; ++t) {
    QPoly v(RationalField{}, 9);
    for (std::size_t k = 0; k < 6; ++k) v += mons[k].scaled(s.forms[t][k]);
    s.cubics[t] = v;
    for (const auto& p : planes) s.double_along_all = s.double_along_all && verify_double_vanishing(v, p.subspace);
  }
  return s;
}

/// Z = P meet {l1 = l2 = 0} in P^3, with x_i, y_j restricted to linear forms
/// l_i, m_j and Z given by prod l_i = prod m_j.
struct SurfaceSection {
  Hypersurface Z;
  QMatrix param;  // 6 x 4: ambient coordinates in terms of the four free coordinates
  std::array<std::vector<Rational>, 3> l, m;
  bool identity_ok = false;
};

inline SurfaceSection surface_section(const std::vector<Rational>& l1, const std::vector<Rational>& l2) {
  require_independent(l1, l2);
  const auto ech = rref(QMatrix::from_rows(RationalField{}, {l1, l2}, 6));
  std::vector<std::size_t> freec;
  for (std::size_t c = 0; c < 6; ++c)
    if (std::find(ech.pivots.begin(), ech.pivots.end(), c) == ech.pivots.end()) freec.push_back(c);
  SurfaceSection s{Hypersurface{}, QMatrix(RationalField{}, 6, 4), {}, {}, false};
  for (std::size_t t = 0; t < 4; ++t) s.param(freec[t], t) = 1;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t t = 0; t < 4; ++t) s.param(ech.pivots[r], t) = -ech.reduced(r, freec[t]);
  std::vector<QPoly> images;
  for (std::size_t k = 0; k < 6; ++k) {
    QPoly im(RationalField{}, 4);
    std::vector<Rational> row;
    for (std::size_t t = 0; t < 4; ++t) {
      row.push_back(s.param(k, t));
      if (is_zero(s.param(k, t))) continue;
      Exponent e(4, 0);
      e[t] = 1;
      im.add_term(e, s.param(k, t));
    }
    (k < 3 ? s.l[k] : s.m[k - 3]) = row;
    images.push_back(std::move(im));
  }
  std::vector<std::string> names;
  for (auto c : freec) names.push_back(perazzo_vars()[c]);
  s.Z = Hypersurface(perazzo_equation().substitute(images), names);
  s.identity_ok = (images[0] * images[1] * images[2] - images[3] * images[4] * images[5] - s.Z.f).is_zero();
  return s;
}

}  // namespace nodal
