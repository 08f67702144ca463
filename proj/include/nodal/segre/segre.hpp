#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "nodal/geometry/planes.hpp"
#include "nodal/group/perm.hpp"
#include "nodal/report/check.hpp"

namespace nodal {

// ---- matchings and brackets ----

using Matching = std::array<std::pair<int, int>, 3>;  // 0-based column pairs

/// The 15 perfect matchings of {0..5}, in lexicographic order.
inline const std::vector<Matching>& all_matchings() {
  static const std::vector<Matching> m = [] {
    std::vector<Matching> out;
    for (int b = 1; b < 6; ++b) {
      std::vector<int> rest;
      for (int k = 1; k < 6; ++k)
        if (k != b) rest.push_back(k);
      for (int d = 1; d < 4; ++d) {
        std::vector<int> last;
        for (int k = 1; k < 4; ++k)
          if (k != d) last.push_back(rest[static_cast<std::size_t>(k)]);
        out.push_back({{{0, b}, {rest[0], rest[static_cast<std::size_t>(d)]}, {last[0], last[1]}}});
      }
    }
    return out;
  }();
  return m;
}

inline std::string to_string(const Matching& m) {
  std::string s;
  for (const auto& [a, b] : m) s += "[" + std::to_string(a + 1) + std::to_string(b + 1) + "]";
  return s;
}

/// 2 x 6 matrix stored by columns.
template <class T>
using TwoSix = std::array<std::array<T, 2>, 6>;

template <class T>
T bracket(const TwoSix<T>& a, int i, int j) {
  return a[static_cast<std::size_t>(i)][0] * a[static_cast<std::size_t>(j)][1] -
         a[static_cast<std::size_t>(i)][1] * a[static_cast<std::size_t>(j)][0];
}

template <class T>
T matching_product(const TwoSix<T>& a, const Matching& m) {
  T p = bracket(a, m[0].first, m[0].second);
  p = p * bracket(a, m[1].first, m[1].second);
  return p * bracket(a, m[2].first, m[2].second);
}

using QTwoSix = TwoSix<Rational>;

inline QTwoSix random_two_six(std::mt19937_64& gen, long range = 9) {
  QTwoSix a;
  for (auto& col : a)
    for (auto& x : col) x = static_cast<long>(gen() % static_cast<std::uint64_t>(2 * range + 1)) - range;
  return a;
}

/// Fixed basis of the span of the 15 matching products: pivot columns of the
/// evaluation matrix at seeded random integer matrices.
struct MatchingBasis {
  std::vector<std::size_t> indices;  // into all_matchings()
  std::size_t rank = 0;
  std::size_t samples = 0;
};

inline MatchingBasis matching_basis(std::uint64_t seed = 1, std::size_t samples = 24) {
  std::mt19937_64 gen(seed);
  QMatrix ev(RationalField{}, samples, 15);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto a = random_two_six(gen);
    for (std::size_t k = 0; k < 15; ++k) ev(s, k) = matching_product(a, all_matchings()[k]);
  }
  const auto e = rref(ev);
  return {e.pivots, e.pivots.size(), samples};
}

enum class MLocus { outside_m0, m0_not_m00, m00 };

struct MLocusReport {
  MLocus locus = MLocus::m00;
  std::vector<int> witness;  // zero column or proportional triple (1-based)
  std::string reason;
};

template <class T>
MLocusReport m_loci_membership(const TwoSix<T>& a) {
  MLocusReport r;
  bool rank2 = false;
  for (int i = 0; i < 6 && !rank2; ++i)
    for (int j = i + 1; j < 6 && !rank2; ++j) rank2 = !is_zero(bracket(a, i, j));
  if (!rank2) {
    r.locus = MLocus::outside_m0;
    r.reason = "rank below 2";
    return r;
  }
  for (int i = 0; i < 6; ++i)
    if (is_zero(a[static_cast<std::size_t>(i)][0]) && is_zero(a[static_cast<std::size_t>(i)][1])) {
      r.locus = MLocus::m0_not_m00;
      r.witness = {i + 1};
      r.reason = "zero column";
      return r;
    }
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k)
        if (is_zero(bracket(a, i, j)) && is_zero(bracket(a, i, k)) && is_zero(bracket(a, j, k))) {
          r.locus = MLocus::m0_not_m00;
          r.witness = {i + 1, j + 1, k + 1};
          r.reason = "three proportional columns";
          return r;
        }
  return r;
}

inline std::vector<Rational> matching_map(const QTwoSix& a, const MatchingBasis& basis) {
  const auto mem = m_loci_membership(a);
  if (mem.locus != MLocus::m00) throw std::invalid_argument("matching_map: matrix not in M00 (" + mem.reason + ")");
  std::vector<Rational> out;
  bool nonzero = false;
  for (auto k : basis.indices) {
    out.push_back(matching_product(a, all_matchings()[k]));
    nonzero = nonzero || !is_zero(out.back());
  }
  if (!nonzero) throw std::invalid_argument("matching_map: all basis invariants vanish");
  return out;
}

/// Projective equality of two rational vectors.
inline bool projectively_equal(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return std::any_of(a.begin(), a.end(), [](const Rational& x) { return !is_zero(x); });
}

// ---- cubic fitting ----

struct CubicFit {
  QPoly cubic;  // primitive integral
  std::size_t samples = 0;
  std::size_t kernel_dimension = 0;
};

/// Unique cubic in 5 variables through the points (kernel of the 35-column
/// evaluation matrix); throws if the kernel is not one-dimensional.
inline CubicFit fit_cubic(const std::vector<std::vector<Rational>>& pts) {
  const auto mons = monomials_of_degree(5, 3);
  QMatrix ev(RationalField{}, pts.size(), mons.size());
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (std::size_t c = 0; c < mons.size(); ++c) {
      Rational v = 1;
      for (std::size_t i = 0; i < 5; ++i)
        for (unsigned k = 0; k < mons[c][i]; ++k) v *= pts[r][i];
      ev(r, c) = v;
    }
  const auto ker = kernel_basis(ev);
  CubicFit fit;
  fit.samples = pts.size();
  fit.kernel_dimension = ker.size();
  if (ker.size() != 1) throw std::runtime_error("fit_cubic: kernel dimension " + std::to_string(ker.size()));
  QPoly f(RationalField{}, 5);
  for (std::size_t c = 0; c < mons.size(); ++c)
    if (!is_zero(ker[0][c])) f.add_term(mons[c], ker[0][c]);
  fit.cubic = primitive_integral(f);
  return fit;
}

// ---- models ----

/// Sum_{i<5} x_i^3 - (sum x_i)^3: the P^5 model with x6 = -(x1 + ... + x5) eliminated.
inline Hypersurface segre_cubic_p4() {
  QPoly s(RationalField{}, 5), cubes(RationalField{}, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    const QPoly v = QPoly::variable(RationalField{}, 5, i);
    s += v;
    cubes += v.pow(3);
  }
  return Hypersurface(cubes - s.pow(3), numbered_vars("x", 5, 1));
}

/// Plane x_a + x_b = x_c + x_d = x_e + x_f = 0 of the P^5 model, in the P^4 chart.
inline QSubspace matching_plane(const Matching& m) {
  // P^5 forms, then substitute x6 = -(x1 + ... + x5)
  QMatrix f(RationalField{}, 3, 5);
  for (std::size_t r = 0; r < 3; ++r)
    for (int c : {m[r].first, m[r].second}) {
      if (c < 5) f(r, static_cast<std::size_t>(c)) += 1;
      else
        for (std::size_t k = 0; k < 5; ++k) f(r, k) -= 1;
    }
  return QSubspace::from_forms(f);
}

struct SegreModel {
  Hypersurface sigma;
  std::vector<std::vector<Rational>> nodes;  // in P^5 coordinates (x6 appended)
  std::vector<SingularPointReport> reports;
  std::vector<QSubspace> planes;             // the 15 matching planes in the P^4 chart
  std::size_t fp_singular = 0;               // over F_7
  std::size_t fp_planes = 0;
  bool planes_match_fp = false;
  bool nodes_pm_one = false;
  bool s6_invariant = false;
  long dual = 0;
};

/// Over F_7: singular points lifted to signs, planes found by search and
/// matched against the 15 rational matching planes.
inline SegreModel segre_standard(std::uint32_t p = 7) {
  SegreModel m;
  m.sigma = segre_cubic_p4();
  const auto sing = singular_points_fp(m.sigma.f, p);
  m.fp_singular = sing.size();
  m.nodes_pm_one = true;
  for (const auto& s : sing) {
    std::vector<Rational> x;
    Rational sum = 0;
    for (auto v : s) {
      x.push_back(v == 0 ? Rational(0) : v == 1 ? Rational(1) : v == p - 1 ? Rational(-1) : Rational(99));
      sum += x.back();
    }
    std::vector<Rational> full = x;
    full.push_back(-sum);
    int plus = 0, minus = 0;
    for (const auto& c : full) plus += c == 1, minus += c == -1;
    m.nodes_pm_one = m.nodes_pm_one && plus == 3 && minus == 3 && is_singular_point(m.sigma.f, x);
    if (!is_singular_point(m.sigma.f, x)) continue;
    m.nodes.push_back(full);
    m.reports.push_back(classify_singularity(m.sigma, x));
  }
  for (const auto& mt : all_matchings()) m.planes.push_back(matching_plane(mt));
  const auto fp = planes_in_hypersurface_fp(m.sigma.f, p, 2);
  m.fp_planes = fp.size();
  const PrimeField field(p);
  m.planes_match_fp = fp.size() == 15;
  for (const auto& pl : m.planes) {
    const bool on = restrict_to(m.sigma.f, pl).is_zero();
    const auto red = FpSubspace::from_span(reduce_mod(pl.span, field));
    m.planes_match_fp = m.planes_match_fp && on && std::find(fp.begin(), fp.end(), red) != fp.end();
  }
  // S6 on the P^5 model: the transposition (12) and the 6-cycle preserve both equations
  m.s6_invariant = true;
  auto v6 = [](std::size_t k) { return QPoly::variable(RationalField{}, 6, k); };
  QPoly lin(RationalField{}, 6), cub(RationalField{}, 6);
  for (std::size_t k = 0; k < 6; ++k) {
    lin += v6(k);
    cub += v6(k).pow(3);
  }
  for (const auto& perm : {Perm::parse("(12)", 6), Perm::parse("(123456)", 6)}) {
    std::vector<QPoly> img;
    for (std::size_t k = 0; k < 6; ++k) img.push_back(v6(perm(k)));
    m.s6_invariant = m.s6_invariant && lin.substitute(img) == lin && cub.substitute(img) == cub;
  }
  m.dual = dual_degree(m.sigma, m.reports);
  return m;
}

struct FittedModel {
  std::string name;
  Hypersurface sigma;
  std::size_t samples = 0;
  std::size_t basis_dimension = 0;  // quadrics through the points, or matching-product rank
};

/// Quadrics through e1..e4 and (1:1:1:1) in P^3.
inline std::vector<QPoly> quadrics_through_five_points() {
  const auto mons = monomials_of_degree(4, 2);
  const std::vector<std::vector<Rational>> pts{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}};
  QMatrix ev(RationalField{}, pts.size(), mons.size());
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (std::size_t c = 0; c < mons.size(); ++c) {
      Rational v = 1;
      for (std::size_t i = 0; i < 4; ++i)
        for (unsigned k = 0; k < mons[c][i]; ++k) v *= pts[r][i];
      ev(r, c) = v;
    }
  std::vector<QPoly> out;
  for (const auto& k : kernel_basis(ev)) {
    QPoly q(RationalField{}, 4);
    for (std::size_t c = 0; c < mons.size(); ++c)
      if (!is_zero(k[c])) q.add_term(mons[c], k[c]);
    out.push_back(q);
  }
  return out;
}

inline FittedModel quadrics_model(std::uint64_t seed = 1, std::size_t samples = 60) {
  const auto quads = quadrics_through_five_points();
  std::mt19937_64 gen(seed);
  for (std::size_t want = samples;; want += 20) {
    std::vector<std::vector<Rational>> img;
    while (img.size() < want) {
      std::vector<Rational> t;
      for (int i = 0; i < 4; ++i) t.emplace_back(static_cast<long>(gen() % 19) - 9);
      std::vector<Rational> y;
      bool nonzero = false;
      for (const auto& q : quads) {
        y.push_back(q.evaluate(t));
        nonzero = nonzero || !is_zero(y.back());
      }
      if (nonzero) img.push_back(std::move(y));
    }
    try {
      const auto fit = fit_cubic(img);
      return {"quadrics", Hypersurface(fit.cubic, numbered_vars("q", 5)), fit.samples, quads.size()};
    } catch (const std::runtime_error&) {
      if (want > 400) throw;
    }
  }
}

inline FittedModel matching_model(std::uint64_t seed = 1, std::size_t samples = 60) {
  const auto basis = matching_basis(seed);
  std::mt19937_64 gen(seed + 1);
  for (std::size_t want = samples;; want += 20) {
    std::vector<std::vector<Rational>> img;
    while (img.size() < want) {
      const auto a = random_two_six(gen);
      if (m_loci_membership(a).locus != MLocus::m00) continue;
      try {
        img.push_back(matching_map(a, basis));
      } catch (const std::invalid_argument&) {
      }
    }
    try {
      const auto fit = fit_cubic(img);
      return {"matching", Hypersurface(fit.cubic, numbered_vars("m", 5)), fit.samples, basis.rank};
    } catch (const std::runtime_error&) {
      if (want > 400) throw;
    }
  }
}

struct CubicCensus {
  std::uint32_t p = 0;
  std::size_t points = 0;
  std::size_t singular = 0;
  std::size_t planes = 0;
  friend bool operator==(const CubicCensus&, const CubicCensus&) = default;
};

inline CubicCensus cubic_census(const QPoly& f, std::uint32_t p, bool with_planes = true) {
  CubicCensus c;
  c.p = p;
  c.points = points_fp(f, p).size();
  c.singular = singular_points_fp(f, p).size();
  if (with_planes) c.planes = planes_in_hypersurface_fp(f, p, 2).size();
  return c;
}

/// Coordinate permutation and sign pattern taking f to a multiple of g, if any.
inline std::optional<std::pair<Perm, std::vector<int>>> permutation_sign_equivalence(const QPoly& f, const QPoly& g) {
  std::vector<std::uint8_t> img{0, 1, 2, 3, 4};
  do {
    for (unsigned mask = 0; mask < 32; ++mask) {
      std::vector<QPoly> sub;
      std::vector<int> signs;
      for (std::size_t k = 0; k < 5; ++k) {
        const int s = (mask >> k) & 1u ? -1 : 1;
        signs.push_back(s);
        sub.push_back(QPoly::variable(RationalField{}, 5, img[k]).scaled(Rational(s)));
      }
      const QPoly h = primitive_integral(f.substitute(sub));
      if (h == primitive_integral(g)) return std::make_pair(Perm(img), signs);
    }
  } while (std::next_permutation(img.begin(), img.end()));
  return std::nullopt;
}

// ---- finite-field census of M00 ----

struct SegreCensus {
  std::uint32_t q = 0;
  std::uint64_t m00 = 0;
  std::optional<std::uint64_t> m00_bruteforce;  // full q^12 enumeration when q = 3
  std::uint64_t sigma_points = 0;
  std::uint64_t rational_nodes = 0;
  std::uint64_t sigma0 = 0;
  std::uint64_t sl2 = 0;
  std::uint64_t g_order = 0;  // #SL2 (q - 1)^6
  bool identity_holds = false;
  std::string model;  // cubic used for #Sigma(F_q)
};

/// #M00(F_q): each column is a nonzero vector, i.e. a point of P^1(F_q) times a
/// scalar; enumerate column classes with no class used three times.
inline std::uint64_t count_m00(std::uint32_t q) {
  const std::uint32_t classes = q + 1;
  std::vector<int> used(classes, 0);
  std::uint64_t maps = 0;
  std::function<void(int, bool)> rec = [&](int col, bool two_classes) {
    if (col == 6) {
      maps += two_classes;
      return;
    }
    for (std::uint32_t c = 0; c < classes; ++c) {
      if (used[c] == 2) continue;  // a third column on this line would be proportional
      ++used[c];
      bool distinct = two_classes;
      if (!distinct)
        for (std::uint32_t d = 0; d < classes; ++d) distinct = distinct || (d != c && used[d] > 0);
      rec(col + 1, distinct);
      --used[c];
    }
  };
  rec(0, false);
  std::uint64_t scal = 1;
  for (int k = 0; k < 6; ++k) scal *= q - 1;
  return maps * scal;
}

/// Full enumeration of 2 x 6 matrices over F_q (q^12 of them).
inline std::uint64_t count_m00_bruteforce(std::uint32_t q) {
  if (q > 3) throw std::invalid_argument("count_m00_bruteforce: q^12 too large");
  std::uint64_t total = 1, count = 0;
  for (int k = 0; k < 12; ++k) total *= q;
  TwoSix<Fp> a;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (auto& col : a)
      for (auto& x : col) {
        x = Fp(c % q, q);
        c /= q;
      }
    count += m_loci_membership(a).locus == MLocus::m00;
  }
  return count;
}

inline std::uint64_t count_sl2(std::uint32_t q) {
  std::uint64_t n = 0;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) n += (std::uint64_t(a) * d + std::uint64_t(q - 1) * b % q * c) % q == 1;
  return n;
}

/// Census identity #M00 = #Sigma0 * #SL2 * (q-1)^6 for q in {3, 5}. #Sigma is
/// counted on the matching-model cubic, which has good reduction at 3 (the
/// standard equations collapse there).
inline SegreCensus segre_census(std::uint32_t q, const FittedModel& model) {
  if (q != 3 && q != 5) throw std::invalid_argument("census: q must be 3 or 5");
  SegreCensus c;
  c.q = q;
  c.model = model.name;
  c.m00 = count_m00(q);
  if (q == 3) c.m00_bruteforce = count_m00_bruteforce(q);
  c.sigma_points = points_fp(model.sigma.f, q).size();
  c.rational_nodes = singular_points_fp(model.sigma.f, q).size();
  c.sigma0 = c.sigma_points - c.rational_nodes;
  c.sl2 = count_sl2(q);
  c.g_order = c.sl2;
  for (int k = 0; k < 6; ++k) c.g_order *= q - 1;
  c.identity_holds = c.m00 == c.sigma0 * c.g_order && (!c.m00_bruteforce || *c.m00_bruteforce == c.m00) &&
                     c.sl2 == std::uint64_t(q) * (std::uint64_t(q) * q - 1);
  return c;
}

inline nlohmann::json to_json(const SegreCensus& c) {
  nlohmann::json j{{"q", c.q},
                   {"m00", c.m00},
                   {"sigma_points", c.sigma_points},
                   {"rational_nodes", c.rational_nodes},
                   {"sigma0", c.sigma0},
                   {"sl2", c.sl2},
                   {"g_order", c.g_order},
                   {"sigma_model", c.model},
                   {"identity_holds", c.identity_holds}};
  if (c.m00_bruteforce) j["m00_bruteforce"] = *c.m00_bruteforce;
  return j;
}

/// Stabilizers in SL2(F_3) x (F_3^x)^6 of sampled points of M00(F_3); the
/// action is free modulo the diagonal mu_2 iff every stabilizer has order 2.
struct FreeActionReport {
  std::size_t samples = 0;
  std::size_t free_mod_mu2 = 0;
  bool ok() const { return samples > 0 && free_mod_mu2 == samples; }
};

inline FreeActionReport free_action_spot_check(std::size_t samples = 200, std::uint64_t seed = 1) {
  const std::uint32_t q = 3;
  std::vector<std::array<Fp, 4>> sl2;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          std::array<Fp, 4> g{Fp(a, q), Fp(b, q), Fp(c, q), Fp(d, q)};
          if ((g[0] * g[3] - g[1] * g[2]).value() == 1) sl2.push_back(g);
        }
  std::mt19937_64 gen(seed);
  FreeActionReport r;
  while (r.samples < samples) {
    TwoSix<Fp> a;
    for (auto& col : a)
      for (auto& x : col) x = Fp(gen() % q, q);
    if (m_loci_membership(a).locus != MLocus::m00) continue;
    ++r.samples;
    std::size_t stab = 0;
    for (const auto& g : sl2)
      for (unsigned mask = 0; mask < 64; ++mask) {
        bool fixed = true;
        for (std::size_t k = 0; k < 6 && fixed; ++k) {
          const Fp t((mask >> k) & 1u ? 2 : 1, q);
          const Fp u = (g[0] * a[k][0] + g[1] * a[k][1]) * t;
          const Fp v = (g[2] * a[k][0] + g[3] * a[k][1]) * t;
          fixed = u.value() == a[k][0].value() && v.value() == a[k][1].value();
        }
        stab += fixed;
      }
    r.free_mod_mu2 += stab == 2;
  }
  return r;
}

/// Rank of the character lattice of T / mu_2, T = (G_m)^6 scaling the columns:
/// characters with even total degree.
inline std::size_t torus_character_rank() {
  QMatrix gens(RationalField{}, 6, 6);
  gens(0, 0) = 2;
  for (std::size_t i = 1; i < 6; ++i) gens(i, 0) = -1, gens(i, i) = 1;
  return rank(gens);
}

/// dim M00 - dim (SL2 x T): the quotient dimension.
inline int segre_quotient_dimension() { return 12 - (3 + 6); }

// ---- Grassmannian ----

struct GrassmannCounts {
  std::uint64_t q = 0;
  std::uint64_t gaussian = 0;      // product formula
  std::uint64_t schubert = 0;      // sum over RREF pivot patterns of q^(free entries)
  std::optional<std::uint64_t> bruteforce;  // rank-2 matrices / #GL2, q <= 3
  std::uint64_t punctured_cone = 0;
  bool agree() const { return gaussian == schubert && (!bruteforce || *bruteforce == gaussian); }
};

inline GrassmannCounts grassmann_counts(std::uint64_t q) {
  if (q < 2 || q > 16) throw std::invalid_argument("grassmann_counts: q must be in [2, 16]");
  GrassmannCounts g;
  g.q = q;
  auto pw = [](std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
  };
  g.gaussian = (pw(q, 6) - 1) * (pw(q, 5) - 1) / ((pw(q, 2) - 1) * (q - 1));
  for (unsigned a = 0; a < 6; ++a)
    for (unsigned b = a + 1; b < 6; ++b) {
      // row 1 free after a except column b; row 2 free after b
      const unsigned free = (5 - a - 1) + (5 - b);
      g.schubert += pw(q, free);
    }
  if (q <= 3) {
    const std::uint32_t p = static_cast<std::uint32_t>(q);
    std::uint64_t total = pw(q, 12), rank2 = 0;
    TwoSix<Fp> a;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (auto& col : a)
        for (auto& x : col) {
          x = Fp(c % q, p);
          c /= q;
        }
      bool r2 = false;
      for (int i = 0; i < 6 && !r2; ++i)
        for (int j = i + 1; j < 6 && !r2; ++j) r2 = !bracket(a, i, j).is_zero();
      rank2 += r2;
    }
    const std::uint64_t gl2 = (q * q - 1) * (q * q - q);
    g.bruteforce = rank2 / gl2;
  }
  g.punctured_cone = g.gaussian * (q - 1);
  return g;
}

}  // namespace nodal
