#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nodal/geometry/planes.hpp"
#include "nodal/group/wreath.hpp"
#include "nodal/report/check.hpp"

namespace nodal {

// Coordinates on P^5: x1, x2, x3, y1, y2, y3 at indices 0..5.
inline const std::vector<std::string>& perazzo_vars() {
  static const std::vector<std::string> v{"x1", "x2", "x3", "y1", "y2", "y3"};
  return v;
}

struct PerazzoData {
  Hypersurface P;                // x1 x2 x3 - y1 y2 y3
  std::vector<QSubspace> planes;  // L_ij = {x_i = y_j = 0}, grid order 3i+j
  std::vector<QSubspace> lines;   // l_pq = {x_i = y_j = 0 : i != p, j != q}
  std::vector<QSubspace> points;  // w_1..w_6, the coordinate points
};

namespace detail {

inline QSubspace coordinate_subspace(const std::vector<std::size_t>& zero_coords) {
  QMatrix f(RationalField{}, zero_coords.size(), 6);
  for (std::size_t r = 0; r < zero_coords.size(); ++r) f(r, zero_coords[r]) = 1;
  return QSubspace::from_forms(f);
}

inline QPoly coordinate_product(std::size_t nvars, std::size_t first) {
  QPoly p = QPoly::constant(RationalField{}, nvars, Rational(1));
  for (std::size_t k = first; k < first + 3; ++k) p = p * QPoly::variable(RationalField{}, nvars, k);
  return p;
}

}  // namespace detail

inline PerazzoData perazzo_standard() {
  PerazzoData d;
  d.P = Hypersurface(detail::coordinate_product(6, 0) - detail::coordinate_product(6, 3), perazzo_vars());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) d.planes.push_back(detail::coordinate_subspace({i, 3 + j}));
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t q = 0; q < 3; ++q) {
      std::vector<std::size_t> zero;
      for (std::size_t i = 0; i < 3; ++i)
        if (i != p) zero.push_back(i);
      for (std::size_t j = 0; j < 3; ++j)
        if (j != q) zero.push_back(3 + j);
      d.lines.push_back(detail::coordinate_subspace(zero));
    }
  for (std::size_t k = 0; k < 6; ++k) {
    std::vector<std::size_t> zero;
    for (std::size_t c = 0; c < 6; ++c)
      if (c != k) zero.push_back(c);
    d.points.push_back(detail::coordinate_subspace(zero));
  }
  return d;
}

/// Structural checks on the standard fourfold: planes on P, lines in the
/// Jacobian locus, and the w_k being exactly the pairwise meets of the lines.
inline std::vector<Check> perazzo_checks(const PerazzoData& d) {
  std::vector<Check> out;
  bool planes_ok = d.planes.size() == 9;
  for (const auto& L : d.planes) planes_ok = planes_ok && L.dimension() == 3 && restrict_to(d.P.f, L).is_zero();
  out.push_back({"perazzo.planes_on_P", planes_ok, {{"count", d.planes.size()}}});

  bool lines_ok = d.lines.size() == 9;
  for (const auto& l : d.lines)
    for (std::size_t i = 0; i < 6; ++i) lines_ok = lines_ok && restrict_to(d.P.f.derivative(i), l).is_zero();
  out.push_back({"perazzo.lines_singular", lines_ok, {{"count", d.lines.size()}}});

  std::vector<QSubspace> meets;
  for (std::size_t a = 0; a < d.lines.size(); ++a)
    for (std::size_t b = a + 1; b < d.lines.size(); ++b) {
      const int dim = intersection_dimension(d.lines[a], d.lines[b]);
      if (dim < 0) continue;
      QSubspace m = QSubspace::from_forms(QMatrix::vstack(d.lines[a].forms, d.lines[b].forms));
      if (std::find(meets.begin(), meets.end(), m) == meets.end()) meets.push_back(m);
    }
  bool points_ok = meets.size() == d.points.size();
  for (const auto& w : d.points) points_ok = points_ok && std::find(meets.begin(), meets.end(), w) != meets.end();
  out.push_back({"perazzo.w_points_are_line_meets", points_ok, {{"meets", meets.size()}}});
  return out;
}

/// Hyperplane H = sum h_k c_k of P^5 with h_0 != 0, identified with P^4 in the
/// coordinates u = (x2, x3, y1, y2, y3) by solving for x1.
struct HyperplaneSection {
  std::array<Rational, 6> h{};
  QMatrix pullback;  // 6 x 5: ambient coordinates as linear forms in u

  explicit HyperplaneSection(const std::array<Rational, 6>& coeffs) : h(coeffs), pullback(RationalField{}, 6, 5) {
    if (is_zero(h[0])) throw std::invalid_argument("hyperplane section: x1 coefficient must be nonzero");
    for (std::size_t k = 1; k < 6; ++k) {
      pullback(k, k - 1) = 1;
      pullback(0, k - 1) = -h[k] / h[0];
    }
  }

  static const std::vector<std::string>& vars() {
    static const std::vector<std::string> v{"x2", "x3", "y1", "y2", "y3"};
    return v;
  }

  QPoly restrict(const QPoly& f) const {
    std::vector<QPoly> images;
    for (std::size_t k = 0; k < 6; ++k) {
      QPoly im(RationalField{}, 5);
      for (std::size_t t = 0; t < 5; ++t)
        if (!is_zero(pullback(k, t))) im.add_term(unit_exponent(t), pullback(k, t));
      images.push_back(std::move(im));
    }
    return f.substitute(images);
  }

  std::vector<Rational> to_u(const std::vector<Rational>& x) const { return {x.begin() + 1, x.end()}; }
  std::vector<Rational> to_ambient(const std::vector<Rational>& u) const { return pullback.apply(u); }

  QSubspace section_of(const QSubspace& s) const { return QSubspace::from_forms(s.forms * pullback); }

 private:
  static Exponent unit_exponent(std::size_t t) {
    Exponent e(5, 0);
    e[t] = 1;
    return e;
  }
};

struct PrimeCheck {
  std::uint32_t p = 0;
  bool good = false;
  std::string reason;  // why the prime is bad
  std::size_t singular_count = 0;
  bool matches = false;
  std::vector<std::string> extra;
  std::vector<std::string> missing;
};

struct NineNodalCertificate {
  std::array<Rational, 6> h{};
  bool accepted = false;
  std::string rejection;
  std::optional<Hypersurface> X;                  // in u = (x2, x3, y1, y2, y3)
  std::vector<std::vector<Rational>> nodes;         // u-coordinates of H meet l_pq, grid order
  std::vector<SingularPointReport> reports;
  Rational discriminant;  // h1 h2 h3 + h4 h5 h6; zero iff X has a tenth singular point
  std::vector<PrimeCheck> primes;
  std::vector<std::string> extra_singular_points;

  static constexpr const char* certificate_type = "exact-nodes-over-Q+exhaustive-Fp-enumeration";

  std::size_t good_primes() const {
    return static_cast<std::size_t>(std::count_if(primes.begin(), primes.end(), [](const PrimeCheck& c) { return c.good; }));
  }
  bool all_nodes() const {
    return reports.size() == 9 && std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.is_node && r.m == 2; });
  }
  bool passed() const {
    if (!accepted || !all_nodes() || good_primes() < 3) return false;
    for (const auto& c : primes)
      if (c.good && !c.matches) return false;
    return true;
  }
};

namespace detail {

inline std::optional<QMatrix> node_hessian(const QPoly& f, const std::vector<Rational>& point) {
  const AffineChart c = affine_chart(f, point);
  return hessian_at(c.g, c.point);
}

/// Rank of a rational matrix mod p; nullopt if some denominator vanishes mod p.
inline std::optional<std::size_t> rank_mod(const QMatrix& a, std::uint32_t p) {
  const PrimeField field(p);
  FpMatrix m(field, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (mpz_divisible_ui_p(a(i, j).get_den().get_mpz_t(), p)) return std::nullopt;
      m(i, j) = field.from_rational(a(i, j));
    }
  return rank(m);
}

inline std::string prime_point_string(std::uint32_t p, const FpPoint& x) {
  return "F" + std::to_string(p) + ":" + point_string(x);
}

}  // namespace detail

/// Points H meet l_pq in ambient coordinates: x_p = h_{y_q}, y_q = -h_{x_p}, others zero.
inline std::vector<Rational> section_node(const std::array<Rational, 6>& h, std::size_t p, std::size_t q) {
  std::vector<Rational> x(6, Rational(0));
  x[p] = h[3 + q];
  x[3 + q] = -h[p];
  return x;
}

/// Certifies X = P meet H as 9-nodal. Primes are taken in order; every listed
/// prime up to 13 is examined, and the scan continues until three good primes
/// have been seen.
inline NineNodalCertificate nine_nodal_section(const std::array<Rational, 6>& h,
                                               const std::vector<std::uint32_t>& primes = {3, 5, 7, 11, 13, 17, 19, 23, 29,
                                                                                           31, 37, 41, 43}) {
  NineNodalCertificate cert;
  cert.h = h;
  cert.discriminant = h[0] * h[1] * h[2] + h[3] * h[4] * h[5];
  std::vector<std::string> through;
  for (std::size_t k = 0; k < 6; ++k)
    if (is_zero(h[k])) through.push_back("w" + std::to_string(k + 1));
  if (!through.empty()) {
    std::string s;
    for (const auto& w : through) s += (s.empty() ? "" : ",") + w;
    cert.rejection = "H contains " + s + "; P.H has non-isolated singularities";
    return cert;
  }
  const HyperplaneSection sec(h);
  const PerazzoData d = perazzo_standard();
  cert.X = Hypersurface(sec.restrict(d.P.f), HyperplaneSection::vars());
  const Hypersurface& X = *cert.X;

  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t q = 0; q < 3; ++q) {
      const auto x = section_node(h, p, q);
      if (!d.lines[3 * p + q].contains(x)) throw std::logic_error("node formula off the singular line");
      cert.nodes.push_back(sec.to_u(x));
    }
  for (std::size_t a = 0; a < 9; ++a)
    for (std::size_t b = a + 1; b < 9; ++b)
      if (QSubspace::from_span(QMatrix::from_rows(RationalField{}, {cert.nodes[a]}, 5)) ==
          QSubspace::from_span(QMatrix::from_rows(RationalField{}, {cert.nodes[b]}, 5))) {
        cert.rejection = "H meet the singular lines is not 9 distinct points";
        return cert;
      }
  for (const auto& n : cert.nodes) {
    if (!is_singular_point(X.f, n)) {
      cert.rejection = "expected node " + point_string(n) + " is not singular";
      return cert;
    }
    cert.reports.push_back(classify_singularity(X, n));
  }
  if (!cert.all_nodes()) {
    cert.rejection = "some point of H meet Sing P is not an ordinary node";
    return cert;
  }
  cert.accepted = true;

  const QPoly F = primitive_integral(X.f);
  std::vector<QMatrix> hess;
  for (const auto& n : cert.nodes) hess.push_back(*detail::node_hessian(F, n));

  for (const std::uint32_t p : primes) {
    if (p > 13 && cert.good_primes() >= 3) break;
    PrimeCheck pc;
    pc.p = p;
    auto bad = [&](std::string why) {
      pc.reason = std::move(why);
      cert.primes.push_back(pc);
    };
    if (p < 3) {
      bad("characteristic 2");
      continue;
    }
    bool coeff_ok = true;
    for (const auto& c : h) coeff_ok = coeff_ok && !mpz_divisible_ui_p(c.get_num().get_mpz_t(), p) &&
                                       !mpz_divisible_ui_p(c.get_den().get_mpz_t(), p);
    if (!coeff_ok) {
      bad("a coefficient of H vanishes mod p");
      continue;
    }
    if (mpz_divisible_ui_p(cert.discriminant.get_num().get_mpz_t(), p)) {
      bad("tangency discriminant vanishes mod p");
      continue;
    }
    std::vector<FpPoint> expected;
    bool reduce_ok = true;
    for (const auto& n : cert.nodes) {
      auto r = reduce_point(n, p);
      if (!r) reduce_ok = false;
      else expected.push_back(*r);
    }
    std::sort(expected.begin(), expected.end());
    if (!reduce_ok || std::adjacent_find(expected.begin(), expected.end()) != expected.end()) {
      bad("nodes collide mod p");
      continue;
    }
    bool hess_ok = true;
    for (const auto& m : hess) {
      const auto r = detail::rank_mod(m, p);
      hess_ok = hess_ok && r && *r == m.rows();
    }
    if (!hess_ok) {
      bad("a node degenerates mod p");
      continue;
    }
    pc.good = true;
    const auto sing = singular_points_fp(F, p);
    pc.singular_count = sing.size();
    for (const auto& s : sing)
      if (!std::binary_search(expected.begin(), expected.end(), s)) {
        pc.extra.push_back(point_string(s));
        cert.extra_singular_points.push_back(detail::prime_point_string(p, s));
      }
    for (const auto& e : expected)
      if (!std::binary_search(sing.begin(), sing.end(), e)) pc.missing.push_back(point_string(e));
    pc.matches = pc.extra.empty() && pc.missing.empty();
    cert.primes.push_back(pc);
  }
  return cert;
}

inline nlohmann::json to_json(const NineNodalCertificate& c) {
  nlohmann::json j;
  nlohmann::json h = nlohmann::json::array();
  for (const auto& x : c.h) h.push_back(x.get_str());
  j["hyperplane"] = h;
  j["accepted"] = c.accepted;
  if (!c.accepted) j["rejection"] = c.rejection;
  j["certificate_type"] = NineNodalCertificate::certificate_type;
  j["tangency_discriminant"] = c.discriminant.get_str();
  if (c.X) j["hypersurface"] = to_text(c.X->f, c.X->vars);
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& r : c.reports)
    nodes.push_back({{"point", point_string(r.point)},
                     {"mu", r.mu},
                     {"mu_prime", r.mu_prime},
                     {"m", r.m},
                     {"is_node", r.is_node},
                     {"hessian_rank", r.hessian_rank},
                     {"slice_seed", r.slice_seed}});
  j["singular_points"] = nodes;
  nlohmann::json primes = nlohmann::json::array();
  for (const auto& p : c.primes) {
    nlohmann::json e{{"p", p.p}, {"good", p.good}};
    if (!p.good) e["reason"] = p.reason;
    else {
      e["singular_count"] = p.singular_count;
      e["matches"] = p.matches;
    }
    primes.push_back(e);
  }
  j["primes"] = primes;
  j["extra_singular_points"] = c.extra_singular_points;
  j["passed"] = c.passed();
  return j;
}

/// First H with h_1 = 1 and the other coefficients nonzero of absolute value at
/// most `height`, ordered by maximal height then lexicographically, that
/// certifies with exactly `required` as its prime list.
inline std::optional<NineNodalCertificate> find_nine_nodal_section(const std::vector<std::uint32_t>& required = {3, 5, 7},
                                                                   int height = 4) {
  for (int ht = 1; ht <= height; ++ht) {
    std::vector<long> vals;
    for (long v = -ht; v <= ht; ++v)
      if (v != 0) vals.push_back(v);
    std::array<std::size_t, 5> idx{};
    for (;;) {
      std::array<Rational, 6> h{Rational(1)};
      long top = 1;
      for (std::size_t k = 0; k < 5; ++k) {
        h[k + 1] = vals[idx[k]];
        top = std::max(top, std::labs(vals[idx[k]]));
      }
      if (top == ht) {
        bool quick = true;
        const Integer disc = Integer(1) * Integer(h[1].get_num()) * Integer(h[2].get_num()) +
                             Integer(h[3].get_num()) * Integer(h[4].get_num()) * Integer(h[5].get_num());
        for (auto p : required) {
          for (const auto& c : h) quick = quick && !mpz_divisible_ui_p(c.get_num().get_mpz_t(), p);
          quick = quick && !mpz_divisible_ui_p(disc.get_mpz_t(), p);
        }
        if (quick) {
          auto cert = nine_nodal_section(h, required);
          if (cert.passed() && cert.good_primes() == required.size()) return cert;
        }
      }
      std::size_t k = 5;
      while (k > 0 && idx[k - 1] + 1 == vals.size()) idx[--k] = 0;
      if (k == 0) break;
      ++idx[k - 1];
    }
  }
  return std::nullopt;
}

/// The nine planes L_ij meet H in u-coordinates, grid order.
inline std::vector<QSubspace> section_planes(const std::array<Rational, 6>& h) {
  const HyperplaneSection sec(h);
  std::vector<QSubspace> out;
  for (const auto& L : perazzo_standard().planes) out.push_back(sec.section_of(L));
  return out;
}

// ---- reconstruction of x_i, y_j from labeled planes ----

template <Field Ring>
struct PerazzoCoordinates {
  using T = typename Ring::value_type;
  std::array<std::vector<T>, 3> x;  // linear forms, leading coefficient 1
  std::array<std::vector<T>, 3> y;
  T alpha, beta;  // f = alpha x1 x2 x3 - beta y1 y2 y3
};

namespace detail {

template <Field Ring>
MPoly<Ring> linear_poly(const Ring& ring, const std::vector<typename Ring::value_type>& form) {
  MPoly<Ring> p(ring, form.size());
  for (std::size_t t = 0; t < form.size(); ++t) {
    if (is_zero(form[t])) continue;
    Exponent e(form.size(), 0);
    e[t] = 1;
    p.add_term(e, form[t]);
  }
  return p;
}

template <Field Ring>
std::vector<typename Ring::value_type> span_hyperplane(const std::vector<const LinearSubspace<Ring>*>& parts) {
  Matrix<Ring> s = parts.front()->span;
  for (std::size_t k = 1; k < parts.size(); ++k) s = Matrix<Ring>::vstack(s, parts[k]->span);
  auto ker = kernel_basis(s);
  if (ker.size() != 1) throw std::invalid_argument("labeling inconsistent: a row or column does not span a hyperplane");
  auto form = ker.front();
  std::size_t lead = 0;
  while (is_zero(form[lead])) ++lead;
  const typename Ring::value_type inv = s.ring().one() / form[lead];
  for (auto& c : form) c = c * inv;
  return form;
}

}  // namespace detail

/// Recovers x_i, y_j as the hyperplanes spanned by the rows and columns of the
/// labeled planes (planes[3i+j] = L_ij) and the scalars with
/// f = alpha prod x_i - beta prod y_j.
template <Field Ring>
PerazzoCoordinates<Ring> reconstruct_perazzo_coordinates(const MPoly<Ring>& f,
                                                         const std::vector<LinearSubspace<Ring>>& planes) {
  if (planes.size() != 9) throw std::invalid_argument("reconstruct: expects nine labeled planes");
  for (std::size_t a = 0; a < 9; ++a)
    for (std::size_t b = a + 1; b < 9; ++b) {
      const bool grid_adjacent = a / 3 == b / 3 || a % 3 == b % 3;
      if ((intersection_dimension(planes[a], planes[b]) == 1) != grid_adjacent)
        throw std::invalid_argument("labeling inconsistent with the grid graph at planes " + std::to_string(a) + "," +
                                    std::to_string(b));
    }
  const Ring& ring = planes.front().span.ring();
  PerazzoCoordinates<Ring> out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.x[i] = detail::span_hyperplane<Ring>({&planes[3 * i], &planes[3 * i + 1], &planes[3 * i + 2]});
    out.y[i] = detail::span_hyperplane<Ring>({&planes[i], &planes[3 + i], &planes[6 + i]});
  }
  const std::size_t n = f.nvars();
  MPoly<Ring> px = MPoly<Ring>::constant(ring, n, ring.one()), py = px;
  for (std::size_t i = 0; i < 3; ++i) {
    px = px * detail::linear_poly(ring, out.x[i]);
    py = py * detail::linear_poly(ring, out.y[i]);
  }
  const auto mons = monomials_of_degree(n, 3);
  Matrix<Ring> m(ring, mons.size(), 3);
  for (std::size_t r = 0; r < mons.size(); ++r) {
    m(r, 0) = f.coefficient(mons[r]);
    m(r, 1) = px.coefficient(mons[r]);
    m(r, 2) = py.coefficient(mons[r]);
  }
  const auto ker = kernel_basis(m);
  if (ker.size() != 1 || is_zero(ker[0][0]) || is_zero(ker[0][1]) || is_zero(ker[0][2]))
    throw std::invalid_argument("reconstruct: equation is not of the form alpha prod x - beta prod y");
  out.alpha = (ring.zero() - ker[0][1]) / ker[0][0];
  out.beta = ker[0][2] / ker[0][0];
  if (!(px.scaled(out.alpha) - py.scaled(out.beta) - f).is_zero()) throw std::logic_error("reconstruct: identity check failed");
  return out;
}

/// Orders unlabeled planes by an isomorphism of their incidence graph with the grid graph.
template <Field Ring>
std::vector<LinearSubspace<Ring>> grid_labeling(const std::vector<LinearSubspace<Ring>>& planes) {
  const auto ig = incidence_graph(planes);
  const auto phi = find_isomorphism(ig.graph, reference_grid_graph());
  if (!phi) throw std::invalid_argument("incidence graph is not the grid graph");
  std::vector<LinearSubspace<Ring>> out = planes;
  for (std::size_t a = 0; a < planes.size(); ++a) out[(*phi)(a)] = planes[a];
  return out;
}

/// Relabels grid-ordered planes by g: the plane at index k moves to g(k).
template <class P>
std::vector<P> relabel(const GammaElt& g, const std::vector<P>& planes) {
  const Perm gp = g.grid_perm();
  std::vector<P> out = planes;
  for (std::size_t k = 0; k < planes.size(); ++k) out[gp(k)] = planes[k];
  return out;
}

/// Degree-d check of  intersection over i in {2,3}, j in {1,2,3} of (x_i, y_j)  =  (x2 x3, y1 y2 y3).
inline bool row_ideal_identity(unsigned d, std::size_t* dimension = nullptr) {
  auto var = [](std::size_t k) { return QPoly::variable(RationalField{}, 6, k); };
  std::optional<GradedPiece<RationalField>> meet;
  for (std::size_t i = 1; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const std::vector<QPoly> gens{var(i), var(3 + j)};
      auto piece = graded_piece<RationalField>(gens, 6, RationalField{}, d);
      meet = meet ? intersect(*meet, piece) : piece;
    }
  const std::vector<QPoly> rhs{var(1) * var(2), var(3) * var(4) * var(5)};
  const auto target = graded_piece<RationalField>(rhs, 6, RationalField{}, d);
  if (dimension) *dimension = target.dimension();
  return *meet == target;
}

}  // namespace nodal
