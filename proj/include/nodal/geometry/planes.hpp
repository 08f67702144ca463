#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "nodal/geometry/hypersurface.hpp"
#include "nodal/group/graph.hpp"

namespace nodal {

/// Number of k-dimensional projective subspaces of P^{n-1}(F_p) (Gaussian binomial [n, k+1]_p).
inline long double grassmannian_size(std::size_t n, std::size_t k, std::uint32_t p) {
  long double num = 1, den = 1;
  for (std::size_t i = 0; i <= k; ++i) {
    num *= std::pow(static_cast<long double>(p), static_cast<long double>(n - i)) - 1;
    den *= std::pow(static_cast<long double>(p), static_cast<long double>(i + 1)) - 1;
  }
  return num / den;
}

/// All k-planes of P^N(F_p) contained in {f = 0}. Candidates are RREF representatives;
/// each is screened at every F_p-point of the plane and confirmed by substituting a
/// parametrization.
inline std::vector<FpSubspace> planes_in_hypersurface_fp(const QPoly& f, std::uint32_t p, std::size_t k) {
  const std::size_t n = f.nvars(), rows = k + 1;
  if (rows > n) throw std::invalid_argument("plane dimension exceeds ambient dimension");
  if (grassmannian_size(n, k, p) > 1e7L) throw std::invalid_argument("Grassmannian enumeration bound 1e7 exceeded");
  const PrimeField field(p);
  const FpEvaluator ev(f, p);
  const FpPoly fp = reduce_mod(f, field);
  std::vector<FpSubspace> out;

  std::vector<FpPoint> params;  // points of P^k(F_p)
  for_each_projective_point(rows, p, [&](const FpPoint& t) { params.push_back(t); });

  std::vector<std::size_t> piv(rows);
  std::vector<std::uint32_t> m(rows * n);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t r, std::size_t from) {
    if (r == rows) {
      std::vector<std::pair<std::size_t, std::size_t>> free;
      std::vector<bool> is_piv(n, false);
      for (auto c : piv) is_piv[c] = true;
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = piv[i] + 1; c < n; ++c)
          if (!is_piv[c]) free.emplace_back(i, c);
      std::fill(m.begin(), m.end(), 0);
      for (std::size_t i = 0; i < rows; ++i) m[i * n + piv[i]] = 1;
      FpPoint x(n);
      for (;;) {
        bool ok = true;
        for (const auto& t : params) {
          for (std::size_t c = 0; c < n; ++c) {
            std::uint64_t s = 0;
            for (std::size_t i = 0; i < rows; ++i) s += static_cast<std::uint64_t>(t[i]) * m[i * n + c];
            x[c] = static_cast<std::uint32_t>(s % p);
          }
          if (ev(x) != 0) {
            ok = false;
            break;
          }
        }
        if (ok) {
          FpMatrix span(field, rows, n);
          for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t c = 0; c < n; ++c) span(i, c) = Fp(m[i * n + c], p);
          auto s = FpSubspace::from_span(span);
          if (!restrict_to(fp, s).is_zero()) throw std::logic_error("plane vanishes pointwise but not identically");
          out.push_back(std::move(s));
        }
        std::size_t j = 0;
        while (j < free.size() && m[free[j].first * n + free[j].second] == p - 1) m[free[j].first * n + free[j].second] = 0, ++j;
        if (j == free.size()) break;
        ++m[free[j].first * n + free[j].second];
      }
      return;
    }
    for (std::size_t c = from; c + (rows - r) <= n; ++c) {
      piv[r] = c;
      choose(r + 1, c + 1);
    }
  };
  choose(0, 0);
  std::sort(out.begin(), out.end(), [](const FpSubspace& a, const FpSubspace& b) {
    for (std::size_t i = 0; i < a.span.rows(); ++i)
      for (std::size_t c = 0; c < a.span.cols(); ++c)
        if (a.span(i, c).value() != b.span(i, c).value()) return a.span(i, c).value() < b.span(i, c).value();
    return false;
  });
  return out;
}

struct IncidenceGraph {
  Graph graph{0};
  std::vector<std::array<int, 3>> triangles;
};

inline std::vector<std::array<int, 3>> triangles_of(const Graph& g) {
  std::vector<std::array<int, 3>> t;
  const int n = static_cast<int>(g.vertex_count());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) t.push_back({a, b, c});
  return t;
}

/// Vertices are the planes; an edge joins two planes meeting in a line.
template <Field Ring>
IncidenceGraph incidence_graph(const std::vector<LinearSubspace<Ring>>& planes) {
  IncidenceGraph ig;
  ig.graph = Graph(planes.size());
  for (std::size_t a = 0; a < planes.size(); ++a)
    for (std::size_t b = a + 1; b < planes.size(); ++b) {
      if (planes[a] == planes[b]) throw std::invalid_argument("incidence_graph: equal planes");
      if (intersection_dimension(planes[a], planes[b]) == 1) ig.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  ig.triangles = triangles_of(ig.graph);
  return ig;
}

/// Rook graph on {1,2,3}^2: vertex 3i+j, edges between points sharing a row or column.
inline Graph reference_grid_graph() {
  Graph g(9);
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b)
      if (a / 3 == b / 3 || a % 3 == b % 3) g.add_edge(a, b);
  return g;
}

/// Vertex bijection phi with a ~ b iff phi(a) ~ phi(b) in h, by exhaustive search.
inline std::optional<Perm> find_isomorphism(const Graph& g, const Graph& h) {
  const std::size_t n = g.vertex_count();
  if (h.vertex_count() != n || n > 9 || g.edges().size() != h.edges().size()) return std::nullopt;
  std::vector<std::uint8_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
  do {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = a + 1; b < n && ok; ++b)
        ok = g.adjacent(static_cast<int>(a), static_cast<int>(b)) == h.adjacent(img[a], img[b]);
    if (ok) return Perm(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return std::nullopt;
}

struct TorusSkeletonReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool four_regular = false;
  std::size_t triangles = 0;
  bool unique_triangle_per_edge = false;
  std::optional<Perm> isomorphism;  // to the reference grid graph
  std::size_t aut_order = 0;

  bool ok() const {
    return vertices == 9 && edges == 18 && four_regular && triangles == 6 && unique_triangle_per_edge &&
           isomorphism.has_value() && aut_order == 72;
  }
};

inline TorusSkeletonReport check_torus_skeleton(const Graph& g) {
  TorusSkeletonReport r;
  r.vertices = g.vertex_count();
  const auto edges = g.edges();
  r.edges = edges.size();
  r.four_regular = true;
  for (std::size_t v = 0; v < r.vertices; ++v) r.four_regular = r.four_regular && g.degree(static_cast<int>(v)) == 4;
  const auto tri = triangles_of(g);
  r.triangles = tri.size();
  r.unique_triangle_per_edge = true;
  for (auto [a, b] : edges) {
    int count = 0;
    for (const auto& t : tri) {
      const bool has_a = t[0] == a || t[1] == a || t[2] == a;
      const bool has_b = t[0] == b || t[1] == b || t[2] == b;
      count += has_a && has_b;
    }
    r.unique_triangle_per_edge = r.unique_triangle_per_edge && count == 1;
  }
  if (r.vertices <= 9) {
    r.isomorphism = find_isomorphism(g, reference_grid_graph());
    r.aut_order = graph_automorphism_group(g).order();
  }
  return r;
}

}  // namespace nodal
