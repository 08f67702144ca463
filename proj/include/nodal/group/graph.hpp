#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nodal/group/perm_group.hpp"

namespace nodal {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  explicit Graph(std::size_t n) : n_(n), adj_(n * n, false) {}
  Graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [a, b] : edges) add_edge(a, b);
  }

  void add_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("loops are not allowed");
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n_ || static_cast<std::size_t>(b) >= n_)
      throw std::out_of_range("vertex out of range");
    adj_[idx(a, b)] = adj_[idx(b, a)] = true;
  }

  std::size_t vertex_count() const { return n_; }
  bool adjacent(int a, int b) const { return adj_[idx(a, b)]; }
  std::size_t degree(int v) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < n_; ++w) d += adj_[idx(v, static_cast<int>(w))];
    return d;
  }
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (adj_[a * n_ + b]) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return out;
  }

  bool preserved_by(const Perm& p) const {
    if (p.degree() != n_) return false;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (adj_[a * n_ + b] != adj_[idx(p(a), p(b))]) return false;
    return true;
  }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b); }
  std::size_t n_;
  std::vector<bool> adj_;
};

/// Exact automorphism group: every vertex permutation is tested.
inline PermGroup<Perm> graph_automorphism_group(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 9) throw std::invalid_argument("graph_automorphism_group: at most 9 vertices");
  std::vector<std::uint8_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
  std::vector<Perm> autos;
  do {
    Perm p(img);
    if (g.preserved_by(p)) autos.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  // Greedy generators in sorted order; the closure must give back every automorphism.
  std::vector<Perm> gens;
  PermGroup<Perm> cur({}, Perm::identity(n));
  for (const auto& a : autos)
    if (!cur.contains(a)) {
      gens.push_back(a);
      cur = PermGroup<Perm>(gens, Perm::identity(n));
    }
  if (cur.order() != autos.size()) throw std::logic_error("automorphisms not closed under composition");
  return cur;
}

/// Checks that g -> grid_perm(g) is an isomorphism from Gamma onto `aut`: images of the
/// generators lie in aut, the map is a homomorphism on all pairs, and it is injective with |aut| = 72.
inline bool verify_grid_isomorphism(const PermGroup<Perm>& aut) {
  const auto gamma = gamma_group();
  for (const auto& s : gamma.generators())
    if (!aut.contains(s.grid_perm())) return false;
  if (aut.order() != gamma.order()) return false;
  std::vector<Perm> images;
  for (const auto& a : gamma.elements()) {
    for (const auto& b : gamma.elements())
      if ((a * b).grid_perm() != a.grid_perm() * b.grid_perm()) return false;
    images.push_back(a.grid_perm());
  }
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end() && images == aut.elements();
}

}  // namespace nodal
