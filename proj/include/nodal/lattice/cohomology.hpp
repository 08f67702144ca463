#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nodal/lattice/standard.hpp"

namespace nodal {

namespace detail {

inline void require_torsion_free(const ZGModule& m) {
  if (!m.torsion().empty()) throw std::invalid_argument("module " + m.name() + " has torsion");
}

inline IntMatrix minus_identity(IntMatrix a) {
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= 1;
  return a;
}

/// Invariant factors of coker(X) = Z^rows / X Z^cols; a free part is a logic error here.
inline FinAbGroup finite_cokernel(const IntMatrix& x, const char* what) {
  if (x.rows() == 0) return {};
  if (x.cols() == 0) throw std::logic_error(std::string(what) + ": quotient is not finite");
  const auto s = snf(x);
  if (s.rank != x.rows()) throw std::logic_error(std::string(what) + ": quotient is not finite");
  return {s.nontrivial_factors()};
}

/// ker(K-map) / im(I-map), both r x r, as invariant factors.
inline FinAbGroup kernel_mod_image(const IntMatrix& kmap, const IntMatrix& imap, const char* what) {
  const auto k = integer_kernel(kmap);
  if (k.dimension() == 0) return {};
  auto x = coordinates_in(k, imap);
  if (!x) throw std::logic_error(std::string(what) + ": image not inside kernel");
  return finite_cokernel(*x, what);
}

inline GammaElt cyclic_generator(const PermGroup<GammaElt>& w) {
  for (const auto& g : w.elements())
    if (g.order() == w.order()) return g;
  throw std::invalid_argument("group is not cyclic");
}

}  // namespace detail

/// H^1(W, M) as cocycles modulo coboundaries. Cocycles are determined by their values
/// c_s on the generators of W; every edge g -> gs of the Cayley graph imposes
/// c_gs = c_g + g c_s, and edges outside a BFS spanning tree give the constraints.
inline FinAbGroup h1(const PermGroup<GammaElt>& w, const ZGModule& m) {
  detail::require_torsion_free(m);
  const auto& gens = w.generators();
  const std::size_t r = m.rank(), k = gens.size();
  if (r == 0 || k == 0) return {};
  std::vector<IntMatrix> a;
  for (const auto& s : gens) a.push_back(m.reduced_action(s));
  const std::size_t width = k * r;

  std::map<GammaElt, IntMatrix> cochain, act;  // c_g as an r x kr matrix in the unknowns; A_g
  cochain.emplace(GammaElt::identity(), IntMatrix(IntegerRing{}, r, width));
  act.emplace(GammaElt::identity(), IntMatrix::identity(IntegerRing{}, r));
  IntMatrix constraints(IntegerRing{}, 0, width);
  std::vector<GammaElt> frontier{GammaElt::identity()};
  while (!frontier.empty()) {
    std::vector<GammaElt> next;
    for (const auto& g : frontier)
      for (std::size_t s = 0; s < k; ++s) {
        const GammaElt h = g * gens[s];
        IntMatrix val = cochain.at(g);
        const IntMatrix& ag = act.at(g);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t t = 0; t < r; ++t)
            if (!is_zero(ag(i, t))) val(i, s * r + t) += ag(i, t);
        auto it = cochain.find(h);
        if (it == cochain.end()) {
          cochain.emplace(h, std::move(val));
          act.emplace(h, ag * a[s]);
          next.push_back(h);
        } else {
          const IntMatrix d = val - it->second;
          for (std::size_t i = 0; i < r; ++i)
            if (!std::all_of(d.row(i).begin(), d.row(i).end(), [](const Integer& x) { return is_zero(x); }))
              constraints.append_row(d.row(i));
        }
      }
    frontier = std::move(next);
  }
  if (cochain.size() != w.order()) throw std::logic_error("h1: Cayley graph does not cover the group");

  const KernelLattice z = constraints.rows() ? integer_kernel(constraints)
                                             : KernelLattice{IntMatrix::identity(IntegerRing{}, width),
                                                             IntMatrix::identity(IntegerRing{}, width), 0};
  if (z.dimension() == 0) return {};
  IntMatrix b(IntegerRing{}, 0, r);
  for (std::size_t s = 0; s < k; ++s) {
    const IntMatrix t = detail::minus_identity(a[s]);
    for (std::size_t i = 0; i < r; ++i) b.append_row(t.row(i));
  }
  auto x = coordinates_in(z, b);
  if (!x) throw std::logic_error("h1: coboundaries are not cocycles");
  return detail::finite_cokernel(*x, "h1");
}

/// H^1 of a cyclic group <s>: ker N / im T with T = s - 1, N = sum s^i; cross-checked
/// against the torsion of coker T.
inline FinAbGroup h1_cyclic(const PermGroup<GammaElt>& w, const ZGModule& m) {
  detail::require_torsion_free(m);
  if (w.order() == 1 || m.rank() == 0) return {};
  const GammaElt s = detail::cyclic_generator(w);
  const IntMatrix& a = m.reduced_action(s);
  const IntMatrix t = detail::minus_identity(a);
  IntMatrix n(IntegerRing{}, m.rank(), m.rank()), p = IntMatrix::identity(IntegerRing{}, m.rank());
  for (std::size_t i = 0; i < w.order(); ++i) {
    n = n + p;
    p = p * a;
  }
  FinAbGroup h = detail::kernel_mod_image(n, t, "h1_cyclic");
  if (h.factors != torsion_of_cokernel(t)) throw std::logic_error("h1_cyclic: ker N / im T disagrees with Tors(coker T)");
  return h;
}

/// Tate H^2 of a cyclic group: ker T / im N.
inline FinAbGroup tate_h2(const PermGroup<GammaElt>& w, const ZGModule& m) {
  detail::require_torsion_free(m);
  if (w.order() == 1 || m.rank() == 0) return {};
  const GammaElt s = detail::cyclic_generator(w);
  const IntMatrix& a = m.reduced_action(s);
  IntMatrix n(IntegerRing{}, m.rank(), m.rank()), p = IntMatrix::identity(IntegerRing{}, m.rank());
  for (std::size_t i = 0; i < w.order(); ++i) {
    n = n + p;
    p = p * a;
  }
  return detail::kernel_mod_image(detail::minus_identity(a), n, "tate_h2");
}

/// Fixed sublattice M^W: columns of `reduced` span it in Z^rank; `cover` gives
/// free-cover representatives (lift * reduced).
struct InvariantLattice {
  IntMatrix reduced;
  IntMatrix cover;
  std::size_t rank() const { return reduced.cols(); }
};

inline InvariantLattice h0(const PermGroup<GammaElt>& w, const ZGModule& m) {
  const std::size_t r = m.rank();
  if (r == 0) return {IntMatrix(IntegerRing{}, 0, 0), IntMatrix(IntegerRing{}, m.cover_rank(), 0)};
  IntMatrix stack(IntegerRing{}, 0, r);
  for (const auto& s : w.generators()) {
    const IntMatrix t = detail::minus_identity(m.reduced_action(s));
    for (std::size_t i = 0; i < r; ++i) stack.append_row(t.row(i));
  }
  IntMatrix basis = IntMatrix::identity(IntegerRing{}, r);
  if (stack.rows()) basis = integer_kernel(stack).basis;
  return {basis, m.lift() * basis};
}

}  // namespace nodal
