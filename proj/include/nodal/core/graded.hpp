#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "nodal/core/matrix.hpp"
#include "nodal/core/mpoly.hpp"

namespace nodal {

/// Degree-d piece of a homogeneous ideal: the row space of `basis` in the
/// coordinates given by `monomials` (descending grlex).
template <Field Ring>
struct GradedPiece {
  unsigned degree = 0;
  std::vector<Exponent> monomials;
  Matrix<Ring> basis;  // reduced row-echelon form

  std::size_t dimension() const { return basis.rows(); }
  std::size_t ambient_dimension() const { return monomials.size(); }
  std::size_t codimension() const { return ambient_dimension() - dimension(); }

  friend bool operator==(const GradedPiece& a, const GradedPiece& b) {
    return a.degree == b.degree && a.monomials == b.monomials && a.basis == b.basis;
  }
};

namespace detail {

template <Field Ring>
std::vector<typename Ring::value_type> coefficient_row(const MPoly<Ring>& p,
                                                       const std::map<Exponent, std::size_t, GrlexLess>& index,
                                                       std::size_t width) {
  std::vector<typename Ring::value_type> row(width, p.ring().zero());
  for (const auto& [e, c] : p.terms()) {
    auto it = index.find(e);
    if (it == index.end()) throw std::logic_error("monomial outside the graded basis");
    row[it->second] = c;
  }
  return row;
}

inline Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

}  // namespace detail

template <Field Ring>
GradedPiece<Ring> graded_piece(std::span<const MPoly<Ring>> gens, std::size_t nvars, const Ring& ring, unsigned d) {
  GradedPiece<Ring> piece;
  piece.degree = d;
  piece.monomials = monomials_of_degree(nvars, d);
  std::map<Exponent, std::size_t, GrlexLess> index;
  for (std::size_t i = 0; i < piece.monomials.size(); ++i) index.emplace(piece.monomials[i], i);
  Matrix<Ring> rows(ring, 0, piece.monomials.size());
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw std::invalid_argument("generator arity mismatch");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("graded_piece: generator is not homogeneous");
    const int dg = g.degree();
    if (dg > static_cast<int>(d)) continue;
    for (const auto& m : monomials_of_degree(nvars, d - static_cast<unsigned>(dg))) {
      MPoly<Ring> shifted(ring, nvars);
      for (const auto& [e, c] : g.terms()) shifted.add_term(detail::add_exponents(e, m), c);
      auto row = detail::coefficient_row(shifted, index, piece.monomials.size());
      rows.append_row(row);
    }
  }
  piece.basis = rows.rows() ? rref(rows).reduced : rows;
  return piece;
}

template <Field Ring>
GradedPiece<Ring> intersect(const GradedPiece<Ring>& a, const GradedPiece<Ring>& b) {
  if (a.degree != b.degree || a.monomials != b.monomials) throw std::invalid_argument("graded pieces in different degrees");
  return {a.degree, a.monomials, row_space_intersection(a.basis, b.basis)};
}

/// Dimensions of O/(J + m^{t+1}) for t = 0..trunc, and mu once two
/// consecutive levels agree (then m^{t+1} lies in J by Nakayama).
struct LocalAlgebraResult {
  std::optional<std::size_t> mu;  // empty: did not stabilize ("unstable")
  std::vector<std::size_t> dims;
  bool stable() const { return mu.has_value(); }
};

/// Milnor algebra dimension of f at `point`, computed in the truncated local
/// algebra of the translated polynomial.
template <Field Ring>
LocalAlgebraResult local_algebra_dim(const MPoly<Ring>& f, std::span<const typename Ring::value_type> point,
                                     unsigned trunc) {
  const Ring& ring = f.ring();
  const std::size_t n = f.nvars();
  if (point.size() != n) throw std::invalid_argument("local_algebra_dim: point arity mismatch");
  std::vector<MPoly<Ring>> shift;
  for (std::size_t i = 0; i < n; ++i)
    shift.push_back(MPoly<Ring>::variable(ring, n, i) + MPoly<Ring>::constant(ring, n, point[i]));
  const MPoly<Ring> g = f.substitute(shift);
  std::vector<MPoly<Ring>> jac;
  for (std::size_t i = 0; i < n; ++i) jac.push_back(g.derivative(i));

  LocalAlgebraResult res;
  for (unsigned t = 0; t <= trunc; ++t) {
    std::vector<Exponent> basis;
    for (unsigned d = 0; d <= t; ++d) {
      auto md = monomials_of_degree(n, d);
      basis.insert(basis.end(), md.begin(), md.end());
    }
    std::map<Exponent, std::size_t, GrlexLess> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    Matrix<Ring> rows(ring, 0, basis.size());
    for (const auto& h : jac) {
      const MPoly<Ring> ht = h.truncated(t);
      if (ht.is_zero()) continue;
      for (const auto& m : basis) {
        if (static_cast<int>(total_degree(m)) + ht.min_degree() > static_cast<int>(t)) continue;
        MPoly<Ring> prod(ring, n);
        for (const auto& [e, c] : ht.terms()) {
          Exponent s = detail::add_exponents(e, m);
          if (total_degree(s) <= t) prod.add_term(std::move(s), c);
        }
        if (prod.is_zero()) continue;
        rows.append_row(detail::coefficient_row(prod, index, basis.size()));
      }
    }
    const std::size_t r = rows.rows() ? rank(rows) : 0;
    res.dims.push_back(basis.size() - r);
    if (t >= 1 && res.dims[t] == res.dims[t - 1]) {
      res.mu = res.dims[t];
      return res;
    }
  }
  return res;
}

}  // namespace nodal
