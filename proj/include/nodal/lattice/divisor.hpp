#pragma once

#include <array>
#include <string>
#include <vector>

#include "nodal/lattice/standard.hpp"

namespace nodal {

/// Integer combination of the plane classes L_ij (grid order) and the hyperplane class H.
/// H is identified with the row sum R_1 = L_11 + L_12 + L_13.
struct DivisorExpr {
  std::array<Integer, 9> L{};
  Integer H = 0;

  static DivisorExpr plane(int i, int j) {
    DivisorExpr d;
    d.L[static_cast<std::size_t>(3 * i + j)] = 1;
    return d;
  }
  static DivisorExpr hyperplane() {
    DivisorExpr d;
    d.H = 1;
    return d;
  }

  DivisorExpr& operator+=(const DivisorExpr& o) {
    for (std::size_t k = 0; k < 9; ++k) L[k] += o.L[k];
    H += o.H;
    return *this;
  }
  friend DivisorExpr operator+(DivisorExpr a, const DivisorExpr& b) { return a += b; }
  friend DivisorExpr operator-(DivisorExpr a, const DivisorExpr& b) {
    for (std::size_t k = 0; k < 9; ++k) a.L[k] -= b.L[k];
    a.H -= b.H;
    return a;
  }
  friend DivisorExpr operator*(long c, DivisorExpr a) {
    for (auto& x : a.L) x *= c;
    a.H *= c;
    return a;
  }

  /// Coordinates on the free cover L_11..L_33.
  std::vector<Integer> cover_vector() const {
    std::vector<Integer> v(L.begin(), L.end());
    for (int j = 0; j < 3; ++j) v[static_cast<std::size_t>(j)] += H;
    return v;
  }
};

/// g moves L_ij to L_g(i,j); H is fixed.
inline DivisorExpr act(const GammaElt& g, const DivisorExpr& d) {
  DivisorExpr out;
  const Perm p = g.grid_perm();
  for (std::size_t k = 0; k < 9; ++k) out.L[p(k)] = d.L[k];
  out.H = d.H;
  return out;
}

inline const ZGModule& picard_module() {
  static const ZGModule p = module_P();
  return p;
}

/// Image of D in P (coordinates in the reduced lattice Z^5).
inline std::vector<Integer> divisor_class(const DivisorExpr& d) { return picard_module().reduce(d.cover_vector()); }

inline bool is_principal(const DivisorExpr& d) {
  const auto c = divisor_class(d);
  return std::all_of(c.begin(), c.end(), [](const Integer& x) { return is_zero(x); });
}

}  // namespace nodal
