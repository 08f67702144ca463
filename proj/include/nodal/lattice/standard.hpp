#pragma once

#include <string>
#include <vector>

#include "nodal/lattice/module.hpp"

namespace nodal {

/// A e_k = sign * e_{p(k)}.
inline IntMatrix perm_matrix(const Perm& p, int sign = 1) {
  IntMatrix a(IntegerRing{}, p.degree(), p.degree());
  for (std::size_t k = 0; k < p.degree(); ++k) a(p(k), k) = sign;
  return a;
}

inline std::vector<GammaElt> gamma_generators() { return gamma_group().generators(); }

/// "L11".."L33" in grid order 3i+j.
inline std::vector<std::string> grid_labels(const std::string& prefix) {
  std::vector<std::string> out;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) out.push_back(prefix + std::to_string(i) + std::to_string(j));
  return out;
}

/// Column (i,j) is R_i - C_j in the plane basis L_pq.
inline IntMatrix row_minus_column_matrix() {
  IntMatrix a(IntegerRing{}, 9, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      for (int q = 0; q < 3; ++q) a(3 * i + q, 3 * i + j) += 1;
      for (int p = 0; p < 3; ++p) a(3 * p + j, 3 * i + j) -= 1;
    }
  return a;
}

namespace detail {

inline std::vector<IntMatrix> grid_action(const std::vector<GammaElt>& gens) {
  std::vector<IntMatrix> out;
  for (const auto& g : gens) out.push_back(perm_matrix(g.grid_perm()));
  return out;
}

// R_i - C_j -> -(R_rho(j) - C_tau(i)) under a swapping element.
inline std::vector<IntMatrix> signed_grid_action(const std::vector<GammaElt>& gens) {
  std::vector<IntMatrix> out;
  for (const auto& g : gens) out.push_back(perm_matrix(g.grid_perm(), g.eps ? -1 : 1));
  return out;
}

inline IntMatrix rows_of(const IntMatrix& columns) { return columns.transpose(); }

}  // namespace detail

inline ZGModule module_F() {
  const auto g = gamma_generators();
  return ZGModule("F", grid_labels("L"), IntMatrix(IntegerRing{}, 0, 9), g, detail::grid_action(g));
}

inline ZGModule module_M_hat() {
  const auto g = gamma_generators();
  return ZGModule("M_hat", grid_labels("m"), IntMatrix(IntegerRing{}, 0, 9), g, detail::grid_action(g));
}

inline ZGModule module_E() {
  const auto g = gamma_generators();
  return ZGModule("E", grid_labels("E"), IntMatrix(IntegerRing{}, 0, 9), g, detail::grid_action(g));
}

/// F modulo R_i - C_j.
inline ZGModule module_P() {
  const auto g = gamma_generators();
  return ZGModule("P", grid_labels("L"), detail::rows_of(row_minus_column_matrix()), g, detail::grid_action(g));
}

inline ZGModule module_S0_hat() {
  const auto g = gamma_generators();
  return ZGModule("S0_hat", grid_labels("L"), detail::rows_of(row_minus_column_matrix()), g, detail::grid_action(g));
}

/// Generators q_ij -> R_i - C_j; relations are the integer kernel of that map.
inline ZGModule module_Q() {
  const auto g = gamma_generators();
  const auto k = integer_kernel(row_minus_column_matrix());
  return ZGModule("Q", grid_labels("q"), k.basis.transpose(), g, detail::signed_grid_action(g));
}

/// Characters chi_ij = x_i - y_j modulo chi_ij - chi_i1 - chi_1j + chi_11 and chi_11 + chi_22 + chi_33.
inline ZGModule module_S_hat() {
  const auto g = gamma_generators();
  IntMatrix rel(IntegerRing{}, 0, 9);
  for (int i = 1; i < 3; ++i)
    for (int j = 1; j < 3; ++j) {
      std::vector<Integer> r(9, 0);
      r[3 * i + j] += 1;
      r[3 * i] -= 1;
      r[j] -= 1;
      r[0] += 1;
      rel.append_row(r);
    }
  std::vector<Integer> diag(9, 0);
  diag[0] = diag[4] = diag[8] = 1;
  rel.append_row(diag);
  return ZGModule("S_hat", grid_labels("chi"), rel, g, detail::signed_grid_action(g));
}

/// Z<L~_ij, E_pq> modulo R~_i + sum_{p!=i, q} E_pq = C~_j + sum_{p, q!=j} E_pq
/// (pullbacks of x_i = 0 and y_j = 0 to the blow-up of the nine nodes).
inline ZGModule module_PicTilde() {
  const auto g = gamma_generators();
  std::vector<std::string> labels = grid_labels("Lt");
  for (const auto& e : grid_labels("E")) labels.push_back(e);
  IntMatrix rel(IntegerRing{}, 0, 18);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::vector<Integer> r(18, 0);
      for (int q = 0; q < 3; ++q) r[3 * i + q] += 1;
      for (int p = 0; p < 3; ++p) r[3 * p + j] -= 1;
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) {
          if (p != i) r[9 + 3 * p + q] += 1;
          if (q != j) r[9 + 3 * p + q] -= 1;
        }
      rel.append_row(r);
    }
  std::vector<IntMatrix> act;
  for (const auto& s : g) {
    IntMatrix a(IntegerRing{}, 18, 18);
    const Perm p = s.grid_perm();
    for (std::size_t k = 0; k < 9; ++k) {
      a(p(k), k) = 1;
      a(9 + p(k), 9 + k) = 1;
    }
    act.push_back(a);
  }
  return ZGModule("PicTilde", labels, rel, g, act);
}

/// P1 = sum_{j != 3} Z L_ij, a module for A3 x 1 only.
inline ZGModule module_P1() {
  const GammaElt s = GammaElt::parse("((123),(),0)");
  std::vector<std::string> labels;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 2; ++j) labels.push_back("L" + std::to_string(i) + std::to_string(j));
  IntMatrix a(IntegerRing{}, 6, 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) a(2 * s.rho(i) + j, 2 * i + j) = 1;
  return ZGModule("P1", labels, IntMatrix(IntegerRing{}, 0, 6), {s}, {a});
}

/// Rank-one lattice spanned by C_1 - C_2, fixed by A3 x 1.
inline ZGModule module_C12() {
  const GammaElt s = GammaElt::parse("((123),(),0)");
  return ZGModule("C1-C2", {"C1-C2"}, IntMatrix(IntegerRing{}, 0, 1), {s}, {IntMatrix::identity(IntegerRing{}, 1)});
}

inline const std::vector<std::string>& standard_module_names() {
  static const std::vector<std::string> names{"F", "Q", "P", "E", "PicTilde", "S_hat", "S0_hat", "M_hat"};
  return names;
}

inline ZGModule standard_module(const std::string& name) {
  if (name == "F") return module_F();
  if (name == "Q") return module_Q();
  if (name == "P") return module_P();
  if (name == "E") return module_E();
  if (name == "PicTilde") return module_PicTilde();
  if (name == "S_hat") return module_S_hat();
  if (name == "S0_hat") return module_S0_hat();
  if (name == "M_hat") return module_M_hat();
  throw std::invalid_argument("unknown module '" + name + "'");
}

/// Modules M_0 -> ... -> M_k with integer maps on the free covers
/// (maps[i] is cover(M_{i+1}) x cover(M_i)).
struct ModuleSequence {
  std::string name;
  std::vector<ZGModule> modules;
  std::vector<IntMatrix> maps;
};

inline ModuleSequence sequence_Q_F_P() {
  return {"0 -> Q -> F -> P -> 0",
          {module_Q(), module_F(), module_P()},
          {row_minus_column_matrix(), IntMatrix::identity(IntegerRing{}, 9)}};
}

inline ModuleSequence sequence_S_M_S0() {
  return {"0 -> S_hat -> M_hat -> S0_hat -> 0",
          {module_S_hat(), module_M_hat(), module_S0_hat()},
          {row_minus_column_matrix(), IntMatrix::identity(IntegerRing{}, 9)}};
}

inline ModuleSequence sequence_E_PicTilde_P() {
  IntMatrix in(IntegerRing{}, 18, 9), out(IntegerRing{}, 9, 18);
  for (std::size_t k = 0; k < 9; ++k) {
    in(9 + k, k) = 1;
    out(k, k) = 1;
  }
  return {"0 -> E -> PicTilde -> P -> 0", {module_E(), module_PicTilde(), module_P()}, {in, out}};
}

inline ModuleSequence sequence_C12_P1_P() {
  IntMatrix in(IntegerRing{}, 6, 1), out(IntegerRing{}, 9, 6);
  for (int i = 0; i < 3; ++i) {
    in(2 * i, 0) = 1;
    in(2 * i + 1, 0) = -1;
    for (int j = 0; j < 2; ++j) out(3 * i + j, 2 * i + j) = 1;
  }
  return {"0 -> Z(C1-C2) -> P1 -> P -> 0", {module_C12(), module_P1(), module_P()}, {in, out}};
}

}  // namespace nodal
