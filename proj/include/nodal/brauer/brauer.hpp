#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nodal/lattice/cohomology.hpp"
#include "nodal/lattice/divisor.hpp"
#include "nodal/report/check.hpp"

namespace nodal {

struct BrauerRow {
  std::string label;
  std::size_t order = 0;
  std::size_t class_size = 0;
  std::string generators;
  FinAbGroup h1_pic;        // H^1(W, P)
  FinAbGroup h1_pictilde;   // H^1(W, PicTilde)
  FinAbGroup h1_exceptional;  // H^1(W, E)
  std::string verdict;      // "trivial", "Z/3", or "unexpected:<group>"
  bool dichotomy_ok = false;
  bool blowup_ok = false;
  bool named = false;  // one of trivial, A3x1, Delta, A3xA3
  bool named_ok = true;
};

inline std::string brauer_verdict(const FinAbGroup& g) {
  if (g.trivial()) return "trivial";
  if (g.factors == std::vector<Integer>{3}) return "Z/3";
  return "unexpected:" + g.to_string();
}

/// Expected verdicts for the named classes; empty for the rest.
inline std::string named_verdict(const std::string& label) {
  if (label == "trivial" || label == "Delta") return "trivial";
  if (label == "A3x1" || label == "A3xA3") return "Z/3";
  return "";
}

inline BrauerRow brauer_row(const PermGroup<GammaElt>& w, const std::string& label, std::size_t class_size) {
  static const ZGModule P = module_P(), PT = module_PicTilde(), E = module_E();
  BrauerRow r;
  r.label = label;
  r.order = w.order();
  r.class_size = class_size;
  r.generators = to_string(w);
  r.h1_pic = h1(w, P);
  r.h1_pictilde = h1(w, PT);
  r.h1_exceptional = h1(w, E);
  r.verdict = brauer_verdict(r.h1_pic);
  r.dichotomy_ok = r.verdict == "trivial" || r.verdict == "Z/3";
  r.blowup_ok = r.h1_exceptional.trivial() && r.h1_pic == r.h1_pictilde;
  const std::string expect = named_verdict(label);
  r.named = !expect.empty();
  r.named_ok = !r.named || expect == r.verdict;
  return r;
}

/// One row per conjugacy class of subgroups of Gamma, ordered by (order, label).
inline std::vector<BrauerRow> brauer_table() {
  const auto gamma = gamma_group();
  std::vector<BrauerRow> rows;
  for (const auto& c : subgroups_up_to_conjugacy<GammaElt>(gamma, gamma_label))
    rows.push_back(brauer_row(c.representative, c.label, c.class_size));
  std::stable_sort(rows.begin(), rows.end(), [](const BrauerRow& a, const BrauerRow& b) {
    return a.order != b.order ? a.order < b.order : a.label < b.label;
  });
  return rows;
}

inline std::vector<Check> brauer_table_checks(const std::vector<BrauerRow>& rows) {
  bool dich = true, blow = true, named = true;
  std::size_t subgroups = 0;
  nlohmann::json z3 = nlohmann::json::array();
  for (const auto& r : rows) {
    dich = dich && r.dichotomy_ok;
    blow = blow && r.blowup_ok;
    named = named && r.named_ok;
    subgroups += r.class_size;
    if (r.verdict == "Z/3") z3.push_back(r.label);
  }
  auto find = [&](const std::string& label) -> const BrauerRow* {
    for (const auto& r : rows)
      if (r.label == label) return &r;
    return nullptr;
  };
  auto is = [&](const std::string& label, const std::string& v) {
    const auto* r = find(label);
    return r && r->verdict == v;
  };
  return {{"brauer.classes", rows.size() == 26 && subgroups == 112, {{"classes", rows.size()}, {"subgroups", subgroups}}},
          {"brauer.a3x1_is_z3", is("A3x1", "Z/3"), {}},
          {"brauer.delta_trivial", is("Delta", "trivial"), {}},
          {"brauer.a3xa3_is_z3", is("A3xA3", "Z/3"), {}},
          {"brauer.dichotomy_all_classes", dich, {{"scope", "extends named cases"}, {"z3_classes", z3}}},
          {"brauer.blowup_comparison_all_classes", blow, {}},
          {"brauer.named_rows", named, {}}};
}

inline nlohmann::json to_json(const BrauerRow& r) {
  return {{"label", r.label},
          {"order", r.order},
          {"class_size", r.class_size},
          {"generators", r.generators},
          {"H1_pic", r.h1_pic.to_string()},
          {"H1_pictilde", r.h1_pictilde.to_string()},
          {"H1_exceptional", r.h1_exceptional.to_string()},
          {"verdict", r.verdict},
          {"named_case", r.named},
          {"flags", {{"dichotomy", r.dichotomy_ok}, {"blowup", r.blowup_ok}, {"named_match", r.named_ok}}}};
}

// ---- 2-torsion ----

/// Sylow 2-subgroup preserving row 1 and column 1: <((23),()), ((),(23)), iota>.
inline PermGroup<GammaElt> row_one_sylow2() {
  return PermGroup<GammaElt>({GammaElt::parse("((23),(),0)"), GammaElt::parse("((),(23),0)"), GammaElt::iota()},
                             GammaElt::identity());
}

struct FiltrationReplay {
  std::size_t rank_m = 0, rank_quotient = 0;
  bool m_saturated = false;   // P/M torsion-free
  bool x_generates = false;   // P = M + Z x with x the class of L12
  bool m_stable = false;      // M is preserved by the Sylow 2-subgroup
  Integer l11_coefficient;    // L11 = c x (mod M)
};

inline FiltrationReplay replay_filtration() {
  const ZGModule& P = picard_module();
  FiltrationReplay f;
  IntMatrix m(IntegerRing{}, P.rank(), 0);
  IntMatrix mrows(IntegerRing{}, 0, P.rank());
  for (int i = 1; i < 3; ++i)
    for (int j = 1; j < 3; ++j) mrows.append_row(divisor_class(DivisorExpr::plane(i, j)));
  m = mrows.transpose();
  f.rank_m = rank(to_rational(m));
  f.rank_quotient = P.rank() - f.rank_m;
  f.m_saturated = torsion_of_cokernel(m).empty();
  const auto x = divisor_class(DivisorExpr::plane(0, 1));
  IntMatrix mx = mrows;
  mx.append_row(x);
  const Integer det = mx.rows() == mx.cols() ? determinant(mx) : Integer(0);
  f.x_generates = det == 1 || det == -1;
  if (f.x_generates) {
    const QMatrix inv = inverse(to_rational(mx.transpose()));
    const auto l11 = divisor_class(DivisorExpr::plane(0, 0));
    std::vector<Rational> v(l11.begin(), l11.end());
    const auto coords = inv.apply(v);
    f.l11_coefficient = coords.back().get_num();
  }
  f.m_stable = true;
  const auto s2 = row_one_sylow2();
  for (const auto& g : s2.generators()) {
    const IntMatrix& a = P.reduced_action(g);
    for (std::size_t r = 0; r < mrows.rows(); ++r) f.m_stable = f.m_stable && in_row_lattice(mrows, a.apply(mrows.row(r)));
  }
  return f;
}

struct TwoTorsionReport {
  std::size_t subgroups_checked = 0;
  std::size_t vanishing = 0;
  FiltrationReplay filtration;
  bool ok() const {
    return subgroups_checked > 0 && vanishing == subgroups_checked && filtration.rank_m == 4 &&
           filtration.rank_quotient == 1 && filtration.m_saturated && filtration.x_generates && filtration.m_stable;
  }
};

/// H^1(W, P) = 0 for every subgroup of a Sylow 2-subgroup of Gamma (all Sylow
/// 2-subgroups are conjugate, so one suffices), plus the filtration facts.
inline TwoTorsionReport two_torsion_vanishing() {
  TwoTorsionReport r;
  const ZGModule& P = picard_module();
  const auto s = sylow(gamma_group(), 2);
  const GroupTable<GammaElt> t(s);
  for (const auto& sub : subgroups_by_extension(t)) {
    ++r.subgroups_checked;
    r.vanishing += h1(t.to_group(sub.gens), P).trivial();
  }
  r.filtration = replay_filtration();
  return r;
}

inline bool verify_blowup_comparison(const PermGroup<GammaElt>& w) {
  static const ZGModule P = module_P(), PT = module_PicTilde(), E = module_E();
  return h1(w, E).trivial() && h1(w, P) == h1(w, PT);
}

// ---- divisor-class premise of the explicit element ----

/// D = L11 + L22 + L33 - H.
inline DivisorExpr diagonal_divisor() {
  return DivisorExpr::plane(0, 0) + DivisorExpr::plane(1, 1) + DivisorExpr::plane(2, 2) - DivisorExpr::hyperplane();
}

/// sum_{j<order} sigma^j(D) is principal.
inline bool verify_element_class(const GammaElt& sigma, const DivisorExpr& d = diagonal_divisor()) {
  DivisorExpr sum, cur = d;
  for (std::size_t j = 0; j < sigma.order(); ++j) {
    sum += cur;
    cur = act(sigma, cur);
  }
  return is_principal(sum);
}

}  // namespace nodal
