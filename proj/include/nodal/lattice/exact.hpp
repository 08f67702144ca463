#pragma once

#include <string>
#include <vector>

#include "nodal/lattice/cohomology.hpp"

namespace nodal {

struct ExactnessReport {
  bool well_defined = true;  // each map sends relations into the target's relation saturation
  bool equivariant = true;
  std::vector<bool> exact_at;  // one entry per module
  std::vector<std::string> failures;

  bool ok() const {
    return well_defined && equivariant && std::all_of(exact_at.begin(), exact_at.end(), [](bool b) { return b; });
  }
};

/// Exactness of 0 -> M_0 -> ... -> M_k -> 0 on the torsion-free quotients, checked
/// as sublattices: at each inner node the composite vanishes, ranks add up and the
/// incoming image is saturated (so image = kernel exactly). Equivariance is
/// checked on the generators of `w`.
inline ExactnessReport verify_exact(const ModuleSequence& seq, const PermGroup<GammaElt>& w) {
  ExactnessReport rep;
  const auto& mods = seq.modules;
  if (mods.size() != seq.maps.size() + 1 || mods.empty()) throw std::invalid_argument("verify_exact: malformed sequence");
  std::vector<IntMatrix> red;
  for (std::size_t i = 0; i < seq.maps.size(); ++i) {
    const ZGModule &from = mods[i], &to = mods[i + 1];
    const IntMatrix& phi = seq.maps[i];
    if (phi.rows() != to.cover_rank() || phi.cols() != from.cover_rank())
      throw std::invalid_argument("verify_exact: map " + std::to_string(i) + " has wrong shape");
    if (from.relations().rows() && !(to.project() * phi * from.relations().transpose()).is_zero()) {
      rep.well_defined = false;
      rep.failures.push_back("map " + std::to_string(i) + " does not respect relations");
    }
    red.push_back(to.project() * phi * from.lift());
    for (const auto& g : w.generators())
      if (!(red[i] * from.reduced_action(g) == to.reduced_action(g) * red[i])) {
        rep.equivariant = false;
        rep.failures.push_back("map " + std::to_string(i) + " not equivariant under " + g.to_string());
      }
  }
  auto qrank = [](const IntMatrix& a) { return a.empty() ? std::size_t{0} : rank(to_rational(a)); };
  auto saturated_image = [](const IntMatrix& a) { return a.empty() || torsion_of_cokernel(a).empty(); };
  for (std::size_t i = 0; i < mods.size(); ++i) {
    const std::size_t r = mods[i].rank();
    bool ok = true;
    if (i > 0) {
      const IntMatrix& in = red[i - 1];
      ok = ok && saturated_image(in);
      if (i == seq.maps.size()) ok = ok && qrank(in) == r;  // surjective at the end
    }
    if (i < seq.maps.size()) {
      const IntMatrix& out = red[i];
      if (i == 0) ok = ok && qrank(out) == r;  // injective at the start
      else {
        const IntMatrix& in = red[i - 1];
        ok = ok && (out * in).is_zero() && qrank(in) + qrank(out) == r;
      }
    }
    rep.exact_at.push_back(ok);
    if (!ok) rep.failures.push_back("not exact at " + mods[i].name());
  }
  return rep;
}

}  // namespace nodal
