#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nodal/core/snf.hpp"
#include "nodal/group/perm_group.hpp"

namespace nodal {

/// Finite abelian group by invariant factors (each >= 2, d_1 | d_2 | ...).
struct FinAbGroup {
  std::vector<Integer> factors;

  bool trivial() const { return factors.empty(); }
  Integer order() const {
    Integer n = 1;
    for (const auto& d : factors) n *= d;
    return n;
  }
  std::string to_string() const {
    if (factors.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " + Z/" : "Z/") + factors[i].get_str();
    return out;
  }
  std::vector<std::string> factor_strings() const {
    std::vector<std::string> out;
    for (const auto& d : factors) out.push_back(d.get_str());
    return out;
  }
  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
};

/// Row v lies in the integer row lattice of R.
inline bool in_row_lattice(const IntMatrix& r, std::span<const Integer> v) {
  if (r.rows() == 0) return std::all_of(v.begin(), v.end(), [](const Integer& x) { return is_zero(x); });
  const auto s = snf(r);
  for (std::size_t j = 0; j < r.cols(); ++j) {
    Integer w = 0;
    for (std::size_t k = 0; k < r.cols(); ++k)
      if (!is_zero(v[k]) && !is_zero(s.V(k, j))) w += v[k] * s.V(k, j);
    if (j < s.rank) {
      if (!mpz_divisible_p(w.get_mpz_t(), s.D(j, j).get_mpz_t())) return false;
    } else if (!is_zero(w)) {
      return false;
    }
  }
  return true;
}

/// Z-lattice with an action of a subgroup of Gamma: Z^n (labelled free cover) modulo
/// the row span of `relations`, with integer action matrices on column vectors
/// (A_g e_k = image of basis vector k) given for a list of generators.
/// The torsion-free quotient is identified with Z^rank via project (rank x n) and
/// lift (n x rank), project * lift = I.
class ZGModule {
 public:
  ZGModule() = default;
  ZGModule(std::string name, std::vector<std::string> labels, IntMatrix relations, std::vector<GammaElt> gens,
           std::vector<IntMatrix> action)
      : name_(std::move(name)),
        labels_(std::move(labels)),
        rel_(std::move(relations)),
        gens_(std::move(gens)),
        action_(std::move(action)) {
    const std::size_t n = labels_.size();
    if (rel_.cols() != n) throw std::invalid_argument("relation width does not match basis size");
    if (gens_.size() != action_.size()) throw std::invalid_argument("one action matrix per generator");
    for (const auto& a : action_)
      if (a.rows() != n || a.cols() != n) throw std::invalid_argument("action matrix has wrong shape");
    if (rel_.rows() == 0) {
      project_ = IntMatrix::identity(IntegerRing{}, n);
      lift_ = project_;
    } else {
      const auto k = integer_kernel(rel_);
      project_ = k.basis.transpose();
      lift_ = k.left_inverse.transpose();
      torsion_ = torsion_of_cokernel(rel_.transpose());
    }
    // Reduced action for every element of the acting group, along a BFS tree;
    // non-tree edges must agree (group relations hold in the quotient).
    std::vector<IntMatrix> reduced_gens;
    for (const auto& a : action_) reduced_gens.push_back(project_ * a * lift_);
    const std::size_t r = rank();
    reduced_.emplace(GammaElt::identity(), IntMatrix::identity(IntegerRing{}, r));
    free_.emplace(GammaElt::identity(), IntMatrix::identity(IntegerRing{}, n));
    std::vector<GammaElt> frontier{GammaElt::identity()};
    while (!frontier.empty()) {
      std::vector<GammaElt> next;
      for (const auto& g : frontier)
        for (std::size_t s = 0; s < gens_.size(); ++s) {
          const GammaElt h = g * gens_[s];
          IntMatrix m = reduced_.at(g) * reduced_gens[s];
          auto it = reduced_.find(h);
          if (it == reduced_.end()) {
            reduced_.emplace(h, std::move(m));
            free_.emplace(h, free_.at(g) * action_[s]);
            next.push_back(h);
          } else if (!(it->second == m)) {
            homomorphism_ok_ = false;
          }
        }
      frontier = std::move(next);
    }
  }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const IntMatrix& relations() const { return rel_; }
  const std::vector<GammaElt>& generators() const { return gens_; }
  const std::vector<IntMatrix>& generator_action() const { return action_; }
  std::size_t cover_rank() const { return labels_.size(); }
  std::size_t rank() const { return project_.rows(); }
  const std::vector<Integer>& torsion() const { return torsion_; }
  const IntMatrix& project() const { return project_; }
  const IntMatrix& lift() const { return lift_; }

  std::vector<GammaElt> acting_elements() const {
    std::vector<GammaElt> out;
    for (const auto& [g, m] : reduced_) out.push_back(g);
    return out;
  }
  bool acts(const GammaElt& g) const { return reduced_.count(g) > 0; }

  /// Action of g on the torsion-free quotient Z^rank.
  const IntMatrix& reduced_action(const GammaElt& g) const {
    auto it = reduced_.find(g);
    if (it == reduced_.end()) throw std::invalid_argument("module " + name_ + ": element " + g.to_string() + " does not act");
    return it->second;
  }
  /// Action of g on the free cover (product of generator matrices along a word).
  const IntMatrix& cover_action(const GammaElt& g) const {
    auto it = free_.find(g);
    if (it == free_.end()) throw std::invalid_argument("module " + name_ + ": element " + g.to_string() + " does not act");
    return it->second;
  }

  /// Image of a free-cover vector in Z^rank.
  std::vector<Integer> reduce(std::span<const Integer> v) const { return project_.apply(v); }

  /// Every generator maps each relation into the integer row lattice of the relations.
  bool relations_preserved() const {
    for (const auto& a : action_)
      for (std::size_t i = 0; i < rel_.rows(); ++i) {
        const auto img = a.apply(rel_.row(i));
        if (!in_row_lattice(rel_, img)) return false;
      }
    return true;
  }
  bool homomorphism_ok() const { return homomorphism_ok_; }
  bool invariants_ok() const { return relations_preserved() && homomorphism_ok_; }

  nlohmann::json to_json() const {
    nlohmann::json rel = nlohmann::json::array();
    for (std::size_t i = 0; i < rel_.rows(); ++i) rel.push_back(row_json(rel_.row(i)));
    nlohmann::json act = nlohmann::json::object();
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      nlohmann::json m = nlohmann::json::array();
      for (std::size_t i = 0; i < action_[s].rows(); ++i) m.push_back(row_json(action_[s].row(i)));
      act[gens_[s].to_string()] = m;
    }
    return {{"name", name_}, {"basis", labels_}, {"relations", rel}, {"action", act}};
  }

 private:
  static nlohmann::json row_json(std::span<const Integer> r) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : r) out.push_back(x.get_si());
    return out;
  }

  std::string name_;
  std::vector<std::string> labels_;
  IntMatrix rel_;
  std::vector<GammaElt> gens_;
  std::vector<IntMatrix> action_;
  IntMatrix project_;
  IntMatrix lift_;
  std::vector<Integer> torsion_;
  std::map<GammaElt, IntMatrix> reduced_;
  std::map<GammaElt, IntMatrix> free_;
  bool homomorphism_ok_ = true;
};

inline ZGModule module_from_json(const nlohmann::json& j) {
  const auto labels = j.at("basis").get<std::vector<std::string>>();
  const std::size_t n = labels.size();
  IntMatrix rel(IntegerRing{}, 0, n);
  for (const auto& row : j.at("relations")) {
    std::vector<Integer> r;
    for (const auto& x : row) r.emplace_back(x.get<long>());
    if (r.size() != n) throw std::invalid_argument("relation row has wrong length");
    rel.append_row(r);
  }
  std::vector<GammaElt> gens;
  std::vector<IntMatrix> act;
  for (const auto& [g, m] : j.at("action").items()) {
    gens.push_back(GammaElt::parse(g));
    IntMatrix a(IntegerRing{}, 0, n);
    for (const auto& row : m) {
      std::vector<Integer> r;
      for (const auto& x : row) r.emplace_back(x.get<long>());
      a.append_row(r);
    }
    act.push_back(a);
  }
  return ZGModule(j.value("name", std::string("module")), labels, rel, gens, act);
}

}  // namespace nodal
