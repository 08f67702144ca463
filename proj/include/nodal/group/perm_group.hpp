#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nodal/group/perm.hpp"
#include "nodal/group/wreath.hpp"

namespace nodal {

/// Finite group given by generators; the full element set is cached (sorted).
template <class E>
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::vector<E> gens, E identity) : gens_(std::move(gens)), id_(std::move(identity)) {
    std::set<E> seen{id_};
    std::vector<E> frontier{id_};
    while (!frontier.empty()) {
      std::vector<E> next;
      for (const auto& x : frontier)
        for (const auto& g : gens_) {
          E y = x * g;
          if (seen.insert(y).second) next.push_back(std::move(y));
        }
      frontier = std::move(next);
    }
    elems_.assign(seen.begin(), seen.end());
  }

  const std::vector<E>& generators() const { return gens_; }
  const std::vector<E>& elements() const { return elems_; }
  const E& identity() const { return id_; }
  std::size_t order() const { return elems_.size(); }
  bool contains(const E& x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }
  bool is_subgroup_of(const PermGroup& g) const {
    return std::all_of(elems_.begin(), elems_.end(), [&](const E& x) { return g.contains(x); });
  }

  PermGroup conjugate(const E& g) const {
    std::vector<E> gens;
    const E gi = g.inverse();
    for (const auto& x : gens_) gens.push_back(g * x * gi);
    return PermGroup(gens, id_);
  }

  friend bool operator==(const PermGroup& a, const PermGroup& b) { return a.elems_ == b.elems_; }

 private:
  std::vector<E> gens_;
  E id_{};
  std::vector<E> elems_;
};

/// Multiplication table over the sorted elements of a group.
template <class E>
class GroupTable {
 public:
  explicit GroupTable(const PermGroup<E>& g) : elems_(g.elements()) {
    const std::size_t n = elems_.size();
    for (std::size_t i = 0; i < n; ++i) index_.emplace(elems_[i], static_cast<int>(i));
    mul_.assign(n * n, 0);
    inv_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) mul_[i * n + j] = index_of(elems_[i] * elems_[j]);
      inv_[i] = index_of(elems_[i].inverse());
    }
    id_ = index_of(g.identity());
  }

  std::size_t size() const { return elems_.size(); }
  const E& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
  int index_of(const E& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) throw std::invalid_argument("element not in group");
    return it->second;
  }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int identity() const { return id_; }

  /// Sorted member indices of the subgroup generated by `gens`.
  std::vector<int> closure(const std::vector<int>& gens) const {
    std::vector<char> in(size(), 0);
    in[static_cast<std::size_t>(id_)] = 1;
    std::vector<int> members{id_}, frontier{id_};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int g : gens) {
          const int y = mul(x, g);
          if (!in[static_cast<std::size_t>(y)]) {
            in[static_cast<std::size_t>(y)] = 1;
            next.push_back(y);
          }
        }
      members.insert(members.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  std::vector<int> conjugate(int g, const std::vector<int>& members) const {
    std::vector<int> out;
    for (int h : members) out.push_back(mul(mul(g, h), inv(g)));
    std::sort(out.begin(), out.end());
    return out;
  }

  PermGroup<E> to_group(const std::vector<int>& gens) const {
    std::vector<E> g;
    for (int i : gens) g.push_back(element(i));
    return PermGroup<E>(g, element(id_));
  }

  std::vector<int> indices_of(const PermGroup<E>& h) const {
    std::vector<int> out;
    for (const auto& x : h.elements()) out.push_back(index_of(x));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Greedy generating set: smallest elements not yet generated.
  std::vector<int> generators_of(const std::vector<int>& members) const {
    std::vector<int> gens;
    std::vector<int> cur{id_};
    for (int m : members) {
      if (std::binary_search(cur.begin(), cur.end(), m)) continue;
      gens.push_back(m);
      cur = closure(gens);
    }
    return gens;
  }

 private:
  std::vector<E> elems_;
  std::map<E, int> index_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  int id_ = 0;
};

/// Subgroup of a GroupTable: sorted members plus a generating set.
struct SubgroupRecord {
  std::vector<int> members;
  std::vector<int> gens;
};

inline bool canonical_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// Algorithm A: breadth-first extension, adjoining one element at a time.
template <class E>
std::vector<SubgroupRecord> subgroups_by_extension(const GroupTable<E>& t) {
  std::map<std::vector<int>, std::vector<int>> found;
  std::vector<int> triv{t.identity()};
  found.emplace(triv, std::vector<int>{});
  std::vector<std::vector<int>> frontier{triv};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& h : frontier) {
      const std::vector<int> hg = found.at(h);
      for (int g = 0; g < static_cast<int>(t.size()); ++g) {
        if (std::binary_search(h.begin(), h.end(), g)) continue;
        std::vector<int> gens = hg;
        gens.push_back(g);
        auto k = t.closure(gens);
        if (found.emplace(k, gens).second) next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  std::vector<SubgroupRecord> out;
  for (auto& [m, g] : found) out.push_back({m, t.generators_of(m)});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonical_less(a.members, b.members); });
  return out;
}

/// Algorithm B: cyclic subgroups closed under pairwise joins.
template <class E>
std::vector<SubgroupRecord> subgroups_by_cyclic_joins(const GroupTable<E>& t) {
  std::map<std::vector<int>, std::vector<int>> found;
  for (int g = 0; g < static_cast<int>(t.size()); ++g) found.emplace(t.closure({g}), std::vector<int>{g});
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> cur(found.begin(), found.end());
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = a + 1; b < cur.size(); ++b) {
        const auto& ma = cur[a].first;
        const auto& mb = cur[b].first;
        if (std::includes(ma.begin(), ma.end(), mb.begin(), mb.end()) ||
            std::includes(mb.begin(), mb.end(), ma.begin(), ma.end()))
          continue;
        std::vector<int> gens = cur[a].second;
        gens.insert(gens.end(), cur[b].second.begin(), cur[b].second.end());
        auto k = t.closure(gens);
        if (found.emplace(k, gens).second) changed = true;
      }
  }
  std::vector<SubgroupRecord> out;
  for (auto& [m, g] : found) out.push_back({m, t.generators_of(m)});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonical_less(a.members, b.members); });
  return out;
}

template <class E>
struct SubgroupClass {
  PermGroup<E> representative;
  std::size_t order = 0;
  std::string label;
  std::size_t class_size = 0;  // number of conjugates = index of the normalizer
};

template <class E>
std::string generic_label(const PermGroup<E>& h) {
  return h.order() == 1 ? "trivial" : "other";
}

/// Conjugacy classes of subgroups of G (|G| <= 72), in canonical order:
/// by order, then by sorted member indices of the class-minimal representative.
template <class E>
std::vector<SubgroupClass<E>> subgroups_up_to_conjugacy(
    const PermGroup<E>& g, const std::function<std::string(const PermGroup<E>&)>& label = generic_label<E>) {
  if (g.order() > 72) throw std::invalid_argument("subgroup enumeration limited to order <= 72");
  const GroupTable<E> t(g);
  const auto subs = subgroups_by_extension(t);
  std::set<std::vector<int>> seen;
  std::vector<SubgroupClass<E>> out;
  for (const auto& s : subs) {
    if (seen.count(s.members)) continue;
    std::set<std::vector<int>> cls;
    for (int x = 0; x < static_cast<int>(t.size()); ++x) cls.insert(t.conjugate(x, s.members));
    seen.insert(cls.begin(), cls.end());
    PermGroup<E> rep = t.to_group(s.gens);
    out.push_back({rep, s.members.size(), label(rep), cls.size()});
  }
  return out;
}

/// Some g in G with g W1 g^-1 = W2.
template <class E>
std::optional<E> conjugating_element(const PermGroup<E>& w1, const PermGroup<E>& w2, const PermGroup<E>& g) {
  if (w1.order() != w2.order()) return std::nullopt;
  for (const auto& x : g.elements()) {
    const E xi = x.inverse();
    bool ok = true;
    for (const auto& h : w1.generators())
      if (!w2.contains(x * h * xi)) {
        ok = false;
        break;
      }
    if (ok) return x;
  }
  return std::nullopt;
}

template <class E>
bool is_conjugate(const PermGroup<E>& w1, const PermGroup<E>& w2, const PermGroup<E>& g) {
  return conjugating_element(w1, w2, g).has_value();
}

template <class E>
PermGroup<E> normalizer(const PermGroup<E>& w, const PermGroup<E>& g) {
  std::vector<E> gens;
  for (const auto& x : g.elements())
    if (w.conjugate(x) == w) gens.push_back(x);
  const GroupTable<E> t(g);
  std::vector<int> idx;
  for (const auto& x : gens) idx.push_back(t.index_of(x));
  return t.to_group(t.generators_of(idx));
}

/// A Sylow p-subgroup: the canonically first subgroup of full p-power order.
template <class E>
PermGroup<E> sylow(const PermGroup<E>& g, unsigned p) {
  std::size_t n = g.order(), pp = 1;
  if (p < 2 || n % p != 0) throw std::invalid_argument("sylow: p does not divide the group order");
  while (n % p == 0) {
    n /= p;
    pp *= p;
  }
  const GroupTable<E> t(g);
  for (const auto& s : subgroups_by_extension(t))
    if (s.members.size() == pp) return t.to_group(s.gens);
  throw std::logic_error("sylow: no subgroup of full p-power order");
}

// ---- Gamma ----

inline PermGroup<GammaElt> gamma_group() {
  return PermGroup<GammaElt>({GammaElt::parse("((123),(),0)"), GammaElt::parse("((12),(),0)"), GammaElt::iota()},
                             GammaElt::identity());
}

inline PermGroup<GammaElt> gamma_subgroup(const std::vector<std::string>& gens) {
  std::vector<GammaElt> g;
  for (const auto& s : gens) g.push_back(GammaElt::parse(s));
  return PermGroup<GammaElt>(g, GammaElt::identity());
}

inline PermGroup<GammaElt> a3_x_1() { return gamma_subgroup({"((123),(),0)"}); }
inline PermGroup<GammaElt> one_x_a3() { return gamma_subgroup({"((),(123),0)"}); }
inline PermGroup<GammaElt> diagonal_a3() { return gamma_subgroup({"((123),(123),0)"}); }
inline PermGroup<GammaElt> a3_x_a3() { return gamma_subgroup({"((123),(),0)", "((),(123),0)"}); }

/// Structural label, invariant under Gamma-conjugacy (A3x1 and 1xA3 are Gamma-conjugate
/// and both carry "A3x1").
inline std::string gamma_label(const PermGroup<GammaElt>& h) {
  const std::size_t n = h.order();
  if (n == 1) return "trivial";
  bool in_base = true, rho_trivial = true, tau_trivial = true;
  for (const auto& g : h.generators()) {
    in_base = in_base && !g.eps;
    rho_trivial = rho_trivial && g.rho.is_identity();
    tau_trivial = tau_trivial && g.tau.is_identity();
  }
  if (n == 3 && in_base) {
    if (rho_trivial || tau_trivial) return "A3x1";
    return "Delta";
  }
  if (n == 9) return "A3xA3";
  if (n == 8) return "Sylow2";
  if ((n & (n - 1)) == 0) return "2-group:" + std::to_string(n);
  return "other:" + std::to_string(n);
}

inline std::string to_string(const PermGroup<GammaElt>& h) {
  std::string out = "<";
  for (std::size_t i = 0; i < h.generators().size(); ++i) {
    if (i) out += ", ";
    out += h.generators()[i].to_string();
  }
  return out + ">";
}

}  // namespace nodal
