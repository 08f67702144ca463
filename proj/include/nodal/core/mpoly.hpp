#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "nodal/core/arith.hpp"

namespace nodal {

using Exponent = std::vector<std::uint16_t>;

inline unsigned total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

/// Graded lexicographic order, variables ordered as declared (x_0 > x_1 > ...).
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// All exponent vectors of total degree d in n variables, in descending grlex order.
inline std::vector<Exponent> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Exponent> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent e(n, 0);
  // Recursive fill: first variable gets the largest power first.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = static_cast<std::uint16_t>(left);
      out.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = static_cast<std::uint16_t>(k);
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Sparse multivariate polynomial over a coefficient ring descriptor.
template <class Ring>
class MPoly {
 public:
  using T = typename Ring::value_type;
  using TermMap = std::map<Exponent, T, GrlexLess>;

  MPoly() = default;
  MPoly(Ring ring, std::size_t nvars) : ring_(ring), nvars_(nvars) {}

  static MPoly constant(Ring ring, std::size_t nvars, const T& c) {
    MPoly p(ring, nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }
  static MPoly variable(Ring ring, std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw std::out_of_range("variable index out of range");
    Exponent e(nvars, 0);
    e[i] = 1;
    MPoly p(ring, nvars);
    p.add_term(e, ring.one());
    return p;
  }
  static MPoly monomial(Ring ring, Exponent e, const T& c) {
    MPoly p(ring, e.size());
    p.add_term(std::move(e), c);
    return p;
  }

  const Ring& ring() const { return ring_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.rbegin()->first)); }
  int min_degree() const { return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.begin()->first)); }
  bool is_homogeneous() const { return degree() == min_degree(); }

  T coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  void add_term(Exponent e, const T& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent length does not match variable count");
    if (nodal::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (nodal::is_zero(it->second)) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  MPoly operator-() const {
    MPoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check(b);
    MPoly r(a.ring_, a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const T& s) const {
    MPoly r(ring_, nvars_);
    if (nodal::is_zero(s)) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  MPoly pow(unsigned k) const {
    MPoly acc = constant(ring_, nvars_, ring_.one());
    for (unsigned i = 0; i < k; ++i) acc *= *this;
    return acc;
  }

  MPoly derivative(std::size_t k) const {
    if (k >= nvars_) throw std::out_of_range("derivative variable out of range");
    MPoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[k] == 0) continue;
      Exponent d = e;
      --d[k];
      r.add_term(std::move(d), c * ring_.from_int(e[k]));
    }
    return r;
  }

  T evaluate(std::span<const T> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong arity");
    T acc = ring_.zero();
    for (const auto& [e, c] : terms_) {
      T v = c;
      for (std::size_t i = 0; i < nvars_ && !nodal::is_zero(v); ++i)
        for (unsigned k = 0; k < e[i]; ++k) v *= point[i];
      acc += v;
    }
    return acc;
  }

  /// Ring homomorphism x_i -> images[i]; all images share one target arity.
  MPoly substitute(std::span<const MPoly> images) const {
    if (images.size() != nvars_) throw std::invalid_argument("substitution must cover every variable");
    const std::size_t target = images.empty() ? 0 : images.front().nvars();
    for (const auto& im : images)
      if (im.nvars() != target) throw std::invalid_argument("substitution images have mixed arity");
    std::vector<std::vector<MPoly>> powers(nvars_);
    MPoly r(ring_, target);
    for (const auto& [e, c] : terms_) {
      MPoly term = constant(ring_, target, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(ring_, target, ring_.one()));
        while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
        term *= pw[e[i]];
      }
      r += term;
    }
    return r;
  }

  MPoly homogeneous_part(unsigned d) const {
    MPoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == d) r.terms_.emplace(e, c);
    return r;
  }

  /// Drops all terms of total degree > d.
  MPoly truncated(unsigned d) const {
    MPoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) <= d) r.terms_.emplace(e, c);
    return r;
  }

  template <class Ring2, class Fn>
  MPoly<Ring2> map_coefficients(Ring2 target, Fn&& fn) const {
    MPoly<Ring2> r(target, nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
  }

 private:
  void check(const MPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
  }

  Ring ring_{};
  std::size_t nvars_ = 0;
  TermMap terms_;
};

using QPoly = MPoly<RationalField>;
using FpPoly = MPoly<PrimeField>;

inline FpPoly reduce_mod(const QPoly& f, const PrimeField& field) {
  return f.map_coefficients(field, [&](const Rational& c) { return field.from_rational(c); });
}

/// Multiplies by the lcm of denominators and divides by the content, making
/// the leading coefficient positive.
inline QPoly primitive_integral(const QPoly& f) {
  if (f.is_zero()) return f;
  Integer l = 1, g = 0;
  for (const auto& [e, c] : f.terms()) l = lcm(l, Integer(c.get_den()));
  for (const auto& [e, c] : f.terms()) {
    Integer v = c.get_num() * (l / c.get_den());
    g = gcd(g, v);
  }
  Rational scale(l, g);
  scale.canonicalize();
  if (sgn(f.terms().rbegin()->second) < 0) scale = -scale;
  return f.scaled(scale);
}

}  // namespace nodal
