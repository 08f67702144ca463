#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "nodal/group/perm.hpp"

namespace nodal {

/// Element (rho, tau, eps) of Gamma = S3 wr S2. With sigma_1 swapping a pair,
///   (rho,tau,e)(rho',tau',e') = (rho o s_e(rho',tau').first, tau o s_e(rho',tau').second, e xor e').
/// Grid positions (i,j) are indexed 3i+j (0-based); coordinates x1..x3 are 0..2, y1..y3 are 3..5.
struct GammaElt {
  Perm rho = Perm::identity(3);
  Perm tau = Perm::identity(3);
  bool eps = false;

  static GammaElt identity() { return {}; }
  static GammaElt iota() { return {Perm::identity(3), Perm::identity(3), true}; }

  friend GammaElt operator*(const GammaElt& a, const GammaElt& b) {
    if (a.eps) return {a.rho * b.tau, a.tau * b.rho, !b.eps};
    return {a.rho * b.rho, a.tau * b.tau, b.eps};
  }

  GammaElt inverse() const {
    if (!eps) return {rho.inverse(), tau.inverse(), false};
    return {tau.inverse(), rho.inverse(), true};
  }

  bool is_identity() const { return !eps && rho.is_identity() && tau.is_identity(); }

  /// Grid action: transpose if eps, then (i,j) -> (rho(i), tau(j)).
  Perm grid_perm() const {
    std::vector<std::uint8_t> img(9);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const int a = eps ? j : i, b = eps ? i : j;
        img[3 * i + j] = static_cast<std::uint8_t>(3 * rho(a) + tau(b));
      }
    return Perm(img);
  }

  /// Coordinate action: x_i -> x_rho(i), y_j -> y_tau(j); with eps, x_i -> y_tau(i), y_j -> x_rho(j).
  Perm coord_perm() const {
    std::vector<std::uint8_t> img(6);
    for (int i = 0; i < 3; ++i) {
      img[i] = static_cast<std::uint8_t>(eps ? 3 + tau(i) : rho(i));
      img[3 + i] = static_cast<std::uint8_t>(eps ? rho(i) : 3 + tau(i));
    }
    return Perm(img);
  }

  unsigned order() const {
    GammaElt p = *this;
    unsigned k = 1;
    while (!p.is_identity()) {
      p = p * *this;
      ++k;
    }
    return k;
  }

  /// "((123),(12),0)"
  std::string to_string() const {
    return "(" + rho.to_string() + "," + tau.to_string() + "," + (eps ? "1" : "0") + ")";
  }

  /// Components split at top-level commas; "1" or "()" is the identity.
  static GammaElt parse(std::string_view s) {
    std::string t;
    for (char c : s)
      if (c != ' ') t += c;
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw std::invalid_argument("GammaElt: expected (rho,tau,eps)");
    t = t.substr(1, t.size() - 2);
    std::vector<std::string> parts(1);
    int depth = 0;
    for (char c : t) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth < 0) throw std::invalid_argument("GammaElt: unbalanced parentheses");
      if (c == ',' && depth == 0) parts.emplace_back();
      else parts.back() += c;
    }
    if (depth != 0 || parts.size() != 3) throw std::invalid_argument("GammaElt: malformed");
    if (parts[2] != "0" && parts[2] != "1") throw std::invalid_argument("GammaElt: eps must be 0 or 1");
    for (int k = 0; k < 2; ++k)
      if (parts[k].empty()) throw std::invalid_argument("GammaElt: empty component");
    return {Perm::parse(parts[0], 3), Perm::parse(parts[1], 3), parts[2] == "1"};
  }

  friend bool operator==(const GammaElt&, const GammaElt&) = default;
  friend auto operator<=>(const GammaElt& a, const GammaElt& b) {
    if (a.eps != b.eps) return a.eps <=> b.eps;
    if (auto c = a.rho <=> b.rho; c != 0) return c;
    return a.tau <=> b.tau;
  }
};

}  // namespace nodal
