#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nodal {

/// Permutation of {0..n-1}; printed 1-based in cycle notation.
/// Composition (a * b)(i) = a(b(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint8_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto v : img_) {
      if (v >= img_.size() || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = true;
    }
  }

  static Perm identity(std::size_t n) {
    Perm p;
    p.img_.resize(n);
    std::iota(p.img_.begin(), p.img_.end(), std::uint8_t{0});
    return p;
  }

  /// Cycles are 1-based point lists.
  static Perm from_cycles(const std::vector<std::vector<int>>& cycles, std::size_t n) {
    Perm p = identity(n);
    std::vector<bool> used(n, false);
    for (const auto& c : cycles)
      for (std::size_t k = 0; k < c.size(); ++k) {
        const int a = c[k], b = c[(k + 1) % c.size()];
        if (a < 1 || static_cast<std::size_t>(a) > n || b < 1 || static_cast<std::size_t>(b) > n)
          throw std::invalid_argument("cycle point out of range");
        if (used[a - 1]) throw std::invalid_argument("point repeated in cycles");
        used[a - 1] = true;
        p.img_[a - 1] = static_cast<std::uint8_t>(b - 1);
      }
    return p;
  }

  /// Parses "(123)(45)", "()" or "1"; points may be comma separated, "(1,2,10)".
  static Perm parse(std::string_view s, std::size_t n) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < s.size() && s[i] == ' ') ++i;
    };
    skip();
    if (s.substr(i) == "1") return identity(n);
    while (i < s.size()) {
      if (s[i] != '(') throw std::invalid_argument("cycle notation: expected '('");
      const std::size_t close = s.find(')', i);
      if (close == std::string_view::npos) throw std::invalid_argument("cycle notation: missing ')'");
      std::string_view body = s.substr(i + 1, close - i - 1);
      std::vector<int> cyc;
      if (body.find(',') != std::string_view::npos) {
        std::size_t a = 0;
        while (a <= body.size()) {
          std::size_t b = body.find(',', a);
          if (b == std::string_view::npos) b = body.size();
          std::string tok(body.substr(a, b - a));
          tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
          if (tok.empty()) throw std::invalid_argument("cycle notation: empty point");
          cyc.push_back(std::stoi(tok));
          a = b + 1;
        }
      } else {
        for (char c : body) {
          if (c == ' ') continue;
          if (c < '1' || c > '9') throw std::invalid_argument("cycle notation: bad point");
          cyc.push_back(c - '0');
        }
      }
      if (!cyc.empty()) cycles.push_back(cyc);
      i = close + 1;
      skip();
    }
    return from_cycles(cycles, n);
  }

  std::size_t degree() const { return img_.size(); }
  std::uint8_t operator()(std::size_t i) const { return img_.at(i); }
  const std::vector<std::uint8_t>& images() const { return img_; }

  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
    Perm r;
    r.img_.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) r.img_[i] = a.img_[b.img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      std::vector<int> c;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        c.push_back(static_cast<int>(j) + 1);
      }
      out.push_back(c);
    }
    return out;
  }

  unsigned order() const {
    unsigned o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, static_cast<unsigned>(c.size()));
    return o;
  }

  int sign() const {
    int s = 1;
    for (const auto& c : cycles())
      if (c.size() % 2 == 0) s = -s;
    return s;
  }

  std::string to_string() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    const bool commas = degree() > 9;
    std::string out;
    for (const auto& c : cs) {
      out += '(';
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (commas && k) out += ',';
        out += std::to_string(c[k]);
      }
      out += ')';
    }
    return out;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint8_t> img_;
};

}  // namespace nodal
