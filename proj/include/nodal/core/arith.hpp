#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nodal {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& a) { return sgn(a) == 0; }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (is_zero(den)) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Element of the prime field F_p. The modulus travels with the value so that
/// generic code can use ordinary operators.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint32_t p) : v_(static_cast<std::uint32_t>(value % p)), p_(p) {}

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) {
    check(a, b);
    std::uint64_t s = std::uint64_t(a.v_) + b.v_;
    return Fp(s >= a.p_ ? s - a.p_ : s, a.p_);
  }
  friend Fp operator-(Fp a, Fp b) {
    check(a, b);
    return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : std::uint64_t(a.v_) + a.p_ - b.v_, a.p_);
  }
  friend Fp operator*(Fp a, Fp b) {
    check(a, b);
    return Fp(std::uint64_t(a.v_) * b.v_, a.p_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator<(Fp a, Fp b) { return a.v_ < b.v_; }

  Fp pow(std::uint64_t e) const {
    Fp base = *this, acc(1, p_);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
    std::int64_t t = 0, new_t = 1, r = p_, new_r = v_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    if (t < 0) t += p_;
    return Fp(static_cast<std::uint64_t>(t), p_);
  }

 private:
  static void check(Fp a, Fp b) {
    if (a.p_ != b.p_) throw std::invalid_argument("F_p elements with different moduli");
  }
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 1;
};

inline bool is_zero(const Fp& a) { return a.is_zero(); }

struct RationalField {
  using value_type = Rational;
  static constexpr bool is_field = true;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_integer(const Integer& a) const { return Rational(a); }
  Rational from_int(long a) const { return Rational(a); }
  Rational from_rational(const Rational& a) const { return a; }
  std::string name() const { return "QQ"; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

class PrimeField {
 public:
  using value_type = Fp;
  static constexpr bool is_field = true;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31)) throw std::invalid_argument("F_p needs a prime p < 2^31, got " + std::to_string(p));
  }

  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(long a) const {
    long r = a % static_cast<long>(p_);
    if (r < 0) r += p_;
    return Fp(static_cast<std::uint64_t>(r), p_);
  }
  Fp from_integer(const Integer& a) const {
    Integer r = a % p_;
    if (sgn(r) < 0) r += p_;
    return Fp(r.get_ui(), p_);
  }
  /// Throws std::domain_error when p divides the denominator.
  Fp from_rational(const Rational& a) const {
    return from_integer(a.get_num()) / from_integer(a.get_den());
  }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

struct IntegerRing {
  using value_type = Integer;
  static constexpr bool is_field = false;

  Integer zero() const { return Integer(0); }
  Integer one() const { return Integer(1); }
  Integer from_int(long a) const { return Integer(a); }
  Integer from_integer(const Integer& a) const { return a; }
  std::string name() const { return "ZZ"; }
  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

template <class R>
concept Field = R::is_field;

inline std::string to_string(const Integer& a) { return a.get_str(); }
inline std::string to_string(const Rational& a) { return a.get_str(); }
inline std::string to_string(const Fp& a) { return std::to_string(a.value()); }

}  // namespace nodal
