#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "nodal/core/graded.hpp"
#include "nodal/core/poly_io.hpp"

namespace nodal {

/// Projective hypersurface {f = 0} in P^N, N = nvars - 1.
struct Hypersurface {
  QPoly f;
  std::vector<std::string> vars;

  Hypersurface() = default;
  Hypersurface(QPoly poly, std::vector<std::string> names) : f(std::move(poly)), vars(std::move(names)) {
    if (f.is_zero()) throw std::invalid_argument("hypersurface equation is zero");
    if (!f.is_homogeneous()) throw std::invalid_argument("hypersurface equation is not homogeneous");
    if (vars.size() != f.nvars()) throw std::invalid_argument("variable names do not match arity");
  }

  std::size_t ambient_dim() const { return f.nvars() - 1; }
  int degree() const { return f.degree(); }
};

inline std::vector<std::string> numbered_vars(const std::string& prefix, std::size_t n, int first = 0) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(first + static_cast<int>(i)));
  return out;
}

using FpPoint = std::vector<std::uint32_t>;

/// Evaluates a rational polynomial modulo p with plain 64-bit arithmetic.
class FpEvaluator {
 public:
  FpEvaluator(const QPoly& f, std::uint32_t p) : p_(p), n_(f.nvars()) {
    const PrimeField field(p);
    for (const auto& [e, c] : f.terms()) {
      if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), p)) throw std::invalid_argument("denominator divisible by p");
      const std::uint32_t v = field.from_rational(c).value();
      if (v == 0) continue;
      coef_.push_back(v);
      exps_.push_back(e);
      for (auto k : e) maxdeg_ = std::max<unsigned>(maxdeg_, k);
    }
  }

  std::uint32_t operator()(const FpPoint& x) const {
    std::vector<std::uint64_t> pw(n_ * (maxdeg_ + 1));
    for (std::size_t i = 0; i < n_; ++i) {
      pw[i * (maxdeg_ + 1)] = 1;
      for (unsigned k = 1; k <= maxdeg_; ++k) pw[i * (maxdeg_ + 1) + k] = pw[i * (maxdeg_ + 1) + k - 1] * x[i] % p_;
    }
    std::uint64_t acc = 0;
    for (std::size_t t = 0; t < coef_.size(); ++t) {
      std::uint64_t v = coef_[t];
      for (std::size_t i = 0; i < n_ && v; ++i)
        if (exps_[t][i]) v = v * pw[i * (maxdeg_ + 1) + exps_[t][i]] % p_;
      acc += v;
    }
    return static_cast<std::uint32_t>(acc % p_);
  }

  bool is_zero_poly() const { return coef_.empty(); }

 private:
  std::uint64_t p_;
  std::size_t n_;
  unsigned maxdeg_ = 0;
  std::vector<std::uint64_t> coef_;
  std::vector<Exponent> exps_;
};

/// Calls fn on every point of P^{n-1}(F_p), normalized so the first nonzero
/// coordinate is 1, in lexicographic order.
inline void for_each_projective_point(std::size_t n, std::uint32_t p, const std::function<void(const FpPoint&)>& fn) {
  for (std::size_t lead = n; lead-- > 0;) {
    // Points whose first nonzero coordinate is `lead`, in lexicographic order.
    FpPoint x(n, 0);
    x[lead] = 1;
    for (;;) {
      fn(x);
      std::size_t i = n;
      while (i > lead + 1 && x[i - 1] == p - 1) x[--i] = 0;
      if (i == lead + 1) break;
      ++x[i - 1];
    }
  }
}

inline std::uint64_t projective_point_count(std::size_t n, std::uint32_t p) {
  std::uint64_t c = 0, pw = 1;
  for (std::size_t i = 0; i < n; ++i) {
    c += pw;
    pw *= p;
  }
  return c;
}

inline void check_enumeration_bound(std::size_t n, std::uint32_t p) {
  long double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  if (total > 1e8L) throw std::invalid_argument("enumeration bound p^(N+1) <= 1e8 exceeded");
}

/// Points of X(F_p), sorted.
inline std::vector<FpPoint> points_fp(const QPoly& f, std::uint32_t p) {
  check_enumeration_bound(f.nvars(), p);
  const FpEvaluator ev(f, p);
  std::vector<FpPoint> out;
  for_each_projective_point(f.nvars(), p, [&](const FpPoint& x) {
    if (ev(x) == 0) out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Points of X(F_p) where f and every partial derivative vanish, sorted.
inline std::vector<FpPoint> singular_points_fp(const QPoly& f, std::uint32_t p) {
  check_enumeration_bound(f.nvars(), p);
  const FpEvaluator ev(f, p);
  std::vector<FpEvaluator> partial;
  for (std::size_t i = 0; i < f.nvars(); ++i) partial.emplace_back(f.derivative(i), p);
  std::vector<FpPoint> out;
  for_each_projective_point(f.nvars(), p, [&](const FpPoint& x) {
    if (ev(x) != 0) return;
    for (const auto& d : partial)
      if (d(x) != 0) return;
    out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string point_string(const FpPoint& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ":" : "") + std::to_string(x[i]);
  return s + ")";
}

inline std::string point_string(const std::vector<Rational>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ":" : "") + x[i].get_str();
  return s + ")";
}

/// Projective rational point scaled to a primitive integer vector, reduced mod p
/// and normalized. nullopt if it reduces to zero.
inline std::optional<FpPoint> reduce_point(const std::vector<Rational>& x, std::uint32_t p) {
  Integer l = 1, g = 0;
  for (const auto& c : x) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> v;
  for (const auto& c : x) {
    v.push_back(c.get_num() * (l / c.get_den()));
    g = gcd(g, v.back());
  }
  if (is_zero(g)) return std::nullopt;
  const PrimeField field(p);
  FpPoint out;
  for (auto& c : v) out.push_back(field.from_integer(c / g).value());
  std::size_t lead = 0;
  while (lead < out.size() && out[lead] == 0) ++lead;
  if (lead == out.size()) return std::nullopt;
  const Fp inv = Fp(out[lead], p).inverse();
  for (auto& c : out) c = (Fp(c, p) * inv).value();
  return out;
}

/// Linear subspace of projective space (homogeneous coordinates 0..n-1), with
/// both a spanning set and the annihilating linear forms, each in RREF.
template <Field Ring>
struct LinearSubspace {
  Matrix<Ring> span;
  Matrix<Ring> forms;

  static LinearSubspace from_span(const Matrix<Ring>& rows) {
    auto s = rref(rows).reduced;
    auto k = kernel_basis(rows.rows() ? rows : Matrix<Ring>(rows.ring(), 1, rows.cols()));
    Matrix<Ring> f = k.empty() ? Matrix<Ring>(rows.ring(), 0, rows.cols())
                               : rref(Matrix<Ring>::from_rows(rows.ring(), k, rows.cols())).reduced;
    return {s, f};
  }
  static LinearSubspace from_forms(const Matrix<Ring>& f) {
    auto s = from_span(f);
    return {s.forms, s.span};
  }

  std::size_t ambient() const { return span.cols(); }
  int dimension() const { return static_cast<int>(span.rows()) - 1; }
  bool consistent() const {
    return (span * forms.transpose()).is_zero() && span.rows() + forms.rows() == span.cols();
  }
  bool contains(std::span<const typename Ring::value_type> x) const {
    const auto v = forms.apply(x);
    return std::all_of(v.begin(), v.end(), [](const auto& t) { return nodal::is_zero(t); });
  }
  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) { return a.span == b.span; }
};

using QSubspace = LinearSubspace<RationalField>;
using FpSubspace = LinearSubspace<PrimeField>;

/// Projective dimension of the intersection (-1 if empty).
template <Field Ring>
int intersection_dimension(const LinearSubspace<Ring>& a, const LinearSubspace<Ring>& b) {
  const std::size_t sum = rank(Matrix<Ring>::vstack(a.span, b.span));
  return static_cast<int>(a.span.rows() + b.span.rows()) - static_cast<int>(sum) - 1;
}

/// Restriction of f to the subspace, as a polynomial in span.rows() parameters.
template <Field Ring>
MPoly<Ring> restrict_to(const MPoly<Ring>& f, const LinearSubspace<Ring>& s) {
  const std::size_t k = s.span.rows();
  std::vector<MPoly<Ring>> images;
  for (std::size_t i = 0; i < s.ambient(); ++i) {
    MPoly<Ring> im(f.ring(), k);
    for (std::size_t r = 0; r < k; ++r) {
      Exponent e(k, 0);
      e[r] = 1;
      im.add_term(e, s.span(r, i));
    }
    images.push_back(std::move(im));
  }
  return f.substitute(images);
}

// ---- singularities ----

struct NonIsolatedSingularity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularPointReport {
  std::vector<Rational> point;
  std::size_t mu = 0;
  std::size_t mu_prime = 0;
  std::size_t m = 0;
  bool is_node = false;
  std::size_t hessian_rank = 0;
  std::uint64_t slice_seed = 0;
};

struct AffineChart {
  QPoly g;                     // f with x_k = 1
  std::vector<Rational> point;  // remaining coordinates divided by x_k
  std::size_t chart = 0;
};

inline AffineChart affine_chart(const QPoly& f, std::span<const Rational> point) {
  const std::size_t n = f.nvars();
  if (point.size() != n) throw std::invalid_argument("point arity mismatch");
  std::size_t k = 0;
  while (k < n && is_zero(point[k])) ++k;
  if (k == n) throw std::invalid_argument("zero vector is not a projective point");
  std::vector<QPoly> images;
  AffineChart c;
  c.chart = k;
  for (std::size_t i = 0, v = 0; i < n; ++i) {
    if (i == k) {
      images.push_back(QPoly::constant(RationalField{}, n - 1, Rational(1)));
    } else {
      images.push_back(QPoly::variable(RationalField{}, n - 1, v++));
      c.point.push_back(point[i] / point[k]);
    }
  }
  c.g = f.substitute(images);
  return c;
}

inline QMatrix hessian_at(const QPoly& g, std::span<const Rational> a) {
  const std::size_t n = g.nvars();
  QMatrix h(RationalField{}, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const QPoly di = g.derivative(i);
    for (std::size_t j = i; j < n; ++j) h(i, j) = h(j, i) = di.derivative(j).evaluate(a);
  }
  return h;
}

inline bool is_singular_point(const QPoly& f, std::span<const Rational> point) {
  if (!is_zero(f.evaluate(point))) return false;
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if (!is_zero(f.derivative(i).evaluate(point))) return false;
  return true;
}

/// mu from the local algebra in an affine chart at the point; mu' from a seeded
/// pseudo-random hyperplane slice through the point (retried with seed+1, ... up
/// to 5 times if the slice does not stabilize); node flag from the Hessian rank.
inline SingularPointReport classify_singularity(const Hypersurface& x, std::span<const Rational> point,
                                                unsigned trunc = 8, std::uint64_t seed = 1) {
  if (!is_singular_point(x.f, point)) throw std::invalid_argument("classify_singularity: point is not singular");
  const AffineChart c = affine_chart(x.f, point);
  const std::size_t n = c.g.nvars();
  SingularPointReport rep;
  rep.point.assign(point.begin(), point.end());
  const auto local = local_algebra_dim(c.g, std::span<const Rational>(c.point), trunc);
  if (!local.stable()) throw NonIsolatedSingularity("singularity at " + point_string(rep.point) + " is not isolated");
  rep.mu = *local.mu;
  rep.hessian_rank = rank(hessian_at(c.g, c.point));
  rep.is_node = rep.hessian_rank == n;
  if (n < 2) throw std::invalid_argument("classify_singularity: ambient dimension too small for a slice");
  for (int attempt = 0; attempt < 5; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    std::mt19937_64 gen(s);
    std::vector<Rational> coef;
    for (std::size_t i = 0; i < n; ++i) coef.emplace_back(static_cast<long>(1 + gen() % 97));
    // u_last = a_last - sum_{i<last} c_i (u_i - a_i) / c_last
    std::vector<QPoly> images;
    QPoly last = QPoly::constant(RationalField{}, n - 1, c.point[n - 1]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const QPoly ui = QPoly::variable(RationalField{}, n - 1, i);
      images.push_back(ui);
      last -= (ui - QPoly::constant(RationalField{}, n - 1, c.point[i])).scaled(coef[i] / coef[n - 1]);
    }
    images.push_back(last);
    const QPoly h = c.g.substitute(images);
    const std::vector<Rational> hp(c.point.begin(), c.point.end() - 1);
    const auto sl = local_algebra_dim(h, std::span<const Rational>(hp), trunc);
    if (!sl.stable()) continue;
    rep.mu_prime = *sl.mu;
    rep.slice_seed = s;
    rep.m = rep.mu + rep.mu_prime;
    return rep;
  }
  throw NonIsolatedSingularity("hyperplane slice at " + point_string(rep.point) + " did not stabilize");
}

/// deg of the dual of a cubic threefold: 3 * 2^3 - sum m(v).
inline long dual_degree(const Hypersurface& x, const std::vector<SingularPointReport>& sing) {
  if (x.degree() != 3 || x.ambient_dim() != 4) throw std::invalid_argument("dual_degree: expects a cubic threefold");
  long d = 24;
  for (const auto& r : sing) {
    if (r.m == 0) throw std::invalid_argument("dual_degree: unclassified singularity");
    d -= static_cast<long>(r.m);
  }
  return d;
}

struct ClassRank {
  long euler = 0;
  long b2 = 0;
  long rank_cl = 0;
};

/// Blow-up of d nodes of a nodal cubic threefold with b3 = 0: e = -6 + 4d,
/// b2 = (e - 2) / 2, rank Cl = b2 - d.
inline ClassRank class_rank_bookkeeping(int d) {
  if (d != 9 && d != 10) throw std::invalid_argument("class_rank_bookkeeping: node count must be 9 or 10");
  ClassRank c;
  c.euler = -6 + 4L * d;
  c.b2 = (c.euler - 2) / 2;
  c.rank_cl = c.b2 - d;
  return c;
}

}  // namespace nodal
