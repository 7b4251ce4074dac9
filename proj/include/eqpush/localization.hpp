#pragma once

/**
 * @file localization.hpp
 * @brief Fixed-point (Atiyah-Bott-Berline-Vergne) evaluation of push-forwards.
 *
 * Independent of the residue engine: the integral of V is the sum over torus
 * fixed points p_I of V(ε_1 t_1, ..., ε_n t_n) / e_I(t), evaluated exactly at
 * a concrete rational point t. Fixed points are sign vectors ε with ε_i = +1
 * iff i ∈ I. Tangent weights:
 *
 *   LG(n)        ε_i t_i + ε_j t_j for i <= j   (i = j gives 2 ε_i t_i)
 *   OG(n,2n)     ε_i t_i + ε_j t_j for i <  j
 *   OG(n,2n+1)   ε_i t_i + ε_j t_j for i <  j, and ε_i t_i
 *
 * OG(n,2n) has two connected components; the primary one is the parity class
 * |I| ≡ n (mod 2).
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "eqpush/error.hpp"
#include "eqpush/pushforward.hpp"
#include "eqpush/scalar.hpp"
#include "eqpush/space.hpp"
#include "eqpush/sparse_poly.hpp"

namespace eqpush {

struct FixedPoint {
  std::vector<int> signs;

  std::size_t plus_count() const {
    std::size_t c = 0;
    for (int s : signs) c += s > 0 ? 1 : 0;
    return c;
  }

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

/// Evaluation point with nonzero entries of pairwise distinct absolute value.
class GenericPoint {
 public:
  explicit GenericPoint(std::vector<Scalar> t) : t_(std::move(t)) {
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (t_[i] == 0) throw Error(ErrorKind::DegenerateEulerClass, "generic point has a zero coordinate");
      for (std::size_t j = 0; j < i; ++j)
        if (abs(t_[i]) == abs(t_[j]))
          throw Error(ErrorKind::DegenerateEulerClass, "generic point has coordinates of equal absolute value");
    }
  }

  /// (1, 2, ..., n).
  static GenericPoint standard(std::size_t n) {
    std::vector<Scalar> t;
    for (std::size_t i = 1; i <= n; ++i) t.emplace_back(static_cast<long>(i));
    return GenericPoint(std::move(t));
  }

  std::span<const Scalar> coords() const { return t_; }
  std::size_t size() const { return t_.size(); }
  const Scalar& operator[](std::size_t i) const { return t_[i]; }

 private:
  std::vector<Scalar> t_;
};

/**
 * Deterministic stream of generic points. Uses raw mt19937_64 output (no
 * std distributions) so the sequence is identical across standard libraries.
 */
class GenericPointSampler {
 public:
  GenericPointSampler(std::size_t n, std::uint64_t seed) : n_(n), engine_(seed) {}

  GenericPoint next() {
    std::vector<Scalar> t;
    while (t.size() < n_) {
      const long num = static_cast<long>(engine_() % 97) + 1;
      const long den = static_cast<long>(engine_() % 13) + 1;
      Scalar x(num, den);
      x.canonicalize();
      if (engine_() & 1) x = -x;
      bool clash = false;
      for (const auto& y : t) clash = clash || abs(y) == abs(x);
      if (!clash) t.push_back(x);
    }
    return GenericPoint(std::move(t));
  }

 private:
  std::size_t n_;
  std::mt19937_64 engine_;
};

/// (1, ..., n) followed by `random_count` seeded points.
inline std::vector<GenericPoint> default_points(std::size_t n, std::size_t random_count, std::uint64_t seed) {
  std::vector<GenericPoint> out{GenericPoint::standard(n)};
  GenericPointSampler sampler(n, seed);
  for (std::size_t i = 0; i < random_count; ++i) out.push_back(sampler.next());
  return out;
}

enum class Component { Primary, Complement };

namespace detail {

inline std::vector<FixedPoint> all_sign_vectors(std::size_t n) {
  std::vector<FixedPoint> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    FixedPoint p{std::vector<int>(n)};
    for (std::size_t i = 0; i < n; ++i) p.signs[i] = (mask >> (n - 1 - i)) & 1u ? -1 : 1;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace detail

/**
 * Torus fixed points, in the order (+,...,+), ..., (-,...,-). For OG(n,2n)
 * only the requested component is returned.
 */
inline std::vector<FixedPoint> fixed_points(const Space& space, Component component = Component::Primary) {
  auto all = detail::all_sign_vectors(space.n());
  if (space.kind() != SpaceKind::OGeven) return all;
  const std::size_t want = component == Component::Primary ? space.n() % 2 : (space.n() + 1) % 2;
  std::vector<FixedPoint> out;
  for (auto& p : all)
    if (p.plus_count() % 2 == want) out.push_back(std::move(p));
  return out;
}

/// Product of tangent weights at a fixed point.
inline Scalar euler_factor(const Space& space, const FixedPoint& p, const GenericPoint& t) {
  const std::size_t n = space.n();
  if (p.signs.size() != n || t.size() != n) throw Error(ErrorKind::VariableCountMismatch, "fixed point / point size");
  Scalar e(1);
  auto weight = [&](Scalar w) {
    if (w == 0) throw Error(ErrorKind::DegenerateEulerClass, "vanishing tangent weight");
    e *= w;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar ti = p.signs[i] * t[i];
    for (std::size_t j = i + 1; j < n; ++j) weight(ti + p.signs[j] * t[j]);
    if (space.kind() == SpaceKind::LG) weight(2 * ti);
    if (space.kind() == SpaceKind::OGodd) weight(ti);
  }
  return e;
}

/**
 * Values V(ε t) for every sign vector ε, obtained by splitting V by the
 * parity pattern of its exponents and evaluating each part once at t.
 */
class SignedEvaluator {
 public:
  SignedEvaluator(const SparsePoly& v, const GenericPoint& t) {
    std::map<std::uint32_t, SparsePoly> parts;
    for (const auto& [m, c] : v.terms()) {
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] % 2 != 0) mask |= 1u << i;
      parts.try_emplace(mask, v.nvars()).first->second.add_term(m, c);
    }
    for (const auto& [mask, part] : parts) values_.emplace_back(mask, evaluate(part, t.coords()));
  }

  Scalar at(const FixedPoint& p) const {
    Scalar sum(0);
    for (const auto& [mask, value] : values_) {
      int sign = 1;
      for (std::size_t i = 0; i < p.signs.size(); ++i)
        if (mask & (1u << i)) sign *= p.signs[i];
      if (sign > 0) sum += value;
      else sum -= value;
    }
    return sum;
  }

 private:
  std::vector<std::pair<std::uint32_t, Scalar>> values_;
};

/// Σ_p V(ε t) / e_p(t) over the fixed points of the chosen component.
inline Scalar localization_sum(const SparsePoly& v, const Space& space, const GenericPoint& t,
                               Component component = Component::Primary) {
  if (v.nvars() != space.n() || t.size() != space.n())
    throw Error(ErrorKind::VariableCountMismatch, "class / point size does not match n");
  SignedEvaluator values(v, t);
  Scalar sum(0);
  for (const auto& p : fixed_points(space, component)) sum += values.at(p) / euler_factor(space, p, t);
  return sum;
}

/**
 * Mean of the localization sums over the components of the fixed-point set.
 * Equal to localization_sum for LG and OG(n,2n+1). For OG(n,2n) this is the
 * quantity the residue formula computes.
 */
inline Scalar localization_component_mean(const SparsePoly& v, const Space& space, const GenericPoint& t) {
  if (space.kind() != SpaceKind::OGeven) return localization_sum(v, space, t);
  Scalar both = localization_sum(v, space, t, Component::Primary) + localization_sum(v, space, t, Component::Complement);
  return both / 2;
}

struct CrossCheckEntry {
  std::vector<Scalar> point;
  Scalar lhs;  // localization
  Scalar rhs;  // residue value evaluated at the point
  bool match;
};

struct CrossCheckReport {
  std::vector<CrossCheckEntry> entries;

  bool all_match() const {
    for (const auto& e : entries)
      if (!e.match) return false;
    return true;
  }
};

/**
 * Compares a claimed push-forward polynomial of V with the localization sum at
 * `trials` seeded generic points.
 */
inline CrossCheckReport cross_check_value(const SparsePoly& v, const SparsePoly& claimed, const Space& space,
                                          std::size_t trials, std::uint64_t seed) {
  CrossCheckReport report;
  GenericPointSampler sampler(space.n(), seed);
  for (std::size_t i = 0; i < trials; ++i) {
    GenericPoint t = sampler.next();
    Scalar lhs = localization_component_mean(v, space, t);
    Scalar rhs = evaluate(claimed, t.coords());
    report.entries.push_back({std::vector<Scalar>(t.coords().begin(), t.coords().end()), lhs, rhs, lhs == rhs});
  }
  return report;
}

/// Residue push-forward of symmetric V against the localization sum.
inline CrossCheckReport cross_check(const SparsePoly& v, const Space& space, std::size_t trials, std::uint64_t seed) {
  return cross_check_value(v, pushforward_symmetric(v, space), space, trials, seed);
}

}  // namespace eqpush
