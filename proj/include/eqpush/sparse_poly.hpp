#pragma once

/**
 * @file sparse_poly.hpp
 * @brief Sparse multivariate Laurent polynomials over exact rationals.
 *
 * A SparsePoly owns a fixed number of variables and a map from signed exponent
 * vectors to nonzero rational coefficients. Terms are kept in descending
 * lexicographic order of exponent vectors; this is also the order used for
 * printing and serialization. Zero coefficients are never stored, so two
 * polynomials are equal exactly when their term maps are equal.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqpush/error.hpp"
#include "eqpush/scalar.hpp"

namespace eqpush {

/// Exponent vector of a single term. Entries may be negative.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents(nvars, 0) {}
  Monomial(std::initializer_list<int> e) : exponents(e) {}
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

  std::size_t size() const { return exponents.size(); }
  int operator[](std::size_t i) const { return exponents[i]; }
  int& operator[](std::size_t i) { return exponents[i]; }

  int total_degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

  bool all_of(auto pred) const { return std::all_of(exponents.begin(), exponents.end(), pred); }

  friend Monomial operator+(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exponents[i] = a.exponents[i] + b.exponents[i];
    return r;
  }
  friend Monomial operator-(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exponents[i] = a.exponents[i] - b.exponents[i];
    return r;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Descending lexicographic order: the leading term comes first.
using TermMap = std::map<Monomial, Scalar, std::greater<Monomial>>;

class SparsePoly {
 public:
  explicit SparsePoly(std::size_t nvars = 0) : nvars_(nvars) {}

  /// Builds from (exponents, coefficient) pairs; duplicates are summed, zeros dropped.
  SparsePoly(std::size_t nvars, std::initializer_list<std::pair<Monomial, Scalar>> terms) : nvars_(nvars) {
    for (const auto& [m, c] : terms) add_term(m, c);
  }

  static SparsePoly constant(std::size_t nvars, const Scalar& c) {
    SparsePoly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }

  /// The polynomial x_index (0-based).
  static SparsePoly variable(std::size_t nvars, std::size_t index) {
    Monomial m(nvars);
    m[index] = 1;
    SparsePoly p(nvars);
    p.add_term(m, Scalar(1));
    return p;
  }

  static SparsePoly term(const Monomial& m, const Scalar& c) {
    SparsePoly p(m.size());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Accumulates c * x^m, erasing the entry if it cancels.
  void add_term(const Monomial& m, const Scalar& c) {
    if (m.size() != nvars_)
      throw Error(ErrorKind::VariableCountMismatch,
                  "monomial of length " + std::to_string(m.size()) + " in polynomial of " + std::to_string(nvars_) + " variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool has_negative_exponent() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return !t.first.all_of([](int e) { return e >= 0; }); });
  }

  SparsePoly& operator+=(const SparsePoly& q) {
    check_same_vars(q);
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& q) {
    check_same_vars(q);
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
  }
  SparsePoly& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly p, const SparsePoly& q) { return p += q; }
  friend SparsePoly operator-(SparsePoly p, const SparsePoly& q) { return p -= q; }
  friend SparsePoly operator-(SparsePoly p) { return p *= Scalar(-1); }
  friend SparsePoly operator*(SparsePoly p, const Scalar& s) { return p *= s; }
  friend SparsePoly operator*(const Scalar& s, SparsePoly p) { return p *= s; }

  friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) {
    p.check_same_vars(q);
    SparsePoly r(p.nvars_);
    for (const auto& [mp, cp] : p.terms_)
      for (const auto& [mq, cq] : q.terms_) r.add_term(mp + mq, cp * cq);
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  void check_same_vars(const SparsePoly& q) const {
    if (q.nvars_ != nvars_)
      throw Error(ErrorKind::VariableCountMismatch,
                  std::to_string(nvars_) + " vs " + std::to_string(q.nvars_) + " variables");
  }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

inline SparsePoly add(const SparsePoly& p, const SparsePoly& q) { return p + q; }
inline SparsePoly mul(const SparsePoly& p, const SparsePoly& q) { return p * q; }

inline SparsePoly pow(const SparsePoly& p, unsigned e) {
  SparsePoly r = SparsePoly::constant(p.nvars(), 1);
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

/**
 * Exact quotient p / d by repeated leading-term elimination.
 *
 * Throws InexactDivision when d does not divide p, including when d is zero.
 * Both operands must be ordinary polynomials (no negative exponents).
 */
inline SparsePoly exact_div(const SparsePoly& p, const SparsePoly& d) {
  p.check_same_vars(d);
  if (d.is_zero()) throw Error(ErrorKind::InexactDivision, "division by the zero polynomial");
  if (p.has_negative_exponent() || d.has_negative_exponent())
    throw Error(ErrorKind::InexactDivision, "exact division requires non-negative exponents");

  const auto& [lead_m, lead_c] = *d.terms().begin();
  SparsePoly quotient(p.nvars());
  SparsePoly rem = p;
  while (!rem.is_zero()) {
    const auto [m, c] = *rem.terms().begin();
    Monomial shift = m - lead_m;
    if (!shift.all_of([](int e) { return e >= 0; }))
      throw Error(ErrorKind::InexactDivision, "remainder is nonzero");
    Scalar factor = c / lead_c;
    quotient.add_term(shift, factor);
    for (const auto& [dm, dc] : d.terms()) rem.add_term(shift + dm, -factor * dc);
  }
  return quotient;
}

/// Exact value at a rational point; entries must be nonzero where p has negative exponents.
inline Scalar evaluate(const SparsePoly& p, std::span<const Scalar> point) {
  if (point.size() != p.nvars())
    throw Error(ErrorKind::VariableCountMismatch,
                "point of length " + std::to_string(point.size()) + " for " + std::to_string(p.nvars()) + " variables");
  // Per-variable power caches keyed by exponent.
  std::vector<std::map<int, Scalar>> powers(p.nvars());
  auto power = [&](std::size_t i, int e) -> const Scalar& {
    auto it = powers[i].find(e);
    if (it != powers[i].end()) return it->second;
    return powers[i].emplace(e, pow(point[i], e)).first->second;
  };
  Scalar sum(0);
  Scalar term;
  for (const auto& [m, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) term *= power(i, m[i]);
    sum += term;
  }
  return sum;
}

inline Scalar evaluate(const SparsePoly& p, std::initializer_list<Scalar> point) {
  return evaluate(p, std::span<const Scalar>(point.begin(), point.size()));
}

/// Substitutes x_i -> x_i^2 for every variable.
inline SparsePoly square_variables(const SparsePoly& p) {
  SparsePoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial doubled = m;
    for (auto& e : doubled.exponents) e *= 2;
    r.add_term(doubled, c);
  }
  return r;
}

/// Terms whose exponent vector is odd in every component.
inline TermMap extract_odd_terms(const SparsePoly& p) {
  TermMap out;
  for (const auto& [m, c] : p.terms())
    if (m.all_of([](int e) { return e % 2 != 0; })) out.emplace(m, c);
  return out;
}

/// Relabels variables: variable i of p becomes variable perm[i] of the result.
inline SparsePoly permute_variables(const SparsePoly& p, std::span<const std::size_t> perm) {
  if (perm.size() != p.nvars()) throw Error(ErrorKind::VariableCountMismatch, "permutation length");
  SparsePoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial moved(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) moved[perm[i]] = m[i];
    r.add_term(moved, c);
  }
  return r;
}

inline SparsePoly swap_variables(const SparsePoly& p, std::size_t i, std::size_t j) {
  std::vector<std::size_t> perm(p.nvars());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::swap(perm[i], perm[j]);
  return permute_variables(p, perm);
}

/// Invariant under every adjacent transposition, hence under all of S_n.
inline bool is_symmetric(const SparsePoly& p) {
  for (std::size_t i = 0; i + 1 < p.nvars(); ++i)
    if (swap_variables(p, i, i + 1) != p) return false;
  return true;
}

/// True when every term has total degree `degree` (vacuously true for zero).
inline bool is_homogeneous(const SparsePoly& p, int degree) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [degree](const auto& t) { return t.first.total_degree() == degree; });
}

inline bool has_only_even_exponents(const SparsePoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& t) { return t.first.all_of([](int e) { return e % 2 == 0; }); });
}

/// Elementary symmetric polynomial e_k(x_1..x_n); zero for k < 0 or k > n.
inline SparsePoly elementary_symmetric(std::size_t nvars, int k) {
  SparsePoly r(nvars);
  if (k < 0 || static_cast<std::size_t>(k) > nvars) return r;
  std::vector<bool> pick(nvars, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i) m[i] = pick[i] ? 1 : 0;
    r.add_term(m, Scalar(1));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return r;
}

/// prod_{i<j} (x_j - x_i), the antisymmetrizer used by the residue numerators.
inline SparsePoly ascending_vandermonde(std::size_t nvars) {
  SparsePoly r = SparsePoly::constant(nvars, 1);
  for (std::size_t j = 0; j < nvars; ++j)
    for (std::size_t i = 0; i < j; ++i) r = r * (SparsePoly::variable(nvars, j) - SparsePoly::variable(nvars, i));
  return r;
}

}  // namespace eqpush
