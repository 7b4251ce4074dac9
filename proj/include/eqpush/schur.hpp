#pragma once

/**
 * @file schur.hpp
 * @brief Schur polynomials by three independent constructions.
 *
 *  - bialternant: det(z_c^{λ_r + d - r}) / det(z_c^{d - r}), with the standard
 *    Vandermonde prod_{i<j}(z_i - z_j) as denominator, so that coefficients
 *    are the (non-negative) Kostka numbers;
 *  - tableaux: sum of x^T over semistandard tableaux;
 *  - dual Jacobi-Trudi: det(e_{λ'_i - i + j}).
 *
 * Also provides the substitution e_i -> (-1)^i c_{2i}(C^{2n}) that turns
 * s_μ into s_μ(t_1^2, ..., t_n^2).
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "eqpush/error.hpp"
#include "eqpush/partition.hpp"
#include "eqpush/sparse_poly.hpp"

namespace eqpush {

/// Largest variable count accepted by the permutation-sum constructions.
inline constexpr std::size_t kMaxAlternantVars = 8;

struct SchurSpec {
  Partition lambda;
  std::size_t nvars;
};

namespace detail {

inline void check_schur_spec(const SchurSpec& spec) {
  if (spec.nvars == 0) throw Error(ErrorKind::InvalidPartition, "Schur polynomial needs at least one variable");
  if (spec.lambda.length() > spec.nvars)
    throw Error(ErrorKind::InvalidPartition, "partition has more parts than variables");
}

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

/**
 * Determinant of a square matrix of polynomials by Laplace expansion along
 * rows, memoized on the set of columns already used (2^k subproblems).
 */
inline SparsePoly determinant(const std::vector<std::vector<SparsePoly>>& m, std::size_t nvars) {
  const std::size_t k = m.size();
  if (k == 0) return SparsePoly::constant(nvars, 1);
  std::unordered_map<std::uint32_t, SparsePoly> memo;
  std::function<SparsePoly(std::uint32_t)> minor = [&](std::uint32_t used) -> SparsePoly {
    const auto row = static_cast<std::size_t>(std::popcount(used));
    if (row == k) return SparsePoly::constant(nvars, 1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    SparsePoly acc(nvars);
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
      if (used & (1u << c)) continue;
      if (!m[row][c].is_zero()) {
        SparsePoly term = m[row][c] * minor(used | (1u << c));
        if (sign > 0) acc += term;
        else acc -= term;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(0);
}

}  // namespace detail

/// det(z_c^{exponents[r]}) expanded over all permutations.
inline SparsePoly alternant(const std::vector<int>& exponents) {
  const std::size_t d = exponents.size();
  if (d > kMaxAlternantVars)
    throw Error(ErrorKind::ExplicitSizeLimit, "alternant in " + std::to_string(d) + " variables exceeds limit");
  SparsePoly out(d);
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    Monomial m(d);
    for (std::size_t r = 0; r < d; ++r) m[perm[r]] = exponents[r];
    out.add_term(m, Scalar(detail::permutation_sign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// prod_{i<j} (z_i - z_j) = det(z_c^{d-r}).
inline SparsePoly standard_vandermonde(std::size_t d) {
  SparsePoly r = SparsePoly::constant(d, 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) r = r * (SparsePoly::variable(d, i) - SparsePoly::variable(d, j));
  return r;
}

inline SparsePoly schur_bialternant(const SchurSpec& spec) {
  detail::check_schur_spec(spec);
  const std::size_t d = spec.nvars;
  if (d > kMaxAlternantVars)
    throw Error(ErrorKind::ExplicitSizeLimit, "Schur polynomial in " + std::to_string(d) + " variables exceeds limit");
  std::vector<int> shifted(d);
  for (std::size_t r = 0; r < d; ++r) shifted[r] = spec.lambda[r] + static_cast<int>(d - 1 - r);
  return exact_div(alternant(shifted), standard_vandermonde(d));
}

inline SparsePoly schur_tableaux(const SchurSpec& spec) {
  detail::check_schur_spec(spec);
  SparsePoly out(spec.nvars);
  for (const auto& t : enumerate_ssyt(spec.lambda, static_cast<int>(spec.nvars)))
    out.add_term(Monomial(t.content(spec.nvars)), Scalar(1));
  return out;
}

/**
 * det(E(λ'_i - i + j)) for 1 <= i, j <= λ_1, where E(k) supplies the
 * polynomial standing in for e_k. E must return zero for k < 0.
 */
inline SparsePoly schur_from_elementary(const Partition& lambda, std::size_t nvars,
                                        const std::function<SparsePoly(int)>& elementary) {
  const Partition dual = conjugate(lambda);
  const std::size_t k = dual.length();
  if (k > 31) throw Error(ErrorKind::ExplicitSizeLimit, "dual Jacobi-Trudi matrix too large");
  std::vector<std::vector<SparsePoly>> m(k, std::vector<SparsePoly>(k, SparsePoly(nvars)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      m[i][j] = elementary(dual[i] - static_cast<int>(i) + static_cast<int>(j));
  return detail::determinant(m, nvars);
}

inline SparsePoly schur_dual_jacobi_trudi(const SchurSpec& spec) {
  detail::check_schur_spec(spec);
  std::vector<SparsePoly> e;
  for (std::size_t k = 0; k <= spec.nvars; ++k) e.push_back(elementary_symmetric(spec.nvars, static_cast<int>(k)));
  return schur_from_elementary(spec.lambda, spec.nvars, [&](int k) {
    if (k < 0 || static_cast<std::size_t>(k) > spec.nvars) return SparsePoly(spec.nvars);
    return e[static_cast<std::size_t>(k)];
  });
}

/// s_μ(t_1^2, ..., t_n^2).
inline SparsePoly schur_squared_args(const Partition& mu, std::size_t n) {
  return square_variables(schur_bialternant({mu, n}));
}

/**
 * Even Chern classes c_0, c_2, ..., c_{2n} of C^{2n} with torus weights ±t_i,
 * read off from the total class prod_i (1 + t_i)(1 - t_i) by degree.
 */
inline std::vector<SparsePoly> even_chern_classes(std::size_t n) {
  SparsePoly total = SparsePoly::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    SparsePoly t = SparsePoly::variable(n, i);
    SparsePoly one = SparsePoly::constant(n, 1);
    total = total * (one + t) * (one - t);
  }
  std::vector<SparsePoly> classes(n + 1, SparsePoly(n));
  for (const auto& [m, c] : total.terms()) {
    const int deg = m.total_degree();
    if (deg % 2 != 0) throw Error(ErrorKind::InternalInconsistency, "odd Chern class of C^2n is nonzero");
    classes[static_cast<std::size_t>(deg / 2)].add_term(m, c);
  }
  return classes;
}

/// s_μ with each e_i replaced by (-1)^i c_{2i}(C^{2n}); equals s_μ(t^2).
inline SparsePoly schur_via_chern_substitution(const Partition& mu, std::size_t n) {
  if (mu.length() > n) throw Error(ErrorKind::InvalidPartition, "partition has more parts than variables");
  const auto c = even_chern_classes(n);
  return schur_from_elementary(mu, n, [&](int i) {
    if (i < 0 || static_cast<std::size_t>(i) > n) return SparsePoly(n);
    return i % 2 == 0 ? c[static_cast<std::size_t>(i)] : -c[static_cast<std::size_t>(i)];
  });
}

}  // namespace eqpush
