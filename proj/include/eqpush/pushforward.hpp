#pragma once

/**
 * @file pushforward.hpp
 * @brief Equivariant push-forward to a point via iterated residues at infinity.
 *
 * For a symmetric class V(z_1..z_n) put W = V · prod_{i<j}(z_j - z_i) and
 * multiply by the space prefactor. Taking Res_{z=∞} of
 * W / prod_i (t_i - z_i)(t_i + z_i) one variable at a time amounts to picking
 * one Laurent coefficient: substituting z -> 1/z and expanding
 * 1/(1 - t^2 z^2) as a geometric series, the coefficient of z^{-1} receives a
 * contribution only from terms a_k z^k with every k_j odd, and each such term
 * contributes a_k · prod_j t_j^{k_j - 1}. The push-forward is that sum divided
 * by prod_{i<j}(t_j^2 - t_i^2), a division that is always exact for
 * admissible W.
 */

#include <cstddef>
#include <optional>

#include "eqpush/error.hpp"
#include "eqpush/partition.hpp"
#include "eqpush/scalar.hpp"
#include "eqpush/schur.hpp"
#include "eqpush/space.hpp"
#include "eqpush/sparse_poly.hpp"

namespace eqpush {

struct Decomposition {
  Partition mu;
  Scalar constant;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Push-forward of a class, as a polynomial in t_1..t_n.
struct PushforwardResult {
  SparsePoly value;
  /// Present when value == constant · s_μ(t^2).
  std::optional<Decomposition> decomposition;
};

/// prod_{i<j} (t_j^2 - t_i^2).
inline SparsePoly squared_vandermonde(std::size_t n) { return square_variables(ascending_vandermonde(n)); }

/// Degree of ω_* V for V homogeneous of the given degree; negative means the result is zero.
inline int pushforward_degree(int class_degree, const Space& space) { return class_degree - space.dimension(); }

/**
 * Push-forward of the class whose antisymmetrized numerator is W, i.e.
 * W = V · prod_{i<j}(z_j - z_i) for a symmetric V.
 *
 * Throws InexactDivision if W is not of that form.
 */
inline SparsePoly pushforward_numerator(const SparsePoly& numerator, const Space& space) {
  const std::size_t n = space.n();
  if (numerator.nvars() != n)
    throw Error(ErrorKind::VariableCountMismatch,
                "numerator has " + std::to_string(numerator.nvars()) + " variables, space has n = " + std::to_string(n));
  if (numerator.has_negative_exponent())
    throw Error(ErrorKind::InexactDivision, "residue numerator must be a polynomial");

  const SparsePoly full = numerator * space.prefactor();
  SparsePoly residue(n);
  for (const auto& [k, a] : extract_odd_terms(full)) {
    Monomial shifted = k;
    for (auto& e : shifted.exponents) e -= 1;
    residue.add_term(shifted, a);
  }
  return exact_div(residue, squared_vandermonde(n));
}

/// Push-forward of a symmetric polynomial class V(z_1..z_n).
inline SparsePoly pushforward_symmetric(const SparsePoly& v, const Space& space) {
  if (v.nvars() != space.n())
    throw Error(ErrorKind::VariableCountMismatch, "class has " + std::to_string(v.nvars()) + " variables");
  if (!is_symmetric(v)) throw Error(ErrorKind::NotSymmetric, "class is not symmetric in z_1..z_n");
  return pushforward_numerator(v * ascending_vandermonde(space.n()), space);
}

/// Closed form: zero unless λ = 2μ + staircase, then constant · s_μ(t^2). No residues involved.
inline PushforwardResult closed_form(const Partition& lambda, const Space& space) {
  const std::size_t n = space.n();
  auto mu = decompose(lambda, n, space.staircase());
  if (!mu) return {SparsePoly(n), std::nullopt};
  Scalar c = space.closed_form_constant();
  return {c * schur_squared_args(*mu, n), Decomposition{*mu, c}};
}

/**
 * ω_* s_λ computed through the residue formula, then checked against the
 * closed form. A disagreement raises InternalInconsistency.
 */
inline PushforwardResult pushforward_schur(const Partition& lambda, const Space& space) {
  const std::size_t n = space.n();
  if (lambda.length() > n) throw Error(ErrorKind::InvalidPartition, "partition has more than n parts");
  SparsePoly value = pushforward_symmetric(schur_bialternant({lambda, n}), space);
  PushforwardResult expected = closed_form(lambda, space);
  if (value != expected.value)
    throw Error(ErrorKind::InternalInconsistency, "residue value for " + format_partition(lambda) + " on " + space.name() +
                                                      " disagrees with the closed form");
  return {std::move(value), std::move(expected.decomposition)};
}

/**
 * Residue push-forward of a numerator whose terms are all even or all odd.
 *
 * Parity is judged after the space prefactor is applied: an all-even
 * numerator pushes forward to zero without any division, an all-odd one goes
 * through the general extraction. Mixed parity raises MixedParity.
 */
inline SparsePoly pushforward_parity_special(const SparsePoly& numerator, const Space& space) {
  if (numerator.nvars() != space.n()) throw Error(ErrorKind::VariableCountMismatch, "numerator variable count");
  bool any_even = false;
  bool any_odd = false;
  const SparsePoly scaled = numerator * space.prefactor();
  for (const auto& [k, a] : scaled.terms()) {
    if (k.all_of([](int e) { return e % 2 == 0; })) any_even = true;
    else if (k.all_of([](int e) { return e % 2 != 0; })) any_odd = true;
    else throw Error(ErrorKind::MixedParity, "term with exponents of both parities");
  }
  if (any_even && any_odd) throw Error(ErrorKind::MixedParity, "numerator mixes all-even and all-odd terms");
  if (!any_odd) return SparsePoly(space.n());
  return pushforward_numerator(numerator, space);
}

}  // namespace eqpush
