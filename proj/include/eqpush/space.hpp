#pragma once

/**
 * @file space.hpp
 * @brief The three isotropic Grassmannians LG(n), OG(n,2n), OG(n,2n+1).
 */

#include <cstddef>
#include <string>
#include <string_view>

#include "eqpush/error.hpp"
#include "eqpush/partition.hpp"
#include "eqpush/scalar.hpp"
#include "eqpush/sparse_poly.hpp"

namespace eqpush {

enum class SpaceKind { LG, OGeven, OGodd };

/// Largest rank handled; alternants grow like n!.
inline constexpr std::size_t kMaxRank = 8;

class Space {
 public:
  Space(SpaceKind kind, std::size_t n) : kind_(kind), n_(n) {
    if (n == 0) throw Error(ErrorKind::InvalidSpace, "space rank n must be at least 1");
    if (n > kMaxRank) throw Error(ErrorKind::ExplicitSizeLimit, "rank n = " + std::to_string(n) + " exceeds 8");
  }

  static Space lg(std::size_t n) { return {SpaceKind::LG, n}; }
  static Space og_even(std::size_t n) { return {SpaceKind::OGeven, n}; }
  static Space og_odd(std::size_t n) { return {SpaceKind::OGodd, n}; }

  SpaceKind kind() const { return kind_; }
  std::size_t n() const { return n_; }

  /// Complex dimension: n(n+1)/2 for LG and OG(n,2n+1), n(n-1)/2 for OG(n,2n).
  int dimension() const {
    const int n = static_cast<int>(n_);
    return kind_ == SpaceKind::OGeven ? n * (n - 1) / 2 : n * (n + 1) / 2;
  }

  /// ρ(n), or ρ(n-1) for OG(n,2n).
  Partition staircase() const { return rho(kind_ == SpaceKind::OGeven ? static_cast<int>(n_) - 1 : static_cast<int>(n_)); }

  /// Extra numerator factor of the residue formula: 1, 2^{n-1} z_1...z_n, or 2^n.
  SparsePoly prefactor() const {
    switch (kind_) {
      case SpaceKind::LG: return SparsePoly::constant(n_, 1);
      case SpaceKind::OGeven: {
        Monomial ones(n_);
        for (auto& e : ones.exponents) e = 1;
        return SparsePoly::term(ones, power_of_two(n_ - 1));
      }
      case SpaceKind::OGodd: return SparsePoly::constant(n_, power_of_two(n_));
    }
    return SparsePoly(n_);
  }

  /// Constant c in  ω_* s_{2μ + staircase} = c · s_μ(t^2).
  Scalar closed_form_constant() const {
    switch (kind_) {
      case SpaceKind::LG: return 1;
      case SpaceKind::OGeven: return power_of_two(n_ - 1);
      case SpaceKind::OGodd: return power_of_two(n_);
    }
    return 0;
  }

  /// "LG(2)", "OG(2,4)", "OG(2,5)".
  std::string name() const {
    const std::string n = std::to_string(n_);
    switch (kind_) {
      case SpaceKind::LG: return "LG(" + n + ")";
      case SpaceKind::OGeven: return "OG(" + n + "," + std::to_string(2 * n_) + ")";
      case SpaceKind::OGodd: return "OG(" + n + "," + std::to_string(2 * n_ + 1) + ")";
    }
    return {};
  }

  friend bool operator==(const Space&, const Space&) = default;

 private:
  static Scalar power_of_two(std::size_t e) {
    Scalar r(1);
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), e);
    return r;
  }

  SpaceKind kind_;
  std::size_t n_;
};

/// CLI spelling: "lg", "og-even", "og-odd".
constexpr std::string_view space_tag(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::LG: return "lg";
    case SpaceKind::OGeven: return "og-even";
    case SpaceKind::OGodd: return "og-odd";
  }
  return "";
}

inline SpaceKind parse_space_kind(std::string_view tag) {
  if (tag == "lg") return SpaceKind::LG;
  if (tag == "og-even") return SpaceKind::OGeven;
  if (tag == "og-odd") return SpaceKind::OGodd;
  throw Error(ErrorKind::ParseError, "unknown space '" + std::string(tag) + "' (expected lg, og-even or og-odd)");
}

}  // namespace eqpush
