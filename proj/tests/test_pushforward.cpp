#include <gtest/gtest.h>

#include "eqpush/io.hpp"
#include "eqpush/localization.hpp"
#include "eqpush/pushforward.hpp"
#include "test_support.hpp"

namespace eqpush {
namespace {

SparsePoly z(std::size_t i, std::size_t n = 2) { return SparsePoly::variable(n, i - 1); }

template <class F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an eqpush::Error";
  return ErrorKind::InternalInconsistency;
}

// Every expected value below is also checked against the fixed-point sum.
void expect_matches_localization(const SparsePoly& v, const Space& space, const SparsePoly& value) {
  for (const auto& t : default_points(space.n(), 5, 99))
    EXPECT_EQ(localization_component_mean(v, space, t), evaluate(value, t.coords())) << space.name();
}

TEST(Space, DerivedAttributes) {
  EXPECT_EQ(Space::lg(3).dimension(), 6);
  EXPECT_EQ(Space::og_odd(3).dimension(), 6);
  EXPECT_EQ(Space::og_even(3).dimension(), 3);
  EXPECT_EQ(Space::og_even(1).dimension(), 0);
  EXPECT_EQ(Space::lg(3).staircase(), rho(3));
  EXPECT_EQ(Space::og_even(3).staircase(), rho(2));
  EXPECT_EQ(Space::og_odd(3).staircase(), rho(3));
  EXPECT_EQ(Space::lg(3).closed_form_constant(), 1);
  EXPECT_EQ(Space::og_even(3).closed_form_constant(), 4);
  EXPECT_EQ(Space::og_odd(3).closed_form_constant(), 8);
  EXPECT_EQ(format_poly(Space::og_even(2).prefactor(), "z"), "2*z1*z2");
  EXPECT_EQ(format_poly(Space::og_odd(2).prefactor(), "z"), "4");
  EXPECT_EQ(Space::og_even(2).name(), "OG(2,4)");
  EXPECT_EQ(Space::og_odd(2).name(), "OG(2,5)");
  EXPECT_EQ(error_kind([] { (void)Space::lg(9); }), ErrorKind::ExplicitSizeLimit);
  EXPECT_EQ(error_kind([] { (void)Space::lg(0); }), ErrorKind::InvalidSpace);
}

TEST(PushforwardNumerator, Examples) {
  const SparsePoly w = z(1) * z(2) * z(2) * z(2) - z(1) * z(1) * z(1) * z(2);
  ASSERT_EQ(w, schur_bialternant({{2, 1}, 2}) * (z(2) - z(1)));
  EXPECT_EQ(pushforward_numerator(w, Space::lg(2)), SparsePoly::constant(2, 1));

  const SparsePoly w1 = z(2) * z(2) - z(1) * z(1);
  EXPECT_TRUE(pushforward_numerator(w1, Space::lg(2)).is_zero());

  const SparsePoly cube = SparsePoly::term(Monomial{3}, 1);
  EXPECT_EQ(pushforward_numerator(cube, Space::lg(1)), SparsePoly::term(Monomial{2}, 1));
  // Hand fixed-point sum on LG(1): t^3/(2t) + (-t)^3/(-2t) = t^2.
  expect_matches_localization(cube, Space::lg(1), SparsePoly::term(Monomial{2}, 1));

  EXPECT_EQ(pushforward_numerator(w1, Space::og_even(2)), SparsePoly::constant(2, 2));
  expect_matches_localization(z(1) + z(2), Space::og_even(2), SparsePoly::constant(2, 2));
}

TEST(PushforwardNumerator, Errors) {
  // z1 z2^3 alone is not V·(z2 - z1) for a symmetric V.
  EXPECT_EQ(error_kind([] { (void)pushforward_numerator(SparsePoly::term(Monomial{1, 3}, 1), Space::lg(2)); }),
            ErrorKind::InexactDivision);
  EXPECT_EQ(error_kind([] { (void)pushforward_numerator(SparsePoly::term(Monomial{1}, 1), Space::lg(2)); }),
            ErrorKind::VariableCountMismatch);
  EXPECT_EQ(error_kind([] { (void)pushforward_numerator(SparsePoly::term(Monomial{-1, 1}, 1), Space::lg(2)); }),
            ErrorKind::InexactDivision);
}

TEST(PushforwardSymmetric, Examples) {
  const SparsePoly s21 = schur_bialternant({{2, 1}, 2});
  EXPECT_EQ(pushforward_symmetric(s21, Space::lg(2)), SparsePoly::constant(2, 1));
  expect_matches_localization(s21, Space::lg(2), SparsePoly::constant(2, 1));

  for (std::size_t n = 1; n <= 4; ++n)
    EXPECT_TRUE(pushforward_symmetric(SparsePoly::constant(n, 1), Space::lg(n)).is_zero());

  const SparsePoly s41 = schur_bialternant({{4, 1}, 2});
  const SparsePoly expected = z(1) * z(1) + z(2) * z(2);
  EXPECT_EQ(pushforward_symmetric(s41, Space::lg(2)), expected);
  expect_matches_localization(s41, Space::lg(2), expected);
}

TEST(PushforwardSymmetric, RejectsNonSymmetric) {
  EXPECT_EQ(error_kind([] { (void)pushforward_symmetric(z(1) * z(1) * z(1), Space::lg(2)); }), ErrorKind::NotSymmetric);
}

TEST(PushforwardSymmetric, DegenerateOgEvenRankOne) {
  const Space point = Space::og_even(1);
  EXPECT_EQ(pushforward_symmetric(SparsePoly::constant(1, 7), point), SparsePoly::constant(1, 7));
  EXPECT_EQ(pushforward_symmetric(SparsePoly::constant(1, Scalar(-2, 5)), point), SparsePoly::constant(1, Scalar(-2, 5)));
}

TEST(PushforwardSchur, Examples) {
  const PushforwardResult a = pushforward_schur({2, 1}, Space::lg(2));
  EXPECT_EQ(format_poly(a.value, "t"), "1");
  ASSERT_TRUE(a.decomposition);
  EXPECT_EQ(a.decomposition->mu, Partition());
  EXPECT_EQ(a.decomposition->constant, 1);

  const PushforwardResult b = pushforward_schur({3, 1}, Space::lg(2));
  EXPECT_TRUE(b.value.is_zero());
  EXPECT_FALSE(b.decomposition);

  const PushforwardResult c = pushforward_schur({3}, Space::og_odd(1));
  EXPECT_EQ(format_poly(c.value, "t"), "2*t1^2");
  ASSERT_TRUE(c.decomposition);
  EXPECT_EQ(c.decomposition->mu, Partition({1}));
  EXPECT_EQ(c.decomposition->constant, 2);
  // Hand fixed-point sum on OG(1,3): t^3/t + (-t)^3/(-t) = 2t^2.
  expect_matches_localization(schur_bialternant({{3}, 1}), Space::og_odd(1), c.value);

  EXPECT_EQ(error_kind([] { (void)pushforward_schur({1, 1, 1}, Space::lg(2)); }), ErrorKind::InvalidPartition);
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(format_poly(closed_form({4, 1}, Space::lg(2)).value, "t"), "t1^2 + t2^2");
  EXPECT_TRUE(closed_form({2, 2}, Space::lg(2)).value.is_zero());
  EXPECT_FALSE(closed_form({2, 2}, Space::lg(2)).decomposition);
  EXPECT_EQ(closed_form({1}, Space::og_odd(1)).value, SparsePoly::constant(1, 2));
  expect_matches_localization(SparsePoly::variable(1, 0), Space::og_odd(1), SparsePoly::constant(1, 2));
}

TEST(ParitySpecial, Examples) {
  EXPECT_TRUE(pushforward_parity_special(SparsePoly::term(Monomial{2, 2}, 1), Space::lg(2)).is_zero());
  const SparsePoly odd = z(1) * z(2) * z(2) * z(2) - z(1) * z(1) * z(1) * z(2);
  EXPECT_EQ(pushforward_parity_special(odd, Space::lg(2)), SparsePoly::constant(2, 1));
  const SparsePoly mixed = z(1) * z(2) + z(1) * z(1) * z(2);
  EXPECT_EQ(error_kind([&] { (void)pushforward_parity_special(mixed, Space::lg(2)); }), ErrorKind::MixedParity);
  EXPECT_EQ(error_kind([&] { (void)pushforward_parity_special(z(1) * z(1) * z(2), Space::lg(2)); }),
            ErrorKind::MixedParity);
}

TEST(ParitySpecial, RandomEvenAndOddNumerators) {
  test::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.between(1, 3));
    SparsePoly v(n);
    for (int k = 0; k < 3; ++k) {
      std::vector<int> alpha(n);
      for (auto& a : alpha) a = static_cast<int>(rng.between(0, 3));
      v += rng.small_rational() * test::monomial_symmetric(alpha, n);
    }
    // V(z^2)·prod(z_j^2 - z_i^2) is antisymmetric with all-even exponents; times z_1...z_n it is all-odd.
    const SparsePoly even = square_variables(v) * squared_vandermonde(n);
    Monomial ones(n);
    for (auto& e : ones.exponents) e = 1;
    const SparsePoly odd = SparsePoly::term(ones, 1) * even;
    EXPECT_TRUE(pushforward_parity_special(even, Space::lg(n)).is_zero());
    EXPECT_EQ(pushforward_parity_special(odd, Space::lg(n)), pushforward_numerator(odd, Space::lg(n)));
  }
}

TEST(PushforwardProperties, Linearity) {
  test::Rng rng(32);
  for (auto kind : {SpaceKind::LG, SpaceKind::OGeven, SpaceKind::OGodd}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const Space space(kind, n);
      const auto parts = partitions_within(n, 6, 9);
      for (int trial = 0; trial < 10; ++trial) {
        const auto& l1 = parts[static_cast<std::size_t>(rng.between(0, static_cast<long>(parts.size()) - 1))];
        const auto& l2 = parts[static_cast<std::size_t>(rng.between(0, static_cast<long>(parts.size()) - 1))];
        const SparsePoly v1 = schur_bialternant({l1, n});
        const SparsePoly v2 = schur_bialternant({l2, n});
        const Scalar a = rng.small_rational();
        const Scalar b = rng.small_rational();
        EXPECT_EQ(pushforward_symmetric(a * v1 + b * v2, space),
                  a * pushforward_symmetric(v1, space) + b * pushforward_symmetric(v2, space));
      }
    }
  }
}

TEST(PushforwardProperties, DegreeEvennessSymmetry) {
  for (auto kind : {SpaceKind::LG, SpaceKind::OGeven, SpaceKind::OGodd}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const Space space(kind, n);
      for (const auto& lambda : partitions_within(n, 8, 10)) {
        const SparsePoly value = pushforward_symmetric(schur_bialternant({lambda, n}), space);
        const int degree = pushforward_degree(lambda.weight(), space);
        if (degree < 0) EXPECT_TRUE(value.is_zero());
        else EXPECT_TRUE(is_homogeneous(value, degree));
        EXPECT_TRUE(has_only_even_exponents(value));
        EXPECT_TRUE(is_symmetric(value));
      }
    }
  }
}

TEST(PushforwardProperties, OracleEquivalenceForRandomSymmetricClasses) {
  test::Rng rng(33);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      SparsePoly v(n);
      for (int k = 0; k < 3; ++k) {
        std::vector<int> alpha(n);
        int budget = 10;
        for (auto& a : alpha) {
          a = static_cast<int>(rng.between(0, std::min(budget, 5)));
          budget -= a;
        }
        v += rng.small_rational() * test::monomial_symmetric(alpha, n);
      }
      const SparsePoly value = pushforward_symmetric(v, Space::lg(n));
      for (const auto& t : default_points(n, 20, static_cast<std::uint64_t>(trial)))
        EXPECT_EQ(evaluate(value, t.coords()), localization_sum(v, Space::lg(n), t));
    }
  }
}

TEST(PushforwardSchur, ClosedFormConstantPerSpace) {
  // λ = 2μ + staircase for μ = (1): constant·(t_1^2 + ... + t_n^2).
  for (std::size_t n = 2; n <= 4; ++n) {
    for (auto kind : {SpaceKind::LG, SpaceKind::OGeven, SpaceKind::OGodd}) {
      const Space space(kind, n);
      std::vector<int> parts = space.staircase().padded(n);
      parts[0] += 2;
      const PushforwardResult r = pushforward_schur(Partition(parts), space);
      ASSERT_TRUE(r.decomposition);
      EXPECT_EQ(r.value, space.closed_form_constant() * schur_squared_args({1}, n));
    }
  }
}

}  // namespace
}  // namespace eqpush
