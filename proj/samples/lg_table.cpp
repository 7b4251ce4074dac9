// Prints ω_* s_λ over LG(3) for every λ = 2μ + (3,2,1) with |μ| <= 3,
// and confirms one value against the fixed-point sum.

#include <iostream>

#include "eqpush/io.hpp"
#include "eqpush/localization.hpp"
#include "eqpush/pushforward.hpp"

int main() {
  using namespace eqpush;
  const Space lg3 = Space::lg(3);
  for (const auto& mu : partitions_within(3, 3, 3)) {
    std::vector<int> parts = mu.padded(3);
    for (std::size_t i = 0; i < 3; ++i) parts[i] = 2 * parts[i] + lg3.staircase()[i];
    const Partition lambda(parts);
    const PushforwardResult r = pushforward_schur(lambda, lg3);
    std::cout << "lambda=" << format_partition(lambda) << "  mu=" << format_partition(mu) << "  "
              << format_poly(r.value, "t") << "\n";
  }

  const SparsePoly v = schur_bialternant({Partition{5, 2, 1}, 3});
  const GenericPoint t({Scalar(1), Scalar(-2, 3), Scalar(5)});
  std::cout << "localization at " << "(1,-2/3,5): " << format_scalar(localization_sum(v, lg3, t)) << "\n"
            << "residue value at (1,-2/3,5):   " << format_scalar(evaluate(pushforward_symmetric(v, lg3), t.coords()))
            << "\n";
}
