// Prints the first coefficients of a rank-3 hyperbolic growth series next to
// P_B3(t) / Q_s(t) for the catalog class it belongs to.

#include <iostream>

#include "kmweyl/kmweyl.hpp"

int main() {
  using namespace kmweyl;
  const CartanMatrix m("H3-a", {{2, 0, -1}, {0, 2, -2}, {-1, -2, 2}});
  const auto growth = enumerate_levels(m, 15);
  const auto matches = match_catalog(m, 15);
  std::cout << m.name() << " matches s =";
  for (int s : matches) std::cout << ' ' << s;
  std::cout << "\n";
  if (matches.empty()) return 1;
  const auto expected = series_div(poincare_b3(), q_polynomial(matches.front()).q_expanded, 15);
  for (int n = 0; n <= 15; ++n) std::cout << n << '\t' << growth.q[n] << '\t' << expected[n] << '\n';
  return 0;
}
