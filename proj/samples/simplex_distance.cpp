// Distance from simplexes of every size to the 5-cycle 2-distance space,
// by the closed form and by brute force over partitions.
#include <iostream>

#include "ghdist/ghdist.hpp"

int main() {
  using ghdist::Rational;
  const Rational a(1), b(3, 2);
  const auto space = ghdist::graph_metric(ghdist::families::cycle(5), a, b);
  const auto tds = ghdist::as_two_distance(space);

  for (const Rational lambda : {Rational(1, 2), Rational(1), Rational(2)}) {
    std::cout << "lambda = " << lambda << "\n";
    for (std::size_t m = 1; m <= tds.size() + 1; ++m) {
      const auto closed = ghdist::gh_two_distance(tds, m, lambda);
      const auto oracle = ghdist::gh_oracle(space, m, lambda);
      std::cout << "  m=" << m << "  2dGH=" << closed.value << "  oracle=" << oracle << "  ["
                << ghdist::to_string(closed.gh_case.tag) << "]\n";
    }
  }

  std::cout << "curve for m=2:\n";
  for (const auto& s : ghdist::gh_curve(tds, 2).segments)
    std::cout << "  [" << s.from << ", " << (s.to ? s.to->str() : "inf") << "]  " << s.slope << "*lambda + "
              << s.intercept << "\n";
}
