// Clique covering and chromatic numbers of a few named graphs, directly and
// through the simplex distance.
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "ghdist/ghdist.hpp"

int main() {
  namespace fam = ghdist::families;
  const std::vector<std::pair<std::string, ghdist::SimpleGraph>> graphs{
      {"C5", fam::cycle(5)}, {"C7", fam::cycle(7)}, {"K3,3", fam::complete_bipartite(3, 3)}, {"Petersen", fam::petersen()}};
  const ghdist::Rational a(1), b(2);
  for (const auto& [name, g] : graphs) {
    std::cout << name << ": theta=" << ghdist::clique_cover_number(g).size()
              << " (via distance " << ghdist::clique_cover_via_gh(g, a, b) << ")"
              << "  gamma=" << ghdist::chromatic_number(g).colors << " (via distance "
              << ghdist::chromatic_via_gh(g, a, b) << ")\n";
  }
  const auto e2 = ghdist::graph_metric(fam::cycle(5), a, ghdist::Rational(3, 2));
  for (std::size_t m = 2; m <= 3; ++m) {
    const auto r = ghdist::borsuk_feasible(e2, m);
    std::cout << "C5 space into " << m << " parts of smaller diameter: " << (r.feasible ? "yes" : "no") << "\n";
  }
}
