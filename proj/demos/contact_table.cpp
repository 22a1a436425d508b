// Prints generated contact counts next to the closed formulas for the reference bodies.
//   contact_table [N]

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "seppack/planar.hpp"

int main(int argc, char **argv) {
  using namespace seppack::planar;
  const std::size_t N = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 20;
  const SymmetricPolygon bodies[] = {square_body(), hexagon_body(), octagon_body()};

  std::cout << std::setw(5) << "n";
  for (const auto &K : bodies)
    std::cout << std::setw(16) << class_name(classify(K));
  std::cout << "\n";
  for (std::size_t n = 1; n <= N; ++n) {
    std::cout << std::setw(5) << n;
    for (const auto &K : bodies) {
      const auto g = contact_graph(generate_packing(K, n));
      const auto f = csep_formula(classify(K), n);
      std::cout << std::setw(10) << g.edges.size() << (g.edges.size() == f ? "  ok  " : "  !!  ");
    }
    std::cout << "\n";
  }
}
