// Reads a code file, lifts it to a certificate and reports the reduced matrix rank.
//   lift_code FILE [alpha] [k]

#include <fstream>
#include <iostream>
#include <sstream>

#include "seppack/seppack.hpp"

int main(int argc, char **argv) {
  using namespace seppack;
  if (argc < 2) {
    std::cerr << "usage: lift_code FILE [alpha=1/3] [k=0]\n";
    return 2;
  }
  std::ifstream f(argv[1]);
  std::stringstream ss;
  ss << f.rdbuf();
  const Rational alpha = parse_rational(argc > 2 ? argv[2] : "1/3");
  const std::size_t k = argc > 3 ? std::stoul(argv[3]) : 0;

  try {
    const auto code = parse_code_file(ss.str(), alpha, NormPolicy::normalize_all);
    std::cout << code.size() << " vectors in R^" << code.dimension() << ", coherence " << coherence(code) << "\n";
    const auto cert = lift_from_code(code, k);
    const auto report = verify_certificate(cert);
    std::cout << "certificate n=" << cert.size() << " d=" << cert.dimension() << ": " << report.verdict() << "\n";
    const auto red = reduce_certificate(cert, max_admissible_epsilon(cert));
    if (red.matrix.rows() > 0)
      std::cout << "reduced " << red.matrix.rows() << "x" << red.matrix.rows()
                << ", trace bound " << rank_lower_bound_trace(red.matrix).str() << " <= d-k+1 = "
                << cert.dimension() - red.removed_pairs + 1 << "\n";
    return report.accepted() ? 0 : 1;
  } catch (const Error &e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
