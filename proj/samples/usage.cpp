// Lattice points, maxima and signatures of a small tetrahedron.

#include <iostream>

#include "ipt/ipt.hpp"

int main() {
  using namespace ipt;
  RationalPolytope tet = convex_hull(std::vector<RatVector>{
      {0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  IntPointSet points = lattice_points(tet);
  std::cout << "lattice points: " << points.size() << '\n';

  MaximaAnalysis m = maxima_analysis(points);
  std::cout << "index of the span: " << *m.lattice.index() << '\n';
  for (const auto& rep : m.reps) {
    std::cout << "maximum at (";
    for (std::size_t j = 0; j < rep.size(); ++j) std::cout << (j ? ", " : "") << to_string(rep[j]);
    PrecComplex v = sigma_eval(points, rep, 128);
    std::cout << "), |sigma| = " << abs(v).to_string(20) << '\n';
  }

  PrecComplex sig = signature(points, 128);
  std::cout << "signature: (" << sig.re().to_string(30) << ", " << sig.im().to_string(30) << ")\n";

  RationalPolytope square = convex_hull(std::vector<RatVector>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  RatVector xi{make_rational(1, 3), make_rational(1, 5)};
  PrecComplex ft = brion_ft(square, xi, 128);
  std::cout << "Fourier transform of the unit square at (1/3, 1/5): (" << ft.re().to_string(30) << ", "
            << ft.im().to_string(30) << ")\n";

  return points.size() == 4 && m.reps.size() == 2 ? 0 : 1;
}
