// Minimal tour of the library: exact oracle, the (2,1) solver, a forcer and
// the girth-9 extension experiment.

#include <iostream>

#include "blfd/gadgets.hpp"
#include "blfd/generators.hpp"
#include "blfd/girth9.hpp"
#include "blfd/oracle.hpp"
#include "blfd/poly21.hpp"

using namespace blfd;

int main() {
  // A 9-cycle with a chord, decomposed into a 3-bounded and a 2-bounded linear forest.
  MultiGraph g = gen::cycle(9);
  g.add_edge(0, 4);
  BoundSpec b = BoundSpec::make(3, 2);
  OracleResult r = solve_exact(g, b);
  std::cout << "(3,2) on C9 plus a chord: " << to_string(r.outcome) << "\n";
  if (r.outcome == Outcome::yes) std::cout << serialize_labeling(r.labeling);

  // Polynomial (2,1) solver against the oracle.
  Solve21Result fast = solve21(g);
  std::cout << "(2,1) by the polynomial solver: " << (fast.yes ? "yes" : "no") << ", by the oracle: "
            << to_string(solve_exact(g, BoundSpec::make(2, 1)).outcome) << "\n";

  // A symmetric forcer has exactly two decompositions.
  std::cout << check_forcer_property(ForcerKind::symmetric, 3).to_string();

  // The dodecahedron with every edge subdivided once has only 10-faces.
  Embedded d = subdivide_all(gen::plane_dodecahedron(), 1);
  ExperimentReport rep = experiment_girth9({{"dodecahedron-t1", d}});
  std::cout << rep.to_string();
  return 0;
}
