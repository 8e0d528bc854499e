// The conic, the nodal cubic and a few of the exact checks on them.

#include <iostream>

#include "pnh/curves/persson.hpp"

int main() {
  using namespace pnh;
  const HomogPoly Q = conic_Q(), C = cubic_C();
  std::cout << "Q = " << Q.str() << "\nC = " << C.str() << "\n";

  const ProjPoint node(QuadScalar(0), QuadScalar(9), QuadScalar(-16));
  std::cout << "C singular at " << node.str() << ": " << is_singular_at(C, node) << "\n";

  Poly res = resultant(C.poly().specialize(1, 1), Q.poly().specialize(1, 1), 2);
  std::cout << "Res_z(C, Q) on y = 1: " << res.str() << "\n";

  const ProjPoint t(QuadScalar::sqrt_of(10, -24), QuadScalar(-75), QuadScalar(80));
  const HomogPoly lplus = line(QuadScalar(25), -QuadScalar::sqrt_of(10, 8), QuadScalar(0));
  std::cout << "L+ = " << lplus.str() << " tangent to C at " << t.str() << ": " << is_tangent_at(C, lplus, t) << "\n";

  for (const auto& c : verify_persson_configuration().checks)
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.item << ". " << c.name << "\n";
}
