// Every 1-cocycle of sl2 with values in V(m) is a coboundary; print the
// primitive vector for each basis cocycle.

#include <iostream>

#include "lieforge/lieforge.hpp"

using namespace lieforge;

int main() {
  for (std::size_t m = 1; m <= 4; ++m) {
    const Representation v = vm(m);
    const Subspace z = z1(sl2(), v);
    std::cout << "V(" << m << "): dim Z1 = " << z.dim() << ", dim B1 = " << b1(sl2(), v).dim() << "\n";
    for (const auto& f : z.basis_vectors()) {
      const auto r = whitehead_solve(LinearMapToModule{unflatten(f, v.module_dim(), 3)}, v);
      std::cout << "  r = (";
      for (std::size_t i = 0; r && i < r->size(); ++i) std::cout << (i ? ", " : "") << (*r)[i];
      std::cout << ")\n";
    }
  }
}
