// Survey of A_BD-structures: dimensions across the fixture catalog, then the
// F/G/Delta reading of the non-perfect example.

#include <iostream>

#include "lieforge/lieforge.hpp"

using namespace lieforge;

int main() {
  for (const char* name : {"sl2", "aff1", "abelian:2", "sl2-vm:2", "sl2-vm:4", "sl2-sum:1,2", "oscillator",
                           "nonperfect-delta"}) {
    const Fixture f = fixture(name);
    const SpaceReport sr = abd_space(f.algebra);
    std::cout << name << ": dim " << f.algebra.dim() << ", perfect " << (is_perfect(f.algebra) ? "yes" : "no")
              << ", symmetric biderivations " << sr.dimension << "\n";
  }

  const DeltaFixture d = nonperfect_delta();
  const FGDelta parts = decompose(d.split, d.product);
  std::cout << "\nnonperfect-delta: F zero " << parts.F.is_zero() << ", G zero " << parts.G.is_zero() << "\n";
  for (std::size_t r = 0; r < parts.delta.size(); ++r) {
    if (!parts.delta[r].is_zero()) std::cout << "Delta(" << d.split.total.labels()[d.split.s_dim() + r] << ") nonzero\n";
  }
  std::cout << "conditions hold: " << check_conditions(d.split, parts).ok() << "\n";
  std::cout << "recomposes exactly: " << (compose(d.split, parts) == d.product) << "\n";
}
