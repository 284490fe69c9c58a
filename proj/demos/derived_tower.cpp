// Derived binary-ternary tower of sLY(1,2)_l at l = 2: the twist diagonal
// squares at each level and every level stays Hom-Lie-Yamaguti.

#include <iostream>

#include "hly/hly.hpp"

int main() {
  using namespace hly;
  const Algebra a = evaluate_at(instantiate_algebra("sly12_lambda"), Rational(2));
  const auto names = a.basis().names();
  for (unsigned n = 0; n <= 4; ++n) {
    const Algebra d = derived_bt(a, n);
    std::cout << d.name() << ":";
    for (std::size_t i = 0; i < d.dim(); ++i) std::cout << " " << names[i] << "->" << render_vector(d.alpha().column(i), names);
    std::cout << (check_hly(d).passed() ? "  [hly]" : "  [FAIL]") << "\n";
  }
}
