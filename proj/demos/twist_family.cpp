// Scans alpha1(a,b,c) over a small grid, keeps the endomorphisms of sLY(3,1)
// and confirms that each Yau twist is again Hom-Lie-Yamaguti.

#include <iostream>
#include <string>

#include "hly/hly.hpp"

int main() {
  using namespace hly;
  const Algebra base = instantiate_algebra("sly31");
  int kept = 0, rejected = 0;
  for (int a = -2; a <= 2; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; c <= 3; c += 3) {
        const Params p{{"a", std::to_string(a)}, {"b", std::to_string(b)}, {"c", std::to_string(c)}};
        const LinearMap f = instantiate_map("alpha1", p);
        const Report endo = is_endomorphism(f, base);
        std::cout << "alpha1(" << a << "," << b << "," << c << ") ";
        if (!endo.passed()) {
          ++rejected;
          std::cout << "not an endomorphism, first witness " << render_tuple(endo.violations.front().tuple, base.basis().names())
                    << "\n";
          continue;
        }
        ++kept;
        for (int n = 1; n <= 2; ++n) {
          const Report r = check_hly(yau_twist(base, f, n));
          std::cout << " n=" << n << (r.passed() ? " hly" : " FAIL");
        }
        std::cout << "\n";
      }
  std::cout << kept << " endomorphisms, " << rejected << " rejected\n";
}
