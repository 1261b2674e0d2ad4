#pragma once

/* Independent rank-2 highest-weight reference crystals, built from the
   piecewise-linear path model with exact rational arithmetic.  Kept separate
   from the tableau modules so regularity checks compare two unrelated
   constructions. */

#include <array>
#include <cstddef>
#include <vector>

namespace krlab {

/* colored graph over two colors 0 (first simple root) and 1 (second);
   aij = <alpha_1^, alpha_2>, aji = <alpha_2^, alpha_1> in the 2x2 Cartan
   matrix [[2, aij], [aji, 2]] */
struct Rank2Graph {
  long long aij = 0, aji = 0;
  int root = 0;  /* highest-weight node */
  std::vector<std::array<int, 2>> fmap, emap;      /* -1 absent */
  std::vector<std::array<long long, 2>> eps, phi;
  std::size_t size() const { return fmap.size(); }
};

/* crystal of highest weight a*omega_1 + b*omega_2; requires aij*aji <= 3 */
Rank2Graph rank2_reference(long long aij, long long aji, long long a,
                           long long b, std::size_t cap = 1u << 20);

/* dimension of the irreducible of that highest weight (Weyl formula) */
long long rank2_dimension(long long aij, long long aji, long long a,
                          long long b);

}  // namespace krlab
