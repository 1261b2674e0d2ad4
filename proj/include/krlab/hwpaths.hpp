#pragma once

/* Explicit lowering-operator monomials that reach every classical highest
   weight element of a rectangular crystal from its distinguished element,
   tabulated per family, plus mechanical verification on the implemented
   crystal models. */

#include <string>
#include <utility>
#include <vector>

#include "krlab/crystal.hpp"
#include "krlab/tableaux_a.hpp"

namespace krlab {

/* sequence of lowering operators, printed left to right in blocks and
   applied in printed order, leftmost factor first */
struct OperatorMonomial {
  std::vector<std::vector<std::pair<int, long long>>> blocks; /* (node, exponent) */

  /* factors flattened in printed order */
  std::vector<std::pair<int, long long>> flat() const;
  std::string str() const;  /* "(f0 f2)(f0^2 f1^2)", "1" when empty */
  std::string json() const; /* [[node, exponent], ...] in printed order */
};

/* shapes reachable from the r x s rectangle by removing vertical dominoes:
   every column height keeps the parity of r */
bool domino_admissible(const Partition& lambda, int r, int s);

/* monomial for the orthogonal-side families (two-row blocks per even part) */
OperatorMonomial path_bd_family(int r, int s, const Partition& lambda);
/* monomial for the symplectic-side families (one block per part, scaled) */
OperatorMonomial path_c_family(int r, int s, const Partition& lambda, long long cr);

/* Replays the tabulated monomials on an implemented crystal: every
   application must be defined, land on a classically highest element of the
   classical weight named by the shape, and the endpoints must exhaust the
   classical components.  Empty report = verified. */
std::vector<std::string> verify_paths(const Crystal& kr, const CrystalGraph& g,
                                      int r, int s);

} /* namespace krlab */
