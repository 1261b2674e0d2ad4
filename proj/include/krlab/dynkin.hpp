#pragma once

/* Diagram automorphisms of the affine Cartan matrix, their level-zero action
   on classical weights, and the restriction to the classical subdiagram. */

#include "krlab/weyl.hpp"

namespace krlab {

struct DynkinAut {
  std::vector<int> perm; /* images of nodes 0..n; preserves the Cartan matrix */

  friend bool operator==(const DynkinAut&, const DynkinAut&) = default;
  int order() const;
};

/* every permutation preserving the Cartan matrix, sorted, identity first */
std::vector<DynkinAut> diagram_automorphisms(const CartanDatum& d);

/* orbit of node 0 under the full automorphism group, sorted */
std::vector<int> special_orbit(const CartanDatum& d);

/* linear map with omega_r -> omega_{perm(r)} - a_r^vee omega_{perm(0)}
   (omega_0 is read as the zero weight) */
ClassicalWeight level_zero_action(const CartanDatum& d, const DynkinAut& s,
                                  const ClassicalWeight& mu);

/* sigma'(r) = j where the dominant representative of the level-zero image of
   omega_r is exactly omega_j; entries indexed by r-1 */
std::vector<int> classical_restriction(const AffineType& t, const DynkinAut& s);

struct SigmaInfo {
  AffineType type{AffineFamily::a_untwisted, 1};
  std::vector<int> special;                  /* computed orbit of node 0 */
  std::size_t aut_order = 0;                 /* |Aut(X)| */
  std::size_t sigma_order = 0;               /* number of alcove rotations */
  std::string sigma_shape;                   /* "1", "Z/k", or "Z/2 x Z/2" */
  std::vector<std::vector<int>> sigma_perms; /* identity first, then by node */
};

SigmaInfo sigma_info(const AffineType& t);

} /* namespace krlab */
