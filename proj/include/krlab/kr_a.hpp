#pragma once

/* Kirillov-Reshetikhin crystals of untwisted type A on rectangular tableaux.
 * The zero arrows come from conjugating f_1/e_1 by promotion. */

#include <optional>
#include <string>
#include <vector>

#include "krlab/tableaux_a.hpp"
#include "krlab/weyl.hpp"

namespace krlab {

/* Schuetzenberger promotion on tableaux with entries 1..n+1: delete the
 * letters n+1, slide the holes to the upper left, add one to every entry, fill
 * the parked holes with 1.  The inverse deletes the letters 1, slides the
 * holes to the lower right, subtracts one, and fills with n+1. */
Tableau promotion(const Tableau& t, int n);
Tableau promotion_inverse(const Tableau& t, int n);

/* B^{r,s}: crystal with affine colors 0..n on rectangular tableaux with r
 * rows, s columns, entries bounded by n+1 */
class KrCrystalA : public LeafCrystal {
 public:
  KrCrystalA(const CartanDatum& d, int r, int s);

  const CartanDatum& datum() const override { return d_; }
  std::vector<int> colors() const override;
  std::string display(const Elem& b) const override;

  int r() const { return r_; }
  int s() const { return s_; }
  Elem generator() const; /* classically highest: row k filled with k */
  std::vector<Tableau> all_elements() const;
  CrystalGraph graph(std::size_t cap = default_node_cap()) const;

 protected:
  std::optional<Tableau> leaf_f(int i, const Tableau& t) const override;
  std::optional<Tableau> leaf_e(int i, const Tableau& t) const override;
  long long leaf_eps(int i, const Tableau& t) const override;
  long long leaf_phi(int i, const Tableau& t) const override;
  AffineWeight leaf_weight(const Tableau& t) const override;

 private:
  void check_element(const Tableau& t) const;

  const CartanDatum& d_;
  int r_, s_;
};

/* the unique element with eps = s Lambda_0 and phi = s Lambda_{tau(0)}, where
 * tau is the rotation part of the translation by -c_r omega_{r*}; raises a
 * falsified error when no or several candidates exist */
Elem find_u(const CrystalGraph& g, const CartanDatum& d, int r, int s);

/* checks that every classical weight of the graph lies in the convex hull of
 * the orbit of mu under the classical reflection group and that each weight on
 * the orbit itself carries exactly one element; returns violation messages */
std::vector<std::string> convex_hull_check(const CrystalGraph& g, const ClassicalWeight& mu,
                                           const CartanDatum& d);

} /* namespace krlab */
