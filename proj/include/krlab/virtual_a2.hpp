#pragma once

/* Twisted crystals B^{r,s} of the even twisted family, realized inside the
 * ambient tensor product V^{r,s} = B^{2n-r,s} (x) B^{r,s} of untwisted type
 * A_{2n-1} via virtual operators: color i pairs the ambient colors i and
 * 2n-i, the fixed color n applies its ambient operator twice, and color 0
 * applies the ambient zero operator once. */

#include <optional>
#include <string>
#include <vector>

#include "krlab/kr_a.hpp"

namespace krlab {

class VirtualCrystalA2 : public Crystal {
 public:
  VirtualCrystalA2(int n, int r, int s);

  const CartanDatum& datum() const override; /* the twisted datum */
  std::vector<int> colors() const override;  /* 0..n */
  std::string display(const Elem& b) const override; /* "left@right" row words */

  /* string lengths under the virtual operators, cross-checked against the
   * ambient statistics divided by the operator multiplicities */
  long long eps(int i, const Elem& b) const override;
  long long phi(int i, const Elem& b) const override;
  AffineWeight weight(const Elem& b) const override;

  int n() const { return n_; }
  int r() const { return r_; }
  int s() const { return s_; }
  const Crystal& ambient() const { return amb_; }
  const CartanDatum& ambient_datum() const { return da_; }

  Elem generator() const; /* u_{s omega_{2n-r}} (x) u_{s omega_r} */
  CrystalGraph graph(std::size_t cap = default_node_cap()) const;

 protected:
  std::optional<Elem> do_f(int i, const Elem& b, bool* hit) const override;
  std::optional<Elem> do_e(int i, const Elem& b, bool* hit) const override;

 private:
  std::optional<Elem> apply(int i, const Elem& b, bool raising, bool* hit) const;

  const CartanDatum& dv_;
  const CartanDatum& da_;
  KrCrystalA left_, right_;
  ProductCrystal amb_;
  int n_, r_, s_;
};

} /* namespace krlab */
