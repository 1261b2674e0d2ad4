#pragma once

/* Classical type A_n crystals on semistandard tableaux.  Lowering and raising
 * operators use the signature rule on the column reading word (columns left to
 * right, each column bottom to top): a letter i+1 brackets the next free
 * letter i after it, f_i flips the rightmost unbracketed i, e_i flips the
 * leftmost unbracketed i+1. */

#include <optional>
#include <string>
#include <vector>

#include "krlab/crystal.hpp"

namespace krlab {

struct Partition {
  std::vector<int> parts; /* weakly decreasing, positive entries */

  static Partition of(std::vector<int> p); /* validates, trims zeros */
  static Partition rectangle(int r, int s);

  int rows() const { return static_cast<int>(parts.size()); }
  long long cells() const;
  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
};

/* signature-rule operators; results are revalidated as tableaux */
std::optional<Tableau> tableau_f(int i, const Tableau& t);
std::optional<Tableau> tableau_e(int i, const Tableau& t);
long long tableau_eps(int i, const Tableau& t);
long long tableau_phi(int i, const Tableau& t);

/* content weight: each entry v contributes omega_v - omega_{v-1} */
ClassicalWeight content_weight(const CartanDatum& d, const Tableau& t);

/* count of each letter 1..max_entry */
std::vector<long long> content(const Tableau& t, int max_entry);

/* display notation: rows bottom to top, runs abbreviated as "v^k" */
std::string row_word(const Tableau& t);

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry);
Tableau yamanouchi(const Partition& shape); /* row k filled with letter k */

/* crystal structure with classical colors 1..n on tableaux with entries
 * bounded by n+1; elements are not restricted to a fixed shape, so one
 * instance serves every B(lambda) of the same rank */
class TableauCrystalA : public LeafCrystal {
 public:
  explicit TableauCrystalA(const CartanDatum& d);

  const CartanDatum& datum() const override { return d_; }
  std::vector<int> colors() const override;
  std::string display(const Elem& b) const override;

 protected:
  std::optional<Tableau> leaf_f(int i, const Tableau& t) const override;
  std::optional<Tableau> leaf_e(int i, const Tableau& t) const override;
  long long leaf_eps(int i, const Tableau& t) const override;
  long long leaf_phi(int i, const Tableau& t) const override;
  AffineWeight leaf_weight(const Tableau& t) const override;

 private:
  const CartanDatum& d_;
};

/* the full crystal of shape lambda over the alphabet 1..n+1 */
CrystalGraph generate_B(const Partition& lambda, const CartanDatum& d);

} /* namespace krlab */
