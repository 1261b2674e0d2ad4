#pragma once

/* The extended affine Weyl group as exact matrices on the coordinates
   (Lambda_0..Lambda_n, delta/a0): simple reflections, translations, the
   alcove-preserving rotations tau_i, reduced words by alcove descent, and
   the translation-lattice bookkeeping the crystal modules rely on. */

#include "krlab/cartan.hpp"

#include <vector>

namespace krlab {

/* A word is the product s_{w[0]} s_{w[1]} ... s_{w[k-1]}; the rightmost
   letter acts first on weights. */
using Word = std::vector<int>;

class WeylGroup {
public:
  /* Cached per type; references stay valid for the process lifetime. */
  static const WeylGroup& get(const AffineType& t);

  const CartanDatum& datum() const { return d_; }

  const Mat& identity() const { return id_; }
  const Mat& simple(int i) const; /* s_i, 0 <= i <= n */
  Mat word_matrix(const Word& w) const;
  AffineWeight act(const Mat& g, const AffineWeight& w) const;
  ClassicalWeight act_cl(const Mat& g, const ClassicalWeight& m) const;
  Mat classical_matrix(const Mat& g) const; /* induced n x n action on omega coords */

  /* t_x for a classical x handed over as its delta-free level-0 lift */
  Mat translation(const AffineWeight& x) const;
  /* reflection by a nonzero level-0 delta-free real root (any nonzero scaling) */
  Mat reflection_by(const AffineWeight& root) const;

  /* alcove-preserving rotation attached to a special node (node 0 = identity) */
  struct Tau {
    int node = 0;
    std::vector<int> perm; /* tau(alpha_j) = alpha_{perm[j]} */
    Mat mat, inv;
  };
  const std::vector<Tau>& sigma() const { return sigma_; } /* identity first */
  const Tau& tau(int special_node) const;
  const Tau& sigma_product(const Tau& a, const Tau& b) const;
  const Tau& sigma_inverse(const Tau& a) const;

  /* reduced word of an element of the unextended group (integrity error if the
     element carries a nontrivial rotation part) */
  Word reduced_word(const Mat& g) const;
  long long length(const Mat& g) const { return static_cast<long long>(reduced_word(g).size()); }

  /* minimal-length representative of the coset W_cl * g */
  Mat min_coset_rep_left(const Mat& g) const;

  /* factor g = z * tau with z in the unextended group */
  struct SigmaFactor {
    Mat z;
    int tau_node = 0;
  };
  SigmaFactor factor_sigma(const Mat& g) const;

  /* membership in the translation lattice M spanned by the c_i alpha_i
     together with theta/a0 */
  bool in_translation_lattice(const ClassicalWeight& mu) const;

  /* Greedy reflection walks; both mutate their argument and return the applied
     indices in application order (the group element is the reversed word). */
  Word to_dominant(ClassicalWeight& m) const;
  Word to_antidominant(ClassicalWeight& m) const;
  ClassicalWeight star(const ClassicalWeight& m) const; /* -w0(m) */

  const std::vector<ClassicalWeight>& positive_roots() const { return positive_roots_; }
  /* wall-crossing count of t_x for x in the extended lattice: sum over
     positive roots of |<x, root^vee>| divided by the least k with
     k*root a lattice translation */
  long long translation_length(const ClassicalWeight& x) const;

  /* the whole classical Weyl group as omega-coordinate matrices */
  std::vector<Mat> classical_elements(std::size_t cap) const;

  /* closed-form reduced word for the minimal W_cl-coset representative of
     t_{-c_r omega_r}; only the families with such a tabulated form */
  Word closed_form_coset_word(int r) const;

  /* dimension of the irreducible classical module of the given dominant
     highest weight, by the product formula over the positive roots */
  Int classical_dimension(const ClassicalWeight& lambda) const;

private:
  explicit WeylGroup(const CartanDatum& d);

  AffineWeight test_point() const; /* interior of the fundamental alcove, regular */
  Tau build_tau(int i) const;
  const Tau& tau_by_key(const std::string& key) const;

  const CartanDatum& d_;
  Mat id_;
  std::vector<Mat> smat_;
  std::vector<Tau> sigma_;
  std::vector<ClassicalWeight> positive_roots_;
  std::vector<Rat> theta_expansion_;
  long long lattice_period_ = 1;
};

} /* namespace krlab */
