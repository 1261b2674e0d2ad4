#pragma once

/* Demazure subcrystals and Demazure character operators: closures of a
   generator under full lowering strings taken along a word, the translation
   factorization that names the relevant word, and exact character-level
   comparisons between the two. */

#include <map>
#include <string>
#include <vector>

#include "krlab/crystal.hpp"
#include "krlab/weyl.hpp"

namespace krlab {

/* exact Laurent polynomial over the affine weight lattice */
struct CharacterPolynomial {
  std::map<AffineWeight, Int> coeff; /* no zero entries stored */

  static CharacterPolynomial monomial(const AffineWeight& w);
  void add(const AffineWeight& w, const Int& c);
  Int total() const; /* sum of all coefficients */
  /* drop the Lambda_0 and delta components of every weight */
  std::map<ClassicalWeight, Int> classical(const CartanDatum& d) const;
  std::string json() const; /* sorted [coords..., coefficient] rows */

  friend bool operator==(const CharacterPolynomial&, const CharacterPolynomial&) = default;
};

/* D_i: e^w with m = <alpha_i^, w> maps to the alternating string sum
   e^w + ... + e^{s_i w} (m >= 0), zero (m = -1), or the negated interior
   sum (m <= -2); extended linearly.  D_i is idempotent. */
CharacterPolynomial demazure_operator(const CartanDatum& d, int i,
                                      const CharacterPolynomial& p);
/* D_{word[0]} ... D_{word[k-1]} e^lam; the rightmost letter acts first */
CharacterPolynomial demazure_character(const CartanDatum& d, const Word& word,
                                       const AffineWeight& lam);

/* closure of a generator under all f_{i_k}^{m_k}, letters taken rightmost
   first; per element one witnessing exponent tuple aligned with the word */
struct DemazureSet {
  const Crystal* ambient = nullptr;
  Elem generator;
  Word word;
  std::map<Elem, std::vector<long long>> reached;
  /* true when some lowering was blocked by a formal placeholder factor */
  bool formal_hit = false;

  std::size_t size() const { return reached.size(); }
  bool contains(const Elem& b) const { return reached.count(b) > 0; }
};
DemazureSet f_w_closure(const Crystal& c, const Elem& b, const Word& word,
                        std::size_t cap = default_node_cap());

/* factorization t_{-lambda*} = z tau for dominant lambda in the extended
   translation lattice; the associated Demazure crystal is the zword-closure
   of the highest weight element of B(s Lambda_{tau(0)}) */
struct DemazureFactorization {
  Word zword;      /* reduced word of z */
  int tau_node;    /* special node naming tau */
  Word coset_word; /* reduced word of the minimal W_cl-coset representative of z */
};
DemazureFactorization demazure_factorization(const AffineType& t,
                                             const ClassicalWeight& lambda);

/* Structural verification of one rectangular crystal against its Demazure
   counterpart (empty report = pass): builds B' as the coset-word closure of
   u (x) u_{s Lambda_0}, checks that no lowering ever touches the placeholder
   factor, that the cardinality and K-weight data of B' match the Demazure
   character of the coset word at s Lambda_{tau(0)} for K = {0..r-1}, and
   that the classical closure of B' (and the full zword closure) fill the
   whole crystal tensor the placeholder. */
std::vector<std::string> verify_demazure(const Crystal& kr, const CrystalGraph& g,
                                         int r, int s);

/* Character-level comparison (empty report = equal): classical projection of
   the Demazure character of the zword at s Lambda_{tau(0)} against the weight
   generating function of the graph. */
std::vector<std::string> compare_characters(const CrystalGraph& g,
                                            const CartanDatum& d, int r, int s);

} /* namespace krlab */
