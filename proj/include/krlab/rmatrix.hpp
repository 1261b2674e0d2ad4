#pragma once

/* Connectedness of twofold tensor products of rectangular crystals and the
   combinatorial R-matrix.  The raising word to the distinguished pair is
   found on a product augmented by formal highest weight factors (the
   augmentation blocks the zero-arrows at the right place, so greedy raising
   terminates); the R-matrix itself follows the replay recipe and is
   cross-checked against an independent graph-propagation oracle. */

#include <map>
#include <string>
#include <vector>

#include "krlab/cartan.hpp"
#include "krlab/crystal.hpp"

namespace krlab {

/* the unique element with eps = s Lambda_{tau^{-1}(0)} and phi = s Lambda_0,
   the mirror profile of find_u; falsified error when not unique */
Elem find_u_dual(const CrystalGraph& g, const CartanDatum& d, int r, int s);

/* one rectangular tensor factor with its distinguished elements */
struct RFactor {
  const Crystal* crystal = nullptr;
  const CrystalGraph* graph = nullptr;
  int r = 0, s = 0;
  int tau0 = 0, tau0_inv = 0; /* rotation part of the defining translation */
  Elem top;                   /* the classically highest element of weight c_r s omega_r */
  Elem u;                     /* eps = s Lambda_0, phi = s Lambda_{tau(0)} */
  Elem u_dual;                /* eps = s Lambda_{tau^{-1}(0)}, phi = s Lambda_0 */

  static RFactor of(const Crystal& c, const CrystalGraph& g, int r, int s);
};

/* ordered twofold tensor product, generated from its anchor */
class TensorPair {
 public:
  TensorPair(RFactor one, RFactor two, std::size_t cap = default_node_cap());

  const CartanDatum& datum() const { return prod_.datum(); }
  const RFactor& one() const { return one_; }
  const RFactor& two() const { return two_; }
  const ProductCrystal& product() const { return prod_; }
  const CrystalGraph& graph() const { return graph_; }

  Elem anchor() const; /* top_1 (x) top_2 */
  Elem target() const; /* u_1 (x) u_2 */
  bool connected() const;

 private:
  RFactor one_, two_;
  ProductCrystal prod_;
  CrystalGraph graph_;
};

/* staged operator word reaching the distinguished pair on the augmented
   product; raising words when s1 >= s2, lowering words on the dual-augmented
   product otherwise.  Letters are stored in application order. */
struct USequence {
  bool lowering = false;
  Word stage_one; /* on the product with one formal factor */
  Word stage_two; /* continued after the second augmentation */

  Word word() const; /* both stages concatenated */
};

USequence to_u_sequence(const TensorPair& p, const Elem& b,
                        std::size_t cap = default_node_cap());

/* replays a sequence letter by letter on the augmented products and returns
   the final augmented element; integrity error when a letter fails */
Elem replay_u_sequence(const TensorPair& p, const Elem& b, const USequence& seq);

/* the R-matrix by replay: words to the distinguished pair for the input and
   for the anchor, then the reversed input word after the anchor word on the
   swapped anchor.  bwd must be the pair with the factors exchanged. */
Elem combinatorial_R(const TensorPair& fwd, const TensorPair& bwd, const Elem& b,
                     std::size_t cap = default_node_cap());

/* total bijection between the two product graphs */
struct RMap {
  std::map<Elem, Elem> image;

  const Elem& apply(const Elem& b) const;
  std::string json() const; /* [[from, to], ...] */
};

/* independent oracle: propagate the anchor pairing along matching edge
   colors; integrity error when the graphs fail to match edge for edge */
RMap oracle_R(const TensorPair& fwd, const TensorPair& bwd);

} /* namespace krlab */
