#pragma once

/* Generic crystal machinery: element trees, the tensor-product rule, graph
   generation, structural checks, and serialization.  Concrete families plug
   in by subclassing Crystal (or LeafCrystal for crystals of bare tableaux). */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "krlab/cartan.hpp"
#include "krlab/dynkin.hpp"

namespace krlab {

/* semistandard tableau: rows weakly increase left to right, columns strictly
   increase top to bottom, row lengths weakly decrease */
struct Tableau {
  std::vector<std::vector<int>> rows;

  bool operator==(const Tableau& o) const { return rows == o.rows; }
  bool operator!=(const Tableau& o) const { return rows != o.rows; }
  bool operator<(const Tableau& o) const { return rows < o.rows; }

  std::vector<int> shape() const;
  /* columns left to right, each read bottom to top */
  std::vector<int> column_word() const;
  void validate(int max_entry) const;

  std::string str() const;                    /* "1,1/2,3", "()" if empty */
  static Tableau parse(const std::string&);   /* inverse of str */
};

/* crystal element: a tableau leaf, a tensor of elements, or a formal
   placeholder u_lambda (resp. its dual) that carries only eps/phi data */
struct Elem {
  enum class Kind { tab, tensor, formal, formal_dual };
  Kind kind = Kind::tab;
  Tableau leaf;               /* kind == tab */
  std::vector<Elem> factors;  /* kind == tensor, nonempty */
  AffineWeight hw;            /* kind == formal / formal_dual */

  static Elem tableau(Tableau t);
  static Elem tensor(std::vector<Elem> fs);
  static Elem formal(AffineWeight lambda);
  static Elem formal_dual(AffineWeight lambda);

  bool operator==(const Elem& o) const;
  bool operator!=(const Elem& o) const { return !(*this == o); }
  bool operator<(const Elem& o) const;
  std::string str() const;
};

/* a crystal is a set of elements with partial raising/lowering maps e_i, f_i
   and exact string statistics eps_i, phi_i; operators return nullopt where
   undefined.  A lowering into a formal placeholder (or raising into a formal
   dual) cannot be performed; it returns nullopt and reports the event through
   the formal_hit flag so callers can distinguish it from an honest boundary. */
class Crystal {
 public:
  virtual ~Crystal() = default;
  virtual const CartanDatum& datum() const = 0;
  virtual std::vector<int> colors() const = 0;
  virtual std::string display(const Elem& b) const { return b.str(); }

  std::optional<Elem> f(int i, const Elem& b, bool* formal_hit = nullptr) const;
  std::optional<Elem> e(int i, const Elem& b, bool* formal_hit = nullptr) const;
  virtual long long eps(int i, const Elem& b) const = 0;
  virtual long long phi(int i, const Elem& b) const = 0;
  virtual AffineWeight weight(const Elem& b) const = 0;

  AffineWeight eps_vec(const Elem& b) const;  /* sum of eps_i Lambda_i */
  AffineWeight phi_vec(const Elem& b) const;
  /* string reflection S_i: move to the mirror point of the i-string */
  Elem reflect(int i, const Elem& b) const;

 protected:
  virtual std::optional<Elem> do_f(int i, const Elem& b, bool* hit) const = 0;
  virtual std::optional<Elem> do_e(int i, const Elem& b, bool* hit) const = 0;
};

/* crystal whose elements are bare tableaux */
class LeafCrystal : public Crystal {
 public:
  long long eps(int i, const Elem& b) const override;
  long long phi(int i, const Elem& b) const override;
  AffineWeight weight(const Elem& b) const override;

 protected:
  std::optional<Elem> do_f(int i, const Elem& b, bool* hit) const override;
  std::optional<Elem> do_e(int i, const Elem& b, bool* hit) const override;

  virtual std::optional<Tableau> leaf_f(int i, const Tableau& t) const = 0;
  virtual std::optional<Tableau> leaf_e(int i, const Tableau& t) const = 0;
  virtual long long leaf_eps(int i, const Tableau& t) const = 0;
  virtual long long leaf_phi(int i, const Tableau& t) const = 0;
  virtual AffineWeight leaf_weight(const Tableau& t) const = 0;
};

/* crystal of formal placeholders u_lambda: eps_i = 0, phi_i = <alpha_i^, lambda>,
   weight lambda; the dual carries the mirrored data */
class FormalCrystal : public Crystal {
 public:
  explicit FormalCrystal(const CartanDatum& d) : d_(d) {}
  const CartanDatum& datum() const override { return d_; }
  std::vector<int> colors() const override;
  long long eps(int i, const Elem& b) const override;
  long long phi(int i, const Elem& b) const override;
  AffineWeight weight(const Elem& b) const override;

 protected:
  std::optional<Elem> do_f(int i, const Elem& b, bool* hit) const override;
  std::optional<Elem> do_e(int i, const Elem& b, bool* hit) const override;

 private:
  const CartanDatum& d_;
};

/* tensor product of component crystals; elements are Kind::tensor with one
   factor per component.  Convention: f_i acts on the left factor b of b(x)b'
   exactly when eps_i(b) >= phi_i(b'), e_i exactly when eps_i(b) > phi_i(b');
   folding the two-factor statistics
     eps(b(x)b') = eps(b') + max(0, eps(b) - phi(b'))
     phi(b(x)b') = phi(b)  + max(0, phi(b') - eps(b))
   left-associatively extends both rules to any number of factors. */
class ProductCrystal : public Crystal {
 public:
  ProductCrystal(const CartanDatum& d, std::vector<const Crystal*> parts);
  const CartanDatum& datum() const override { return d_; }
  std::vector<int> colors() const override { return parts_[0]->colors(); }
  std::string display(const Elem& b) const override;
  long long eps(int i, const Elem& b) const override;
  long long phi(int i, const Elem& b) const override;
  AffineWeight weight(const Elem& b) const override;

 protected:
  std::optional<Elem> do_f(int i, const Elem& b, bool* hit) const override;
  std::optional<Elem> do_e(int i, const Elem& b, bool* hit) const override;

 private:
  const std::vector<Elem>& parts_of(const Elem& b) const;
  /* eps/phi of the prefix ending at each factor, folded left to right */
  void prefix_stats(int i, const std::vector<Elem>& fs,
                    std::vector<long long>& eps_pre,
                    std::vector<long long>& phi_pre) const;
  const CartanDatum& d_;
  std::vector<const Crystal*> parts_;
};

/* finite colored graph of a crystal: nodes sorted by display label,
   functional f/e maps per color, cached statistics */
struct CrystalGraph {
  std::vector<int> colors;
  std::vector<Elem> nodes;
  std::vector<std::string> labels;
  std::vector<AffineWeight> weights;
  std::vector<std::vector<int>> fmap, emap;      /* [node][color idx], -1 absent */
  std::vector<std::vector<long long>> eps, phi;  /* [node][color idx] */
  std::map<Elem, int> index;

  int color_index(int c) const;
  int index_of(const Elem& b) const;  /* -1 if absent */
  std::size_t size() const { return nodes.size(); }
};

/* node budget for graph generation: KRLAB_NODE_CAP env var, default 10^6 */
std::size_t default_node_cap();

/* closure of the seeds under e_i/f_i for the given colors */
CrystalGraph generate(const Crystal& c, const std::vector<Elem>& seeds,
                      const std::vector<int>& colors,
                      std::size_t cap = default_node_cap());

/* structural axiom violations (empty = clean): e/f partial inverses,
   <alpha_i^, wt> = phi - eps, eps/phi equal to walked string lengths,
   definedness of f_i iff phi_i > 0, wt(f_i b) = wt(b) - alpha_i */
std::vector<std::string> check_axioms(const Crystal& c, const CrystalGraph& g);

/* connected components under the colors in K (node index lists) */
std::vector<std::vector<int>> components(const CrystalGraph& g,
                                         const std::vector<int>& K);
/* nodes with eps_i = 0 for all i in K */
std::vector<int> highest_nodes(const CrystalGraph& g, const std::vector<int>& K);

/* for every 2-subset of colors spanning a finite rank-2 subsystem: each
   component must have a unique highest node and match the independent rank-2
   reference crystal of the corresponding highest weight */
std::vector<std::string> regularity_check(const CrystalGraph& g,
                                          const CartanDatum& d);

/* contragredient graph: arrows reversed, weights negated */
CrystalGraph dual_graph(const CrystalGraph& g);
/* recolor arrows i -> sigma(i) and map weights accordingly */
CrystalGraph twist_graph(const CrystalGraph& g, const DynkinAut& sigma,
                         const CartanDatum& d);

std::string graph_json(const CrystalGraph& g);
std::string graph_dot(const CrystalGraph& g);

}  // namespace krlab
