#pragma once

/* Affine Cartan data: matrices, marks, weight coordinates, the invariant form,
   and translations.  Node 0 is the affine node; nodes 1..n form the classical
   subdiagram.  Weights live in the basis (Lambda_0..Lambda_n, delta/a0), so
   lam[i] = <alpha_i^vee, .> and alpha_0 has del-coordinate exactly 1. */

#include "krlab/matrix.hpp"

#include <string>
#include <vector>

namespace krlab {

enum class AffineFamily {
  a_untwisted,    /* A_n, n >= 1 */
  b_untwisted,    /* B_n, n >= 3 */
  c_untwisted,    /* C_n, n >= 2 */
  d_untwisted,    /* D_n, n >= 4 */
  a_odd_twisted,  /* twisted of A_{2n-1}, n >= 3 */
  a_even_twisted, /* twisted of A_{2n},   n >= 1 */
  d_twisted,      /* twisted of D_{n+1},  n >= 2 */
  e6_untwisted,
  e7_untwisted,
  e8_untwisted,
  f4_untwisted,
  g2_untwisted,
};

struct AffineType {
  AffineFamily family;
  int n; /* classical rank; the diagram has nodes 0..n */

  std::string str() const;
  static AffineType parse(const std::string& s);

  friend bool operator==(const AffineType&, const AffineType&) = default;
  friend auto operator<=>(const AffineType&, const AffineType&) = default;
};

struct AffineWeight {
  std::vector<Rat> lam; /* coordinates on Lambda_0..Lambda_n */
  Rat del;              /* coordinate on delta/a0 */

  AffineWeight() : del(0) {}
  explicit AffineWeight(std::size_t nodes) : lam(nodes, Rat(0)), del(0) {}

  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
  bool operator<(const AffineWeight& o) const {
    if (lam != o.lam) return lam < o.lam;
    return del < o.del;
  }

  AffineWeight& operator+=(const AffineWeight& o);
  AffineWeight& operator-=(const AffineWeight& o);
  AffineWeight& operator*=(const Rat& c);
  friend AffineWeight operator+(AffineWeight x, const AffineWeight& y) { return x += y; }
  friend AffineWeight operator-(AffineWeight x, const AffineWeight& y) { return x -= y; }
  friend AffineWeight operator*(const Rat& c, AffineWeight x) { return x *= c; }
  AffineWeight operator-() const;

  bool same_mod_delta(const AffineWeight& o) const { return lam == o.lam; }
  AffineWeight drop_delta() const {
    AffineWeight w = *this;
    w.del = 0;
    return w;
  }
  bool is_zero() const;

  std::vector<Rat> coords() const; /* lam..., del */
  static AffineWeight from_coords(const std::vector<Rat>& v);
  std::string str() const; /* "(l0,l1,...|d)" */
};

struct ClassicalWeight {
  std::vector<Rat> om; /* om[i-1] = <alpha_i^vee, .> on omega_1..omega_n */

  ClassicalWeight() = default;
  explicit ClassicalWeight(std::size_t rank) : om(rank, Rat(0)) {}

  friend bool operator==(const ClassicalWeight&, const ClassicalWeight&) = default;
  bool operator<(const ClassicalWeight& o) const { return om < o.om; }

  ClassicalWeight& operator+=(const ClassicalWeight& o);
  ClassicalWeight& operator-=(const ClassicalWeight& o);
  ClassicalWeight& operator*=(const Rat& c);
  friend ClassicalWeight operator+(ClassicalWeight x, const ClassicalWeight& y) { return x += y; }
  friend ClassicalWeight operator-(ClassicalWeight x, const ClassicalWeight& y) { return x -= y; }
  friend ClassicalWeight operator*(const Rat& c, ClassicalWeight x) { return x *= c; }
  ClassicalWeight operator-() const;

  bool is_zero() const;
  std::string str() const;
};

/* Every supported type with classical rank <= max_rank (exceptional types
   appear once their fixed rank fits). */
std::vector<AffineType> all_types(int max_rank);

class CartanDatum {
public:
  /* Cached per type; references stay valid for the process lifetime. */
  static const CartanDatum& get(const AffineType& t);

  AffineType type{AffineFamily::a_untwisted, 1};
  int n = 0;                             /* classical rank */
  std::vector<std::vector<long long>> A; /* (n+1)x(n+1) Cartan matrix */
  std::vector<long long> marks;          /* a_i:     A * marks = 0 */
  std::vector<long long> comarks;        /* a_i^vee: comarks^T * A = 0 */
  std::vector<long long> c;              /* c_i = max(1, a_i / a_i^vee) */
  std::vector<int> special;              /* orbit of node 0 under diagram automorphisms */

  int nodes() const { return n + 1; }
  long long a0() const { return marks[0]; }
  bool is_special(int i) const;

  AffineWeight fundamental(int i) const; /* Lambda_i, 0 <= i <= n */
  AffineWeight alpha(int i) const;       /* simple root, 0 <= i <= n */
  AffineWeight delta() const;
  AffineWeight theta_over_a0() const; /* -cl(alpha_0), lifted delta-free */
  AffineWeight zero_weight() const { return AffineWeight(nodes()); }
  Rat level(const AffineWeight& w) const;

  /* classical layer */
  const Mat& classical_cartan() const { return acl_; }
  const Mat& classical_cartan_inv() const { return acl_inv_; }
  ClassicalWeight cl(const AffineWeight& w) const;
  AffineWeight section(const ClassicalWeight& m) const; /* delta-free level-0 lift */
  ClassicalWeight omega(int i) const;                   /* 1 <= i <= n */
  ClassicalWeight croot(int i) const;                   /* cl(alpha_i) in omega coords */
  ClassicalWeight reflect(int i, const ClassicalWeight& m) const; /* s_i, 1 <= i <= n */
  bool dominant(const ClassicalWeight& m) const;

  /* Invariant symmetric form, normalized so (theta|theta) = 2 a0.
     The right argument must have level 0 (delta-components are fine);
     the left argument is unrestricted. */
  Rat bil(const AffineWeight& lam, const AffineWeight& mu) const;
  Rat bil_cl(const ClassicalWeight& x, const ClassicalWeight& y) const;
  Rat norm2_alpha(int i) const; /* (alpha_i|alpha_i) = 2 a_i^vee / a_i */

  /* Expansion of a level-0 delta-free weight in classical simple roots. */
  std::vector<Rat> root_expansion(const AffineWeight& w) const; /* x[0] <-> alpha_1 */

  /* t_x(lam) for a classical x given as its delta-free level-0 lift. */
  AffineWeight translate(const AffineWeight& x, const AffineWeight& lam) const;

private:
  Mat acl_, acl_inv_;
  CartanDatum() = default;
  static CartanDatum build(const AffineType& t);
};

} /* namespace krlab */
