#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <deque>
#include <utility>
#include <vector>

#include "doctest.h"
#include "krlab/rmatrix.hpp"
#include "krlab/virtual_a2.hpp"

using namespace krlab;

namespace {

const CartanDatum& adat(int n) { return CartanDatum::get({AffineFamily::a_untwisted, n}); }

Elem tab(const std::string& s) { return Elem::tableau(Tableau::parse(s)); }

/* both products must be connected, the replay recipe must agree with the
   graph-propagation oracle everywhere, and the exchanged map must invert it */
void check_pair(const TensorPair& fwd, const TensorPair& bwd) {
  REQUIRE(fwd.connected());
  REQUIRE(bwd.connected());
  RMap fwd_map = oracle_R(fwd, bwd);
  RMap bwd_map = oracle_R(bwd, fwd);
  for (const Elem& b : fwd.graph().nodes) {
    Elem r = combinatorial_R(fwd, bwd, b);
    CHECK(r == fwd_map.apply(b));
    CHECK(bwd_map.apply(r) == b);
  }
}

/* factor storage with stable addresses for a list of untwisted rectangles */
struct Rectangles {
  std::deque<KrCrystalA> crystals;
  std::deque<CrystalGraph> graphs;
  std::vector<RFactor> factors;

  Rectangles(const CartanDatum& d, const std::vector<std::pair<int, int>>& shapes) {
    for (auto [r, s] : shapes) {
      crystals.emplace_back(d, r, s);
      graphs.push_back(crystals.back().graph());
      factors.push_back(RFactor::of(crystals.back(), graphs.back(), r, s));
    }
  }
};

} /* namespace */

TEST_CASE("distinguished elements of the small rectangles") {
  const CartanDatum& d = adat(2);
  Rectangles rect(d, {{1, 1}, {2, 1}, {1, 2}});

  const RFactor& b11 = rect.factors[0];
  CHECK(b11.top == tab("1"));
  CHECK(b11.u == tab("1"));
  CHECK(b11.u_dual == tab("3"));
  CHECK(b11.tau0 == 1);
  CHECK(b11.tau0_inv == 2);

  const RFactor& b21 = rect.factors[1];
  CHECK(b21.top == tab("1/2"));
  CHECK(b21.u == tab("1/2"));
  CHECK(b21.u_dual == tab("2/3"));
  CHECK(b21.tau0 == 2);
  CHECK(b21.tau0_inv == 1);

  const RFactor& b12 = rect.factors[2];
  CHECK(b12.top == tab("1,1"));
  CHECK(b12.u == tab("1,1"));
  CHECK(b12.u_dual == tab("3,3"));
  CHECK(b12.tau0 == 1);
  CHECK(b12.tau0_inv == 2);

  /* the dual profile is the mirror of the direct one */
  for (const RFactor& f : rect.factors) {
    AffineWeight want_eps = Rat(f.s) * d.fundamental(f.tau0_inv);
    AffineWeight want_phi = Rat(f.s) * d.fundamental(0);
    CHECK(f.crystal->eps_vec(f.u_dual) == want_eps);
    CHECK(f.crystal->phi_vec(f.u_dual) == want_phi);
  }
}

TEST_CASE("greedy words reach the distinguished pair") {
  const CartanDatum& d = adat(2);
  Rectangles rect(d, {{1, 1}});
  TensorPair p(rect.factors[0], rect.factors[0]);

  REQUIRE(p.graph().size() == 9);
  REQUIRE(p.connected());
  CHECK(p.anchor() == Elem::tensor({tab("1"), tab("1")}));
  CHECK(p.target() == Elem::tensor({tab("1"), tab("3")}));

  /* the distinguished pair needs no word at all */
  USequence at_target = to_u_sequence(p, p.target());
  CHECK(!at_target.lowering);
  CHECK(at_target.stage_one.empty());
  CHECK(at_target.stage_two.empty());

  /* from the anchor the staged greedy word is forced */
  USequence seq = to_u_sequence(p, p.anchor());
  CHECK(!seq.lowering);
  CHECK(seq.stage_one == Word{0, 0});
  CHECK(seq.stage_two == Word{2, 1});
  Elem end = replay_u_sequence(p, p.anchor(), seq);
  REQUIRE(end.factors.size() == 4);
  CHECK(end.factors[0] == tab("1"));
  CHECK(end.factors[1] == tab("3"));

  /* the same letters transfer verbatim to the bare product */
  Elem x = p.anchor();
  for (int i : seq.word()) {
    std::optional<Elem> y = p.product().e(i, x);
    REQUIRE(y.has_value());
    x = *y;
  }
  CHECK(x == p.target());

  /* a replayed word from a generic element also lands on the target */
  Elem generic = Elem::tensor({tab("2"), tab("1")});
  USequence gen = to_u_sequence(p, generic);
  Elem y = generic;
  for (int i : gen.word()) {
    std::optional<Elem> z = p.product().e(i, y);
    REQUIRE(z.has_value());
    y = *z;
  }
  CHECK(y == p.target());
}

TEST_CASE("the taller right factor switches to the lowering branch") {
  const CartanDatum& d = adat(2);
  Rectangles rect(d, {{1, 1}, {1, 2}});
  TensorPair fwd(rect.factors[0], rect.factors[1]);
  TensorPair bwd(rect.factors[1], rect.factors[0]);
  REQUIRE(fwd.connected());

  USequence seq = to_u_sequence(fwd, fwd.anchor());
  CHECK(seq.lowering);
  CHECK(!seq.word().empty());

  /* the augmented endpoint carries the distinguished pair in its tail */
  Elem end = replay_u_sequence(fwd, fwd.anchor(), seq);
  REQUIRE(end.factors.size() == 4);
  CHECK(end.factors[2] == fwd.one().u);
  CHECK(end.factors[3] == fwd.two().u_dual);

  /* and the letters transfer verbatim to the bare product */
  Elem x = fwd.anchor();
  for (int i : seq.word()) {
    std::optional<Elem> y = fwd.product().f(i, x);
    REQUIRE(y.has_value());
    x = *y;
  }
  CHECK(x == fwd.target());

  CHECK(combinatorial_R(fwd, bwd, fwd.anchor()) == bwd.anchor());
}

TEST_CASE("equal factors give the identity map") {
  const CartanDatum& d = adat(2);
  Rectangles rect(d, {{1, 1}});
  TensorPair p(rect.factors[0], rect.factors[0]);
  RMap m = oracle_R(p, p);
  for (const Elem& b : p.graph().nodes) {
    CHECK(m.apply(b) == b);
    CHECK(combinatorial_R(p, p, b) == b);
  }
  CHECK(m.json().find("[[") == 0);
}

TEST_CASE("anchors exchange and the recipe matches the oracle exhaustively") {
  const CartanDatum& d = adat(2);
  Rectangles rect(d, {{1, 1}, {2, 1}});
  TensorPair fwd(rect.factors[0], rect.factors[1]);
  TensorPair bwd(rect.factors[1], rect.factors[0]);
  CHECK(fwd.graph().size() == 9);
  CHECK(combinatorial_R(fwd, bwd, fwd.anchor()) == bwd.anchor());
  CHECK(combinatorial_R(bwd, fwd, bwd.anchor()) == fwd.anchor());
  check_pair(fwd, bwd);
}

TEST_CASE("recipe and oracle agree on the small untwisted grid") {
  for (int n : {1, 2}) {
    const CartanDatum& d = adat(n);
    std::vector<std::pair<int, int>> shapes;
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= 2; ++s) shapes.push_back({r, s});
    Rectangles rect(d, shapes);
    for (const RFactor& a : rect.factors)
      for (const RFactor& b : rect.factors) {
        TensorPair fwd(a, b);
        TensorPair bwd(b, a);
        CHECK(combinatorial_R(fwd, bwd, fwd.anchor()) == bwd.anchor());
        check_pair(fwd, bwd);
      }
  }
}

TEST_CASE("recipe and oracle agree on the twisted pairs") {
  std::deque<VirtualCrystalA2> crystals;
  std::deque<CrystalGraph> graphs;
  std::vector<RFactor> factors;
  for (int r : {1, 2}) {
    crystals.emplace_back(2, r, 1);
    graphs.push_back(crystals.back().graph());
    factors.push_back(RFactor::of(crystals.back(), graphs.back(), r, 1));
  }
  for (const RFactor& a : factors)
    for (const RFactor& b : factors) {
      TensorPair fwd(a, b);
      TensorPair bwd(b, a);
      CHECK(combinatorial_R(fwd, bwd, fwd.anchor()) == bwd.anchor());
      check_pair(fwd, bwd);
    }
}

TEST_CASE("yang-baxter composition compared informationally") {
  const CartanDatum& d = adat(2);
  Rectangles rect(d, {{1, 1}, {2, 1}, {1, 2}});
  const RFactor& f1 = rect.factors[0];
  const RFactor& f2 = rect.factors[1];
  const RFactor& f3 = rect.factors[2];

  TensorPair p12(f1, f2), p21(f2, f1);
  TensorPair p13(f1, f3), p31(f3, f1);
  TensorPair p23(f2, f3), p32(f3, f2);
  for (const TensorPair* p : {&p12, &p21, &p13, &p31, &p23, &p32}) REQUIRE(p->connected());
  RMap m12 = oracle_R(p12, p21);
  RMap m13 = oracle_R(p13, p31);
  RMap m23 = oracle_R(p23, p32);

  auto swap2 = [](const RMap& m, const Elem& a, const Elem& b) {
    return m.apply(Elem::tensor({a, b})).factors;
  };

  int agree = 0, total = 0;
  for (const Elem& x1 : rect.graphs[0].nodes)
    for (const Elem& x2 : rect.graphs[1].nodes)
      for (const Elem& x3 : rect.graphs[2].nodes) {
        auto ab = swap2(m12, x1, x2);       /* in B2 (x) B1 */
        auto cd = swap2(m13, ab[1], x3);    /* in B3 (x) B1 */
        auto ef = swap2(m23, ab[0], cd[0]); /* in B3 (x) B2 */
        std::vector<Elem> lhs{ef[0], ef[1], cd[1]};
        auto pq = swap2(m23, x2, x3);
        auto rt = swap2(m13, x1, pq[0]);
        auto uv = swap2(m12, rt[1], pq[1]);
        std::vector<Elem> rhs{rt[0], uv[0], uv[1]};
        ++total;
        if (lhs == rhs) ++agree;
      }
  MESSAGE("yang-baxter braid agreement: " << agree << "/" << total);
  WARN(agree == total);
}
