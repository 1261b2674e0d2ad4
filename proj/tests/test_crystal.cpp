#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "krlab/crystal.hpp"
#include "krlab/rank2.hpp"

#include <cstdlib>

using namespace krlab;

namespace {

Tableau box(int v) { return Tableau{{{v}}}; }
Elem ebox(int v) { return Elem::tableau(box(v)); }

/* minimal leaf crystal: single boxes 1..n+1 with the classical colors of
   A_n, color i moving i -> i+1 */
struct BoxCrystal : LeafCrystal {
  const CartanDatum& d;
  explicit BoxCrystal(const CartanDatum& dd) : d(dd) {}
  const CartanDatum& datum() const override { return d; }
  std::vector<int> colors() const override {
    std::vector<int> cs;
    for (int i = 1; i <= d.n; ++i) cs.push_back(i);
    return cs;
  }

 protected:
  int val(const Tableau& t) const {
    REQUIRE(t.rows.size() == 1);
    REQUIRE(t.rows[0].size() == 1);
    return t.rows[0][0];
  }
  std::optional<Tableau> leaf_f(int i, const Tableau& t) const override {
    if (val(t) != i) return std::nullopt;
    return box(i + 1);
  }
  std::optional<Tableau> leaf_e(int i, const Tableau& t) const override {
    if (val(t) != i + 1) return std::nullopt;
    return box(i);
  }
  long long leaf_eps(int i, const Tableau& t) const override { return val(t) == i + 1; }
  long long leaf_phi(int i, const Tableau& t) const override { return val(t) == i; }
  AffineWeight leaf_weight(const Tableau& t) const override {
    int v = val(t);
    ClassicalWeight w(static_cast<std::size_t>(d.n));
    if (v <= d.n) w += d.omega(v);
    if (v >= 2) w -= d.omega(v - 1);
    return d.section(w);
  }
};

const CartanDatum& a2() { return CartanDatum::get({AffineFamily::a_untwisted, 2}); }

Elem pair2(int a, int b) { return Elem::tensor({ebox(a), ebox(b)}); }

std::vector<Elem> all_pairs() {
  std::vector<Elem> es;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) es.push_back(pair2(a, b));
  return es;
}

void flatten(const Elem& b, std::vector<int>& out) {
  if (b.kind == Elem::Kind::tab)
    out.push_back(b.leaf.rows[0][0]);
  else
    for (const Elem& f : b.factors) flatten(f, out);
}

/* structural sanity of a rank-2 reference graph */
void check_rank2(const Rank2Graph& g) {
  int roots = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.eps[v][0] == 0 && g.eps[v][1] == 0) ++roots;
    for (int axis = 0; axis < 2; ++axis) {
      CHECK((g.fmap[v][axis] >= 0) == (g.phi[v][axis] > 0));
      CHECK((g.emap[v][axis] >= 0) == (g.eps[v][axis] > 0));
      if (int w = g.fmap[v][axis]; w >= 0) {
        CHECK(g.emap[w][axis] == static_cast<int>(v));
        CHECK(g.eps[w][axis] == g.eps[v][axis] + 1);
        CHECK(g.phi[w][axis] == g.phi[v][axis] - 1);
      }
      if (int w = g.emap[v][axis]; w >= 0) CHECK(g.fmap[w][axis] == static_cast<int>(v));
    }
  }
  CHECK(roots == 1);
}

}  // namespace

TEST_CASE("rank-2 references match dimension counts") {
  /* closed forms and a few representation dimensions pinned by hand */
  for (long long a = 0; a <= 3; ++a)
    for (long long b = 0; b <= 3; ++b) {
      CHECK(rank2_dimension(0, 0, a, b) == (a + 1) * (b + 1));
      CHECK(rank2_dimension(-1, -1, a, b) == (a + 1) * (b + 1) * (a + b + 2) / 2);
    }
  CHECK(rank2_dimension(-1, -2, 1, 0) == 5);
  CHECK(rank2_dimension(-1, -2, 0, 1) == 4);
  CHECK(rank2_dimension(-1, -2, 1, 1) == 16);
  CHECK(rank2_dimension(-1, -2, 2, 0) == 14);
  CHECK(rank2_dimension(-1, -2, 0, 2) == 10);
  CHECK(rank2_dimension(-2, -1, 1, 0) == 4);
  CHECK(rank2_dimension(-2, -1, 0, 1) == 5);
  CHECK(rank2_dimension(-1, -3, 1, 0) == 14);
  CHECK(rank2_dimension(-1, -3, 0, 1) == 7);
  CHECK(rank2_dimension(-1, -3, 1, 1) == 64);

  const long long types[6][2] = {{0, 0}, {-1, -1}, {-1, -2}, {-2, -1}, {-1, -3}, {-3, -1}};
  for (const auto& t : types)
    for (long long a = 0; a <= 2; ++a)
      for (long long b = 0; b <= 2; ++b) {
        Rank2Graph g = rank2_reference(t[0], t[1], a, b);
        CHECK(g.size() == static_cast<std::size_t>(rank2_dimension(t[0], t[1], a, b)));
        CHECK(g.eps[g.root][0] == 0);
        CHECK(g.eps[g.root][1] == 0);
        CHECK(g.phi[g.root][0] == a);
        CHECK(g.phi[g.root][1] == b);
        check_rank2(g);
      }
  CHECK_THROWS_AS(rank2_reference(-2, -2, 1, 0), Error); /* infinite type */
  CHECK_THROWS_AS(rank2_reference(-1, 0, 1, 0), Error);
}

TEST_CASE("single-box chain graph") {
  BoxCrystal bx(a2());
  CrystalGraph g = generate(bx, {ebox(1)}, {1, 2});
  REQUIRE(g.size() == 3);
  CHECK(g.labels == std::vector<std::string>{"1", "2", "3"});
  CHECK(g.fmap[0][0] == 1); /* 1 -> 2 by color 1 */
  CHECK(g.fmap[1][1] == 2); /* 2 -> 3 by color 2 */
  CHECK(g.fmap[0][1] == -1);
  CHECK(g.weights[0] == a2().section(a2().omega(1)));
  CHECK(check_axioms(bx, g).empty());
  CHECK(regularity_check(g, a2()).empty());
  CHECK(highest_nodes(g, {1, 2}) == std::vector<int>{0});
  CHECK(components(g, {1, 2}).size() == 1);
  CHECK(components(g, {1}).size() == 2);
}

TEST_CASE("tensor rule acts on the expected side") {
  BoxCrystal bx(a2());
  ProductCrystal p2(a2(), {&bx, &bx});

  /* lowering prefers the right factor: eps(left) >= phi(right) sends it left */
  CHECK(*p2.f(1, pair2(1, 1)) == pair2(1, 2));
  CHECK(*p2.f(1, pair2(1, 2)) == pair2(2, 2));
  CHECK(!p2.f(1, pair2(2, 1)).has_value());
  CHECK(!p2.e(1, pair2(2, 1)).has_value());
  CHECK(p2.eps(1, pair2(2, 1)) == 0);
  CHECK(p2.phi(1, pair2(2, 1)) == 0);
  CHECK(*p2.e(1, pair2(2, 2)) == pair2(1, 2));
  CHECK(p2.phi_vec(pair2(1, 1)).lam[1] == Rat(2));
  CHECK(p2.eps_vec(pair2(2, 2)).lam[1] == Rat(2));

  CrystalGraph g = generate(p2, all_pairs(), {1, 2});
  REQUIRE(g.size() == 9);
  CHECK(check_axioms(p2, g).empty());
  CHECK(regularity_check(g, a2()).empty());
  auto comps = components(g, {1, 2});
  REQUIRE(comps.size() == 2);
  std::vector<std::size_t> sizes{comps[0].size(), comps[1].size()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{3, 6});
  CHECK(highest_nodes(g, {1, 2}).size() == 2);
}

TEST_CASE("string reflections satisfy the braid relations") {
  BoxCrystal bx(a2());
  ProductCrystal p2(a2(), {&bx, &bx});
  for (const Elem& x : all_pairs()) {
    CHECK(p2.reflect(1, p2.reflect(1, x)) == x);
    CHECK(p2.reflect(2, p2.reflect(2, x)) == x);
    Elem lhs = p2.reflect(1, p2.reflect(2, p2.reflect(1, x)));
    Elem rhs = p2.reflect(2, p2.reflect(1, p2.reflect(2, x)));
    CHECK(lhs == rhs);
    for (int i : {1, 2}) {
      CHECK(p2.eps(i, p2.reflect(i, x)) == p2.phi(i, x));
      CHECK(a2().cl(p2.weight(p2.reflect(i, x))) ==
            a2().reflect(i, a2().cl(p2.weight(x))));
    }
  }
}

TEST_CASE("tensor products fold associatively") {
  BoxCrystal bx(a2());
  ProductCrystal p2(a2(), {&bx, &bx});
  ProductCrystal flat(a2(), {&bx, &bx, &bx});
  ProductCrystal nl(a2(), {&p2, &bx});
  ProductCrystal nr(a2(), {&bx, &p2});
  for (int v1 = 1; v1 <= 3; ++v1)
    for (int v2 = 1; v2 <= 3; ++v2)
      for (int v3 = 1; v3 <= 3; ++v3) {
        Elem tf = Elem::tensor({ebox(v1), ebox(v2), ebox(v3)});
        Elem tl = Elem::tensor({Elem::tensor({ebox(v1), ebox(v2)}), ebox(v3)});
        Elem tr = Elem::tensor({ebox(v1), Elem::tensor({ebox(v2), ebox(v3)})});
        CHECK(flat.weight(tf) == nl.weight(tl));
        CHECK(flat.weight(tf) == nr.weight(tr));
        for (int i : {1, 2}) {
          CHECK(flat.eps(i, tf) == nl.eps(i, tl));
          CHECK(flat.eps(i, tf) == nr.eps(i, tr));
          CHECK(flat.phi(i, tf) == nl.phi(i, tl));
          CHECK(flat.phi(i, tf) == nr.phi(i, tr));
          for (int dir = 0; dir < 2; ++dir) {
            auto rf = dir ? flat.e(i, tf) : flat.f(i, tf);
            auto rl = dir ? nl.e(i, tl) : nl.f(i, tl);
            auto rr = dir ? nr.e(i, tr) : nr.f(i, tr);
            REQUIRE(rf.has_value() == rl.has_value());
            REQUIRE(rf.has_value() == rr.has_value());
            if (rf) {
              std::vector<int> a, b, c;
              flatten(*rf, a);
              flatten(*rl, b);
              flatten(*rr, c);
              CHECK(a == b);
              CHECK(a == c);
            }
          }
        }
      }
}

TEST_CASE("formal placeholders trap lowerings into them") {
  const CartanDatum& d = a2();
  BoxCrystal bx(d);
  FormalCrystal fm(d);

  Elem u1 = Elem::formal(d.fundamental(1));
  bool hit = false;
  CHECK(!fm.f(1, u1, &hit).has_value());
  CHECK(hit);
  CHECK(!fm.f(2, u1, &hit).has_value());
  CHECK(!hit);
  CHECK(!fm.e(1, u1, &hit).has_value());
  CHECK(!hit);
  CHECK(fm.phi(1, u1) == 1);
  CHECK(fm.eps(1, u1) == 0);

  ProductCrystal pf(d, {&bx, &fm});
  Elem x = Elem::tensor({ebox(1), u1});
  CHECK(!pf.f(1, x, &hit).has_value()); /* the rule sends f into the placeholder */
  CHECK(hit);
  CHECK(!pf.f(1, Elem::tensor({ebox(2), u1}), &hit).has_value()); /* honest end */
  CHECK(!hit);
  CHECK(d.level(pf.weight(x)) == Rat(1));

  /* lowerings walk the left factor freely above u_{Lambda_0} */
  Elem u0 = Elem::formal(d.fundamental(0));
  CrystalGraph g = generate(pf, {Elem::tensor({ebox(1), u0})}, {1, 2});
  CHECK(g.size() == 3);

  /* the dual placeholder traps raisings instead */
  Elem v1 = Elem::formal_dual(d.fundamental(1));
  CHECK(!fm.e(1, v1, &hit).has_value());
  CHECK(hit);
  CHECK(!fm.f(1, v1, &hit).has_value());
  CHECK(!hit);
  CHECK(fm.weight(v1) == -d.fundamental(1));
  ProductCrystal fp(d, {&fm, &bx});
  CHECK(!fp.e(1, Elem::tensor({v1, ebox(2)}), &hit).has_value());
  CHECK(hit);
}

TEST_CASE("dual and twist graph transforms") {
  const CartanDatum& d = a2();
  BoxCrystal bx(d);
  CrystalGraph g = generate(bx, {ebox(1)}, {1, 2});

  CrystalGraph dg = dual_graph(g);
  CHECK(dg.fmap == g.emap);
  CHECK(dg.emap == g.fmap);
  CHECK(dg.eps == g.phi);
  CHECK(dg.weights[0] == -g.weights[0]);
  CrystalGraph ddg = dual_graph(dg);
  CHECK(ddg.fmap == g.fmap);
  CHECK(ddg.weights == g.weights);

  DynkinAut id{{0, 1, 2}};
  CrystalGraph tid = twist_graph(g, id, d);
  CHECK(tid.fmap == g.fmap);
  CHECK(tid.weights == g.weights);

  DynkinAut flip{{0, 2, 1}};
  CrystalGraph tg = twist_graph(g, flip, d);
  for (std::size_t v = 0; v < g.size(); ++v)
    for (int i : {1, 2}) {
      CHECK(tg.fmap[v][tg.color_index(flip.perm[i])] == g.fmap[v][g.color_index(i)]);
      CHECK(tg.eps[v][tg.color_index(flip.perm[i])] == g.eps[v][g.color_index(i)]);
    }
  CHECK(tg.weights[g.index_of(ebox(1))] == d.section(d.omega(2)));
}

TEST_CASE("corrupted graphs are detected") {
  const CartanDatum& d = a2();
  BoxCrystal bx(d);
  ProductCrystal p2(d, {&bx, &bx});
  CrystalGraph g = generate(p2, all_pairs(), {1, 2});

  CrystalGraph broken = g;
  int v = g.index_of(pair2(1, 1));
  REQUIRE(v >= 0);
  REQUIRE(broken.fmap[v][0] >= 0);
  broken.fmap[v][0] = v; /* self-loop breaks e(f(b)) = b and the walk counts */
  CHECK(!check_axioms(p2, broken).empty());

  CrystalGraph recolored = g;
  REQUIRE(recolored.fmap[v][1] == -1);
  std::swap(recolored.fmap[v][0], recolored.fmap[v][1]); /* move an arrow to color 2 */
  CHECK(!regularity_check(recolored, d).empty());
}

TEST_CASE("generation respects node caps") {
  const CartanDatum& d = a2();
  BoxCrystal bx(d);
  ProductCrystal p2(d, {&bx, &bx});
  try {
    generate(p2, {pair2(1, 1)}, {1, 2}, 2);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::cap_exceeded);
  }

  setenv("KRLAB_NODE_CAP", "7", 1);
  CHECK(default_node_cap() == 7);
  setenv("KRLAB_NODE_CAP", "0", 1);
  CHECK_THROWS_AS(default_node_cap(), Error);
  setenv("KRLAB_NODE_CAP", "many", 1);
  CHECK_THROWS_AS(default_node_cap(), Error);
  unsetenv("KRLAB_NODE_CAP");
  CHECK(default_node_cap() == 1000000);
}

TEST_CASE("tableau strings round-trip") {
  Tableau t = Tableau::parse("1,1,2/2,3");
  CHECK(t.shape() == std::vector<int>{3, 2});
  CHECK(t.column_word() == std::vector<int>{2, 1, 3, 1, 2});
  CHECK(t.str() == "1,1,2/2,3");
  CHECK(Tableau::parse("()").rows.empty());
  CHECK(Tableau{}.str() == "()");
  CHECK_THROWS_AS(Tableau::parse("2,1"), Error);    /* row decreases */
  CHECK_THROWS_AS(Tableau::parse("1/1"), Error);    /* column not strict */
  CHECK_THROWS_AS(Tableau::parse("1,/2"), Error);   /* empty entry */
  CHECK_THROWS_AS(Tableau::parse("1,x"), Error);    /* junk */
  CHECK_THROWS_AS(Tableau::parse("1/2,2"), Error);  /* widening rows */
  Tableau big = Tableau::parse("1,1/2,3");
  CHECK_THROWS_AS(big.validate(2), Error); /* alphabet bound */
}

TEST_CASE("element ordering and display") {
  Elem a = ebox(1), b = ebox(2);
  CHECK(a < b);
  CHECK(a == ebox(1));
  Elem nested = Elem::tensor({a, Elem::tensor({b, ebox(3)})});
  CHECK(nested.str() == "1*(2*3)");
  CHECK(Elem::formal(a2().fundamental(0)).str() == "u(1,0,0|0)");
  CHECK(Elem::formal_dual(a2().fundamental(0)).str() == "u*(1,0,0|0)");
  CHECK_THROWS_AS(Elem::tensor({}), Error);
}

TEST_CASE("graph serialization is byte-stable") {
  const CartanDatum& d = CartanDatum::get({AffineFamily::a_untwisted, 1});
  BoxCrystal bx(d);
  CrystalGraph g = generate(bx, {ebox(1)}, {1});
  CHECK(graph_json(g) ==
        "{\"nodes\":[{\"label\":\"1\",\"weight\":{\"lambda\":[\"-1\",\"1\"],"
        "\"delta\":\"0\"}},{\"label\":\"2\",\"weight\":{\"lambda\":[\"1\",\"-1\"],"
        "\"delta\":\"0\"}}],\"edges\":[{\"from\":0,\"to\":1,\"color\":1}]}");
  CHECK(graph_dot(g) ==
        "digraph crystal {\n"
        "  rankdir=TB;\n"
        "  node [shape=box];\n"
        "  n0 [label=\"1\"];\n"
        "  n1 [label=\"2\"];\n"
        "  n0 -> n1 [label=\"1\"];\n"
        "}\n");
}
