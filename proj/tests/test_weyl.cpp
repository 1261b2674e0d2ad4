#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "krlab/rank2.hpp"
#include "krlab/weyl.hpp"

using namespace krlab;

static int braid_order(long long aij, long long aji) {
  switch (aij * aji) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0; /* infinite */
  }
}

TEST_CASE("simple reflections satisfy the Coxeter relations") {
  for (const AffineType& t : all_types(5)) {
    const WeylGroup& w = WeylGroup::get(t);
    const CartanDatum& d = w.datum();
    INFO(t.str());
    for (int i = 0; i <= d.n; ++i) {
      CHECK(w.simple(i) * w.simple(i) == w.identity());
      for (int j = i + 1; j <= d.n; ++j) {
        int m = braid_order(d.A[i][j], d.A[j][i]);
        if (m == 0) continue;
        Mat prod = w.simple(i) * w.simple(j);
        Mat acc = w.identity();
        for (int k = 0; k < m; ++k) acc = acc * prod;
        CHECK(acc == w.identity());
      }
    }
  }
}

TEST_CASE("translations: additivity, conjugation, and the affine reflection") {
  for (const AffineType& t : all_types(4)) {
    const WeylGroup& w = WeylGroup::get(t);
    const CartanDatum& d = w.datum();
    INFO(t.str());

    AffineWeight x = d.section(d.omega(1)), y = d.theta_over_a0();
    CHECK(w.translation(x) * w.translation(y) == w.translation(x + y));

    for (int j = 1; j <= d.n; ++j) {
      AffineWeight xj = w.act(w.simple(j), x);
      CHECK(w.simple(j) * w.translation(x) * w.simple(j) == w.translation(xj));
    }

    /* s_theta s_0 = t_{-theta/a0} */
    AffineWeight th = Rat(d.a0()) * d.theta_over_a0();
    CHECK(w.translation(-d.theta_over_a0()) == w.reflection_by(th) * w.simple(0));
  }
}

TEST_CASE("reduced words come from alcove descent") {
  for (const AffineType& t : all_types(4)) {
    const WeylGroup& w = WeylGroup::get(t);
    const CartanDatum& d = w.datum();
    INFO(t.str());
    CHECK(w.reduced_word(w.identity()).empty());
    for (int i = 0; i <= d.n; ++i) CHECK(w.reduced_word(w.simple(i)) == Word{i});

    Word probe{0, 1, 0, 1};
    Mat g = w.word_matrix(probe);
    Word back = w.reduced_word(g);
    CHECK(back.size() <= probe.size());
    CHECK(w.word_matrix(back) == g);
  }

  /* translation lengths against the summed pairing formula */
  const WeylGroup& c2 = WeylGroup::get(AffineType::parse("C2~1"));
  ClassicalWeight th2 = c2.datum().cl(c2.datum().theta_over_a0());
  CHECK(c2.translation_length(th2) == 4);
  CHECK(c2.length(c2.translation(c2.datum().theta_over_a0())) == 4);

  const WeylGroup& c3 = WeylGroup::get(AffineType::parse("C3~1"));
  ClassicalWeight two_w2 = Rat(2) * c3.datum().omega(2);
  CHECK(c3.translation_length(two_w2) == 10);
  CHECK(c3.length(c3.translation(Rat(-2) * c3.datum().section(c3.datum().omega(2)))) == 10);

  const WeylGroup& b3 = WeylGroup::get(AffineType::parse("B3~1"));
  CHECK(b3.translation_length(b3.datum().omega(2)) == 8);
  CHECK(b3.length(b3.translation(b3.datum().section(b3.datum().omega(2)))) == 8);

  /* a bare rotation has no reduced word */
  const WeylGroup& a2 = WeylGroup::get(AffineType::parse("A2~1"));
  CHECK_THROWS_AS(a2.reduced_word(a2.tau(1).mat), Error);
}

TEST_CASE("translation lattice membership") {
  for (const AffineType& t : all_types(6)) {
    const WeylGroup& w = WeylGroup::get(t);
    const CartanDatum& d = w.datum();
    INFO(t.str());

    /* generators, Weyl stability, and the defining property of the c_r */
    for (int i = 1; i <= d.n; ++i) {
      ClassicalWeight gen = Rat(d.c[i]) * d.cl(d.alpha(i));
      CHECK(w.in_translation_lattice(gen));
      for (int j = 1; j <= d.n; ++j) CHECK(w.in_translation_lattice(d.reflect(j, gen)));
    }
    ClassicalWeight thc = d.cl(d.theta_over_a0());
    CHECK(w.in_translation_lattice(thc));
    for (int j = 1; j <= d.n; ++j) CHECK(w.in_translation_lattice(d.reflect(j, thc)));

    for (int r = 1; r <= d.n; ++r) {
      if (d.is_special(r)) {
        CHECK(d.c[r] == 1);
        if (t.family != AffineFamily::a_even_twisted)
          CHECK_FALSE(w.in_translation_lattice(d.omega(r)));
        continue;
      }
      /* t_{-c_r omega_r} lies in the extended group; its rotation part is
         trivial exactly when c_r omega_r is a lattice translation */
      Mat tr = w.translation(Rat(-d.c[r]) * d.section(d.omega(r)));
      int node = w.factor_sigma(tr).tau_node;
      CHECK(w.in_translation_lattice(Rat(d.c[r]) * d.omega(r)) == (node == 0));
      switch (t.family) {
        case AffineFamily::c_untwisted:
        case AffineFamily::a_even_twisted:
        case AffineFamily::d_twisted: CHECK(node == 0); break;
        case AffineFamily::b_untwisted:
        case AffineFamily::d_untwisted:
        case AffineFamily::a_odd_twisted: CHECK(node == (r % 2 ? 1 : 0)); break;
        default: break;
      }
    }
  }

  const WeylGroup& c3 = WeylGroup::get(AffineType::parse("C3~1"));
  CHECK_FALSE(c3.in_translation_lattice(c3.datum().omega(1)));
  const WeylGroup& b3 = WeylGroup::get(AffineType::parse("B3~1"));
  CHECK_FALSE(b3.in_translation_lattice(b3.datum().omega(3)));
  const WeylGroup& a42 = WeylGroup::get(AffineType::parse("A4~2"));
  CHECK(a42.in_translation_lattice(a42.datum().omega(1)));
  CHECK(a42.in_translation_lattice(a42.datum().omega(2)));
}

TEST_CASE("alcove rotations: permutations, delta, and factorization") {
  const WeylGroup& a1 = WeylGroup::get(AffineType::parse("A1~1"));
  AffineWeight img = a1.act(a1.tau(1).mat, a1.datum().fundamental(1));
  AffineWeight expect(2);
  expect.lam[0] = 1;
  expect.del = Rat(1, 4);
  CHECK(img == expect); /* Lambda_0 + delta/4 */

  const WeylGroup& a2 = WeylGroup::get(AffineType::parse("A2~1"));
  CHECK(a2.tau(2).perm[0] == 1);
  CHECK(a2.act_cl(a2.tau(1).mat, a2.datum().omega(1)) == -a2.datum().omega(2));

  for (const AffineType& t : all_types(5)) {
    const WeylGroup& w = WeylGroup::get(t);
    const CartanDatum& d = w.datum();
    INFO(t.str());
    CHECK(w.sigma().size() == d.special.size());
    for (const WeylGroup::Tau& tau : w.sigma()) {
      CHECK(w.act(tau.mat, d.delta()) == d.delta());
      for (int j = 0; j <= d.n; ++j) {
        CHECK(w.act(tau.mat, d.alpha(j)) == d.alpha(tau.perm[j]));
        CHECK(w.act(tau.mat, d.fundamental(j)).same_mod_delta(d.fundamental(tau.perm[j])));
      }
      if (tau.node != 0) {
        CHECK(tau.perm[tau.node] == 0);
        /* factoring t_{-omega_i} recovers tau_i */
        Mat tr = w.translation(-d.section(d.omega(tau.node)));
        WeylGroup::SigmaFactor f = w.factor_sigma(tr);
        CHECK(f.tau_node == tau.node);
        Word zw = w.reduced_word(f.z); /* must not throw: z is rotation-free */
        CHECK(w.word_matrix(zw) == f.z);
      }
    }

    if (t.family == AffineFamily::a_untwisted) {
      for (const WeylGroup::Tau& tau : w.sigma())
        for (int j = 0; j <= d.n; ++j)
          CHECK(tau.perm[j] == ((j - tau.node) % (d.n + 1) + d.n + 1) % (d.n + 1));
    }

    /* the rotation group is M~/M: tau_i tau_j = tau_k forces
       omega_i + omega_j - omega_k into the lattice */
    for (const WeylGroup::Tau& a : w.sigma()) {
      for (const WeylGroup::Tau& b : w.sigma()) {
        const WeylGroup::Tau& p = w.sigma_product(a, b);
        ClassicalWeight probe(d.n);
        if (a.node != 0) probe += d.omega(a.node);
        if (b.node != 0) probe += d.omega(b.node);
        if (p.node != 0) probe -= d.omega(p.node);
        CHECK(w.in_translation_lattice(probe));
      }
      CHECK(w.sigma_product(a, w.sigma_inverse(a)).node == 0);
    }

    /* factorization round-trips on composite elements */
    for (const WeylGroup::Tau& tau : w.sigma()) {
      Mat g = w.word_matrix({0, 1}) * tau.mat;
      WeylGroup::SigmaFactor f = w.factor_sigma(g);
      CHECK(f.tau_node == tau.node);
      CHECK(f.z == w.word_matrix({0, 1}));
    }
  }

  /* rotation permutations for an even orthogonal type */
  const WeylGroup& d6 = WeylGroup::get(AffineType::parse("D6~1"));
  CHECK(d6.tau(1).perm == std::vector<int>{1, 0, 2, 3, 4, 6, 5});
  CHECK(d6.tau(5).perm == std::vector<int>{5, 6, 4, 3, 2, 0, 1});
  CHECK(d6.tau(6).perm == std::vector<int>{6, 5, 4, 3, 2, 1, 0});
}

TEST_CASE("minimal coset representatives match the closed-form words") {
  const WeylGroup& c3 = WeylGroup::get(AffineType::parse("C3~1"));
  CHECK(c3.closed_form_coset_word(2) == Word{0, 1, 0});
  const WeylGroup& b4 = WeylGroup::get(AffineType::parse("B4~1"));
  CHECK(b4.closed_form_coset_word(3) == Word{0, 2, 1});
  const WeylGroup& b3 = WeylGroup::get(AffineType::parse("B3~1"));
  CHECK(b3.closed_form_coset_word(2) == Word{0});

  for (const AffineType& t : all_types(4)) {
    switch (t.family) {
      case AffineFamily::b_untwisted:
      case AffineFamily::c_untwisted:
      case AffineFamily::d_untwisted:
      case AffineFamily::a_odd_twisted:
      case AffineFamily::a_even_twisted:
      case AffineFamily::d_twisted: break;
      default: continue;
    }
    const WeylGroup& w = WeylGroup::get(t);
    const CartanDatum& d = w.datum();
    for (int r = 1; r <= d.n; ++r) {
      if (d.is_special(r)) continue;
      if (t.family == AffineFamily::d_untwisted && r > d.n - 2) continue;
      INFO(t.str() << " r=" << r);
      Mat tr = w.translation(Rat(-d.c[r]) * d.section(d.omega(r)));
      Mat z = w.factor_sigma(tr).z;
      Mat rep = w.min_coset_rep_left(z);
      Word closed = w.closed_form_coset_word(r);
      CHECK(w.word_matrix(closed) == rep);
      CHECK(static_cast<long long>(closed.size()) == w.length(rep));

      /* lengths add along the coset factorization z = v * rep, v classical */
      Mat v = z * rep.inverse();
      Word vw = w.reduced_word(v);
      for (int letter : vw) CHECK(letter != 0);
      CHECK(w.length(z) == w.length(rep) + static_cast<long long>(vw.size()));
      CHECK(w.translation_length(Rat(d.c[r]) * d.omega(r)) == w.length(z));
    }
  }
}

TEST_CASE("classical walks, duals, root counts, and group sizes") {
  const WeylGroup& a2 = WeylGroup::get(AffineType::parse("A2~1"));
  ClassicalWeight m = a2.datum().omega(1);
  Word apps = a2.to_antidominant(m);
  CHECK(apps == Word{1, 2});
  CHECK(m == -a2.datum().omega(2));
  CHECK(a2.star(a2.datum().omega(1)) == a2.datum().omega(2));

  const WeylGroup& a3 = WeylGroup::get(AffineType::parse("A3~1"));
  CHECK(a3.star(a3.datum().omega(1)) == a3.datum().omega(3));
  CHECK(a3.star(a3.datum().omega(2)) == a3.datum().omega(2));

  const WeylGroup& d5 = WeylGroup::get(AffineType::parse("D5~1"));
  CHECK(d5.star(d5.datum().omega(4)) == d5.datum().omega(5));
  CHECK(d5.star(d5.datum().omega(1)) == d5.datum().omega(1));

  for (const AffineType& t : all_types(5)) {
    const WeylGroup& w = WeylGroup::get(t);
    int n = w.datum().n;
    std::size_t expect = 0;
    switch (t.family) {
      case AffineFamily::a_untwisted: expect = n * (n + 1) / 2; break;
      case AffineFamily::b_untwisted:
      case AffineFamily::c_untwisted:
      case AffineFamily::a_odd_twisted:
      case AffineFamily::a_even_twisted:
      case AffineFamily::d_twisted: expect = n * n; break;
      case AffineFamily::d_untwisted: expect = n * (n - 1); break;
      case AffineFamily::f4_untwisted: expect = 24; break;
      case AffineFamily::g2_untwisted: expect = 6; break;
      default: continue;
    }
    INFO(t.str());
    CHECK(w.positive_roots().size() == expect);

    /* every listed root is a nonnegative integral root combination */
    for (const ClassicalWeight& r : w.positive_roots()) {
      std::vector<Rat> x = w.datum().root_expansion(w.datum().section(r));
      for (const Rat& v : x) {
        CHECK(v >= 0);
        CHECK(is_integer(v));
      }
    }

    if (t.family == AffineFamily::b_untwisted) CHECK(w.star(w.datum().omega(1)) == w.datum().omega(1));
    if (t.family == AffineFamily::c_untwisted) CHECK(w.star(w.datum().omega(n)) == w.datum().omega(n));
  }

  CHECK(WeylGroup::get(AffineType::parse("A2~1")).classical_elements(100).size() == 6);
  CHECK(WeylGroup::get(AffineType::parse("A3~1")).classical_elements(100).size() == 24);
  CHECK(WeylGroup::get(AffineType::parse("B3~1")).classical_elements(100).size() == 48);
  CHECK(WeylGroup::get(AffineType::parse("C2~1")).classical_elements(100).size() == 8);
  CHECK(WeylGroup::get(AffineType::parse("D4~1")).classical_elements(500).size() == 192);
  CHECK(WeylGroup::get(AffineType::parse("G2~1")).classical_elements(100).size() == 12);
  CHECK_THROWS_AS(WeylGroup::get(AffineType::parse("D4~1")).classical_elements(10), Error);
}

TEST_CASE("the dimension formula matches the rank two oracle and known values") {
  /* rank two classical subalgebras against the independent string oracle */
  for (const char* name : {"A2~1", "C2~1", "G2~1", "A4~2", "D3~2"}) {
    const WeylGroup& w = WeylGroup::get(AffineType::parse(name));
    const CartanDatum& d = w.datum();
    for (long long a = 0; a <= 3; ++a)
      for (long long b = 0; b <= 3; ++b) {
        ClassicalWeight lam(2);
        lam.om[0] = Rat(a);
        lam.om[1] = Rat(b);
        INFO(name, " a=", a, " b=", b);
        CHECK(w.classical_dimension(lam) == rank2_dimension(d.A[1][2], d.A[2][1], a, b));
      }
  }

  /* fixed rank three values */
  auto dim = [](const char* name, std::vector<int> om) {
    const WeylGroup& w = WeylGroup::get(AffineType::parse(name));
    ClassicalWeight lam(om.size());
    for (std::size_t i = 0; i < om.size(); ++i) lam.om[i] = Rat(om[i]);
    return w.classical_dimension(lam);
  };
  CHECK(dim("A3~1", {0, 0, 0}) == 1);
  CHECK(dim("A3~1", {1, 0, 0}) == 4);
  CHECK(dim("A3~1", {0, 1, 0}) == 6);
  CHECK(dim("A3~1", {2, 0, 0}) == 10);
  CHECK(dim("A3~1", {1, 0, 1}) == 15);
  CHECK(dim("A3~1", {1, 1, 1}) == 64);
  CHECK(dim("B3~1", {1, 0, 0}) == 7);
  CHECK(dim("B3~1", {0, 1, 0}) == 21);
  CHECK(dim("B3~1", {0, 0, 1}) == 8);
  CHECK(dim("C3~1", {1, 0, 0}) == 6);
  CHECK(dim("C3~1", {0, 1, 0}) == 14);
  CHECK(dim("C3~1", {0, 0, 1}) == 14);

  ClassicalWeight bad(3);
  bad.om[0] = Rat(-1);
  CHECK_THROWS_AS(WeylGroup::get(AffineType::parse("A3~1")).classical_dimension(bad), Error);
}
