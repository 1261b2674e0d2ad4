#include "krlab/rmatrix.hpp"

#include <deque>
#include <json.hpp>

#include "krlab/kr_a.hpp"
#include "krlab/weyl.hpp"

namespace krlab {

namespace {

/* apply the smallest defined raising (or lowering) color; -1 when stuck */
int greedy_step(const Crystal& c, Elem& x, bool lower) {
  for (int i : c.colors()) {
    std::optional<Elem> y = lower ? c.f(i, x) : c.e(i, x);
    if (y) {
      x = *y;
      return i;
    }
  }
  return -1;
}

void check_pair_element(const Elem& b) {
  require(b.kind == Elem::Kind::tensor && b.factors.size() == 2, Errc::invalid_argument,
          "expected a twofold tensor element");
}

void check_exchanged(const TensorPair& fwd, const TensorPair& bwd) {
  require(&fwd.datum() == &bwd.datum(), Errc::invalid_argument,
          "the two products live over different data");
  require(fwd.one().r == bwd.two().r && fwd.one().s == bwd.two().s &&
              fwd.two().r == bwd.one().r && fwd.two().s == bwd.one().s,
          Errc::invalid_argument, "the exchanged product does not match the forward one");
}

} /* namespace */

Elem find_u_dual(const CrystalGraph& g, const CartanDatum& d, int r, int s) {
  require(r >= 1 && r <= d.n && s >= 1, Errc::invalid_argument, "labels outside range");
  require(static_cast<int>(g.colors.size()) == d.nodes(), Errc::invalid_argument,
          "the scan needs the full affine color set");
  const WeylGroup& w = WeylGroup::get(d.type);
  ClassicalWeight mu = Rat(d.c[static_cast<std::size_t>(r)]) * w.star(d.omega(r));
  auto fac = w.factor_sigma(w.translation(d.section(-mu)));
  int tau0_inv = w.sigma_inverse(w.tau(fac.tau_node)).perm[0];

  long long found = -1;
  for (std::size_t v = 0; v < g.size(); ++v) {
    bool ok = true;
    for (std::size_t ci = 0; ci < g.colors.size() && ok; ++ci) {
      int color = g.colors[ci];
      ok = g.eps[v][ci] == (color == tau0_inv ? s : 0) && g.phi[v][ci] == (color == 0 ? s : 0);
    }
    if (!ok) continue;
    require(found < 0, Errc::falsified, "several elements carry the mirrored eps/phi profile");
    found = static_cast<long long>(v);
  }
  require(found >= 0, Errc::falsified, "no element carries the mirrored eps/phi profile");
  return g.nodes[static_cast<std::size_t>(found)];
}

RFactor RFactor::of(const Crystal& c, const CrystalGraph& g, int r, int s) {
  const CartanDatum& d = c.datum();
  require(r >= 1 && r <= d.n && s >= 1, Errc::invalid_argument, "labels outside range");
  const WeylGroup& w = WeylGroup::get(d.type);
  ClassicalWeight mu = Rat(d.c[static_cast<std::size_t>(r)]) * w.star(d.omega(r));
  auto fac = w.factor_sigma(w.translation(d.section(-mu)));
  const WeylGroup::Tau& t = w.tau(fac.tau_node);

  RFactor out;
  out.crystal = &c;
  out.graph = &g;
  out.r = r;
  out.s = s;
  out.tau0 = t.perm[0];
  out.tau0_inv = w.sigma_inverse(t).perm[0];

  ClassicalWeight top(static_cast<std::size_t>(d.n));
  top.om[static_cast<std::size_t>(r - 1)] = Rat(d.c[static_cast<std::size_t>(r)] * s);
  long long found = -1;
  for (std::size_t v = 0; v < g.size(); ++v) {
    bool highest = true;
    for (std::size_t ci = 0; ci < g.colors.size() && highest; ++ci)
      highest = g.colors[ci] == 0 || g.eps[v][ci] == 0;
    if (!highest || d.cl(g.weights[v]) != top) continue;
    require(found < 0, Errc::falsified, "several classically highest elements carry the top weight");
    found = static_cast<long long>(v);
  }
  require(found >= 0, Errc::falsified, "no classically highest element carries the top weight");
  out.top = g.nodes[static_cast<std::size_t>(found)];

  out.u = find_u(g, d, r, s);
  out.u_dual = find_u_dual(g, d, r, s);
  return out;
}

TensorPair::TensorPair(RFactor one, RFactor two, std::size_t cap)
    : one_(std::move(one)),
      two_(std::move(two)),
      prod_(one_.crystal->datum(), {one_.crystal, two_.crystal}),
      graph_(generate(prod_, {Elem::tensor({one_.top, two_.top})}, prod_.colors(), cap)) {}

Elem TensorPair::anchor() const { return Elem::tensor({one_.top, two_.top}); }

Elem TensorPair::target() const { return Elem::tensor({one_.u, two_.u_dual}); }

bool TensorPair::connected() const {
  return graph_.size() == one_.graph->size() * two_.graph->size();
}

Word USequence::word() const {
  Word w = stage_one;
  w.insert(w.end(), stage_two.begin(), stage_two.end());
  return w;
}

/* Greedy staged search.  The formal factor freezes the string data the
   distinguished element is recognized by: once the inner factor reaches it,
   later steps route past it, so the stages are well separated. */
USequence to_u_sequence(const TensorPair& p, const Elem& b, std::size_t cap) {
  check_pair_element(b);
  const CartanDatum& d = p.datum();
  FormalCrystal fc(d);
  USequence seq;
  seq.lowering = p.one().s < p.two().s;
  std::size_t steps = 0;
  auto bump = [&steps, cap]() {
    require(++steps <= cap, Errc::cap_exceeded, "operator word exceeded the node budget");
  };

  if (!seq.lowering) {
    /* raise b (x) u_{s2 Lambda_{tau2^{-1}(0)}} until the right factor is the
       mirrored distinguished element */
    Elem uf = Elem::formal(Rat(p.two().s) * d.fundamental(p.two().tau0_inv));
    ProductCrystal p3(d, {p.one().crystal, p.two().crystal, &fc});
    Elem x = Elem::tensor({b.factors[0], b.factors[1], uf});
    while (x.factors[1] != p.two().u_dual) {
      int c = greedy_step(p3, x, false);
      require(c >= 0, Errc::falsified, "raising stalled before the distinguished pair");
      seq.stage_one.push_back(c);
      bump();
    }
    /* append u_{(s1-s2) Lambda_0} and raise to the unique highest point */
    Elem uf2 = Elem::formal(Rat(p.one().s - p.two().s) * d.fundamental(0));
    ProductCrystal p4(d, {p.one().crystal, p.two().crystal, &fc, &fc});
    x = Elem::tensor({x.factors[0], x.factors[1], uf, uf2});
    for (;;) {
      int c = greedy_step(p4, x, false);
      if (c < 0) break;
      seq.stage_two.push_back(c);
      bump();
    }
    require(x.factors[0] == p.one().u && x.factors[1] == p.two().u_dual, Errc::falsified,
            "raising terminated away from the distinguished pair");
  } else {
    /* mirror image: lower u^_{s1 Lambda_{tau1(0)}} (x) b until the middle
       factor is the distinguished element */
    Elem uf = Elem::formal_dual(Rat(p.one().s) * d.fundamental(p.one().tau0));
    ProductCrystal p3(d, {&fc, p.one().crystal, p.two().crystal});
    Elem x = Elem::tensor({uf, b.factors[0], b.factors[1]});
    while (x.factors[1] != p.one().u) {
      int c = greedy_step(p3, x, true);
      require(c >= 0, Errc::falsified, "lowering stalled before the distinguished pair");
      seq.stage_one.push_back(c);
      bump();
    }
    /* prepend u^_{(s2-s1) Lambda_0} and lower to the unique lowest point */
    Elem uf2 = Elem::formal_dual(Rat(p.two().s - p.one().s) * d.fundamental(0));
    ProductCrystal p4(d, {&fc, &fc, p.one().crystal, p.two().crystal});
    x = Elem::tensor({uf2, x.factors[0], x.factors[1], x.factors[2]});
    for (;;) {
      int c = greedy_step(p4, x, true);
      if (c < 0) break;
      seq.stage_two.push_back(c);
      bump();
    }
    require(x.factors[2] == p.one().u && x.factors[3] == p.two().u_dual, Errc::falsified,
            "lowering terminated away from the distinguished pair");
  }
  return seq;
}

Elem replay_u_sequence(const TensorPair& p, const Elem& b, const USequence& seq) {
  check_pair_element(b);
  const CartanDatum& d = p.datum();
  require(seq.lowering == (p.one().s < p.two().s), Errc::invalid_argument,
          "sequence direction does not match the pair");
  FormalCrystal fc(d);
  auto apply = [&seq](const Crystal& c, Elem x, const Word& w) {
    for (int i : w) {
      std::optional<Elem> y = seq.lowering ? c.f(i, x) : c.e(i, x);
      require(y.has_value(), Errc::integrity, "operator undefined during sequence replay");
      x = *y;
    }
    return x;
  };

  if (!seq.lowering) {
    Elem uf = Elem::formal(Rat(p.two().s) * d.fundamental(p.two().tau0_inv));
    ProductCrystal p3(d, {p.one().crystal, p.two().crystal, &fc});
    Elem x = apply(p3, Elem::tensor({b.factors[0], b.factors[1], uf}), seq.stage_one);
    Elem uf2 = Elem::formal(Rat(p.one().s - p.two().s) * d.fundamental(0));
    ProductCrystal p4(d, {p.one().crystal, p.two().crystal, &fc, &fc});
    return apply(p4, Elem::tensor({x.factors[0], x.factors[1], uf, uf2}), seq.stage_two);
  }
  Elem uf = Elem::formal_dual(Rat(p.one().s) * d.fundamental(p.one().tau0));
  ProductCrystal p3(d, {&fc, p.one().crystal, p.two().crystal});
  Elem x = apply(p3, Elem::tensor({uf, b.factors[0], b.factors[1]}), seq.stage_one);
  Elem uf2 = Elem::formal_dual(Rat(p.two().s - p.one().s) * d.fundamental(0));
  ProductCrystal p4(d, {&fc, &fc, p.one().crystal, p.two().crystal});
  return apply(p4, Elem::tensor({uf2, x.factors[0], x.factors[1], x.factors[2]}), seq.stage_two);
}

/* Every letter of a staged word acts inside the two real factors (a formal
   factor is never moved), and the tensor rule routes it there exactly as on
   the bare product; the word therefore transfers verbatim. */
Elem combinatorial_R(const TensorPair& fwd, const TensorPair& bwd, const Elem& b,
                     std::size_t cap) {
  check_pair_element(b);
  check_exchanged(fwd, bwd);
  require(fwd.graph().index_of(b) >= 0, Errc::invalid_argument,
          "element outside the generated product");

  USequence to_u = to_u_sequence(fwd, b, cap);
  Word wi = to_u.word();
  Elem x = b;
  for (int i : wi) {
    std::optional<Elem> y = to_u.lowering ? fwd.product().f(i, x) : fwd.product().e(i, x);
    require(y.has_value(), Errc::integrity, "staged word failed on the bare product");
    x = *y;
  }
  require(x == fwd.target(), Errc::integrity,
          "staged word missed the distinguished pair on the bare product");

  Word wj = to_u_sequence(fwd, fwd.anchor(), cap).word();
  Elem y = bwd.anchor();
  for (int i : wj) {
    std::optional<Elem> z = to_u.lowering ? bwd.product().f(i, y) : bwd.product().e(i, y);
    require(z.has_value(), Errc::integrity, "anchor word undefined on the exchanged product");
    y = *z;
  }
  for (auto it = wi.rbegin(); it != wi.rend(); ++it) {
    std::optional<Elem> z = to_u.lowering ? bwd.product().e(*it, y) : bwd.product().f(*it, y);
    require(z.has_value(), Errc::integrity, "return word undefined on the exchanged product");
    y = *z;
  }
  return y;
}

const Elem& RMap::apply(const Elem& b) const {
  auto it = image.find(b);
  require(it != image.end(), Errc::invalid_argument, "element outside the paired product");
  return it->second;
}

std::string RMap::json() const {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [from, to] : image) a.push_back({from.str(), to.str()});
  return a.dump();
}

RMap oracle_R(const TensorPair& fwd, const TensorPair& bwd) {
  check_exchanged(fwd, bwd);
  const CrystalGraph& g = fwd.graph();
  const CrystalGraph& h = bwd.graph();
  require(g.colors == h.colors, Errc::integrity, "the two products carry different color sets");
  require(g.size() == h.size(), Errc::integrity, "the two products have different sizes");

  int a0 = g.index_of(fwd.anchor());
  int b0 = h.index_of(bwd.anchor());
  require(a0 >= 0 && b0 >= 0, Errc::integrity, "an anchor is missing from its own graph");

  std::vector<int> match(g.size(), -1);
  std::deque<int> queue;
  auto link = [&](int va, int vb) {
    if (match[static_cast<std::size_t>(va)] < 0) {
      match[static_cast<std::size_t>(va)] = vb;
      queue.push_back(va);
      return;
    }
    require(match[static_cast<std::size_t>(va)] == vb, Errc::integrity,
            "edge propagation assigns two images to one element");
  };
  link(a0, b0);
  while (!queue.empty()) {
    int va = queue.front();
    queue.pop_front();
    int vb = match[static_cast<std::size_t>(va)];
    require(g.weights[static_cast<std::size_t>(va)] == h.weights[static_cast<std::size_t>(vb)],
            Errc::integrity, "weight mismatch between paired elements");
    for (std::size_t ci = 0; ci < g.colors.size(); ++ci) {
      int fa = g.fmap[static_cast<std::size_t>(va)][ci];
      int fb = h.fmap[static_cast<std::size_t>(vb)][ci];
      require((fa < 0) == (fb < 0), Errc::integrity,
              "lowering arrows disagree at color " + std::to_string(g.colors[ci]));
      if (fa >= 0) link(fa, fb);
      int ea = g.emap[static_cast<std::size_t>(va)][ci];
      int eb = h.emap[static_cast<std::size_t>(vb)][ci];
      require((ea < 0) == (eb < 0), Errc::integrity,
              "raising arrows disagree at color " + std::to_string(g.colors[ci]));
      if (ea >= 0) link(ea, eb);
    }
  }

  RMap out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    require(match[v] >= 0, Errc::integrity,
            "the pairing does not cover the product (is it connected?)");
    out.image[g.nodes[v]] = h.nodes[static_cast<std::size_t>(match[v])];
  }
  return out;
}

} /* namespace krlab */
