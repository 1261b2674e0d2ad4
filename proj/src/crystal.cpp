#include "krlab/crystal.hpp"

#include "krlab/rank2.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

namespace krlab {

/* ---------------- tableaux ---------------- */

std::vector<int> Tableau::shape() const {
  std::vector<int> s;
  for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
  return s;
}

std::vector<int> Tableau::column_word() const {
  std::vector<int> w;
  std::size_t width = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < width; ++c)
    for (std::size_t r = rows.size(); r-- > 0;)
      if (c < rows[r].size()) w.push_back(rows[r][c]);
  return w;
}

void Tableau::validate(int max_entry) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(!rows[r].empty(), Errc::invalid_argument, "empty tableau row");
    require(r == 0 || rows[r].size() <= rows[r - 1].size(), Errc::invalid_argument,
            "tableau row lengths must weakly decrease");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      int v = rows[r][c];
      require(v >= 1, Errc::invalid_argument, "tableau entries start at 1");
      require(max_entry <= 0 || v <= max_entry, Errc::invalid_argument,
              "tableau entry " + std::to_string(v) + " exceeds alphabet");
      require(c == 0 || rows[r][c - 1] <= v, Errc::invalid_argument,
              "tableau rows must weakly increase");
      require(r == 0 || rows[r - 1][c] < v, Errc::invalid_argument,
              "tableau columns must strictly increase");
    }
  }
}

std::string Tableau::str() const {
  if (rows.empty()) return "()";
  std::string s;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) s += '/';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) s += ',';
      s += std::to_string(rows[r][c]);
    }
  }
  return s;
}

Tableau Tableau::parse(const std::string& s) {
  Tableau t;
  if (s.empty() || s == "()") return t;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find('/', pos);
    std::string row = s.substr(pos, next == std::string::npos ? next : next - pos);
    std::vector<int> entries;
    std::size_t p = 0;
    while (p <= row.size()) {
      std::size_t q = row.find(',', p);
      std::string tok = row.substr(p, q == std::string::npos ? q : q - p);
      require(!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos,
              Errc::invalid_argument, "bad tableau entry '" + tok + "'");
      entries.push_back(std::stoi(tok));
      if (q == std::string::npos) break;
      p = q + 1;
    }
    t.rows.push_back(std::move(entries));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  t.validate(0);
  return t;
}

/* ---------------- elements ---------------- */

Elem Elem::tableau(Tableau t) {
  Elem x;
  x.kind = Kind::tab;
  x.leaf = std::move(t);
  return x;
}

Elem Elem::tensor(std::vector<Elem> fs) {
  require(!fs.empty(), Errc::invalid_argument, "tensor of zero factors");
  Elem x;
  x.kind = Kind::tensor;
  x.factors = std::move(fs);
  return x;
}

Elem Elem::formal(AffineWeight lambda) {
  Elem x;
  x.kind = Kind::formal;
  x.hw = std::move(lambda);
  return x;
}

Elem Elem::formal_dual(AffineWeight lambda) {
  Elem x;
  x.kind = Kind::formal_dual;
  x.hw = std::move(lambda);
  return x;
}

bool Elem::operator==(const Elem& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::tab: return leaf == o.leaf;
    case Kind::tensor: return factors == o.factors;
    default: return hw == o.hw;
  }
}

bool Elem::operator<(const Elem& o) const {
  if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
  switch (kind) {
    case Kind::tab: return leaf < o.leaf;
    case Kind::tensor: return factors < o.factors;
    default: return hw < o.hw;
  }
}

std::string Elem::str() const {
  switch (kind) {
    case Kind::tab: return leaf.str();
    case Kind::tensor: {
      std::string s;
      for (std::size_t m = 0; m < factors.size(); ++m) {
        if (m) s += '*';
        std::string fs = factors[m].str();
        s += factors[m].kind == Kind::tensor ? "(" + fs + ")" : fs;
      }
      return s;
    }
    case Kind::formal: return "u" + hw.str();
    default: return "u*" + hw.str();
  }
}

/* ---------------- crystal interface ---------------- */

std::optional<Elem> Crystal::f(int i, const Elem& b, bool* formal_hit) const {
  if (formal_hit) *formal_hit = false;
  return do_f(i, b, formal_hit);
}

std::optional<Elem> Crystal::e(int i, const Elem& b, bool* formal_hit) const {
  if (formal_hit) *formal_hit = false;
  return do_e(i, b, formal_hit);
}

AffineWeight Crystal::eps_vec(const Elem& b) const {
  AffineWeight w = datum().zero_weight();
  for (int i : colors()) w += Rat(eps(i, b)) * datum().fundamental(i);
  return w;
}

AffineWeight Crystal::phi_vec(const Elem& b) const {
  AffineWeight w = datum().zero_weight();
  for (int i : colors()) w += Rat(phi(i, b)) * datum().fundamental(i);
  return w;
}

Elem Crystal::reflect(int i, const Elem& b) const {
  long long k = phi(i, b) - eps(i, b);
  Elem cur = b;
  for (long long t = 0; t < k; ++t) {
    auto r = f(i, cur);
    require(r.has_value(), Errc::integrity, "string ended before phi - eps lowerings");
    cur = *r;
  }
  for (long long t = 0; t < -k; ++t) {
    auto r = e(i, cur);
    require(r.has_value(), Errc::integrity, "string ended before eps - phi raisings");
    cur = *r;
  }
  return cur;
}

/* ---------------- leaf crystals ---------------- */

static const Tableau& as_leaf(const Elem& b) {
  require(b.kind == Elem::Kind::tab, Errc::invalid_argument,
          "expected a bare tableau element, got " + b.str());
  return b.leaf;
}

std::optional<Elem> LeafCrystal::do_f(int i, const Elem& b, bool*) const {
  auto r = leaf_f(i, as_leaf(b));
  if (!r) return std::nullopt;
  return Elem::tableau(std::move(*r));
}

std::optional<Elem> LeafCrystal::do_e(int i, const Elem& b, bool*) const {
  auto r = leaf_e(i, as_leaf(b));
  if (!r) return std::nullopt;
  return Elem::tableau(std::move(*r));
}

long long LeafCrystal::eps(int i, const Elem& b) const { return leaf_eps(i, as_leaf(b)); }
long long LeafCrystal::phi(int i, const Elem& b) const { return leaf_phi(i, as_leaf(b)); }
AffineWeight LeafCrystal::weight(const Elem& b) const { return leaf_weight(as_leaf(b)); }

/* ---------------- formal placeholders ---------------- */

static bool is_formal(const Elem& b) {
  require(b.kind == Elem::Kind::formal || b.kind == Elem::Kind::formal_dual,
          Errc::invalid_argument, "expected a formal element, got " + b.str());
  return b.kind == Elem::Kind::formal;
}

std::vector<int> FormalCrystal::colors() const {
  std::vector<int> cs(d_.nodes());
  for (int i = 0; i < d_.nodes(); ++i) cs[i] = i;
  return cs;
}

static long long formal_coord(const AffineWeight& hw, int i) {
  require(i >= 0 && i < static_cast<int>(hw.lam.size()), Errc::invalid_argument,
          "color out of range for formal element");
  long long v = rat_ll(hw.lam[i]);
  require(v >= 0, Errc::invalid_argument, "formal element needs a dominant weight");
  return v;
}

std::optional<Elem> FormalCrystal::do_f(int i, const Elem& b, bool* hit) const {
  if (is_formal(b) && hit && formal_coord(b.hw, i) > 0) *hit = true;
  return std::nullopt;
}

std::optional<Elem> FormalCrystal::do_e(int i, const Elem& b, bool* hit) const {
  if (!is_formal(b) && hit && formal_coord(b.hw, i) > 0) *hit = true;
  return std::nullopt;
}

long long FormalCrystal::eps(int i, const Elem& b) const {
  return is_formal(b) ? 0 : formal_coord(b.hw, i);
}

long long FormalCrystal::phi(int i, const Elem& b) const {
  return is_formal(b) ? formal_coord(b.hw, i) : 0;
}

AffineWeight FormalCrystal::weight(const Elem& b) const {
  return is_formal(b) ? b.hw : -b.hw;
}

/* ---------------- tensor products ---------------- */

ProductCrystal::ProductCrystal(const CartanDatum& d, std::vector<const Crystal*> parts)
    : d_(d), parts_(std::move(parts)) {
  require(!parts_.empty(), Errc::invalid_argument, "tensor of zero crystals");
  for (const Crystal* p : parts_)
    require(&p->datum() == &d_, Errc::invalid_argument,
            "tensor factors live over different Cartan data");
}

const std::vector<Elem>& ProductCrystal::parts_of(const Elem& b) const {
  require(b.kind == Elem::Kind::tensor, Errc::invalid_argument,
          "expected a tensor element, got " + b.str());
  require(b.factors.size() == parts_.size(), Errc::invalid_argument,
          "tensor arity mismatch");
  return b.factors;
}

void ProductCrystal::prefix_stats(int i, const std::vector<Elem>& fs,
                                  std::vector<long long>& eps_pre,
                                  std::vector<long long>& phi_pre) const {
  std::size_t k = fs.size();
  eps_pre.resize(k);
  phi_pre.resize(k);
  for (std::size_t m = 0; m < k; ++m) {
    long long fe = parts_[m]->eps(i, fs[m]);
    long long fp = parts_[m]->phi(i, fs[m]);
    if (m == 0) {
      eps_pre[0] = fe;
      phi_pre[0] = fp;
    } else {
      eps_pre[m] = fe + std::max(0LL, eps_pre[m - 1] - fp);
      phi_pre[m] = phi_pre[m - 1] + std::max(0LL, fp - eps_pre[m - 1]);
    }
  }
}

std::optional<Elem> ProductCrystal::do_f(int i, const Elem& b, bool* hit) const {
  const auto& fs = parts_of(b);
  std::vector<long long> E, P;
  prefix_stats(i, fs, E, P);
  std::size_t j = fs.size() - 1;
  while (j > 0 && E[j - 1] >= parts_[j]->phi(i, fs[j])) --j;
  auto r = parts_[j]->f(i, fs[j], hit);
  if (!r) return std::nullopt;
  auto out = fs;
  out[j] = std::move(*r);
  return Elem::tensor(std::move(out));
}

std::optional<Elem> ProductCrystal::do_e(int i, const Elem& b, bool* hit) const {
  const auto& fs = parts_of(b);
  std::vector<long long> E, P;
  prefix_stats(i, fs, E, P);
  std::size_t j = fs.size() - 1;
  while (j > 0 && E[j - 1] > parts_[j]->phi(i, fs[j])) --j;
  auto r = parts_[j]->e(i, fs[j], hit);
  if (!r) return std::nullopt;
  auto out = fs;
  out[j] = std::move(*r);
  return Elem::tensor(std::move(out));
}

long long ProductCrystal::eps(int i, const Elem& b) const {
  std::vector<long long> E, P;
  prefix_stats(i, parts_of(b), E, P);
  return E.back();
}

long long ProductCrystal::phi(int i, const Elem& b) const {
  std::vector<long long> E, P;
  prefix_stats(i, parts_of(b), E, P);
  return P.back();
}

AffineWeight ProductCrystal::weight(const Elem& b) const {
  const auto& fs = parts_of(b);
  AffineWeight w = d_.zero_weight();
  for (std::size_t m = 0; m < fs.size(); ++m) w += parts_[m]->weight(fs[m]);
  return w;
}

std::string ProductCrystal::display(const Elem& b) const {
  const auto& fs = parts_of(b);
  std::string s;
  for (std::size_t m = 0; m < fs.size(); ++m) {
    if (m) s += '*';
    std::string fsd = parts_[m]->display(fs[m]);
    s += fs[m].kind == Elem::Kind::tensor ? "(" + fsd + ")" : fsd;
  }
  return s;
}

/* ---------------- graph generation ---------------- */

std::size_t default_node_cap() {
  const char* s = std::getenv("KRLAB_NODE_CAP");
  if (!s) return 1000000;
  std::string v(s);
  require(!v.empty() && v.find_first_not_of("0123456789") == std::string::npos,
          Errc::invalid_argument, "KRLAB_NODE_CAP must be a positive integer");
  unsigned long long cap = std::stoull(v);
  require(cap > 0, Errc::invalid_argument, "KRLAB_NODE_CAP must be a positive integer");
  return static_cast<std::size_t>(cap);
}

int CrystalGraph::color_index(int c) const {
  for (std::size_t k = 0; k < colors.size(); ++k)
    if (colors[k] == c) return static_cast<int>(k);
  fail(Errc::invalid_argument, "color " + std::to_string(c) + " not in graph");
}

int CrystalGraph::index_of(const Elem& b) const {
  auto it = index.find(b);
  return it == index.end() ? -1 : it->second;
}

CrystalGraph generate(const Crystal& c, const std::vector<Elem>& seeds,
                      const std::vector<int>& colors, std::size_t cap) {
  const CartanDatum& d = c.datum();
  require(!seeds.empty(), Errc::invalid_argument, "no seed elements");
  require(!colors.empty(), Errc::invalid_argument, "no colors");
  std::set<int> cseen;
  for (int i : colors) {
    require(i >= 0 && i < d.nodes(), Errc::invalid_argument, "color out of range");
    require(cseen.insert(i).second, Errc::invalid_argument, "duplicate color");
  }

  std::set<Elem> seen(seeds.begin(), seeds.end());
  std::deque<Elem> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    Elem cur = std::move(todo.front());
    todo.pop_front();
    for (int i : colors) {
      for (int dir = 0; dir < 2; ++dir) {
        auto r = dir == 0 ? c.f(i, cur) : c.e(i, cur);
        if (r && seen.insert(*r).second) {
          require(seen.size() <= cap, Errc::cap_exceeded,
                  "node cap " + std::to_string(cap) + " exceeded");
          todo.push_back(std::move(*r));
        }
      }
    }
  }

  CrystalGraph g;
  g.colors = colors;
  g.nodes.assign(seen.begin(), seen.end());
  std::stable_sort(g.nodes.begin(), g.nodes.end(), [&](const Elem& a, const Elem& b) {
    return c.display(a) < c.display(b);
  });
  for (const Elem& b : g.nodes) g.labels.push_back(c.display(b));
  for (std::size_t v = 0; v + 1 < g.labels.size(); ++v)
    require(g.labels[v] != g.labels[v + 1], Errc::integrity,
            "duplicate node label " + g.labels[v]);
  for (std::size_t v = 0; v < g.nodes.size(); ++v)
    g.index.emplace(g.nodes[v], static_cast<int>(v));

  std::size_t nc = colors.size();
  g.fmap.assign(g.size(), std::vector<int>(nc, -1));
  g.emap.assign(g.size(), std::vector<int>(nc, -1));
  g.eps.assign(g.size(), std::vector<long long>(nc, 0));
  g.phi.assign(g.size(), std::vector<long long>(nc, 0));
  for (std::size_t v = 0; v < g.size(); ++v) {
    g.weights.push_back(c.weight(g.nodes[v]));
    for (std::size_t ci = 0; ci < nc; ++ci) {
      int i = colors[ci];
      g.eps[v][ci] = c.eps(i, g.nodes[v]);
      g.phi[v][ci] = c.phi(i, g.nodes[v]);
      if (auto r = c.f(i, g.nodes[v])) {
        int to = g.index_of(*r);
        require(to >= 0, Errc::integrity, "closure missed a lowering image");
        g.fmap[v][ci] = to;
      }
      if (auto r = c.e(i, g.nodes[v])) {
        int to = g.index_of(*r);
        require(to >= 0, Errc::integrity, "closure missed a raising image");
        g.emap[v][ci] = to;
      }
    }
  }
  return g;
}

/* ---------------- structural checks ---------------- */

std::vector<std::string> check_axioms(const Crystal& c, const CrystalGraph& g) {
  std::vector<std::string> out;
  const CartanDatum& d = c.datum();
  auto note = [&](std::size_t v, int i, const std::string& what) {
    out.push_back("node " + g.labels[v] + ", color " + std::to_string(i) + ": " + what);
  };
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t ci = 0; ci < g.colors.size(); ++ci) {
      int i = g.colors[ci];
      bool fdef = g.fmap[v][ci] >= 0, edef = g.emap[v][ci] >= 0;
      if (fdef != (g.phi[v][ci] > 0)) note(v, i, "f defined iff phi > 0 fails");
      if (edef != (g.eps[v][ci] > 0)) note(v, i, "e defined iff eps > 0 fails");
      if (fdef) {
        int to = g.fmap[v][ci];
        if (g.emap[to][ci] != static_cast<int>(v)) note(v, i, "e(f(b)) != b");
        if (!(g.weights[v] - d.alpha(i)).same_mod_delta(g.weights[to]))
          note(v, i, "wt(f(b)) != wt(b) - alpha");
      }
      if (edef) {
        int to = g.emap[v][ci];
        if (g.fmap[to][ci] != static_cast<int>(v)) note(v, i, "f(e(b)) != b");
      }
      if (g.weights[v].lam[i] != Rat(g.phi[v][ci] - g.eps[v][ci]))
        note(v, i, "<alpha_i^, wt> != phi - eps");
      long long cnt = 0;
      for (int x = static_cast<int>(v); g.emap[x][ci] >= 0;) {
        x = g.emap[x][ci];
        if (++cnt > static_cast<long long>(g.size())) break;
      }
      if (cnt != g.eps[v][ci]) note(v, i, "eps differs from walked string length");
      cnt = 0;
      for (int x = static_cast<int>(v); g.fmap[x][ci] >= 0;) {
        x = g.fmap[x][ci];
        if (++cnt > static_cast<long long>(g.size())) break;
      }
      if (cnt != g.phi[v][ci]) note(v, i, "phi differs from walked string length");
    }
  }
  return out;
}

std::vector<std::vector<int>> components(const CrystalGraph& g,
                                         const std::vector<int>& K) {
  std::vector<int> ki;
  for (int c : K) ki.push_back(g.color_index(c));
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<int>> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> cur;
    std::deque<int> todo{static_cast<int>(v)};
    comp[v] = static_cast<int>(out.size());
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop_front();
      cur.push_back(x);
      for (int ci : ki) {
        for (int y : {g.fmap[x][ci], g.emap[x][ci]}) {
          if (y >= 0 && comp[y] < 0) {
            comp[y] = comp[x];
            todo.push_back(y);
          }
        }
      }
    }
    std::sort(cur.begin(), cur.end());
    out.push_back(std::move(cur));
  }
  return out;
}

std::vector<int> highest_nodes(const CrystalGraph& g, const std::vector<int>& K) {
  std::vector<int> ki;
  for (int c : K) ki.push_back(g.color_index(c));
  std::vector<int> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    bool high = true;
    for (int ci : ki) high = high && g.eps[v][ci] == 0;
    if (high) out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<std::string> regularity_check(const CrystalGraph& g,
                                          const CartanDatum& d) {
  std::vector<std::string> out;
  for (std::size_t a = 0; a < g.colors.size(); ++a) {
    for (std::size_t b = a + 1; b < g.colors.size(); ++b) {
      int i = g.colors[a], j = g.colors[b];
      long long aij = d.A[i][j], aji = d.A[j][i];
      if (aij * aji > 3) continue; /* infinite rank-2 subsystem */
      auto tag = [&](const std::string& what) {
        out.push_back("colors {" + std::to_string(i) + "," + std::to_string(j) +
                      "}: " + what);
      };
      for (const auto& comp : components(g, {i, j})) {
        std::vector<int> highs;
        for (int v : comp)
          if (g.eps[v][a] == 0 && g.eps[v][b] == 0) highs.push_back(v);
        if (highs.size() != 1) {
          tag("component of " + g.labels[comp[0]] + " has " +
              std::to_string(highs.size()) + " highest nodes");
          continue;
        }
        int h = highs[0];
        Rank2Graph ref = rank2_reference(aij, aji, g.phi[h][a], g.phi[h][b]);
        if (comp.size() != ref.size()) {
          tag("component of " + g.labels[h] + " has " + std::to_string(comp.size()) +
              " nodes, reference has " + std::to_string(ref.size()));
          continue;
        }
        std::map<int, int> fwd{{h, ref.root}}, bwd{{ref.root, h}};
        std::deque<int> todo{h};
        bool bad = false;
        while (!todo.empty() && !bad) {
          int x = todo.front();
          todo.pop_front();
          int y = fwd[x];
          for (int axis = 0; axis < 2 && !bad; ++axis) {
            std::size_t ci = axis == 0 ? a : b;
            if (g.eps[x][ci] != ref.eps[y][axis] || g.phi[x][ci] != ref.phi[y][axis]) {
              tag("string data differs from reference at " + g.labels[x]);
              bad = true;
              break;
            }
            for (int dir = 0; dir < 2 && !bad; ++dir) {
              int tx = dir == 0 ? g.fmap[x][ci] : g.emap[x][ci];
              int ty = dir == 0 ? ref.fmap[y][axis] : ref.emap[y][axis];
              if ((tx >= 0) != (ty >= 0)) {
                tag("arrow pattern differs from reference at " + g.labels[x]);
                bad = true;
              } else if (tx >= 0) {
                auto it = fwd.find(tx);
                auto jt = bwd.find(ty);
                if (it == fwd.end() && jt == bwd.end()) {
                  fwd[tx] = ty;
                  bwd[ty] = tx;
                  todo.push_back(tx);
                } else if (it == fwd.end() || jt == bwd.end() || it->second != ty) {
                  tag("arrows collide with reference at " + g.labels[x]);
                  bad = true;
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

/* ---------------- graph transforms ---------------- */

CrystalGraph dual_graph(const CrystalGraph& g) {
  CrystalGraph h = g;
  std::swap(h.fmap, h.emap);
  std::swap(h.eps, h.phi);
  for (std::size_t v = 0; v < h.size(); ++v) h.weights[v] = -g.weights[v];
  return h;
}

CrystalGraph twist_graph(const CrystalGraph& g, const DynkinAut& sigma,
                         const CartanDatum& d) {
  require(sigma.perm.size() == static_cast<std::size_t>(d.nodes()),
          Errc::invalid_argument, "automorphism rank mismatch");
  CrystalGraph h = g;
  for (std::size_t ci = 0; ci < g.colors.size(); ++ci) {
    int si = sigma.perm[g.colors[ci]];
    int sci = h.color_index(si); /* fails if the recolored set is different */
    for (std::size_t v = 0; v < g.size(); ++v) {
      h.fmap[v][sci] = g.fmap[v][ci];
      h.emap[v][sci] = g.emap[v][ci];
      h.eps[v][sci] = g.eps[v][ci];
      h.phi[v][sci] = g.phi[v][ci];
    }
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    require(d.level(g.weights[v]) == 0 && g.weights[v].del == 0, Errc::unsupported,
            "twist expects level-zero weights");
    h.weights[v] = d.section(level_zero_action(d, sigma, d.cl(g.weights[v])));
  }
  return h;
}

/* ---------------- serialization ---------------- */

static std::vector<std::array<long long, 3>> sorted_edges(const CrystalGraph& g) {
  std::vector<std::array<long long, 3>> es;
  for (std::size_t v = 0; v < g.size(); ++v)
    for (std::size_t ci = 0; ci < g.colors.size(); ++ci)
      if (g.fmap[v][ci] >= 0)
        es.push_back({static_cast<long long>(v), g.colors[ci], g.fmap[v][ci]});
  std::sort(es.begin(), es.end());
  return es;
}

std::string graph_json(const CrystalGraph& g) {
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    nlohmann::ordered_json w;
    nlohmann::ordered_json lam = nlohmann::ordered_json::array();
    for (const Rat& x : g.weights[v].lam) lam.push_back(rat_str(x));
    w["lambda"] = lam;
    w["delta"] = rat_str(g.weights[v].del);
    nodes.push_back({{"label", g.labels[v]}, {"weight", w}});
  }
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : sorted_edges(g))
    edges.push_back({{"from", e[0]}, {"to", e[2]}, {"color", e[1]}});
  nlohmann::ordered_json j;
  j["nodes"] = nodes;
  j["edges"] = edges;
  return j.dump();
}

std::string graph_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    os << "  n" << v << " [label=\"" << g.labels[v] << "\"];\n";
  for (const auto& e : sorted_edges(g))
    os << "  n" << e[0] << " -> n" << e[2] << " [label=\"" << e[1] << "\"];\n";
  os << "}\n";
  return os.str();
}

} /* namespace krlab */
