#include "krlab/kr_a.hpp"

#include <algorithm>
#include <map>

namespace krlab {

namespace {

constexpr int kHole = 0;

/* slide one hole toward the upper left: repeatedly swap it with the larger of
   its upper and left neighbors (upper on ties, the only choice that keeps
   columns strict) until neither exists */
void slide_up(std::vector<std::vector<int>>& g, std::size_t r, std::size_t c) {
  for (;;) {
    bool has_up = r > 0 && g[r - 1][c] != kHole;
    bool has_left = c > 0 && g[r][c - 1] != kHole;
    if (has_up && (!has_left || g[r - 1][c] >= g[r][c - 1])) {
      std::swap(g[r][c], g[r - 1][c]);
      --r;
    } else if (has_left) {
      std::swap(g[r][c], g[r][c - 1]);
      --c;
    } else {
      return;
    }
  }
}

/* mirror image: swap with the smaller of the lower and right neighbors, the
   lower one on ties */
void slide_down(std::vector<std::vector<int>>& g, std::size_t r, std::size_t c) {
  for (;;) {
    bool has_down = r + 1 < g.size() && c < g[r + 1].size() && g[r + 1][c] != kHole;
    bool has_right = c + 1 < g[r].size() && g[r][c + 1] != kHole;
    if (has_down && (!has_right || g[r + 1][c] <= g[r][c + 1])) {
      std::swap(g[r][c], g[r + 1][c]);
      ++r;
    } else if (has_right) {
      std::swap(g[r][c], g[r][c + 1]);
      ++c;
    } else {
      return;
    }
  }
}

} /* namespace */

Tableau promotion(const Tableau& t, int n) {
  require(n >= 1, Errc::invalid_argument, "rank must be positive");
  t.validate(n + 1);
  std::vector<std::vector<int>> g = t.rows;

  /* holes sit in distinct columns, lower holes strictly to the left; sliding
     them in ascending column order keeps the remaining entries semistandard */
  std::vector<std::pair<std::size_t, std::size_t>> holes;
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t c = 0; c < g[r].size(); ++c)
      if (g[r][c] == n + 1) {
        g[r][c] = kHole;
        holes.emplace_back(r, c);
      }
  std::sort(holes.begin(), holes.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  for (const auto& [r, c] : holes) slide_up(g, r, c);

  Tableau out;
  out.rows = std::move(g);
  for (auto& row : out.rows)
    for (int& v : row) v = v == kHole ? 1 : v + 1;
  out.validate(n + 1);
  return out;
}

Tableau promotion_inverse(const Tableau& t, int n) {
  require(n >= 1, Errc::invalid_argument, "rank must be positive");
  t.validate(n + 1);
  std::vector<std::vector<int>> g = t.rows;

  /* all letters 1 sit at the start of the top row; slide right to left */
  std::vector<std::pair<std::size_t, std::size_t>> holes;
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t c = 0; c < g[r].size(); ++c)
      if (g[r][c] == 1) {
        g[r][c] = kHole;
        holes.emplace_back(r, c);
      }
  std::sort(holes.begin(), holes.end(),
            [](const auto& a, const auto& b) { return a.second > b.second; });
  for (const auto& [r, c] : holes) slide_down(g, r, c);

  Tableau out;
  out.rows = std::move(g);
  for (auto& row : out.rows)
    for (int& v : row) v = v == kHole ? n + 1 : v - 1;
  out.validate(n + 1);
  return out;
}

KrCrystalA::KrCrystalA(const CartanDatum& d, int r, int s) : d_(d), r_(r), s_(s) {
  require(d.type.family == AffineFamily::a_untwisted, Errc::unsupported,
          "rectangular crystals with zero arrows are implemented for type A only");
  require(r >= 1 && r <= d.n, Errc::invalid_argument, "row count outside 1..n");
  require(s >= 1, Errc::invalid_argument, "column count must be positive");
}

std::vector<int> KrCrystalA::colors() const {
  std::vector<int> out;
  for (int i = 0; i <= d_.n; ++i) out.push_back(i);
  return out;
}

std::string KrCrystalA::display(const Elem& b) const {
  require(b.kind == Elem::Kind::tab, Errc::invalid_argument, "tableau element expected");
  return row_word(b.leaf);
}

Elem KrCrystalA::generator() const {
  return Elem::tableau(yamanouchi(Partition::rectangle(r_, s_)));
}

std::vector<Tableau> KrCrystalA::all_elements() const {
  return enumerate_ssyt(Partition::rectangle(r_, s_), d_.n + 1);
}

CrystalGraph KrCrystalA::graph(std::size_t cap) const {
  return generate(*this, {generator()}, colors(), cap);
}

void KrCrystalA::check_element(const Tableau& t) const {
  t.validate(d_.n + 1);
  require(static_cast<int>(t.rows.size()) == r_ && static_cast<int>(t.rows[0].size()) == s_,
          Errc::invalid_argument, "element shape differs from the rectangle");
}

std::optional<Tableau> KrCrystalA::leaf_f(int i, const Tableau& t) const {
  check_element(t);
  require(i >= 0 && i <= d_.n, Errc::invalid_argument, "color outside the affine range");
  if (i != 0) return tableau_f(i, t);
  std::optional<Tableau> x = tableau_f(1, promotion(t, d_.n));
  if (!x) return std::nullopt;
  return promotion_inverse(*x, d_.n);
}

std::optional<Tableau> KrCrystalA::leaf_e(int i, const Tableau& t) const {
  check_element(t);
  require(i >= 0 && i <= d_.n, Errc::invalid_argument, "color outside the affine range");
  if (i != 0) return tableau_e(i, t);
  std::optional<Tableau> x = tableau_e(1, promotion(t, d_.n));
  if (!x) return std::nullopt;
  return promotion_inverse(*x, d_.n);
}

long long KrCrystalA::leaf_eps(int i, const Tableau& t) const {
  check_element(t);
  require(i >= 0 && i <= d_.n, Errc::invalid_argument, "color outside the affine range");
  return i == 0 ? tableau_eps(1, promotion(t, d_.n)) : tableau_eps(i, t);
}

long long KrCrystalA::leaf_phi(int i, const Tableau& t) const {
  check_element(t);
  require(i >= 0 && i <= d_.n, Errc::invalid_argument, "color outside the affine range");
  return i == 0 ? tableau_phi(1, promotion(t, d_.n)) : tableau_phi(i, t);
}

AffineWeight KrCrystalA::leaf_weight(const Tableau& t) const {
  check_element(t);
  return d_.section(content_weight(d_, t));
}

Elem find_u(const CrystalGraph& g, const CartanDatum& d, int r, int s) {
  require(r >= 1 && r <= d.n && s >= 1, Errc::invalid_argument, "labels outside range");
  require(static_cast<int>(g.colors.size()) == d.nodes(), Errc::invalid_argument,
          "the scan needs the full affine color set");
  const WeylGroup& w = WeylGroup::get(d.type);
  ClassicalWeight mu = Rat(d.c[static_cast<std::size_t>(r)]) * w.star(d.omega(r));
  auto fac = w.factor_sigma(w.translation(d.section(-mu)));
  int tau0 = w.tau(fac.tau_node).perm[0];

  long long found = -1;
  for (std::size_t v = 0; v < g.size(); ++v) {
    bool ok = true;
    for (std::size_t ci = 0; ci < g.colors.size() && ok; ++ci) {
      int color = g.colors[ci];
      ok = g.eps[v][ci] == (color == 0 ? s : 0) && g.phi[v][ci] == (color == tau0 ? s : 0);
    }
    if (!ok) continue;
    require(found < 0, Errc::falsified, "several elements carry the distinguished eps/phi profile");
    found = static_cast<long long>(v);
  }
  require(found >= 0, Errc::falsified, "no element carries the distinguished eps/phi profile");
  return g.nodes[static_cast<std::size_t>(found)];
}

std::vector<std::string> convex_hull_check(const CrystalGraph& g, const ClassicalWeight& mu,
                                           const CartanDatum& d) {
  require(d.dominant(mu), Errc::invalid_argument, "hull vertex weight must be dominant");
  std::vector<std::string> out;
  std::map<ClassicalWeight, long long> counts;
  for (std::size_t v = 0; v < g.size(); ++v) ++counts[d.cl(g.weights[v])];
  for (const auto& [x, cnt] : counts) {
    ClassicalWeight dom = x;
    int guard = 0;
    while (!d.dominant(dom)) {
      require(++guard <= 100000, Errc::integrity, "dominance walk failed to terminate");
      for (int i = 1; i <= d.n; ++i)
        if (dom.om[static_cast<std::size_t>(i - 1)] < 0) {
          dom = d.reflect(i, dom);
          break;
        }
    }
    bool inside = true;
    for (const Rat& c : d.root_expansion(d.section(mu - dom)))
      inside = inside && c >= 0;
    if (!inside) out.push_back("weight " + x.str() + " falls outside the hull");
    if (dom == mu && cnt != 1)
      out.push_back("extremal weight " + x.str() + " carries " + std::to_string(cnt) +
                    " elements");
  }
  return out;
}

} /* namespace krlab */
