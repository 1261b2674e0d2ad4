#include "krlab/tableaux_a.hpp"

#include <algorithm>

namespace krlab {

Partition Partition::of(std::vector<int> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  for (std::size_t k = 0; k < p.size(); ++k) {
    require(p[k] > 0, Errc::invalid_argument, "partition parts must be positive");
    require(k == 0 || p[k - 1] >= p[k], Errc::invalid_argument,
            "partition parts must weakly decrease");
  }
  Partition out;
  out.parts = std::move(p);
  return out;
}

Partition Partition::rectangle(int r, int s) {
  require(r >= 0 && s >= 0, Errc::invalid_argument, "rectangle sides must be nonnegative");
  if (r == 0 || s == 0) return Partition{};
  return of(std::vector<int>(static_cast<std::size_t>(r), s));
}

long long Partition::cells() const {
  long long n = 0;
  for (int p : parts) n += p;
  return n;
}

std::string Partition::str() const {
  if (parts.empty()) return "()";
  std::string s = "(";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts[k]);
  }
  return s + ")";
}

namespace {

/* unbracketed letters i (plus) and i+1 (minus) of the column word, as cell
   coordinates in word order; each i is bracketed by the latest free i+1
   preceding it, exactly parenthesis matching with i+1 opening and i closing */
struct FreeLetters {
  std::vector<std::pair<int, int>> plus;  /* cells holding an unbracketed i */
  std::vector<std::pair<int, int>> minus; /* cells holding an unbracketed i+1 */
};

FreeLetters scan(int i, const Tableau& t) {
  FreeLetters out;
  std::size_t width = t.rows.empty() ? 0 : t.rows[0].size();
  for (std::size_t c = 0; c < width; ++c)
    for (std::size_t r = t.rows.size(); r-- > 0;) {
      if (c >= t.rows[r].size()) continue;
      int v = t.rows[r][c];
      if (v == i + 1) {
        out.minus.emplace_back(static_cast<int>(r), static_cast<int>(c));
      } else if (v == i) {
        if (!out.minus.empty())
          out.minus.pop_back(); /* this i is bracketed by the latest i+1 */
        else
          out.plus.emplace_back(static_cast<int>(r), static_cast<int>(c));
      }
    }
  return out;
}

Tableau flip_cell(const Tableau& t, std::pair<int, int> cell, int to) {
  Tableau out = t;
  out.rows[static_cast<std::size_t>(cell.first)][static_cast<std::size_t>(cell.second)] = to;
  int top = to;
  for (const auto& row : out.rows)
    for (int v : row) top = std::max(top, v);
  out.validate(top); /* the signature rule must preserve semistandardness */
  return out;
}

} /* namespace */

std::optional<Tableau> tableau_f(int i, const Tableau& t) {
  require(i >= 1, Errc::invalid_argument, "classical tableau color expected");
  FreeLetters fl = scan(i, t);
  if (fl.plus.empty()) return std::nullopt;
  return flip_cell(t, fl.plus.back(), i + 1); /* rightmost unbracketed i */
}

std::optional<Tableau> tableau_e(int i, const Tableau& t) {
  require(i >= 1, Errc::invalid_argument, "classical tableau color expected");
  FreeLetters fl = scan(i, t);
  if (fl.minus.empty()) return std::nullopt;
  return flip_cell(t, fl.minus.front(), i); /* leftmost unbracketed i+1 */
}

long long tableau_eps(int i, const Tableau& t) {
  require(i >= 1, Errc::invalid_argument, "classical tableau color expected");
  return static_cast<long long>(scan(i, t).minus.size());
}

long long tableau_phi(int i, const Tableau& t) {
  require(i >= 1, Errc::invalid_argument, "classical tableau color expected");
  return static_cast<long long>(scan(i, t).plus.size());
}

std::vector<long long> content(const Tableau& t, int max_entry) {
  std::vector<long long> cnt(static_cast<std::size_t>(max_entry), 0);
  for (const auto& row : t.rows)
    for (int v : row) {
      require(v >= 1 && v <= max_entry, Errc::invalid_argument, "entry outside the alphabet");
      ++cnt[static_cast<std::size_t>(v - 1)];
    }
  return cnt;
}

ClassicalWeight content_weight(const CartanDatum& d, const Tableau& t) {
  std::vector<long long> cnt = content(t, d.n + 1);
  ClassicalWeight w;
  w.om.assign(static_cast<std::size_t>(d.n), Rat(0));
  /* letter v carries omega_v - omega_{v-1}; omega_0 = omega_{n+1} = 0 */
  for (int v = 1; v <= d.n + 1; ++v) {
    Rat m(cnt[static_cast<std::size_t>(v - 1)]);
    if (m == 0) continue;
    if (v <= d.n) w.om[static_cast<std::size_t>(v - 1)] += m;
    if (v >= 2) w.om[static_cast<std::size_t>(v - 2)] -= m;
  }
  return w;
}

std::string row_word(const Tableau& t) {
  if (t.rows.empty()) return "()";
  std::vector<int> word;
  for (std::size_t r = t.rows.size(); r-- > 0;)
    for (int v : t.rows[r]) word.push_back(v);
  std::string s;
  for (std::size_t k = 0; k < word.size();) {
    std::size_t j = k;
    while (j < word.size() && word[j] == word[k]) ++j;
    if (!s.empty()) s += " ";
    s += std::to_string(word[k]);
    if (j - k > 1) s += "^" + std::to_string(j - k);
    k = j;
  }
  return s;
}

namespace {

void fill_cells(Tableau& t, std::size_t r, std::size_t c, int max_entry,
                std::vector<Tableau>& out) {
  if (r == t.rows.size()) {
    out.push_back(t);
    return;
  }
  std::size_t nr = r, nc = c + 1;
  if (nc == t.rows[r].size()) {
    nr = r + 1;
    nc = 0;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);                    /* rows weakly increase */
  if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);                /* columns strictly increase */
  for (int v = lo; v <= max_entry; ++v) {
    t.rows[r][c] = v;
    fill_cells(t, nr, nc, max_entry, out);
  }
}

} /* namespace */

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry) {
  require(max_entry >= 1, Errc::invalid_argument, "alphabet must be nonempty");
  Tableau t;
  for (int p : shape.parts) t.rows.emplace_back(static_cast<std::size_t>(p), 0);
  std::vector<Tableau> out;
  if (shape.rows() > max_entry) return out; /* a first column too tall admits no filling */
  fill_cells(t, 0, 0, max_entry, out);
  return out;
}

Tableau yamanouchi(const Partition& shape) {
  Tableau t;
  for (int r = 0; r < shape.rows(); ++r)
    t.rows.emplace_back(static_cast<std::size_t>(shape.parts[static_cast<std::size_t>(r)]),
                        r + 1);
  return t;
}

TableauCrystalA::TableauCrystalA(const CartanDatum& d) : d_(d) {
  require(d.type.family == AffineFamily::a_untwisted, Errc::unsupported,
          "tableau crystals are implemented for type A only");
}

std::vector<int> TableauCrystalA::colors() const {
  std::vector<int> out;
  for (int i = 1; i <= d_.n; ++i) out.push_back(i);
  return out;
}

std::string TableauCrystalA::display(const Elem& b) const {
  require(b.kind == Elem::Kind::tab, Errc::invalid_argument, "tableau element expected");
  return row_word(b.leaf);
}

std::optional<Tableau> TableauCrystalA::leaf_f(int i, const Tableau& t) const {
  require(i >= 1 && i <= d_.n, Errc::invalid_argument, "color outside the classical range");
  return tableau_f(i, t);
}

std::optional<Tableau> TableauCrystalA::leaf_e(int i, const Tableau& t) const {
  require(i >= 1 && i <= d_.n, Errc::invalid_argument, "color outside the classical range");
  return tableau_e(i, t);
}

long long TableauCrystalA::leaf_eps(int i, const Tableau& t) const {
  require(i >= 1 && i <= d_.n, Errc::invalid_argument, "color outside the classical range");
  return tableau_eps(i, t);
}

long long TableauCrystalA::leaf_phi(int i, const Tableau& t) const {
  require(i >= 1 && i <= d_.n, Errc::invalid_argument, "color outside the classical range");
  return tableau_phi(i, t);
}

AffineWeight TableauCrystalA::leaf_weight(const Tableau& t) const {
  return d_.section(content_weight(d_, t));
}

CrystalGraph generate_B(const Partition& lambda, const CartanDatum& d) {
  require(d.type.family == AffineFamily::a_untwisted, Errc::unsupported,
          "tableau crystals are implemented for type A only");
  require(lambda.rows() <= d.n + 1, Errc::invalid_argument,
          "shape has more rows than the alphabet has letters");
  TableauCrystalA c(d);
  std::vector<Elem> seeds;
  for (Tableau& t : enumerate_ssyt(lambda, d.n + 1)) seeds.push_back(Elem::tableau(std::move(t)));
  return generate(c, seeds, c.colors());
}

} /* namespace krlab */
