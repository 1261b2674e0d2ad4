#include "krlab/demazure.hpp"

#include <json.hpp>

#include <algorithm>

#include "krlab/kr_a.hpp"

namespace krlab {

CharacterPolynomial CharacterPolynomial::monomial(const AffineWeight& w) {
  CharacterPolynomial p;
  p.coeff.emplace(w, Int(1));
  return p;
}

void CharacterPolynomial::add(const AffineWeight& w, const Int& c) {
  if (c == 0) return;
  auto it = coeff.find(w);
  if (it == coeff.end()) {
    coeff.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) coeff.erase(it);
}

Int CharacterPolynomial::total() const {
  Int t = 0;
  for (const auto& [w, c] : coeff) t += c;
  return t;
}

std::map<ClassicalWeight, Int> CharacterPolynomial::classical(const CartanDatum& d) const {
  std::map<ClassicalWeight, Int> out;
  for (const auto& [w, c] : coeff) out[d.cl(w)] += c;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::string CharacterPolynomial::json() const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [w, c] : coeff) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const Rat& v : w.coords()) row.push_back(rat_str(v));
    row.push_back(c.str());
    rows.push_back(row);
  }
  return rows.dump();
}

CharacterPolynomial demazure_operator(const CartanDatum& d, int i,
                                      const CharacterPolynomial& p) {
  require(i >= 0 && i <= d.n, Errc::invalid_argument, "color out of range");
  AffineWeight ai = d.alpha(i);
  CharacterPolynomial out;
  for (const auto& [w, c] : p.coeff) {
    const Rat& m = w.lam[static_cast<std::size_t>(i)];
    require(is_integer(m), Errc::invalid_argument, "non-integral pairing under a Demazure operator");
    long long ml = rat_ll(m);
    if (ml >= 0)
      for (long long k = 0; k <= ml; ++k) out.add(w - Rat(k) * ai, c);
    else
      for (long long k = 1; k <= -ml - 1; ++k) out.add(w + Rat(k) * ai, -c);
  }
  return out;
}

CharacterPolynomial demazure_character(const CartanDatum& d, const Word& word,
                                       const AffineWeight& lam) {
  CharacterPolynomial p = CharacterPolynomial::monomial(lam);
  for (std::size_t k = word.size(); k-- > 0;) p = demazure_operator(d, word[k], p);
  return p;
}

DemazureSet f_w_closure(const Crystal& c, const Elem& b, const Word& word,
                        std::size_t cap) {
  DemazureSet s;
  s.ambient = &c;
  s.generator = b;
  s.word = word;
  s.reached.emplace(b, std::vector<long long>(word.size(), 0));
  for (std::size_t k = word.size(); k-- > 0;) {
    int i = word[k];
    /* snapshot: the walks extend the reached map while we iterate over it */
    std::vector<std::pair<Elem, std::vector<long long>>> frontier(s.reached.begin(),
                                                                  s.reached.end());
    for (const auto& [x, m] : frontier) {
      Elem y = x;
      long long exp = 0;
      for (;;) {
        bool hit = false;
        std::optional<Elem> next = c.f(i, y, &hit);
        s.formal_hit = s.formal_hit || hit;
        if (!next) break;
        y = *next;
        ++exp;
        std::vector<long long> wm = m;
        wm[k] = exp;
        s.reached.emplace(y, std::move(wm)); /* keep the first witness */
        require(s.reached.size() <= cap, Errc::cap_exceeded,
                "Demazure closure exceeded the node cap");
      }
    }
  }
  return s;
}

DemazureFactorization demazure_factorization(const AffineType& t,
                                             const ClassicalWeight& lambda) {
  const CartanDatum& d = CartanDatum::get(t);
  const WeylGroup& w = WeylGroup::get(t);
  require(d.dominant(lambda), Errc::invalid_argument, "translation weight must be dominant");
  WeylGroup::SigmaFactor f = w.factor_sigma(w.translation(d.section(-w.star(lambda))));
  DemazureFactorization out;
  out.zword = w.reduced_word(f.z);
  out.tau_node = f.tau_node;
  out.coset_word = w.reduced_word(w.min_coset_rep_left(f.z));
  return out;
}

namespace {

/* the <alpha_j^, .> coordinates over the subalgebra nodes {0..r-1} */
std::vector<Rat> k_weight(const AffineWeight& w, int r) {
  return std::vector<Rat>(w.lam.begin(), w.lam.begin() + r);
}

std::string k_str(const std::vector<Rat>& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + rat_str(k[i]);
  return s + ")";
}

} /* namespace */

std::vector<std::string> verify_demazure(const Crystal& kr, const CrystalGraph& g,
                                         int r, int s) {
  const CartanDatum& d = kr.datum();
  const WeylGroup& w = WeylGroup::get(d.type);
  require(r >= 1 && r <= d.n && s >= 1, Errc::invalid_argument, "node or width out of range");

  std::vector<std::string> bad;
  DemazureFactorization fac =
      demazure_factorization(d.type, Rat(d.c[static_cast<std::size_t>(r)]) * d.omega(r));
  int t0 = w.tau(fac.tau_node).perm[0];

  Elem u = find_u(g, d, r, s);
  FormalCrystal fc(d);
  ProductCrystal pc(d, {&kr, &fc});
  Elem uprime = Elem::tensor({u, Elem::formal(Rat(s) * d.fundamental(0))});

  for (int i : fac.coset_word)
    if (i >= r) {
      bad.push_back("coset word uses color " + std::to_string(i) +
                    " outside the subalgebra nodes");
      break;
    }

  /* closure along the coset word; no lowering may touch the placeholder */
  DemazureSet bp = f_w_closure(pc, uprime, fac.coset_word);
  if (bp.formal_hit)
    bad.push_back("a lowering acted on the placeholder factor during the coset closure");

  /* its cardinality and subalgebra weight data against the Demazure character */
  CharacterPolynomial cw = demazure_character(d, fac.coset_word, Rat(s) * d.fundamental(t0));
  if (cw.total() != static_cast<long long>(bp.size()))
    bad.push_back("coset closure has " + std::to_string(bp.size()) +
                  " elements but the Demazure character totals " + cw.total().str());
  std::map<std::vector<Rat>, Int> lhs, rhs;
  for (const auto& [wt, c] : cw.coeff) lhs[k_weight(wt, r)] += c;
  for (const auto& [x, m] : bp.reached) rhs[k_weight(pc.weight(x), r)] += 1;
  if (lhs != rhs) {
    for (const auto& [k, c] : lhs) {
      auto it = rhs.find(k);
      if (it == rhs.end() || it->second != c) {
        bad.push_back("subalgebra weight " + k_str(k) + " carries " +
                      (it == rhs.end() ? Int(0) : it->second).str() +
                      " closure elements but character coefficient " + c.str());
        break;
      }
    }
    for (const auto& [k, c] : rhs)
      if (!lhs.count(k)) {
        bad.push_back("subalgebra weight " + k_str(k) + " appears only in the closure");
        break;
      }
  }

  /* the classical closure of B' fills the whole crystal (x) placeholder */
  std::vector<Elem> seeds;
  for (const auto& [x, m] : bp.reached) seeds.push_back(x);
  std::vector<int> classical;
  for (int i = 1; i <= d.n; ++i) classical.push_back(i);
  CrystalGraph full = generate(pc, seeds, classical);
  if (full.size() != g.size())
    bad.push_back("classical closure has " + std::to_string(full.size()) +
                  " elements, the crystal has " + std::to_string(g.size()));
  for (const Elem& x : full.nodes)
    if (g.index_of(x.factors[0]) < 0) {
      bad.push_back("classical closure left the crystal at " + pc.display(x));
      break;
    }

  /* the full zword closure fills it as well, still placeholder-clean */
  DemazureSet bw = f_w_closure(pc, uprime, fac.zword);
  if (bw.formal_hit)
    bad.push_back("a lowering acted on the placeholder factor during the full closure");
  if (bw.size() != g.size())
    bad.push_back("full closure has " + std::to_string(bw.size()) +
                  " elements, the crystal has " + std::to_string(g.size()));
  for (const Elem& x : full.nodes)
    if (!bw.contains(x)) {
      bad.push_back("full closure misses " + pc.display(x));
      break;
    }
  return bad;
}

std::vector<std::string> compare_characters(const CrystalGraph& g, const CartanDatum& d,
                                            int r, int s) {
  const WeylGroup& w = WeylGroup::get(d.type);
  require(r >= 1 && r <= d.n && s >= 1, Errc::invalid_argument, "node or width out of range");

  std::vector<std::string> bad;
  DemazureFactorization fac =
      demazure_factorization(d.type, Rat(d.c[static_cast<std::size_t>(r)]) * d.omega(r));
  int t0 = w.tau(fac.tau_node).perm[0];
  CharacterPolynomial ch = demazure_character(d, fac.zword, Rat(s) * d.fundamental(t0));

  std::map<ClassicalWeight, Int> lhs = ch.classical(d), rhs;
  for (const AffineWeight& wt : g.weights) rhs[d.cl(wt)] += 1;
  if (lhs == rhs) return bad;
  for (const auto& [k, c] : lhs) {
    auto it = rhs.find(k);
    if (it == rhs.end() || it->second != c) {
      bad.push_back("character mismatch at classical weight " + k.str() + ": Demazure " +
                    c.str() + ", crystal " + (it == rhs.end() ? Int(0) : it->second).str());
      return bad;
    }
  }
  for (const auto& [k, c] : rhs)
    if (!lhs.count(k)) {
      bad.push_back("character mismatch at classical weight " + k.str() +
                    ": Demazure 0, crystal " + c.str());
      return bad;
    }
  return bad;
}

} /* namespace krlab */
