#include "krlab/weyl.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace krlab {

namespace {
constexpr long long kWalkCap = 200000;
}

WeylGroup::WeylGroup(const CartanDatum& d) : d_(d) {
  id_ = Mat::identity(d.nodes() + 1);

  for (int i = 0; i <= d.n; ++i) {
    /* s_i = I minus (alpha_i outer e_i) on (lam, del) coordinates */
    Mat s = id_;
    std::vector<Rat> ac = d.alpha(i).coords();
    for (std::size_t row = 0; row < ac.size(); ++row) s.at(row, i) -= ac[row];
    smat_.push_back(s);
  }

  /* classical roots: reflection orbit of the simple ones, then keep positives */
  std::set<std::vector<Rat>> seen;
  std::vector<ClassicalWeight> todo;
  for (int i = 1; i <= d.n; ++i) {
    ClassicalWeight r = d.croot(i);
    if (seen.insert(r.om).second) todo.push_back(r);
  }
  for (std::size_t head = 0; head < todo.size(); ++head) {
    ClassicalWeight cur = todo[head];
    for (int j = 1; j <= d.n; ++j) {
      ClassicalWeight nxt = d.reflect(j, cur);
      if (seen.insert(nxt.om).second) todo.push_back(nxt);
    }
  }
  for (const std::vector<Rat>& om : seen) {
    ClassicalWeight r;
    r.om = om;
    std::vector<Rat> x = d.root_expansion(d.section(r));
    bool pos = true;
    for (const Rat& v : x)
      if (v < 0) pos = false;
    if (pos) positive_roots_.push_back(r);
  }

  theta_expansion_ = d.root_expansion(d.theta_over_a0());
  long long per = 1;
  for (int i = 0; i < d.n; ++i) {
    Rat q = theta_expansion_[i] / d.c[i + 1];
    per = std::lcm(per, to_ll(denominator(q)));
  }
  lattice_period_ = per;

  Tau idt;
  idt.node = 0;
  idt.mat = id_;
  idt.inv = id_;
  idt.perm.resize(d.nodes());
  for (int i = 0; i <= d.n; ++i) idt.perm[i] = i;
  sigma_.push_back(idt);
  for (int s : d.special)
    if (s != 0) sigma_.push_back(build_tau(s));
  for (const Tau& a : sigma_)
    for (const Tau& b : sigma_) tau_by_key((a.mat * b.mat).key()); /* closure */
}

const WeylGroup& WeylGroup::get(const AffineType& t) {
  static std::mutex mu;
  static std::map<AffineType, std::unique_ptr<WeylGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) {
    auto w = std::unique_ptr<WeylGroup>(new WeylGroup(CartanDatum::get(t)));
    it = cache.emplace(t, std::move(w)).first;
  }
  return *it->second;
}

const Mat& WeylGroup::simple(int i) const {
  require(i >= 0 && i <= d_.n, Errc::invalid_argument, "node index out of range");
  return smat_[i];
}

Mat WeylGroup::word_matrix(const Word& w) const {
  Mat m = id_;
  for (int i : w) m = m * simple(i);
  return m;
}

AffineWeight WeylGroup::act(const Mat& g, const AffineWeight& w) const {
  return AffineWeight::from_coords(g.apply(w.coords()));
}

ClassicalWeight WeylGroup::act_cl(const Mat& g, const ClassicalWeight& m) const {
  return d_.cl(act(g, d_.section(m)));
}

Mat WeylGroup::classical_matrix(const Mat& g) const {
  Mat u(d_.n, d_.n);
  for (int j = 1; j <= d_.n; ++j) {
    ClassicalWeight col = act_cl(g, d_.omega(j));
    for (int k = 0; k < d_.n; ++k) u.at(k, j - 1) = col.om[k];
  }
  return u;
}

Mat WeylGroup::translation(const AffineWeight& x) const {
  Mat m(d_.nodes() + 1, d_.nodes() + 1);
  for (int j = 0; j <= d_.n + 1; ++j) {
    AffineWeight b(d_.nodes());
    if (j <= d_.n)
      b.lam[j] = 1;
    else
      b.del = 1;
    std::vector<Rat> col = d_.translate(x, b).coords();
    for (std::size_t row = 0; row < col.size(); ++row) m.at(row, j) = col[row];
  }
  return m;
}

Mat WeylGroup::reflection_by(const AffineWeight& root) const {
  Rat n2 = d_.bil(root, root);
  require(n2 != 0, Errc::invalid_argument, "reflection by an isotropic vector");
  Mat m(d_.nodes() + 1, d_.nodes() + 1);
  for (int j = 0; j <= d_.n + 1; ++j) {
    AffineWeight b(d_.nodes());
    if (j <= d_.n)
      b.lam[j] = 1;
    else
      b.del = 1;
    AffineWeight img = b - (2 * d_.bil(b, root) / n2) * root;
    std::vector<Rat> col = img.coords();
    for (std::size_t row = 0; row < col.size(); ++row) m.at(row, j) = col[row];
  }
  return m;
}

AffineWeight WeylGroup::test_point() const {
  AffineWeight x(d_.nodes());
  for (int j = 0; j <= d_.n; ++j) x.lam[j] = 1 + Rat(j + 1, 101);
  return x;
}

WeylGroup::Tau WeylGroup::build_tau(int i) const {
  require(d_.is_special(i) && i != 0, Errc::invalid_argument,
          "alcove rotations are attached to nonzero special nodes");
  Mat acc = translation(-d_.section(d_.omega(i)));
  AffineWeight y = act(acc, test_point());
  for (long long guard = 0;; ++guard) {
    require(guard < kWalkCap, Errc::cap_exceeded, "alcove walk did not terminate");
    int pick = -1;
    for (int j = 1; j <= d_.n; ++j)
      if (y.lam[j] < 0) {
        pick = j;
        break;
      }
    if (pick < 0) break;
    y = act(simple(pick), y);
    acc = simple(pick) * acc;
  }
  for (int j = 0; j <= d_.n; ++j)
    require(y.lam[j] > 0, Errc::integrity, "rotation walk ended outside the open alcove");

  Tau t;
  t.node = i;
  t.mat = acc;
  t.inv = acc.inverse();
  t.perm.assign(d_.nodes(), -1);
  for (int a = 0; a <= d_.n; ++a) {
    AffineWeight img = act(acc, d_.alpha(a));
    int hit = -1;
    for (int b = 0; b <= d_.n; ++b)
      if (img == d_.alpha(b)) {
        hit = b;
        break;
      }
    require(hit >= 0, Errc::integrity, "rotation does not permute the simple roots");
    t.perm[a] = hit;
  }
  for (int a = 0; a <= d_.n; ++a)
    for (int b = 0; b <= d_.n; ++b)
      require(d_.A[t.perm[a]][t.perm[b]] == d_.A[a][b], Errc::integrity,
              "rotation permutation does not preserve the Cartan matrix");
  require(t.perm[i] == 0, Errc::integrity, "rotation does not carry its node to 0");
  return t;
}

const WeylGroup::Tau& WeylGroup::tau_by_key(const std::string& key) const {
  for (const Tau& t : sigma_)
    if (t.mat.key() == key) return t;
  fail(Errc::integrity, "matrix is not an alcove rotation");
}

const WeylGroup::Tau& WeylGroup::tau(int special_node) const {
  for (const Tau& t : sigma_)
    if (t.node == special_node) return t;
  fail(Errc::invalid_argument, "not a special node");
}

const WeylGroup::Tau& WeylGroup::sigma_product(const Tau& a, const Tau& b) const {
  return tau_by_key((a.mat * b.mat).key());
}

const WeylGroup::Tau& WeylGroup::sigma_inverse(const Tau& a) const {
  return tau_by_key(a.inv.key());
}

Word WeylGroup::reduced_word(const Mat& g) const {
  AffineWeight y = act(g, test_point());
  Mat cur = g;
  Word word;
  for (long long guard = 0;; ++guard) {
    require(guard <= kWalkCap, Errc::cap_exceeded, "reduced word exceeded the walk cap");
    int pick = -1;
    bool wall = false;
    for (int i = 0; i <= d_.n; ++i) {
      if (y.lam[i] < 0) {
        pick = i;
        break;
      }
      if (y.lam[i] == 0) wall = true;
    }
    if (pick < 0) {
      require(!wall, Errc::integrity, "walk hit a reflection wall");
      if (cur == id_) return word;
      fail(Errc::integrity, "element carries a nontrivial rotation part");
    }
    word.push_back(pick);
    y = act(simple(pick), y);
    cur = simple(pick) * cur;
  }
}

Mat WeylGroup::min_coset_rep_left(const Mat& g) const {
  AffineWeight y = act(g, test_point());
  Mat cur = g;
  for (long long guard = 0;; ++guard) {
    require(guard <= kWalkCap, Errc::cap_exceeded, "coset walk exceeded the cap");
    int pick = -1;
    for (int i = 1; i <= d_.n; ++i) {
      require(y.lam[i] != 0, Errc::integrity, "walk hit a reflection wall");
      if (y.lam[i] < 0) {
        pick = i;
        break;
      }
    }
    if (pick < 0) return cur;
    y = act(simple(pick), y);
    cur = simple(pick) * cur;
  }
}

WeylGroup::SigmaFactor WeylGroup::factor_sigma(const Mat& g) const {
  Mat u = classical_matrix(g);
  AffineWeight g0 = act(g, d_.fundamental(0));
  ClassicalWeight lbar;
  lbar.om = u.inverse().apply(d_.cl(g0).om);
  const Tau* found = nullptr;
  int hits = 0;
  for (const Tau& t : sigma_) {
    ClassicalWeight probe = lbar;
    if (t.node != 0) probe += d_.omega(t.node);
    if (in_translation_lattice(probe)) {
      ++hits;
      found = &t;
    }
  }
  require(hits == 1, Errc::integrity,
          "translation part matches " + std::to_string(hits) + " rotation cosets");
  return {g * found->inv, found->node};
}

bool WeylGroup::in_translation_lattice(const ClassicalWeight& mu) const {
  std::vector<Rat> x = d_.root_expansion(d_.section(mu));
  for (long long k = 0; k < lattice_period_; ++k) {
    bool ok = true;
    for (int i = 0; i < d_.n && ok; ++i) {
      Rat v = (x[i] - k * theta_expansion_[i]) / d_.c[i + 1];
      ok = is_integer(v);
    }
    if (ok) return true;
  }
  return false;
}

Word WeylGroup::to_dominant(ClassicalWeight& m) const {
  Word apps;
  for (long long guard = 0;; ++guard) {
    require(guard <= kWalkCap, Errc::cap_exceeded, "dominance walk exceeded the cap");
    int pick = -1;
    for (int i = 1; i <= d_.n; ++i)
      if (m.om[i - 1] < 0) {
        pick = i;
        break;
      }
    if (pick < 0) return apps;
    m = d_.reflect(pick, m);
    apps.push_back(pick);
  }
}

Word WeylGroup::to_antidominant(ClassicalWeight& m) const {
  Word apps;
  for (long long guard = 0;; ++guard) {
    require(guard <= kWalkCap, Errc::cap_exceeded, "dominance walk exceeded the cap");
    int pick = -1;
    for (int i = 1; i <= d_.n; ++i)
      if (m.om[i - 1] > 0) {
        pick = i;
        break;
      }
    if (pick < 0) return apps;
    m = d_.reflect(pick, m);
    apps.push_back(pick);
  }
}

ClassicalWeight WeylGroup::star(const ClassicalWeight& m) const {
  ClassicalWeight low = m;
  to_antidominant(low);
  return -low;
}

Int WeylGroup::classical_dimension(const ClassicalWeight& lambda) const {
  require(d_.dominant(lambda), Errc::invalid_argument, "highest weight must be dominant");
  ClassicalWeight rho(static_cast<std::size_t>(d_.n));
  for (Rat& c : rho.om) c = 1;
  /* the coroot normalizations 2/(root|root) cancel between the factors */
  Rat num(1), den(1);
  for (const ClassicalWeight& r : positive_roots_) {
    num *= d_.bil_cl(lambda + rho, r);
    den *= d_.bil_cl(rho, r);
  }
  Rat dim = num / den;
  require(is_integer(dim) && dim > 0, Errc::integrity, "dimension product is not a positive integer");
  return rat_ll(dim);
}

long long WeylGroup::translation_length(const ClassicalWeight& x) const {
  Rat total(0);
  for (const ClassicalWeight& r : positive_roots_) {
    Rat pairing = Rat(2) * d_.bil_cl(x, r) / d_.bil_cl(r, r);
    Rat gap(0);
    for (int half = 1; half <= 8; ++half) {
      Rat k(half, 2);
      if (in_translation_lattice(k * r)) {
        gap = k;
        break;
      }
    }
    require(gap != 0, Errc::integrity, "root has no lattice multiple");
    total += abs(pairing) / gap;
  }
  require(is_integer(total), Errc::integrity, "fractional wall count");
  return rat_ll(total);
}

std::vector<Mat> WeylGroup::classical_elements(std::size_t cap) const {
  std::vector<Mat> gens;
  for (int i = 1; i <= d_.n; ++i) {
    Mat s(d_.n, d_.n);
    for (int j = 1; j <= d_.n; ++j) {
      ClassicalWeight col = d_.reflect(i, d_.omega(j));
      for (int k = 0; k < d_.n; ++k) s.at(k, j - 1) = col.om[k];
    }
    gens.push_back(s);
  }
  std::vector<Mat> out{Mat::identity(d_.n)};
  std::set<std::string> seen{out[0].key()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const Mat& s : gens) {
      Mat g = s * out[head];
      if (seen.insert(g.key()).second) {
        require(out.size() < cap, Errc::cap_exceeded, "classical group larger than the cap");
        out.push_back(g);
      }
    }
  }
  return out;
}

Word WeylGroup::closed_form_coset_word(int r) const {
  require(r >= 1 && r <= d_.n, Errc::invalid_argument, "node index out of range");
  require(!d_.is_special(r), Errc::unsupported, "no closed-form word for a special node");
  Word w;
  auto push_range = [&w](int lo, int hi) {
    for (int j = lo; j <= hi; ++j) w.push_back(j);
  };
  switch (d_.type.family) {
    case AffineFamily::b_untwisted:
    case AffineFamily::d_untwisted:
    case AffineFamily::a_odd_twisted:
      if (d_.type.family == AffineFamily::d_untwisted)
        require(r <= d_.n - 2, Errc::unsupported, "no closed-form word for this node");
      if (r % 2 == 0) {
        for (int k = r / 2; k >= 1; --k) {
          w.push_back(0);
          push_range(2, 2 * k - 1);
          push_range(1, 2 * k - 2);
        }
      } else {
        for (int k = (r - 1) / 2; k >= 1; --k) {
          w.push_back(0);
          push_range(2, 2 * k);
          push_range(1, 2 * k - 1);
        }
      }
      break;
    case AffineFamily::c_untwisted:
    case AffineFamily::a_even_twisted:
    case AffineFamily::d_twisted:
      for (int k = r; k >= 1; --k) {
        w.push_back(0);
        push_range(1, k - 1);
      }
      break;
    default: fail(Errc::unsupported, "no closed-form coset words for this family");
  }
  return w;
}

} /* namespace krlab */
