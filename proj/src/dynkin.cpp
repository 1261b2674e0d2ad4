#include "krlab/dynkin.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace krlab {

int DynkinAut::order() const {
  int m = static_cast<int>(perm.size());
  long long ord = 1;
  std::vector<char> seen(m, 0);
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = perm[j];
      ++len;
    }
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

std::vector<DynkinAut> diagram_automorphisms(const CartanDatum& d) {
  int m = d.nodes();
  std::vector<int> perm(m, -1);
  std::vector<char> used(m, 0);
  std::vector<DynkinAut> out;
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      out.push_back({perm});
      return;
    }
    for (int cand = 0; cand < m; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (d.A[perm[j]][cand] != d.A[j][i] || d.A[cand][perm[j]] != d.A[i][j]) ok = false;
      if (!ok) continue;
      perm[i] = cand;
      used[cand] = 1;
      rec(i + 1);
      used[cand] = 0;
      perm[i] = -1;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [](const DynkinAut& a, const DynkinAut& b) { return a.perm < b.perm; });
  return out;
}

std::vector<int> special_orbit(const CartanDatum& d) {
  std::vector<int> orbit;
  for (const DynkinAut& s : diagram_automorphisms(d)) {
    int img = s.perm[0];
    if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(img);
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

ClassicalWeight level_zero_action(const CartanDatum& d, const DynkinAut& s,
                                  const ClassicalWeight& mu) {
  require(s.perm.size() == static_cast<std::size_t>(d.nodes()), Errc::invalid_argument,
          "automorphism size mismatch");
  ClassicalWeight out(d.n);
  for (int r = 1; r <= d.n; ++r) {
    const Rat& coeff = mu.om[r - 1];
    if (coeff == 0) continue;
    if (s.perm[r] != 0) out += coeff * d.omega(s.perm[r]);
    if (s.perm[0] != 0) out -= coeff * Rat(d.comarks[r]) * d.omega(s.perm[0]);
  }
  return out;
}

std::vector<int> classical_restriction(const AffineType& t, const DynkinAut& s) {
  const CartanDatum& d = CartanDatum::get(t);
  const WeylGroup& w = WeylGroup::get(t);
  std::vector<int> out(d.n, 0);
  for (int r = 1; r <= d.n; ++r) {
    ClassicalWeight img = level_zero_action(d, s, d.omega(r));
    w.to_dominant(img);
    int hit = 0;
    for (int j = 1; j <= d.n; ++j)
      if (img == d.omega(j)) hit = j;
    require(hit != 0, Errc::integrity,
            "level-zero image of a fundamental weight is not W-conjugate to one");
    out[r - 1] = hit;
  }
  return out;
}

SigmaInfo sigma_info(const AffineType& t) {
  const CartanDatum& d = CartanDatum::get(t);
  const WeylGroup& w = WeylGroup::get(t);
  SigmaInfo info;
  info.type = t;
  info.special = special_orbit(d);
  info.aut_order = diagram_automorphisms(d).size();
  info.sigma_order = w.sigma().size();
  int max_order = 1;
  for (const WeylGroup::Tau& tau : w.sigma()) {
    DynkinAut a{tau.perm};
    max_order = std::max(max_order, a.order());
    info.sigma_perms.push_back(tau.perm);
  }
  if (info.sigma_order == 1)
    info.sigma_shape = "1";
  else if (static_cast<std::size_t>(max_order) == info.sigma_order)
    info.sigma_shape = "Z/" + std::to_string(info.sigma_order);
  else if (info.sigma_order == 4 && max_order == 2)
    info.sigma_shape = "Z/2 x Z/2";
  else
    fail(Errc::integrity, "unrecognized rotation group shape");
  return info;
}

} /* namespace krlab */
