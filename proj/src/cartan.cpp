#include "krlab/cartan.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace krlab {

/* ---------- AffineType ---------- */

std::string AffineType::str() const {
  switch (family) {
    case AffineFamily::a_untwisted: return "A" + std::to_string(n) + "~1";
    case AffineFamily::b_untwisted: return "B" + std::to_string(n) + "~1";
    case AffineFamily::c_untwisted: return "C" + std::to_string(n) + "~1";
    case AffineFamily::d_untwisted: return "D" + std::to_string(n) + "~1";
    case AffineFamily::a_odd_twisted: return "A" + std::to_string(2 * n - 1) + "~2";
    case AffineFamily::a_even_twisted: return "A" + std::to_string(2 * n) + "~2";
    case AffineFamily::d_twisted: return "D" + std::to_string(n + 1) + "~2";
    case AffineFamily::e6_untwisted: return "E6~1";
    case AffineFamily::e7_untwisted: return "E7~1";
    case AffineFamily::e8_untwisted: return "E8~1";
    case AffineFamily::f4_untwisted: return "F4~1";
    case AffineFamily::g2_untwisted: return "G2~1";
  }
  fail(Errc::integrity, "unreachable family");
}

AffineType AffineType::parse(const std::string& s) {
  auto bad = [&]() -> AffineType {
    fail(Errc::invalid_argument, "bad type label '" + s + "'");
  };
  if (s.size() < 4) return bad();
  char letter = s[0];
  std::size_t tilde = s.find('~');
  if (tilde == std::string::npos || tilde < 2 || tilde + 2 != s.size()) return bad();
  std::string rank_s = s.substr(1, tilde - 1);
  for (char ch : rank_s)
    if (ch < '0' || ch > '9') return bad();
  if (rank_s.size() > 2) return bad();
  int N = std::stoi(rank_s);
  char twist = s[tilde + 1];
  if (twist != '1' && twist != '2') return bad();

  if (twist == '1') {
    switch (letter) {
      case 'A':
        if (N >= 1) return {AffineFamily::a_untwisted, N};
        return bad();
      case 'B':
        if (N >= 3) return {AffineFamily::b_untwisted, N};
        return bad();
      case 'C':
        if (N >= 2) return {AffineFamily::c_untwisted, N};
        return bad();
      case 'D':
        if (N >= 4) return {AffineFamily::d_untwisted, N};
        return bad();
      case 'E':
        if (N == 6) return {AffineFamily::e6_untwisted, 6};
        if (N == 7) return {AffineFamily::e7_untwisted, 7};
        if (N == 8) return {AffineFamily::e8_untwisted, 8};
        return bad();
      case 'F':
        if (N == 4) return {AffineFamily::f4_untwisted, 4};
        return bad();
      case 'G':
        if (N == 2) return {AffineFamily::g2_untwisted, 2};
        return bad();
      default: return bad();
    }
  }
  /* twist == '2' */
  if (letter == 'A') {
    if (N >= 2 && N % 2 == 0) return {AffineFamily::a_even_twisted, N / 2};
    if (N >= 5 && N % 2 == 1) return {AffineFamily::a_odd_twisted, (N + 1) / 2};
    return bad();
  }
  if (letter == 'D') {
    if (N >= 3) return {AffineFamily::d_twisted, N - 1};
    return bad();
  }
  return bad();
}

std::vector<AffineType> all_types(int max_rank) {
  std::vector<AffineType> v;
  for (int n = 1; n <= max_rank; ++n) v.push_back({AffineFamily::a_untwisted, n});
  for (int n = 3; n <= max_rank; ++n) v.push_back({AffineFamily::b_untwisted, n});
  for (int n = 2; n <= max_rank; ++n) v.push_back({AffineFamily::c_untwisted, n});
  for (int n = 4; n <= max_rank; ++n) v.push_back({AffineFamily::d_untwisted, n});
  for (int n = 3; n <= max_rank; ++n) v.push_back({AffineFamily::a_odd_twisted, n});
  for (int n = 1; n <= max_rank; ++n) v.push_back({AffineFamily::a_even_twisted, n});
  for (int n = 2; n <= max_rank; ++n) v.push_back({AffineFamily::d_twisted, n});
  if (max_rank >= 6) v.push_back({AffineFamily::e6_untwisted, 6});
  if (max_rank >= 7) v.push_back({AffineFamily::e7_untwisted, 7});
  if (max_rank >= 8) v.push_back({AffineFamily::e8_untwisted, 8});
  if (max_rank >= 4) v.push_back({AffineFamily::f4_untwisted, 4});
  if (max_rank >= 2) v.push_back({AffineFamily::g2_untwisted, 2});
  return v;
}

/* ---------- weight arithmetic ---------- */

static void check_same_size(std::size_t a, std::size_t b) {
  require(a == b, Errc::integrity, "weight size mismatch");
}

AffineWeight& AffineWeight::operator+=(const AffineWeight& o) {
  check_same_size(lam.size(), o.lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) lam[i] += o.lam[i];
  del += o.del;
  return *this;
}

AffineWeight& AffineWeight::operator-=(const AffineWeight& o) {
  check_same_size(lam.size(), o.lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) lam[i] -= o.lam[i];
  del -= o.del;
  return *this;
}

AffineWeight& AffineWeight::operator*=(const Rat& cc) {
  for (Rat& v : lam) v *= cc;
  del *= cc;
  return *this;
}

AffineWeight AffineWeight::operator-() const {
  AffineWeight w = *this;
  return w *= Rat(-1);
}

bool AffineWeight::is_zero() const {
  if (del != 0) return false;
  for (const Rat& v : lam)
    if (v != 0) return false;
  return true;
}

std::vector<Rat> AffineWeight::coords() const {
  std::vector<Rat> v = lam;
  v.push_back(del);
  return v;
}

AffineWeight AffineWeight::from_coords(const std::vector<Rat>& v) {
  require(!v.empty(), Errc::integrity, "empty coordinate vector");
  AffineWeight w;
  w.lam.assign(v.begin(), v.end() - 1);
  w.del = v.back();
  return w;
}

std::string AffineWeight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (i) s += ",";
    s += rat_str(lam[i]);
  }
  s += "|" + rat_str(del) + ")";
  return s;
}

ClassicalWeight& ClassicalWeight::operator+=(const ClassicalWeight& o) {
  check_same_size(om.size(), o.om.size());
  for (std::size_t i = 0; i < om.size(); ++i) om[i] += o.om[i];
  return *this;
}

ClassicalWeight& ClassicalWeight::operator-=(const ClassicalWeight& o) {
  check_same_size(om.size(), o.om.size());
  for (std::size_t i = 0; i < om.size(); ++i) om[i] -= o.om[i];
  return *this;
}

ClassicalWeight& ClassicalWeight::operator*=(const Rat& cc) {
  for (Rat& v : om) v *= cc;
  return *this;
}

ClassicalWeight ClassicalWeight::operator-() const {
  ClassicalWeight w = *this;
  return w *= Rat(-1);
}

bool ClassicalWeight::is_zero() const {
  for (const Rat& v : om)
    if (v != 0) return false;
  return true;
}

std::string ClassicalWeight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < om.size(); ++i) {
    if (i) s += ",";
    s += rat_str(om[i]);
  }
  return s + ")";
}

/* ---------- datum construction ---------- */

namespace {

std::vector<std::vector<long long>> diag2(int m) {
  std::vector<std::vector<long long>> A(m, std::vector<long long>(m, 0));
  for (int i = 0; i < m; ++i) A[i][i] = 2;
  return A;
}

void link(std::vector<std::vector<long long>>& A, int i, int j, long long aij, long long aji) {
  A[i][j] = aij;
  A[j][i] = aji;
}

std::vector<long long> filled(int m, long long v) { return std::vector<long long>(m, v); }

} /* namespace */

CartanDatum CartanDatum::build(const AffineType& t) {
  CartanDatum d;
  d.type = t;
  d.n = t.n;
  int n = t.n, m = n + 1;
  d.A = diag2(m);
  auto& A = d.A;

  switch (t.family) {
    case AffineFamily::a_untwisted:
      if (n == 1) {
        link(A, 0, 1, -2, -2);
      } else {
        for (int i = 0; i < n; ++i) link(A, i, i + 1, -1, -1);
        link(A, 0, n, -1, -1);
      }
      d.marks = filled(m, 1);
      d.comarks = filled(m, 1);
      for (int i = 0; i <= n; ++i) d.special.push_back(i);
      break;

    case AffineFamily::b_untwisted:
      link(A, 0, 2, -1, -1);
      link(A, 1, 2, -1, -1);
      for (int i = 2; i <= n - 2; ++i) link(A, i, i + 1, -1, -1);
      link(A, n - 1, n, -1, -2);
      d.marks = filled(m, 2);
      d.marks[0] = d.marks[1] = 1;
      d.comarks = d.marks;
      d.comarks[n] = 1;
      d.special = {0, 1};
      break;

    case AffineFamily::c_untwisted:
      link(A, 0, 1, -1, -2);
      for (int i = 1; i <= n - 2; ++i) link(A, i, i + 1, -1, -1);
      link(A, n - 1, n, -2, -1);
      d.marks = filled(m, 2);
      d.marks[0] = d.marks[n] = 1;
      d.comarks = filled(m, 1);
      d.special = {0, n};
      break;

    case AffineFamily::d_untwisted:
      link(A, 0, 2, -1, -1);
      link(A, 1, 2, -1, -1);
      for (int i = 2; i <= n - 3; ++i) link(A, i, i + 1, -1, -1);
      link(A, n - 2, n - 1, -1, -1);
      link(A, n - 2, n, -1, -1);
      d.marks = filled(m, 2);
      d.marks[0] = d.marks[1] = d.marks[n - 1] = d.marks[n] = 1;
      d.comarks = d.marks;
      d.special = {0, 1, n - 1, n};
      break;

    case AffineFamily::a_odd_twisted:
      link(A, 0, 2, -1, -1);
      link(A, 1, 2, -1, -1);
      for (int i = 2; i <= n - 2; ++i) link(A, i, i + 1, -1, -1);
      link(A, n - 1, n, -2, -1);
      d.marks = filled(m, 2);
      d.marks[0] = d.marks[1] = d.marks[n] = 1;
      d.comarks = filled(m, 2);
      d.comarks[0] = d.comarks[1] = 1;
      d.special = {0, 1};
      break;

    case AffineFamily::a_even_twisted:
      if (n == 1) {
        link(A, 0, 1, -4, -1);
      } else {
        link(A, 0, 1, -2, -1);
        for (int i = 1; i <= n - 2; ++i) link(A, i, i + 1, -1, -1);
        link(A, n - 1, n, -2, -1);
      }
      d.marks = filled(m, 2);
      d.marks[n] = 1;
      d.comarks = filled(m, 2);
      d.comarks[0] = 1;
      d.special = {0};
      break;

    case AffineFamily::d_twisted:
      link(A, 0, 1, -2, -1);
      for (int i = 1; i <= n - 2; ++i) link(A, i, i + 1, -1, -1);
      link(A, n - 1, n, -1, -2);
      d.marks = filled(m, 1);
      d.comarks = filled(m, 2);
      d.comarks[0] = d.comarks[n] = 1;
      d.special = {0, n};
      break;

    case AffineFamily::e6_untwisted:
      for (int i = 1; i <= 4; ++i) link(A, i, i + 1, -1, -1);
      link(A, 3, 6, -1, -1);
      link(A, 6, 0, -1, -1);
      d.marks = {1, 1, 2, 3, 2, 1, 2};
      d.comarks = d.marks;
      d.special = {0, 1, 5};
      break;

    case AffineFamily::e7_untwisted:
      for (int i = 0; i <= 5; ++i) link(A, i, i + 1, -1, -1);
      link(A, 3, 7, -1, -1);
      d.marks = {1, 2, 3, 4, 3, 2, 1, 2};
      d.comarks = d.marks;
      d.special = {0, 6};
      break;

    case AffineFamily::e8_untwisted:
      for (int i = 0; i <= 6; ++i) link(A, i, i + 1, -1, -1);
      link(A, 5, 8, -1, -1);
      d.marks = {1, 2, 3, 4, 5, 6, 4, 2, 3};
      d.comarks = d.marks;
      d.special = {0};
      break;

    case AffineFamily::f4_untwisted:
      link(A, 0, 1, -1, -1);
      link(A, 1, 2, -1, -1);
      link(A, 2, 3, -1, -2);
      link(A, 3, 4, -1, -1);
      d.marks = {1, 2, 3, 4, 2};
      d.comarks = {1, 2, 3, 2, 1};
      d.special = {0};
      break;

    case AffineFamily::g2_untwisted:
      link(A, 0, 1, -1, -1);
      link(A, 1, 2, -1, -3);
      d.marks = {1, 2, 3};
      d.comarks = {1, 2, 1};
      d.special = {0};
      break;
  }

  d.c.resize(m);
  for (int i = 0; i <= n; ++i)
    d.c[i] = std::max<long long>(1, d.marks[i] / d.comarks[i]);

  d.acl_ = Mat(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) d.acl_.at(i - 1, j - 1) = A[i][j];
  d.acl_inv_ = d.acl_.inverse();
  return d;
}

const CartanDatum& CartanDatum::get(const AffineType& t) {
  static std::mutex mu;
  static std::map<AffineType, std::unique_ptr<CartanDatum>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) {
    auto d = std::unique_ptr<CartanDatum>(new CartanDatum(build(t)));
    it = cache.emplace(t, std::move(d)).first;
  }
  return *it->second;
}

/* ---------- datum queries ---------- */

bool CartanDatum::is_special(int i) const {
  for (int s : special)
    if (s == i) return true;
  return false;
}

AffineWeight CartanDatum::fundamental(int i) const {
  require(i >= 0 && i <= n, Errc::invalid_argument, "node index out of range");
  AffineWeight w(nodes());
  w.lam[i] = 1;
  return w;
}

AffineWeight CartanDatum::alpha(int i) const {
  require(i >= 0 && i <= n, Errc::invalid_argument, "node index out of range");
  AffineWeight w(nodes());
  for (int k = 0; k <= n; ++k) w.lam[k] = A[k][i];
  if (i == 0) w.del = 1;
  return w;
}

AffineWeight CartanDatum::delta() const {
  AffineWeight w(nodes());
  w.del = a0();
  return w;
}

AffineWeight CartanDatum::theta_over_a0() const {
  AffineWeight w(nodes());
  for (int k = 0; k <= n; ++k) w.lam[k] = -A[k][0];
  return w;
}

Rat CartanDatum::level(const AffineWeight& w) const {
  check_same_size(w.lam.size(), static_cast<std::size_t>(nodes()));
  Rat s(0);
  for (int i = 0; i <= n; ++i) s += Rat(comarks[i]) * w.lam[i];
  return s;
}

ClassicalWeight CartanDatum::cl(const AffineWeight& w) const {
  check_same_size(w.lam.size(), static_cast<std::size_t>(nodes()));
  ClassicalWeight m(n);
  for (int i = 1; i <= n; ++i) m.om[i - 1] = w.lam[i];
  return m;
}

AffineWeight CartanDatum::section(const ClassicalWeight& m) const {
  check_same_size(m.om.size(), static_cast<std::size_t>(n));
  AffineWeight w(nodes());
  Rat l0(0);
  for (int i = 1; i <= n; ++i) {
    w.lam[i] = m.om[i - 1];
    l0 -= Rat(comarks[i]) * m.om[i - 1];
  }
  w.lam[0] = l0 / comarks[0];
  return w;
}

ClassicalWeight CartanDatum::omega(int i) const {
  require(i >= 1 && i <= n, Errc::invalid_argument, "classical index out of range");
  ClassicalWeight m(n);
  m.om[i - 1] = 1;
  return m;
}

ClassicalWeight CartanDatum::croot(int i) const {
  require(i >= 1 && i <= n, Errc::invalid_argument, "classical index out of range");
  ClassicalWeight m(n);
  for (int k = 1; k <= n; ++k) m.om[k - 1] = A[k][i];
  return m;
}

ClassicalWeight CartanDatum::reflect(int i, const ClassicalWeight& m) const {
  require(i >= 1 && i <= n, Errc::invalid_argument, "classical index out of range");
  ClassicalWeight r = m;
  Rat coeff = m.om[i - 1];
  if (coeff == 0) return r;
  ClassicalWeight a = croot(i);
  for (int k = 0; k < n; ++k) r.om[k] -= coeff * a.om[k];
  return r;
}

bool CartanDatum::dominant(const ClassicalWeight& m) const {
  for (const Rat& v : m.om)
    if (v < 0) return false;
  return true;
}

Rat CartanDatum::norm2_alpha(int i) const { return Rat(2 * comarks[i], marks[i]); }

std::vector<Rat> CartanDatum::root_expansion(const AffineWeight& w) const {
  require(level(w) == 0 && w.del == 0, Errc::integrity,
          "root expansion needs a level-0 delta-free weight");
  std::vector<Rat> rhs(n);
  for (int i = 1; i <= n; ++i) rhs[i - 1] = w.lam[i];
  return acl_inv_.apply(rhs);
}

Rat CartanDatum::bil(const AffineWeight& lam, const AffineWeight& mu) const {
  require(level(mu) == 0, Errc::integrity, "right argument of the form must have level 0");
  std::vector<Rat> x = root_expansion(mu.drop_delta());
  Rat s(0);
  for (int j = 1; j <= n; ++j)
    if (x[j - 1] != 0) s += x[j - 1] * lam.lam[j] * Rat(comarks[j], marks[j]);
  if (mu.del != 0) s += mu.del / Rat(a0()) * level(lam);
  return s;
}

Rat CartanDatum::bil_cl(const ClassicalWeight& x, const ClassicalWeight& y) const {
  return bil(section(x), section(y));
}

AffineWeight CartanDatum::translate(const AffineWeight& x, const AffineWeight& lam) const {
  require(level(x) == 0 && x.del == 0, Errc::integrity,
          "translations are indexed by level-0 delta-free weights");
  Rat lv = level(lam);
  AffineWeight out = lam;
  out += lv * x;
  Rat dshift = bil(lam, x) + bil(x, x) / 2 * lv;
  out -= dshift * delta();
  return out;
}

} /* namespace krlab */
