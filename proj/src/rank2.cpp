#include "krlab/rank2.hpp"

#include "krlab/rational.hpp"

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace krlab {
namespace {

/* Piecewise-linear path model in "dual" coordinates (x, y) where a weight mu
   is stored as (<alpha_1^, mu>, <alpha_2^, mu>).  A path is a polyline from
   the origin; the raising/lowering operators fold the part of the path
   between the last/first minimum of the coordinate function h_i and the
   adjacent crossing of min + 1, then shift the tail by a simple root. */

using V2 = std::pair<Rat, Rat>;
using Path = std::vector<V2>; /* vertices, first is always (0, 0) */

V2 v_add(const V2& a, const V2& b) { return {a.first + b.first, a.second + b.second}; }
V2 v_sub(const V2& a, const V2& b) { return {a.first - b.first, a.second - b.second}; }
V2 v_scale(const Rat& c, const V2& a) { return {c * a.first, c * a.second}; }

Rat coord(const V2& p, int axis) { return axis == 0 ? p.first : p.second; }

struct Sys {
  long long aij, aji; /* 2x2 Cartan matrix [[2, aij], [aji, 2]] */

  V2 alpha(int axis) const {
    return axis == 0 ? V2{Rat(2), Rat(aji)} : V2{Rat(aij), Rat(2)};
  }
  /* simple reflection applied to a difference vector */
  V2 reflect(int axis, const V2& v) const {
    if (axis == 0) return {-v.first, v.second - Rat(aji) * v.first};
    return {v.first - Rat(aij) * v.second, -v.second};
  }
};

/* drop repeated vertices and merge segments that continue in the same
   direction, so equal traces compare equal */
Path canonical(const Path& p) {
  Path out{p[0]};
  for (std::size_t k = 1; k < p.size(); ++k) {
    if (p[k] == out.back()) continue;
    if (out.size() >= 2) {
      V2 d1 = v_sub(out.back(), out[out.size() - 2]);
      V2 d2 = v_sub(p[k], out.back());
      Rat cross = d1.first * d2.second - d1.second * d2.first;
      Rat dot = d1.first * d2.first + d1.second * d2.second;
      if (cross == 0 && dot > 0) {
        out.back() = p[k];
        continue;
      }
    }
    out.push_back(p[k]);
  }
  return out;
}

Rat min_h(const Path& p, int axis) {
  Rat m = coord(p[0], axis);
  for (const V2& v : p) m = std::min(m, coord(v, axis));
  return m;
}

/* insert a vertex with h == target on the edge (k, k+1); returns its index */
std::size_t split_edge(Path& p, std::size_t k, int axis, const Rat& target) {
  Rat h0 = coord(p[k], axis), h1 = coord(p[k + 1], axis);
  Rat s = (target - h0) / (h1 - h0);
  V2 q = v_add(p[k], v_scale(s, v_sub(p[k + 1], p[k])));
  p.insert(p.begin() + static_cast<long>(k) + 1, q);
  return k + 1;
}

std::optional<Path> lower(const Sys& sys, int axis, const Path& path) {
  Rat m = min_h(path, axis);
  require(is_integer(m), Errc::integrity, "non-integral minimum in path model");
  if (coord(path.back(), axis) - m < 1) return std::nullopt;
  Path p = path;
  std::size_t k0 = 0; /* last attainment of the minimum */
  for (std::size_t k = 0; k < p.size(); ++k)
    if (coord(p[k], axis) == m) k0 = k;
  std::size_t kq = k0 + 1; /* first point after k0 with h == m + 1 */
  while (coord(p[kq], axis) < m + 1) ++kq;
  if (coord(p[kq], axis) > m + 1) kq = split_edge(p, kq - 1, axis, m + 1);
  Path np(p.begin(), p.begin() + static_cast<long>(k0) + 1);
  for (std::size_t k = k0 + 1; k <= kq; ++k)
    np.push_back(v_add(p[k0], sys.reflect(axis, v_sub(p[k], p[k0]))));
  for (std::size_t k = kq + 1; k < p.size(); ++k)
    np.push_back(v_sub(p[k], sys.alpha(axis)));
  return canonical(np);
}

std::optional<Path> raise(const Sys& sys, int axis, const Path& path) {
  Rat m = min_h(path, axis);
  require(is_integer(m), Errc::integrity, "non-integral minimum in path model");
  if (m > -1) return std::nullopt;
  Path p = path;
  std::size_t k1 = 0; /* first attainment of the minimum */
  while (coord(p[k1], axis) != m) ++k1;
  std::size_t kq = k1; /* last point before k1 with h == m + 1 */
  while (coord(p[kq], axis) < m + 1) --kq;
  if (coord(p[kq], axis) > m + 1) {
    kq = split_edge(p, kq, axis, m + 1);
    ++k1;
  }
  Path np(p.begin(), p.begin() + static_cast<long>(kq) + 1);
  for (std::size_t k = kq + 1; k <= k1; ++k)
    np.push_back(v_add(p[kq], sys.reflect(axis, v_sub(p[k], p[kq]))));
  for (std::size_t k = k1 + 1; k < p.size(); ++k)
    np.push_back(v_add(p[k], sys.alpha(axis)));
  return canonical(np);
}

long long path_eps(const Path& p, int axis) { return -rat_ll(min_h(p, axis)); }

long long path_phi(const Path& p, int axis) {
  return rat_ll(coord(p.back(), axis) - min_h(p, axis));
}

void validate_cartan(long long aij, long long aji) {
  require((aij == 0) == (aji == 0) && aij <= 0 && aji <= 0 && aij * aji <= 3,
          Errc::invalid_argument, "not a finite rank-2 Cartan matrix");
}

} /* namespace */

Rank2Graph rank2_reference(long long aij, long long aji, long long a, long long b,
                           std::size_t cap) {
  validate_cartan(aij, aji);
  require(a >= 0 && b >= 0, Errc::invalid_argument, "highest weight must be dominant");
  Sys sys{aij, aji};

  Path start{{Rat(0), Rat(0)}};
  if (a != 0 || b != 0) start.push_back({Rat(a), Rat(b)});

  Rank2Graph g;
  g.aij = aij;
  g.aji = aji;
  std::map<Path, int> ids;
  std::deque<Path> todo;
  auto intern = [&](const Path& p) {
    auto [it, fresh] = ids.emplace(p, static_cast<int>(ids.size()));
    if (fresh) {
      require(ids.size() <= cap, Errc::cap_exceeded, "rank-2 reference cap exceeded");
      g.fmap.push_back({-1, -1});
      g.emap.push_back({-1, -1});
      g.eps.push_back({path_eps(p, 0), path_eps(p, 1)});
      g.phi.push_back({path_phi(p, 0), path_phi(p, 1)});
      todo.push_back(p);
    }
    return it->second;
  };
  g.root = intern(start);
  while (!todo.empty()) {
    Path p = std::move(todo.front());
    todo.pop_front();
    int v = ids.at(p);
    for (int axis = 0; axis < 2; ++axis) {
      if (auto q = lower(sys, axis, p)) g.fmap[v][axis] = intern(*q);
      if (auto q = raise(sys, axis, p)) g.emap[v][axis] = intern(*q);
    }
  }
  return g;
}

long long rank2_dimension(long long aij, long long aji, long long a, long long b) {
  validate_cartan(aij, aji);
  require(a >= 0 && b >= 0, Errc::invalid_argument, "highest weight must be dominant");

  /* roots in simple-root coordinates, closed under the two reflections */
  using Root = std::pair<long long, long long>;
  std::set<Root> roots{{1, 0}, {0, 1}};
  std::deque<Root> todo(roots.begin(), roots.end());
  while (!todo.empty()) {
    auto [c1, c2] = todo.front();
    todo.pop_front();
    for (Root r : {Root{-c1 - aij * c2, c2}, Root{c1, -c2 - aji * c1}})
      if (roots.insert(r).second) todo.push_back(r);
  }

  /* symmetrization d_i = (alpha_i|alpha_i)/2 with d1*aij = d2*aji */
  Rat d1(1), d2(1);
  if (aij != 0) {
    d1 = Rat(-aji);
    d2 = Rat(-aij);
  }
  auto norm2 = [&](const Root& r) {
    return 2 * d1 * r.first * r.first + 2 * d1 * Rat(aij) * r.first * r.second +
           2 * d2 * r.second * r.second;
  };
  auto pairing = [&](const Rat& x, const Rat& y, const Root& r) {
    return 2 * (d1 * Rat(r.first) * x + d2 * Rat(r.second) * y) / norm2(r);
  };

  Rat dim(1);
  for (const Root& r : roots) {
    if (r.first < 0 || r.second < 0) continue;
    dim *= pairing(Rat(a + 1), Rat(b + 1), r) / pairing(Rat(1), Rat(1), r);
  }
  return rat_ll(dim);
}

} /* namespace krlab */
