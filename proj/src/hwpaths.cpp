#include "krlab/hwpaths.hpp"

#include <json.hpp>

#include <set>

#include "krlab/kr_a.hpp"

namespace krlab {

namespace {

/* k-th part, 1-indexed, zero beyond the last row */
long long part(const Partition& p, int k) {
  return k >= 1 && k <= p.rows() ? p.parts[static_cast<std::size_t>(k) - 1] : 0;
}

bool fits_box(const Partition& p, int r, int s) {
  return p.rows() <= r && (p.parts.empty() || p.parts.front() <= s);
}

void push_factor(std::vector<std::pair<int, long long>>& block, int node, long long m) {
  if (m > 0) block.emplace_back(node, m);
}

std::vector<Partition> partitions_in_box(int r, int s) {
  std::vector<Partition> out;
  std::vector<int> rows;
  auto rec = [&](auto&& self, int bound) -> void {
    out.push_back(Partition::of(rows));
    for (int v = bound; v >= 1; --v) {
      if (static_cast<int>(rows.size()) == r) break;
      rows.push_back(v);
      self(self, v);
      rows.pop_back();
    }
  };
  rec(rec, s);
  return out;
}

} /* namespace */

std::vector<std::pair<int, long long>> OperatorMonomial::flat() const {
  std::vector<std::pair<int, long long>> out;
  for (const auto& block : blocks) out.insert(out.end(), block.begin(), block.end());
  return out;
}

std::string OperatorMonomial::str() const {
  if (blocks.empty()) return "1";
  std::string out;
  for (const auto& block : blocks) {
    out += "(";
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) out += " ";
      out += "f" + std::to_string(block[k].first);
      if (block[k].second > 1) out += "^" + std::to_string(block[k].second);
    }
    out += ")";
  }
  return out;
}

std::string OperatorMonomial::json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [node, m] : flat()) arr.push_back({node, m});
  return arr.dump();
}

bool domino_admissible(const Partition& lambda, int r, int s) {
  if (!fits_box(lambda, r, s)) return false;
  for (int j = 1; j <= s; ++j) {
    int height = 0;
    for (int p : lambda.parts) height += p >= j ? 1 : 0;
    if ((height - r) % 2 != 0) return false;
  }
  return true;
}

OperatorMonomial path_bd_family(int r, int s, const Partition& lambda) {
  require(r >= 1 && s >= 1, Errc::invalid_argument, "rectangle sides must be positive");
  require(domino_admissible(lambda, r, s), Errc::invalid_argument,
          "shape is not the rectangle minus vertical dominoes");
  int t = r % 2;
  OperatorMonomial mono;
  for (int i = (r - t) / 2; i >= 1; --i) {
    long long m = part(lambda, 2 * i);
    if (m == 0) continue;
    std::vector<std::pair<int, long long>> block;
    push_factor(block, 0, m);
    for (int j = 2; j <= 2 * i - 1 + t; ++j) push_factor(block, j, m);
    for (int j = 1; j <= 2 * i - 2 + t; ++j) push_factor(block, j, m);
    mono.blocks.push_back(std::move(block));
  }
  return mono;
}

OperatorMonomial path_c_family(int r, int s, const Partition& lambda, long long cr) {
  require(r >= 1 && s >= 1, Errc::invalid_argument, "rectangle sides must be positive");
  require(cr >= 1, Errc::invalid_argument, "scaling factor must be positive");
  require(fits_box(lambda, r, s), Errc::invalid_argument,
          "shape must fit inside the rectangle");
  OperatorMonomial mono;
  for (int i = r; i >= 1; --i) {
    long long m = cr * part(lambda, i);
    if (m == 0) continue;
    std::vector<std::pair<int, long long>> block;
    for (int j = 0; j <= i - 1; ++j) push_factor(block, j, m);
    mono.blocks.push_back(std::move(block));
  }
  return mono;
}

std::vector<std::string> verify_paths(const Crystal& kr, const CrystalGraph& g, int r, int s) {
  const CartanDatum& d = kr.datum();
  std::vector<std::string> bad;
  std::vector<int> classical;
  for (int i = 1; i <= d.n; ++i) classical.push_back(i);
  std::vector<std::vector<int>> comps = components(g, classical);

  if (d.type.family == AffineFamily::a_untwisted) {
    /* single component reached by the empty monomial */
    if (comps.size() != 1)
      bad.push_back("expected one classical component, found " + std::to_string(comps.size()));
    std::vector<int> hw = highest_nodes(g, classical);
    if (hw.size() != 1)
      bad.push_back("expected one classically highest element, found " +
                    std::to_string(hw.size()));
    else if (!(g.nodes[static_cast<std::size_t>(hw[0])] == find_u(g, d, r, s)))
      bad.push_back("the distinguished element is not the classically highest one");
    return bad;
  }

  require(d.type.family == AffineFamily::a_even_twisted, Errc::unsupported,
          "no executable crystal model for this family");

  Elem u = find_u(g, d, r, s);
  long long cr = d.c[static_cast<std::size_t>(r)];
  std::set<Elem> endpoints;
  std::size_t shapes = 0;
  for (const Partition& lambda : partitions_in_box(r, s)) {
    ++shapes;
    OperatorMonomial mono = path_c_family(r, s, lambda, cr);
    Elem x = u;
    bool defined = true;
    for (const auto& [node, m] : mono.flat()) {
      for (long long step = 0; step < m && defined; ++step) {
        std::optional<Elem> next = kr.f(node, x);
        if (!next) {
          bad.push_back("shape " + lambda.str() + ": f" + std::to_string(node) +
                        " undefined at " + kr.display(x));
          defined = false;
        } else {
          x = *next;
        }
      }
      if (!defined) break;
    }
    if (!defined) continue;
    for (int i : classical)
      if (kr.eps(i, x) != 0) {
        bad.push_back("shape " + lambda.str() + ": endpoint " + kr.display(x) +
                      " is not classically highest");
        break;
      }
    ClassicalWeight want(static_cast<std::size_t>(d.n));
    for (int i = 1; i <= d.n; ++i)
      want.om[static_cast<std::size_t>(i) - 1] = Rat(cr) * Rat(part(lambda, i) - part(lambda, i + 1));
    if (!(d.cl(kr.weight(x)) == want))
      bad.push_back("shape " + lambda.str() + ": endpoint " + kr.display(x) +
                    " has classical weight " + d.cl(kr.weight(x)).str() + ", expected " +
                    want.str());
    if (!endpoints.insert(x).second)
      bad.push_back("shape " + lambda.str() + ": endpoint " + kr.display(x) +
                    " repeats an earlier one");
  }
  if (endpoints.size() != comps.size() || shapes != comps.size())
    bad.push_back("paths reach " + std::to_string(endpoints.size()) + " of " +
                  std::to_string(comps.size()) + " classical components");
  return bad;
}

} /* namespace krlab */
