#include "krlab/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <utility>

#include "krlab/demazure.hpp"
#include "krlab/dynkin.hpp"
#include "krlab/hwpaths.hpp"
#include "krlab/kr_a.hpp"
#include "krlab/rmatrix.hpp"
#include "krlab/virtual_a2.hpp"
#include "krlab/weyl.hpp"

namespace krlab {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

/* boolean check; thrown engine errors demote to a failed assertion */
template <class F>
void check(VerificationReport& report, const std::string& invariant,
           const std::string& label, F&& fn) {
  Assertion a{invariant, label, false};
  try {
    a.pass = fn();
  } catch (const Error& e) {
    a.detail = label + ": " + e.what();
  }
  report.assertions.push_back(std::move(a));
}

/* violation-list check; an empty list passes */
template <class F>
void check_report(VerificationReport& report, const std::string& invariant,
                  const std::string& label, F&& fn) {
  Assertion a{invariant, label, false};
  try {
    std::vector<std::string> bad = fn();
    a.pass = bad.empty();
    if (!bad.empty()) {
      a.detail = label + ": " + bad.front();
      if (bad.size() > 1) a.detail += " (+" + std::to_string(bad.size() - 1) + " more)";
    }
  } catch (const Error& e) {
    a.detail = label + ": " + e.what();
  }
  report.assertions.push_back(std::move(a));
}

void fail_assert(VerificationReport& report, const std::string& invariant,
                 const std::string& label, const std::string& why) {
  report.assertions.push_back({invariant, label + ": " + why, false});
}

} /* namespace */

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; }));
}

std::size_t VerificationReport::failed() const { return assertions.size() - passed(); }

std::string VerificationReport::str() const {
  std::string out;
  for (const Assertion& a : assertions)
    out += std::string(a.pass ? "pass  " : "FAIL  ") + a.invariant + "  " + a.detail + "\n";
  char tail[160];
  std::snprintf(tail, sizeof(tail), "%s: %zu pass, %zu fail  [%.2fs]\n", suite.c_str(),
                passed(), failed(), wall_seconds);
  return out + tail;
}

std::string VerificationReport::json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["pass"] = passed();
  j["fail"] = failed();
  j["wall_seconds"] = wall_seconds;
  auto arr = nlohmann::json::array();
  for (const Assertion& a : assertions)
    arr.push_back({{"invariant", a.invariant},
                   {"status", a.pass ? "pass" : "fail"},
                   {"detail", a.detail}});
  j["assertions"] = std::move(arr);
  return j.dump(2);
}

std::string KrInstance::str() const {
  return type.str() + " B[" + std::to_string(r) + "," + std::to_string(s) + "]";
}

std::string KrPair::str() const {
  return type.str() + " B[" + std::to_string(r1) + "," + std::to_string(s1) + "] (x) B[" +
         std::to_string(r2) + "," + std::to_string(s2) + "]";
}

std::vector<KrInstance> default_instances() {
  std::vector<KrInstance> out;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= 3; ++s) out.push_back({{AffineFamily::a_untwisted, n}, r, s});
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= 2; ++s) out.push_back({{AffineFamily::a_even_twisted, n}, r, s});
  return out;
}

std::vector<KrPair> default_pairs() {
  std::vector<KrPair> out;
  for (int n = 1; n <= 2; ++n) {
    std::vector<std::pair<int, int>> rects;
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= 2; ++s) rects.emplace_back(r, s);
    for (auto [r1, s1] : rects)
      for (auto [r2, s2] : rects)
        out.push_back({{AffineFamily::a_untwisted, n}, r1, s1, r2, s2});
  }
  for (int r1 = 1; r1 <= 2; ++r1)
    for (int r2 = 1; r2 <= 2; ++r2)
      out.push_back({{AffineFamily::a_even_twisted, 2}, r1, 1, r2, 1});
  return out;
}

CrystalModel build_model(const KrInstance& inst, std::size_t cap) {
  require(inst.r >= 1 && inst.s >= 1, Errc::invalid_argument,
          "rectangle labels must be positive in " + inst.str());
  CrystalModel m;
  m.instance = inst;
  if (inst.type.family == AffineFamily::a_untwisted) {
    const CartanDatum& d = CartanDatum::get(inst.type);
    require(inst.r <= d.n, Errc::invalid_argument,
            "node outside the classical diagram in " + inst.str());
    auto kr = std::make_unique<KrCrystalA>(d, inst.r, inst.s);
    m.graph = kr->graph(cap);
    m.crystal = std::move(kr);
  } else if (inst.type.family == AffineFamily::a_even_twisted) {
    require(inst.r <= inst.type.n, Errc::invalid_argument,
            "node outside the classical diagram in " + inst.str());
    auto vc = std::make_unique<VirtualCrystalA2>(inst.type.n, inst.r, inst.s);
    m.graph = vc->graph(cap);
    m.crystal = std::move(vc);
  } else {
    fail(Errc::unsupported,
         "no crystal model for " + inst.type.str() +
             "; implemented models: untwisted A tableaux and the even twisted virtual construction");
  }
  return m;
}

/* ---------- suite: wtilde ---------- */

VerificationReport verify_wtilde(int max_rank) {
  VerificationReport report{"wtilde", {}, 0};
  Timer tm;
  for (const AffineType& t : all_types(max_rank)) {
    switch (t.family) {
      case AffineFamily::b_untwisted:
      case AffineFamily::c_untwisted:
      case AffineFamily::d_untwisted:
      case AffineFamily::a_odd_twisted:
      case AffineFamily::a_even_twisted:
      case AffineFamily::d_twisted: break;
      default: continue;
    }
    const WeylGroup& w = WeylGroup::get(t);
    const CartanDatum& d = w.datum();
    for (int r = 1; r <= d.n; ++r) {
      if (d.is_special(r)) continue;
      if (t.family == AffineFamily::d_untwisted && r > d.n - 2) continue;
      std::string label = t.str() + " r=" + std::to_string(r);
      check_report(report, "weyl/coset-word", label, [&] {
        std::vector<std::string> bad;
        Mat tr = w.translation(Rat(-d.c[r]) * d.section(d.omega(r)));
        Mat z = w.factor_sigma(tr).z;
        Mat rep_m = w.min_coset_rep_left(z);
        Word closed = w.closed_form_coset_word(r);
        if (!(w.word_matrix(closed) == rep_m))
          bad.push_back("closed-form word misses the minimal coset representative");
        if (static_cast<long long>(closed.size()) != w.length(rep_m))
          bad.push_back("closed-form word is not of reduced length");
        Mat v = z * rep_m.inverse();
        Word vw = w.reduced_word(v);
        if (std::count(vw.begin(), vw.end(), 0) != 0)
          bad.push_back("coset complement leaves the classical subgroup");
        if (w.length(z) != w.length(rep_m) + static_cast<long long>(vw.size()))
          bad.push_back("lengths fail to add along the coset factorization");
        if (w.translation_length(Rat(d.c[r]) * d.omega(r)) != w.length(z))
          bad.push_back("translation length disagrees with the word length");
        return bad;
      });
    }
  }
  report.wall_seconds = tm.seconds();
  return report;
}

/* ---------- suite: sigma ---------- */

namespace {

struct SigmaExpect {
  std::size_t aut = 1, sigma = 1;
  std::string shape = "1";
};

SigmaExpect expected_sigma(const AffineType& t) {
  std::size_t n = static_cast<std::size_t>(t.n);
  switch (t.family) {
    case AffineFamily::a_untwisted:
      return {n == 1 ? 2 : 2 * (n + 1), n + 1, "Z/" + std::to_string(n + 1)};
    case AffineFamily::b_untwisted:
    case AffineFamily::c_untwisted:
    case AffineFamily::a_odd_twisted:
    case AffineFamily::d_twisted:
    case AffineFamily::e7_untwisted: return {2, 2, "Z/2"};
    case AffineFamily::d_untwisted:
      return {n == 4 ? std::size_t{24} : std::size_t{8}, 4,
              n % 2 == 0 ? "Z/2 x Z/2" : "Z/4"};
    case AffineFamily::e6_untwisted: return {6, 3, "Z/3"};
    case AffineFamily::a_even_twisted:
    case AffineFamily::e8_untwisted:
    case AffineFamily::f4_untwisted:
    case AffineFamily::g2_untwisted: return {1, 1, "1"};
  }
  fail(Errc::integrity, "unhandled family in the rotation table");
}

} /* namespace */

VerificationReport verify_sigma(int max_rank) {
  VerificationReport report{"sigma", {}, 0};
  Timer tm;
  for (const AffineType& t : all_types(max_rank)) {
    const CartanDatum& d = CartanDatum::get(t);
    SigmaInfo info = sigma_info(t);
    SigmaExpect exp = expected_sigma(t);
    std::string label = t.str();

    check(report, "dynkin/rotation-table", label, [&] {
      return info.aut_order == exp.aut && info.sigma_order == exp.sigma &&
             info.sigma_shape == exp.shape && info.sigma_perms.size() == exp.sigma;
    });
    check(report, "dynkin/special-orbit", label, [&] {
      return info.special == special_orbit(d) && info.special == d.special &&
             info.special.size() == info.sigma_order;
    });
    check(report, "dynkin/classical-restriction", label, [&] {
      std::vector<int> ident(static_cast<std::size_t>(d.n));
      std::iota(ident.begin(), ident.end(), 1);
      for (const std::vector<int>& p : info.sigma_perms)
        if (classical_restriction(t, DynkinAut{p}) != ident) return false;
      return true;
    });
    if (t.family == AffineFamily::d_untwisted) {
      /* the only listed automorphism with a nontrivial classical shadow */
      check(report, "dynkin/classical-restriction", label + " zero-one swap", [&] {
        DynkinAut swap01;
        swap01.perm.resize(static_cast<std::size_t>(d.n) + 1);
        std::iota(swap01.perm.begin(), swap01.perm.end(), 0);
        std::swap(swap01.perm[0], swap01.perm[1]);
        std::vector<int> want(static_cast<std::size_t>(d.n));
        std::iota(want.begin(), want.end(), 1);
        std::swap(want[static_cast<std::size_t>(d.n) - 2], want[static_cast<std::size_t>(d.n) - 1]);
        return classical_restriction(t, swap01) == want;
      });
    }
  }
  report.wall_seconds = tm.seconds();
  return report;
}

/* ---------- suites over the instance grid ---------- */

VerificationReport verify_demazure_suite(const std::vector<KrInstance>& instances) {
  VerificationReport report{"demazure", {}, 0};
  Timer tm;
  for (const KrInstance& inst : instances) {
    std::string label = inst.str();
    CrystalModel m;
    try {
      m = build_model(inst);
    } catch (const Error& e) {
      fail_assert(report, "kr/model", label, e.what());
      continue;
    }
    const CartanDatum& d = m.crystal->datum();
    check(report, "kr/unique-distinguished-element", label, [&] {
      find_u(m.graph, d, inst.r, inst.s); /* falsified when missing or ambiguous */
      return true;
    });
    check_report(report, "demazure/closure-structure", label,
                 [&] { return verify_demazure(*m.crystal, m.graph, inst.r, inst.s); });
  }
  report.wall_seconds = tm.seconds();
  return report;
}

VerificationReport verify_characters_suite(const std::vector<KrInstance>& instances) {
  VerificationReport report{"characters", {}, 0};
  Timer tm;
  for (const KrInstance& inst : instances) {
    std::string label = inst.str();
    CrystalModel m;
    try {
      m = build_model(inst);
    } catch (const Error& e) {
      fail_assert(report, "kr/model", label, e.what());
      continue;
    }
    check_report(report, "demazure/character-projection", label, [&] {
      return compare_characters(m.graph, m.crystal->datum(), inst.r, inst.s);
    });
  }
  report.wall_seconds = tm.seconds();
  return report;
}

/* ---------- suite: paths ---------- */

namespace {

/* rectangle whose row j holds s copies of letters[j] */
Tableau filled_rows(const std::vector<int>& letters, int s) {
  Tableau t;
  for (int v : letters) t.rows.emplace_back(static_cast<std::size_t>(s), v);
  return t;
}

/* display notation built straight from a letter list: rows print bottom to
   top, so the ascending letters emit in reverse, runs abbreviated as v^s */
std::string run_word(const std::vector<int>& letters_ascending, int s) {
  std::string out;
  for (auto it = letters_ascending.rbegin(); it != letters_ascending.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += std::to_string(*it);
    if (s > 1) out += '^' + std::to_string(s);
  }
  return out.empty() ? "()" : out;
}

/* classical highest weight element of the component of weight s omega_k in
   the even twisted model: left letters 1..k then r+1..2n-k, right 1..r */
std::vector<int> head_letters(int n, int r, int k) {
  std::vector<int> left;
  for (int v = 1; v <= k; ++v) left.push_back(v);
  for (int v = r + 1; v <= 2 * n - k; ++v) left.push_back(v);
  return left;
}

Elem twisted_pair(const std::vector<int>& left, int r, int s) {
  std::vector<int> right;
  for (int v = 1; v <= r; ++v) right.push_back(v);
  return Elem::tensor({Elem::tableau(filled_rows(left, s)), Elem::tableau(filled_rows(right, s))});
}

/* the three display identities along the reflection walk between adjacent
   classical components of the even twisted model */
std::vector<std::string> walk_displays(const Crystal& c, const CrystalGraph& g, int n,
                                       int r, int s, int k) {
  std::vector<std::string> bad;
  std::vector<int> right;
  for (int v = 1; v <= r; ++v) right.push_back(v);
  std::string right_word = "@" + run_word(right, s);

  Elem b = twisted_pair(head_letters(n, r, k), r, s);
  if (g.index_of(b) < 0) {
    bad.push_back("component head missing from the generated crystal");
    return bad;
  }
  if (c.display(b) != run_word(head_letters(n, r, k), s) + right_word)
    bad.push_back("start display disagrees with the letter formula");

  Elem y = b;
  for (int i = k; i >= 1; --i) y = c.reflect(i, y);
  std::vector<int> ys;
  for (int v = 2; v <= k + 1; ++v) ys.push_back(v);
  for (int v = r + 1; v <= 2 * n - k - 1; ++v) ys.push_back(v);
  ys.push_back(2 * n);
  if (c.display(y) != run_word(ys, s) + right_word)
    bad.push_back("reflected display disagrees with the letter formula");
  if (y != twisted_pair(ys, r, s)) bad.push_back("reflected element disagrees with the letter formula");

  Elem z = y;
  for (int q = 0; q < s; ++q) {
    std::optional<Elem> nx = c.f(0, z);
    if (!nx) {
      bad.push_back("zero arrow undefined along the walk");
      return bad;
    }
    z = *nx;
  }
  if (c.display(z) != run_word(head_letters(n, r, k + 1), s) + right_word)
    bad.push_back("walk endpoint display disagrees with the letter formula");
  if (z != twisted_pair(head_letters(n, r, k + 1), r, s))
    bad.push_back("walk endpoint misses the next component head");
  return bad;
}

} /* namespace */

VerificationReport verify_paths_suite(const std::vector<KrInstance>& instances) {
  VerificationReport report{"paths", {}, 0};
  Timer tm;

  /* tabulated monomials of the worked instances, matched character for
     character against the stored tables */
  check(report, "hwpaths/tabulated-monomial", "D7~1 B[5,4] shape (4,2,2,1,1)", [&] {
    return path_bd_family(5, 4, Partition::of({4, 2, 2, 1, 1})).str() ==
           "(f0 f2 f3 f4 f1 f2 f3)(f0^2 f2^2 f1^2)";
  });
  check(report, "hwpaths/tabulated-monomial", "C3~1 B[2,3] shape (3,1)", [&] {
    return path_c_family(2, 3, Partition::of({3, 1}), 2).str() == "(f0^2 f1^2)(f0^6)";
  });

  for (const KrInstance& inst : instances) {
    std::string label = inst.str();
    CrystalModel m;
    try {
      m = build_model(inst);
    } catch (const Error& e) {
      fail_assert(report, "kr/model", label, e.what());
      continue;
    }
    check_report(report, "hwpaths/component-cover", label,
                 [&] { return verify_paths(*m.crystal, m.graph, inst.r, inst.s); });
    if (inst.type.family == AffineFamily::a_even_twisted && inst.type.n >= 2) {
      for (int k = 0; k < inst.r; ++k) {
        check_report(report, "virtual/walk-displays", label + " k=" + std::to_string(k), [&] {
          return walk_displays(*m.crystal, m.graph, inst.type.n, inst.r, inst.s, k);
        });
      }
    }
  }
  report.wall_seconds = tm.seconds();
  return report;
}

/* ---------- suite: rmatrix ---------- */

VerificationReport verify_rmatrix_suite(const std::vector<KrPair>& pairs) {
  VerificationReport report{"rmatrix", {}, 0};
  Timer tm;
  for (const KrPair& p : pairs) {
    std::string label = p.str();
    try {
      CrystalModel m1 = build_model({p.type, p.r1, p.s1});
      CrystalModel m2 = build_model({p.type, p.r2, p.s2});
      RFactor f1 = RFactor::of(*m1.crystal, m1.graph, p.r1, p.s1);
      RFactor f2 = RFactor::of(*m2.crystal, m2.graph, p.r2, p.s2);
      TensorPair fwd(f1, f2), bwd(f2, f1);

      check(report, "rmatrix/connected", label,
            [&] { return fwd.connected() && bwd.connected(); });
      check(report, "rmatrix/anchor-exchange", label,
            [&] { return combinatorial_R(fwd, bwd, fwd.anchor()) == bwd.anchor(); });

      RMap forward = oracle_R(fwd, bwd);
      RMap backward = oracle_R(bwd, fwd);
      check(report, "rmatrix/recipe-vs-oracle", label, [&] {
        for (const Elem& b : fwd.graph().nodes)
          if (combinatorial_R(fwd, bwd, b) != forward.apply(b)) return false;
        return true;
      });
      check(report, "rmatrix/involution", label, [&] {
        for (const Elem& b : fwd.graph().nodes)
          if (backward.apply(forward.apply(b)) != b) return false;
        return true;
      });
    } catch (const Error& e) {
      fail_assert(report, "rmatrix/pair", label, e.what());
    }
  }
  report.wall_seconds = tm.seconds();
  return report;
}

/* ---------- suite: axioms ---------- */

VerificationReport verify_axioms_suite(const std::vector<KrInstance>& instances) {
  VerificationReport report{"axioms", {}, 0};
  Timer tm;
  for (const KrInstance& inst : instances) {
    std::string label = inst.str();
    CrystalModel m;
    try {
      m = build_model(inst);
    } catch (const Error& e) {
      fail_assert(report, "kr/model", label, e.what());
      continue;
    }
    const CartanDatum& d = m.crystal->datum();
    check_report(report, "crystal/axioms", label,
                 [&] { return check_axioms(*m.crystal, m.graph); });
    check_report(report, "crystal/regularity", label,
                 [&] { return regularity_check(m.graph, d); });
    check_report(report, "kr/convex-hull", label, [&] {
      ClassicalWeight mu = Rat(d.c[inst.r] * inst.s) * d.omega(inst.r);
      return convex_hull_check(m.graph, mu, d);
    });
  }
  report.wall_seconds = tm.seconds();
  return report;
}

/* ---------- dispatch ---------- */

namespace {

int parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    require(pos == s.size(), Errc::invalid_argument, "trailing characters in '" + s + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(Errc::invalid_argument, "expected an integer, got '" + s + "'");
  }
}

std::pair<int, int> parse_rect(const std::string& s) {
  std::size_t comma = s.find(',');
  require(comma != std::string::npos, Errc::invalid_argument,
          "expected R,S for a rectangle, got '" + s + "'");
  return {parse_int(s.substr(0, comma)), parse_int(s.substr(comma + 1))};
}

} /* namespace */

VerificationReport run_suite(const std::string& suite, const std::vector<std::string>& args) {
  if (suite == "wtilde" || suite == "sigma") {
    int max_rank = suite == "wtilde" ? 6 : 8;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--max-rank" && i + 1 < args.size()) {
        max_rank = parse_int(args[++i]);
      } else {
        fail(Errc::invalid_argument, "unknown argument '" + args[i] + "' for suite " + suite);
      }
    }
    require(max_rank >= 1, Errc::invalid_argument, "max rank must be positive");
    return suite == "wtilde" ? verify_wtilde(max_rank) : verify_sigma(max_rank);
  }

  if (suite == "demazure" || suite == "characters" || suite == "paths" || suite == "axioms") {
    std::vector<KrInstance> insts;
    if (args.empty()) {
      insts = default_instances();
    } else if (args.size() == 3) {
      insts = {{AffineType::parse(args[0]), parse_int(args[1]), parse_int(args[2])}};
    } else {
      fail(Errc::invalid_argument, "suite " + suite + " expects no arguments or TYPE R S");
    }
    if (suite == "demazure") return verify_demazure_suite(insts);
    if (suite == "characters") return verify_characters_suite(insts);
    if (suite == "paths") return verify_paths_suite(insts);
    return verify_axioms_suite(insts);
  }

  if (suite == "rmatrix") {
    std::vector<KrPair> pairs;
    if (args.empty()) {
      pairs = default_pairs();
    } else if (args.size() == 3) {
      auto [r1, s1] = parse_rect(args[1]);
      auto [r2, s2] = parse_rect(args[2]);
      pairs = {{AffineType::parse(args[0]), r1, s1, r2, s2}};
    } else {
      fail(Errc::invalid_argument, "suite rmatrix expects no arguments or TYPE R1,S1 R2,S2");
    }
    return verify_rmatrix_suite(pairs);
  }

  fail(Errc::unsupported, "unknown suite '" + suite +
                              "'; available: wtilde, sigma, demazure, characters, paths, "
                              "rmatrix, axioms");
}

} /* namespace krlab */
