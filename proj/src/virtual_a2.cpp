#include "krlab/virtual_a2.hpp"

namespace krlab {

namespace {

int checked(int n, int r, int s) {
  require(n >= 1, Errc::invalid_argument, "rank must be positive");
  require(r >= 1 && r <= n, Errc::invalid_argument, "node outside 1..n");
  require(s >= 1, Errc::invalid_argument, "column count must be positive");
  return n;
}

} /* namespace */

VirtualCrystalA2::VirtualCrystalA2(int n, int r, int s)
    : dv_(CartanDatum::get({AffineFamily::a_even_twisted, checked(n, r, s)})),
      da_(CartanDatum::get({AffineFamily::a_untwisted, 2 * n - 1})),
      left_(da_, 2 * n - r, s),
      right_(da_, r, s),
      amb_(da_, {&left_, &right_}),
      n_(n),
      r_(r),
      s_(s) {}

const CartanDatum& VirtualCrystalA2::datum() const { return dv_; }

std::vector<int> VirtualCrystalA2::colors() const {
  std::vector<int> out;
  for (int i = 0; i <= n_; ++i) out.push_back(i);
  return out;
}

std::string VirtualCrystalA2::display(const Elem& b) const {
  require(b.kind == Elem::Kind::tensor && b.factors.size() == 2 &&
              b.factors[0].kind == Elem::Kind::tab && b.factors[1].kind == Elem::Kind::tab,
          Errc::invalid_argument, "ambient pair expected");
  return row_word(b.factors[0].leaf) + "@" + row_word(b.factors[1].leaf);
}

Elem VirtualCrystalA2::generator() const {
  return Elem::tensor({left_.generator(), right_.generator()});
}

CrystalGraph VirtualCrystalA2::graph(std::size_t cap) const {
  return generate(*this, {generator()}, colors(), cap);
}

std::optional<Elem> VirtualCrystalA2::apply(int i, const Elem& b, bool raising, bool* hit) const {
  require(i >= 0 && i <= n_, Errc::invalid_argument, "color outside the twisted range");
  auto step = [&](int c, const Elem& x) { return raising ? amb_.e(c, x, hit) : amb_.f(c, x, hit); };
  auto movable = [&](int c) { return (raising ? amb_.eps(c, b) : amb_.phi(c, b)) > 0; };

  if (i == 0) return step(0, b);

  if (i == n_) {
    std::optional<Elem> once = step(n_, b);
    if (!once) return std::nullopt;
    std::optional<Elem> twice = step(n_, *once);
    require(twice.has_value(), Errc::integrity,
            "misaligned element: odd ambient string at the fixed node");
    return twice;
  }

  int j = 2 * n_ - i;
  bool can_i = movable(i), can_j = movable(j);
  require(can_i == can_j, Errc::integrity, "misaligned element: paired operators disagree");
  if (!can_i) return std::nullopt;
  std::optional<Elem> mid = step(i, b);
  std::optional<Elem> out = mid ? step(j, *mid) : std::nullopt;
  require(out.has_value(), Errc::integrity, "misaligned element: paired operators disagree");
  return out;
}

std::optional<Elem> VirtualCrystalA2::do_f(int i, const Elem& b, bool* hit) const {
  return apply(i, b, false, hit);
}

std::optional<Elem> VirtualCrystalA2::do_e(int i, const Elem& b, bool* hit) const {
  return apply(i, b, true, hit);
}

long long VirtualCrystalA2::eps(int i, const Elem& b) const {
  long long len = 0;
  Elem x = b;
  for (;;) {
    std::optional<Elem> y = apply(i, x, true, nullptr);
    if (!y) break;
    x = std::move(*y);
    require(++len <= 1000000, Errc::cap_exceeded, "unreasonably long string");
  }
  if (i == 0)
    require(amb_.eps(0, b) == len, Errc::integrity, "zero string disagrees with the ambient");
  else if (i == n_)
    require(amb_.eps(n_, b) == 2 * len, Errc::integrity,
            "fixed node string disagrees with the ambient");
  else
    require(amb_.eps(i, b) == len && amb_.eps(2 * n_ - i, b) == len, Errc::integrity,
            "paired string disagrees with the ambient");
  return len;
}

long long VirtualCrystalA2::phi(int i, const Elem& b) const {
  long long len = 0;
  Elem x = b;
  for (;;) {
    std::optional<Elem> y = apply(i, x, false, nullptr);
    if (!y) break;
    x = std::move(*y);
    require(++len <= 1000000, Errc::cap_exceeded, "unreasonably long string");
  }
  if (i == 0)
    require(amb_.phi(0, b) == len, Errc::integrity, "zero string disagrees with the ambient");
  else if (i == n_)
    require(amb_.phi(n_, b) == 2 * len, Errc::integrity,
            "fixed node string disagrees with the ambient");
  else
    require(amb_.phi(i, b) == len && amb_.phi(2 * n_ - i, b) == len, Errc::integrity,
            "paired string disagrees with the ambient");
  return len;
}

AffineWeight VirtualCrystalA2::weight(const Elem& b) const {
  ClassicalWeight m = da_.cl(amb_.weight(b));
  ClassicalWeight mv(static_cast<std::size_t>(n_));
  for (int i = 1; i < n_; ++i) {
    require(m.om[static_cast<std::size_t>(i - 1)] == m.om[static_cast<std::size_t>(2 * n_ - i - 1)],
            Errc::integrity, "misaligned element: weight pair disagrees");
    mv.om[static_cast<std::size_t>(i - 1)] = m.om[static_cast<std::size_t>(i - 1)];
  }
  Rat half = m.om[static_cast<std::size_t>(n_ - 1)] / 2;
  require(is_integer(half), Errc::integrity, "misaligned element: odd weight at the fixed node");
  mv.om[static_cast<std::size_t>(n_ - 1)] = half;
  return dv_.section(mv);
}

} /* namespace krlab */
