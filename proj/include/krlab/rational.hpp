#pragma once

/* Exact arithmetic and the error plumbing shared by every module. */

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace krlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class Errc {
  invalid_argument, /* malformed input from a caller */
  unsupported,      /* outside the implemented scope, by design */
  falsified,        /* a checked structural claim failed on a concrete instance */
  integrity,        /* an internal cross-check failed: a bug, not a result */
  cap_exceeded,     /* node or work cap hit before completion */
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

/* "p" for integers, "p/q" otherwise; the denominator is always positive. */
inline std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline Rat rat_parse(const std::string& s) {
  auto is_int = [](const std::string& t) {
    std::size_t p = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (p >= t.size()) return false;
    for (std::size_t i = p; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    require(is_int(s), Errc::invalid_argument, "bad rational literal '" + s + "'");
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  require(is_int(num) && is_int(den), Errc::invalid_argument, "bad rational literal '" + s + "'");
  Int d(den);
  require(d != 0, Errc::invalid_argument, "zero denominator in '" + s + "'");
  return Rat(Int(num), d);
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline long long to_ll(const Int& v) {
  require(v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max(),
          Errc::integrity, "integer out of machine range: " + v.str());
  return v.convert_to<long long>();
}

inline long long rat_ll(const Rat& r) {
  require(is_integer(r), Errc::integrity, "expected an integer, got " + rat_str(r));
  return to_ll(numerator(r));
}

inline Int rat_floor(const Rat& r) {
  Int q = numerator(r) / denominator(r); /* truncation toward zero */
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

} /* namespace krlab */
