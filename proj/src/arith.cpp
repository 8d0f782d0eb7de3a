#include "momentcut/arith.hpp"

#include <cctype>
#include <sstream>

namespace momentcut {

Rat parse_rat(const std::string& s) {
  auto fail = [&]() -> Rat {
    throw RatParseError("not a rational: '" + s + "'");
  };
  std::size_t pos = 0;
  auto read_int = [&](bool sign_allowed) -> Int {
    std::size_t start = pos;
    if (sign_allowed && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0) fail();
    return Int(s.substr(start, pos - start));
  };
  Int num = read_int(true);
  Int den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = read_int(true);
  }
  if (pos != s.size()) fail();
  if (den == 0) throw RatParseError("zero denominator in '" + s + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

Int vec_gcd(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const RatVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

namespace {
void check_size(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatchError("vector length mismatch");
}
}  // namespace

Int dot(const IntVec& a, const IntVec& b) {
  check_size(a.size(), b.size());
  Int r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Rat dot(const RatVec& a, const IntVec& b) {
  check_size(a.size(), b.size());
  Rat r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * Rat(b[i]);
  return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
  check_size(a.size(), b.size());
  Rat r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

IntVec make_primitive(IntVec v) {
  Int g = vec_gcd(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

IntVec primitive_direction(const RatVec& v) {
  Int den = 1;
  for (const Rat& x : v) den = lcm(den, denominator(x));
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    w[i] = numerator(v[i]) * (den / denominator(v[i]));
  return make_primitive(std::move(w));
}

IntVec add(const IntVec& a, const IntVec& b) {
  check_size(a.size(), b.size());
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  check_size(a.size(), b.size());
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec neg(IntVec v) {
  for (Int& x : v) x = -x;
  return v;
}

IntVec scale(const IntVec& v, const Int& c) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
  check_size(a.size(), b.size());
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  check_size(a.size(), b.size());
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const RatVec& v, const Rat& c) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

std::string vec_str(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string vec_str(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << rat_str(v[i]);
  }
  os << ')';
  return os.str();
}

}  // namespace momentcut
