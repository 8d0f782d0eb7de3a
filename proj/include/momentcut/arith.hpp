#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace momentcut {

// All arithmetic in the pipeline is exact. Int is an arbitrary-precision
// integer; Rat is kept in lowest terms with a positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

struct DimensionMismatchError : std::invalid_argument {
  explicit DimensionMismatchError(const std::string& msg)
      : std::invalid_argument(msg) {}
};

struct RatParseError : std::invalid_argument {
  explicit RatParseError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Accepts "p" or "p/q" with an optional leading sign on p. Throws
// RatParseError on anything else, including a zero denominator.
Rat parse_rat(const std::string& s);

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& q);

// Floor division; b must be positive.
Int floor_div(const Int& a, const Int& b);

// gcd of all entries, >= 0; zero for the zero vector.
Int vec_gcd(const IntVec& v);

bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);

RatVec to_rat(const IntVec& v);

// v / gcd(v); the zero vector is returned unchanged.
IntVec make_primitive(IntVec v);

// Scales a rational vector by the smallest positive factor making it
// integral, then reduces to primitive. Zero maps to zero.
IntVec primitive_direction(const RatVec& v);

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec neg(IntVec v);
IntVec scale(const IntVec& v, const Int& c);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& v, const Rat& c);

std::string vec_str(const IntVec& v);
std::string vec_str(const RatVec& v);

}  // namespace momentcut
