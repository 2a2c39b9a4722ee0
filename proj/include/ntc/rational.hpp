#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <string>
#include <vector>

namespace ntc {

// All lattice arithmetic is exact: arbitrary-precision integers and
// rationals over them. No floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

// Compare Rat values only against other Rat values. Under C++20 reversed
// operator lookup, boost::rational's mixed ==/!= against a raw integer or
// an Int selects itself and recurses forever; write `x == Rat(0)`, never
// `x == 0`. Relational <, <=, >, >= are unaffected.

// Coefficient vectors of cycles, indexed by vertex input order.
using QVec = std::vector<Rat>;
using ZVec = std::vector<Int>;

inline bool is_integer(const Rat& x) { return x.denominator() == 1; }

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

std::string to_string(const Int& x);
std::string to_string(const Rat& x);  // "p" when integral, else "p/q"

QVec to_rational(const ZVec& v);
bool is_integral(const QVec& v);
ZVec to_integral(const QVec& v);  // requires is_integral(v)

}  // namespace ntc
