#include "ntc/rational.hpp"

#include <stdexcept>

namespace ntc {

Int floor_rat(const Rat& x) {
  // boost::rational keeps the denominator positive.
  Int q = x.numerator() / x.denominator();
  if (x.numerator() < 0 && q * x.denominator() != x.numerator()) --q;
  return q;
}

Int ceil_rat(const Rat& x) {
  Int q = x.numerator() / x.denominator();
  if (x.numerator() > 0 && q * x.denominator() != x.numerator()) ++q;
  return q;
}

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rat& x) {
  if (x.denominator() == 1) return x.numerator().str();
  return x.numerator().str() + "/" + x.denominator().str();
}

QVec to_rational(const ZVec& v) {
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

bool is_integral(const QVec& v) {
  for (const Rat& c : v)
    if (!is_integer(c)) return false;
  return true;
}

ZVec to_integral(const QVec& v) {
  ZVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i])) throw std::invalid_argument("cycle is not integral");
    out[i] = v[i].numerator();
  }
  return out;
}

}  // namespace ntc
