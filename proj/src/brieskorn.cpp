#include "ntc/brieskorn.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ntc {

namespace {

[[noreturn]] void bad(const char* what) { throw std::invalid_argument(what); }

long long ceil_div(long long num, long long den) {  // den > 0
  return num / den + (num % den > 0 ? 1 : 0);
}

}  // namespace

BrieskornType make_brieskorn(long long a, long long b, long long c) {
  if (a < 2 || a > b || b > c) bad("exponents must satisfy 2 <= a <= b <= c");
  return BrieskornType{a, b, c};
}

BrieskornInvariants invariants(const BrieskornType& t) {
  BrieskornInvariants inv;
  inv.d = std::gcd(t.a, t.b);
  for (long long k = 1; k < t.a; ++k) inv.n.push_back(k * t.b / t.a);
  inv.r = inv.n.back();
  inv.zsq = -t.a;
  inv.kz = inv.d + t.a * t.b - t.b - 2 * t.a;
  return inv;
}

void check_layers(const BrieskornType& t, const LayeredMonomialIdeal& ideal) {
  if (static_cast<long long>(ideal.e.size()) != t.a) bad("ideal must have one layer per residue");
  for (std::size_t k = 0; k < ideal.e.size(); ++k) {
    if (ideal.e[k] < 0) bad("layer exponents must be >= 0");
    if (k > 0 && ideal.e[k] > ideal.e[k - 1]) {
      bad("layer exponents must be nonincreasing (closure under multiplication)");
    }
  }
  if (ideal.e.front() > ideal.e.back() + t.b) {
    bad("top layer exponent exceeds bottom layer plus b (wrap-around closure)");
  }
}

LayeredMonomialIdeal overline_power(const BrieskornType& t, long long n) {
  if (n < 0) bad("power must be >= 0");
  LayeredMonomialIdeal ideal;
  ideal.e.push_back(n);  // n_0 = 0
  for (long long k = 1; k < t.a; ++k) {
    const long long nk = k * t.b / t.a;
    ideal.e.push_back(n > nk ? n - nk : 0);
  }
  check_layers(t, ideal);
  return ideal;
}

LayeredMonomialIdeal q_multiply(const LayeredMonomialIdeal& ideal) {
  LayeredMonomialIdeal out = ideal;
  for (long long& ek : out.e) ++ek;
  return out;
}

long long colength(const BrieskornType& t, const LayeredMonomialIdeal& ideal) {
  check_layers(t, ideal);
  long long total = 0;
  for (long long ek : ideal.e) total += ek * (ek + 1) / 2;
  return total;
}

long long br_direct(const BrieskornType& t) {
  const long long window = t.a * t.b;
  auto eq = [&](long long n) {
    return overline_power(t, n + 1) == q_multiply(overline_power(t, n));
  };
  // Scan upward; a full window of consecutive equalities past the last
  // failure certifies stabilization (the layer profiles, and hence the
  // equality pattern, are eventually periodic with period dividing a*b).
  const long long cap = t.b + 2 * window + 2;
  long long last_fail = 0;
  for (long long n = 1; n <= last_fail + window + 1; ++n) {
    if (n > cap) throw std::logic_error("no stabilization within scan bound");
    if (!eq(n)) last_fail = n;
  }
  return last_fail + 1;
}

long long L_colength(const BrieskornType& t, long long n) {
  const BrieskornInvariants inv = invariants(t);
  if (n < 1 || n > inv.r) bad("n must lie in [1, r]");
  for (long long k = 1; k < t.a; ++k) {
    if (n <= inv.n[static_cast<std::size_t>(k - 1)]) return k;
  }
  throw std::logic_error("n <= r must be covered by some n_k");
}

long long step(const BrieskornType& t, long long k) {
  const BrieskornInvariants inv = invariants(t);
  if (k < 0 || k > inv.r) bad("step index must lie in [0, r]");
  const long long formula = t.a - ceil_div(t.a * (k + 1), t.b);
  const long long oracle = colength(t, q_multiply(overline_power(t, k))) -
                           colength(t, overline_power(t, k + 1));
  if (formula != oracle) throw std::logic_error("step formula disagrees with layered-ideal count");
  return formula;
}

BSequence b_sequence(const BrieskornType& t) {
  const BrieskornInvariants inv = invariants(t);
  StepSequence s;
  for (long long k = 0; k <= inv.r; ++k) s.s.push_back(step(t, k));
  s.e0 = t.a;
  s.lI = 1;
  return b_sequence(s);
}

GorensteinVerdict is_gorenstein(const BrieskornType& t) {
  const BrieskornInvariants inv = invariants(t);
  GorensteinVerdict v;
  const long long bmod = t.b % t.a;
  v.arith = bmod == 0 || bmod == inv.d % t.a;
  v.cycle = gorenstein_cycle_criterion(inv.zsq, inv.kz, inv.r);
  v.symmetric = is_symmetric(b_sequence(t));
  if (v.arith != v.cycle || v.cycle != v.symmetric) {
    throw std::logic_error("Gorenstein tests disagree");
  }
  return v;
}

QSequence q_profile(const BrieskornType& t) {
  const BrieskornInvariants inv = invariants(t);
  std::vector<long long> drops(static_cast<std::size_t>(inv.r), 0);
  for (long long n = inv.r; n >= 1; --n) {
    const std::size_t i = static_cast<std::size_t>(n - 1);
    drops[i] = step(t, n) + (n == inv.r ? 0 : drops[i + 1]);
  }
  std::vector<long long> delta;
  long long acc = 0;
  for (long long d : drops) {
    acc += d;
    delta.push_back(acc);
  }
  delta.push_back(acc);  // stabilization witness
  return QSequence::from_differences(delta);
}

CorollaryReport corollary_suite(long long max_abc) {
  if (max_abc < 2) bad("sweep bound must be >= 2");
  CorollaryReport report;
  auto flag = [&](const BrieskornType& t, int claim) {
    std::ostringstream os;
    os << "(" << t.a << "," << t.b << "," << t.c << "): claim-" << claim;
    report.violations.push_back(os.str());
  };
  for (long long a = 2; a <= max_abc; ++a) {
    for (long long b = a; b <= max_abc; ++b) {
      for (long long c = b; c <= max_abc; ++c) {
        const BrieskornType t = make_brieskorn(a, b, c);
        const BrieskornInvariants inv = invariants(t);
        const bool gor = is_gorenstein(t).value();
        ++report.types_checked;
        if (inv.r < a - 1) flag(t, 1);
        if (inv.r % 2 == 1 && a % 2 == 1 && gor) flag(t, 2);
        if (a == 3 && b == c && b % 3 == 0 && !(gor && inv.r == 2 * (b / 3))) flag(t, 3);
        if (a == 4 && gor && inv.r % 3 == 2) flag(t, 4);
        if (a == b && b == c && !(gor && inv.r == a - 1)) flag(t, 5);
      }
    }
  }
  return report;
}

}  // namespace ntc
