#pragma once

#include <string>
#include <vector>

#include "ntc/reduction.hpp"

namespace ntc {

// The hypersurface x^a + y^b + z^c with 2 <= a <= b <= c. Only a and b
// enter any formula below; c is stored and its ordering enforced.
struct BrieskornType {
  long long a, b, c;
};

BrieskornType make_brieskorn(long long a, long long b, long long c);  // validates ordering

struct BrieskornInvariants {
  long long d;             // gcd(a, b)
  std::vector<long long> n;  // n_k = floor(k*b/a), k = 1..a-1
  long long r;             // n_{a-1}, the stabilization index of the maximal ideal
  long long zsq;           // Z^2 = -a
  long long kz;            // K_X.Z = d + ab - b - 2a
};

BrieskornInvariants invariants(const BrieskornType& t);

// The integral closure of the n-th power of the maximal ideal, encoded by
// layer exponents: layer k holds x^k * Q^{e_k} with Q = (y, z), k = 0..a-1.
// Invariants: e nonincreasing across layers (closure under multiplication
// by x) and e_0 <= e_{a-1} + b (closure under x * x^{a-1}, via the defining
// equation).
struct LayeredMonomialIdeal {
  std::vector<long long> e;
  bool operator==(const LayeredMonomialIdeal&) const = default;
};

void check_layers(const BrieskornType& t, const LayeredMonomialIdeal& ideal);

// e_k = max(n - n_k, 0), with n_0 = 0 (a nonpositive Q-exponent means the
// whole ring in that layer).
LayeredMonomialIdeal overline_power(const BrieskornType& t, long long n);

// Multiplication by Q raises every layer exponent by one.
LayeredMonomialIdeal q_multiply(const LayeredMonomialIdeal& ideal);

// Colength of the ideal in the local ring: the ring splits as a sum over
// layers of power series in y, z, so the count is sum_k e_k (e_k + 1) / 2
// (monomials y^i z^j with i + j < e_k in layer k).
long long colength(const BrieskornType& t, const LayeredMonomialIdeal& ideal);

// Least r such that (n+1)-st closure == Q * (n-th closure) for all n in
// [r, r + a*b]. The window is generous on purpose: the exponent profiles
// are affine in n from the stabilization index on, so one window length of
// equalities certifies all larger n.
long long br_direct(const BrieskornType& t);

// Colength of L_n = Q + (n-th closure): min { k >= 1 : n <= n_k }, for
// 1 <= n <= r.
long long L_colength(const BrieskornType& t, long long n);

// s_{k+1} = a - ceil(a(k+1)/b) for 0 <= k <= r; cross-checked exactly
// against the layered-ideal colength difference
// colength(Q * closure^k) - colength(closure^(k+1)).
long long step(const BrieskornType& t, long long k);

// The b-sequence of the maximal ideal: l_I = 1, e_0 = a, steps from step().
BSequence b_sequence(const BrieskornType& t);

struct GorensteinVerdict {
  bool arith;      // b mod a is 0 or d mod a
  bool cycle;      // (r-1)(-a) + d + ab - b - 2a == 0
  bool symmetric;  // b-sequence is palindromic
  bool value() const { return arith; }  // the three agree (checked)
};

GorensteinVerdict is_gorenstein(const BrieskornType& t);

// Difference profile Delta_n = q_0 - q_n of the maximal ideal, recovered
// from the step formula: drop(n) = sum_{j>=n} step(j).
QSequence q_profile(const BrieskornType& t);

// Sweeps all 2 <= a <= b <= c <= max_abc and checks:
//   1. r >= a - 1;
//   2. r and a both odd => not Gorenstein;
//   3. (3, 3s, 3s) => Gorenstein with r = 2s;
//   4. a = 4 and Gorenstein => r mod 3 in {0, 1};
//   5. (a, a, a) => Gorenstein with r = a - 1.
struct CorollaryReport {
  long long types_checked = 0;
  std::vector<std::string> violations;  // "(a,b,c): claim-N", expected empty
};

CorollaryReport corollary_suite(long long max_abc);

}  // namespace ntc
