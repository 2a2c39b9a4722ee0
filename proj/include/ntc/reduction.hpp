#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ntc/rational.hpp"

namespace ntc {

// The nonincreasing sequence q_0 >= q_1 >= ... (q_0 the geometric genus,
// q_n the n-th power's invariant), stabilized: the input must witness
// stabilization by repeating the final value. Only differences matter for
// every operation here, so the class stores the drops
// delta_n = q_{n-1} - q_n and accepts either absolute values or a
// difference profile Delta_n = q_0 - q_n anchored at an unknown q_0.
class QSequence {
 public:
  // q = (q_0, ..., q_m): nonnegative, nonincreasing, m >= 1, q_{m-1} == q_m.
  static QSequence from_values(const std::vector<long long>& q);
  // Delta = (Delta_1, ..., Delta_m): nonnegative, nondecreasing, m >= 2,
  // Delta_{m-1} == Delta_m.
  static QSequence from_differences(const std::vector<long long>& delta);

  // delta_n = q_{n-1} - q_n for n >= 1, extended by stabilization (0 beyond
  // the stored range).
  long long drop(std::size_t n) const;

  // (q_{n-1}-q_n) - (q_n-q_{n+1}), n >= 1. Nonnegative for every sequence
  // arising from an integrally closed ideal; a negative value means the
  // input is outside that setting and is rejected.
  long long step(std::size_t n) const;

  bool admissible() const;  // step(n) >= 0 for all n

  // Least n >= 1 with drop(n) == drop(n+1), resp. drop(n) == 0. Both
  // require an admissible sequence; br() >= nr() always (checked).
  long long nr() const;
  long long br() const;

  // q_0 when constructed from absolute values, otherwise empty.
  std::optional<long long> q0() const { return q0_; }

  // The stored difference profile Delta_1..Delta_m (prefix sums of drops).
  std::vector<long long> differences() const;

  // The profile of the k-th power: Delta'_n = Delta_{n*k} (the n-th power of
  // the k-th power is the nk-th power of the original ideal).
  QSequence rescaled(long long k) const;

 private:
  std::vector<long long> drops_;  // delta_1..delta_m, delta_m == 0
  std::optional<long long> q0_;
};

// ceil((r-1)/k) + 1 for r, k >= 1: the stabilization index of the k-th
// power of an ideal with stabilization index r.
long long br_power(long long r, long long k);

// s_n = length of (nth power) / (reduction * (n-1)th power) for n = 1..r+1,
// together with e_0 (the multiplicity, = -Z^2) and l_I = length of A/I.
// Valid when: every s_n >= 0, the list has >= 2 entries, the last entry is
// 0 and is the only zero tail entry boundary (r = largest n with s_n > 0),
// and s_1 = e_0 - l_I.
struct StepSequence {
  std::vector<long long> s;  // s[0] = s_1, ..., s[r] = s_{r+1} = 0
  long long e0 = 0;
  long long lI = 0;
};

// b_0 = l(A/I), b_n = l of the n-th graded piece of the Artinian quotient;
// sum b = e_0. r = b.size()-1 >= 1.
struct BSequence {
  std::vector<long long> b;
  long long r() const { return static_cast<long long>(b.size()) - 1; }
  long long e0() const;  // sum of entries
};

// b_0 = l_I, b_n = s_n - s_{n+1}; rejects negative entries ("inadmissible
// steps") and checks sum b = e_0.
BSequence b_sequence(const StepSequence& steps);

// Prefix sums b_0, b_0+b_1, ..., for n = 1..r: the colengths of the ideals
// L_n = Q + (nth power).
std::vector<long long> L_colengths(const BSequence& b);

bool is_symmetric(const BSequence& b);  // b_k == b_{r-k} for all k

// prefix(n) + prefix(r+1-n) == e_0 for n = 1..ceil(r/2). Equivalent to
// is_symmetric for every valid b-sequence (checked internally).
bool complementarity_check(const BSequence& b);

// The Gorenstein test for the normal tangent cone at stabilization index r:
// (r-1) * Zsq + KZ == 0. Requires Zsq < 0 and r >= 1.
bool gorenstein_cycle_criterion(long long zsq, long long kz, long long r);

// sum_{k=2..r} (k-1) b_k == b_0 - chi(Z) — an unconditional length identity
// in the Cohen-Macaulay setting, Gorenstein or not.
bool eqbb_check(const BSequence& b, const Rat& chi_z);

enum class BrClass { pg, elliptic, higher };
BrClass classify_by_br(long long r);  // 1, 2, >= 3; rejects r < 1
const char* to_string(BrClass c);

// l(A/I) <= pg + 2 - r, the colength bound in the Gorenstein case; r >= 2.
bool colength_bound_check(long long lI, long long pg, long long r);

}  // namespace ntc
