#include "ntc/reduction.hpp"

#include <numeric>
#include <stdexcept>

namespace ntc {

namespace {

[[noreturn]] void bad(const char* what) { throw std::invalid_argument(what); }

}  // namespace

QSequence QSequence::from_values(const std::vector<long long>& q) {
  if (q.size() < 2) bad("q-sequence needs at least two values to witness stabilization");
  if (q.back() != q[q.size() - 2]) bad("q-sequence does not end in a repeated (stabilized) value");
  QSequence s;
  s.q0_ = q.front();
  for (std::size_t n = 1; n < q.size(); ++n) {
    const long long d = q[n - 1] - q[n];
    if (q[n] < 0) bad("q-sequence has a negative value");
    if (d < 0) bad("q-sequence is not nonincreasing");
    s.drops_.push_back(d);
  }
  return s;
}

QSequence QSequence::from_differences(const std::vector<long long>& delta) {
  if (delta.size() < 2) bad("difference profile needs at least two values to witness stabilization");
  if (delta.back() != delta[delta.size() - 2]) {
    bad("difference profile does not end in a repeated (stabilized) value");
  }
  QSequence s;
  long long prev = 0;
  for (long long dn : delta) {
    if (dn < prev) bad("difference profile is not nondecreasing");
    s.drops_.push_back(dn - prev);
    prev = dn;
  }
  return s;
}

long long QSequence::drop(std::size_t n) const {
  if (n == 0) bad("drop index starts at 1");
  return n <= drops_.size() ? drops_[n - 1] : 0;
}

long long QSequence::step(std::size_t n) const { return drop(n) - drop(n + 1); }

bool QSequence::admissible() const {
  for (std::size_t n = 1; n <= drops_.size(); ++n) {
    if (step(n) < 0) return false;
  }
  return true;
}

long long QSequence::nr() const {
  if (!admissible()) bad("q-sequence not admissible");
  for (std::size_t n = 1;; ++n) {
    if (drop(n) == drop(n + 1)) return static_cast<long long>(n);
  }
}

long long QSequence::br() const {
  if (!admissible()) bad("q-sequence not admissible");
  for (std::size_t n = 1; n <= drops_.size() + 1; ++n) {
    if (drop(n) == 0) return static_cast<long long>(n);
  }
  throw std::logic_error("stabilized sequence must reach drop 0");
}

std::vector<long long> QSequence::differences() const {
  std::vector<long long> delta;
  long long acc = 0;
  for (long long d : drops_) {
    acc += d;
    delta.push_back(acc);
  }
  return delta;
}

QSequence QSequence::rescaled(long long k) const {
  if (k < 1) bad("rescale factor must be >= 1");
  const std::vector<long long> delta = differences();
  auto at = [&](std::size_t n) {  // Delta_n, extended by stabilization
    if (n == 0) return 0LL;
    return n <= delta.size() ? delta[n - 1] : delta.back();
  };
  std::vector<long long> out;
  std::size_t n = 1;
  for (;; ++n) {
    out.push_back(at(n * static_cast<std::size_t>(k)));
    if (out.size() >= 2 && out[out.size() - 1] == out[out.size() - 2]) break;
  }
  QSequence s = from_differences(out);
  if (q0_) s.q0_ = q0_;
  return s;
}

long long br_power(long long r, long long k) {
  if (r < 1 || k < 1) bad("stabilization index and power must be >= 1");
  return (r - 1 + k - 1) / k + 1;
}

long long BSequence::e0() const { return std::accumulate(b.begin(), b.end(), 0LL); }

BSequence b_sequence(const StepSequence& steps) {
  if (steps.s.size() < 2) bad("step sequence needs at least two entries");
  if (steps.s.back() != 0) bad("step sequence must end at 0");
  if (steps.s[steps.s.size() - 2] <= 0) bad("step sequence stabilizes before its final entry");
  if (steps.lI < 1) bad("colength of the ideal must be >= 1");
  BSequence out;
  out.b.push_back(steps.lI);
  for (std::size_t n = 0; n + 1 < steps.s.size(); ++n) {
    const long long bn = steps.s[n] - steps.s[n + 1];
    if (bn < 0) bad("inadmissible steps");
    out.b.push_back(bn);
  }
  if (out.e0() != steps.e0) bad("b-sequence does not sum to the multiplicity");
  if (out.r() < 1) bad("b-sequence needs r >= 1");
  return out;
}

std::vector<long long> L_colengths(const BSequence& b) {
  std::vector<long long> out;
  long long acc = 0;
  for (long long n = 1; n <= b.r(); ++n) {
    acc += b.b[static_cast<std::size_t>(n - 1)];
    out.push_back(acc);
  }
  return out;
}

bool is_symmetric(const BSequence& b) {
  const std::size_t r = b.b.size() - 1;
  for (std::size_t k = 0; k <= r; ++k) {
    if (b.b[k] != b.b[r - k]) return false;
  }
  return true;
}

bool complementarity_check(const BSequence& b) {
  const long long r = b.r();
  const long long e0 = b.e0();
  auto prefix = [&](long long n) {  // b_0 + ... + b_{n-1}
    long long acc = 0;
    for (long long k = 0; k < n; ++k) acc += b.b[static_cast<std::size_t>(k)];
    return acc;
  };
  bool ok = true;
  for (long long n = 1; 2 * n <= r + 1; ++n) {
    if (prefix(n) + prefix(r + 1 - n) != e0) {
      ok = false;
      break;
    }
  }
  // The pairwise-complement formulation and plain palindromicity agree for
  // every b-sequence; a divergence would mean a broken invariant, not data.
  if (ok != is_symmetric(b)) throw std::logic_error("complementarity/symmetry mismatch");
  return ok;
}

bool gorenstein_cycle_criterion(long long zsq, long long kz, long long r) {
  if (zsq >= 0) bad("Z^2 must be negative");
  if (r < 1) bad("stabilization index must be >= 1");
  return (r - 1) * zsq + kz == 0;
}

bool eqbb_check(const BSequence& b, const Rat& chi_z) {
  Int lhs = 0;
  for (long long k = 2; k <= b.r(); ++k) {
    lhs += Int(k - 1) * b.b[static_cast<std::size_t>(k)];
  }
  return Rat(lhs) == Rat(b.b[0]) - chi_z;
}

BrClass classify_by_br(long long r) {
  if (r < 1) bad("stabilization index must be >= 1");
  if (r == 1) return BrClass::pg;
  if (r == 2) return BrClass::elliptic;
  return BrClass::higher;
}

const char* to_string(BrClass c) {
  switch (c) {
    case BrClass::pg: return "pg";
    case BrClass::elliptic: return "elliptic";
    case BrClass::higher: return "higher";
  }
  return "?";
}

bool colength_bound_check(long long lI, long long pg, long long r) {
  if (r < 2) bad("colength bound applies for stabilization index >= 2");
  return lI <= pg + 2 - r;
}

}  // namespace ntc
