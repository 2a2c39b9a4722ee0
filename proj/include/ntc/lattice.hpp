#pragma once

#include <cstddef>
#include <vector>

#include "ntc/graph.hpp"
#include "ntc/rational.hpp"

namespace ntc {

using Matrix = std::vector<ZVec>;  // square, symmetric

// The intersection matrix: M[i][i] = self-intersection of vertex i,
// M[i][j] = edge multiplicity between i and j.
Matrix intersection_form(const WeightedDualGraph& g);

// Sylvester test: true iff every leading principal minor of -M is positive.
// Exact fraction-free (Bareiss) elimination; total on symmetric matrices.
bool is_negative_definite(const Matrix& m);

// K_X . E_i = 2*genus_i - 2 - self_i for each vertex (adjunction). Always
// >= -1, with -1 exactly for a rational -1 curve.
ZVec canonical_values(const WeightedDualGraph& g);

// Exact intersection theory over a validated graph. Immutable after
// construction; all members are const and safe to call concurrently.
class IntersectionLattice {
 public:
  explicit IntersectionLattice(const WeightedDualGraph& g);

  std::size_t size() const { return m_.size(); }
  const WeightedDualGraph& graph() const { return g_; }
  const Matrix& form() const { return m_; }
  const ZVec& kvals() const { return kvals_; }

  // Z^T M W, exact. Throws GraphError(dimension_mismatch) on bad sizes.
  Rat pairing(const QVec& z, const QVec& w) const;
  Rat pairing_with_vertex(const QVec& z, std::size_t i) const;  // Z . E_i
  Rat self_intersection(const QVec& z) const;                   // Z^2
  Rat k_dot(const QVec& z) const;                               // K_X . Z

  // chi(Z) = -(Z^2 + K_X.Z)/2; an integer whenever Z is integral (checked).
  Rat chi(const QVec& z) const;

  // E_j^*: the unique rational cycle with E_j^* . E_i = -delta_ij. All
  // coefficients strictly positive (checked; holds on connected
  // negative-definite graphs).
  const QVec& dual_cycle(std::size_t j) const;

  // Z_K: the rational cycle with Z_K . E_i = -(K_X . E_i) for all i. May
  // have zero or negative coefficients and need not be integral.
  const QVec& canonical_cycle() const;

  // Z = sum over arrows of weight * E_at^*. Throws GraphError(no_arrows)
  // when the graph carries no arrowheads. Anti-nef by construction (checked).
  QVec cycle_from_arrows() const;

  bool is_antinef(const QVec& z) const;  // Z . E_i <= 0 for all i

  // Coefficientwise-smallest integral anti-nef cycle > 0, via the standard
  // computation sequence: start at the first vertex, repeatedly add the
  // least-indexed E_i with Z . E_i > 0.
  ZVec fundamental_cycle() const;

  // All nonzero integral anti-nef Z with some coefficient strictly below the
  // matching coefficient of W. Requires W integral with all entries >= 0.
  // Result sorted lexicographically by coefficient vector, duplicate-free.
  std::vector<ZVec> enumerate_antinef_below(const ZVec& w) const;

  struct CanonicalEnumeration {
    std::vector<ZVec> cycles;  // sorted lexicographically
    // True when Z_K has no positive coefficient: the result is then empty by
    // convention (every positive cycle already exceeds Z_K).
    bool degenerate_warning = false;
  };
  // All nonzero integral anti-nef Z with NOT (Z >= Z_K coefficientwise and
  // Z != Z_K). Finite; comparisons over exact rationals.
  CanonicalEnumeration enumerate_antinef_not_exceeding_canonical() const;

  struct ChiMin {
    Rat value;
    ZVec witness;  // lexicographically least minimizer
  };
  // Minimum of chi over integral 0 < C <= bound (componentwise). A bounded
  // search: the caller chooses the box, and the result is a certified
  // minimum over that box only. Requires bound >= 0, != 0, with a search box
  // of at most 4e6 points.
  ChiMin chi_min(const ZVec& bound) const;

 private:
  QVec solve(const QVec& rhs) const;  // M x = rhs, exact Gaussian elimination
  void enumerate(const QVec& threshold, bool include_boundary,
                 std::vector<ZVec>& out) const;

  WeightedDualGraph g_;
  Matrix m_;
  ZVec kvals_;
  std::vector<QVec> duals_;  // E_j^* for every j
  QVec zk_;                  // canonical cycle
};

}  // namespace ntc
