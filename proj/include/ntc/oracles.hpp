#pragma once

#include <cstddef>
#include <vector>

#include "ntc/graph.hpp"
#include "ntc/lattice.hpp"
#include "ntc/rational.hpp"

// Independent reference implementations used by the verification suite and
// the unit tests to cross-check the fast paths. These deliberately use
// brute-force definitions, not the production algorithms.
namespace ntc::oracle {

// All nonzero integral anti-nef cycles with every coefficient in [0, box],
// by direct scan of the box; lexicographically sorted.
std::vector<ZVec> antinef_in_box(const IntersectionLattice& lat, long long box);

// The coefficientwise-minimal elements of antinef_in_box.
std::vector<ZVec> minimal_antinef_in_box(const IntersectionLattice& lat, long long box);

// Deterministic pseudo-random connected negative-definite graphs with at
// most five vertices (random tree plus a few extra edges, self-intersections
// in [-6,-1], small genera). Fixed seed => fixed corpus.
std::vector<WeightedDualGraph> random_small_graphs(std::size_t count, unsigned long long seed);

// Deterministic random integral cycles with coefficients in [-range, range].
std::vector<ZVec> random_cycles(std::size_t dim, std::size_t count, long long range,
                                unsigned long long seed);

}  // namespace ntc::oracle
