#include <doctest.h>

#include <vector>

#include "ntc/graph.hpp"
#include "ntc/lattice.hpp"
#include "ntc/oracles.hpp"
#include "ntc/rational.hpp"

using namespace ntc;

namespace {

ZVec zv(std::initializer_list<long long> v) {
  ZVec out;
  for (long long x : v) out.push_back(Int(x));
  return out;
}

QVec qv(std::initializer_list<long long> v) {
  QVec out;
  for (long long x : v) out.push_back(Rat(Int(x)));
  return out;
}

Rat rat(long long num, long long den = 1) { return Rat(Int(num), Int(den)); }

// Two exceptional curves: a -2 curve of genus one meeting a -1 curve, with
// one arrowhead of weight one on the -1 curve.
WeightedDualGraph two_curve_graph() {
  return make_graph("two_curve",
                    {Vertex{"E1", -2, 1}, Vertex{"E2", -1, 0}},
                    {{"E1", "E2"}},
                    {Arrow{"E2", 1}});
}

// One -1 curve of genus one carrying a weight-two arrowhead.
WeightedDualGraph one_curve_graph() {
  return make_graph("one_curve", {Vertex{"E", -1, 1}}, {}, {Arrow{"E", 2}});
}

// A genus-six -5 curve with a weight-five arrowhead (cone situation).
WeightedDualGraph cone_graph() {
  return make_graph("cone", {Vertex{"C", -5, 6}}, {}, {Arrow{"C", 5}});
}

// -10 genus-six curve at the end of a chain through a -1 curve and four
// -2 curves; arrowhead on the -1 curve.
WeightedDualGraph chain_graph() {
  return make_graph("chain",
                    {Vertex{"E0", -10, 6}, Vertex{"E5", -1, 0}, Vertex{"E4", -2, 0},
                     Vertex{"E3", -2, 0}, Vertex{"E2", -2, 0}, Vertex{"E1", -2, 0}},
                    {{"E0", "E5"}, {"E5", "E4"}, {"E4", "E3"}, {"E3", "E2"}, {"E2", "E1"}},
                    {Arrow{"E5", 1}});
}

// Same curves rearranged: chain E4-E5-E0-E3-E2-E1 with two -1 curves (E5,
// E3) carrying the arrowheads.
WeightedDualGraph chain_graph_2() {
  return make_graph("chain2",
                    {Vertex{"E4", -2, 0}, Vertex{"E5", -1, 0}, Vertex{"E0", -10, 6},
                     Vertex{"E3", -1, 0}, Vertex{"E2", -2, 0}, Vertex{"E1", -2, 0}},
                    {{"E4", "E5"}, {"E5", "E0"}, {"E0", "E3"}, {"E3", "E2"}, {"E2", "E1"}},
                    {Arrow{"E5", 1}, Arrow{"E3", 1}});
}

WeightedDualGraph a2_graph() {
  return make_graph("a2", {Vertex{"A", -2, 0}, Vertex{"B", -2, 0}}, {{"A", "B"}}, {});
}

}  // namespace

TEST_CASE("intersection form and negative definiteness") {
  const WeightedDualGraph g = two_curve_graph();
  const Matrix m = intersection_form(g);
  CHECK(m == Matrix{zv({-2, 1}), zv({1, -1})});
  CHECK(is_negative_definite(m));

  CHECK_FALSE(is_negative_definite(Matrix{zv({0})}));
  CHECK_FALSE(is_negative_definite(Matrix{zv({1})}));
  CHECK_FALSE(is_negative_definite(Matrix{zv({-2, 2}), zv({2, -2})}));  // determinant 0
  CHECK(is_negative_definite(Matrix{zv({-2, 1, 0}), zv({1, -2, 1}), zv({0, 1, -2})}));
}

TEST_CASE("canonical values from adjunction") {
  CHECK(canonical_values(two_curve_graph()) == zv({2, -1}));
  CHECK(canonical_values(one_curve_graph()) == zv({1}));
  CHECK(canonical_values(chain_graph()) == zv({20, -1, 0, 0, 0, 0}));
  CHECK(canonical_values(cone_graph()) == zv({15}));
}

TEST_CASE("dual cycles solve the defining system") {
  const IntersectionLattice lat(two_curve_graph());
  CHECK(lat.dual_cycle(0) == qv({1, 1}));
  CHECK(lat.dual_cycle(1) == qv({1, 2}));
  CHECK(lat.pairing_with_vertex(lat.dual_cycle(0), 0) == rat(-1));
  CHECK(lat.pairing_with_vertex(lat.dual_cycle(0), 1) == rat(0));
  CHECK_THROWS_AS((void)lat.dual_cycle(2), GraphError);

  const IntersectionLattice chain(chain_graph());
  CHECK(chain.dual_cycle(1) == qv({1, 10, 8, 6, 4, 2}));

  const IntersectionLattice chain2(chain_graph_2());
  CHECK(chain2.dual_cycle(1) ==
        QVec{rat(7, 5), rat(14, 5), rat(2, 5), rat(6, 5), rat(4, 5), rat(2, 5)});
  CHECK(chain2.dual_cycle(3) ==
        QVec{rat(3, 5), rat(6, 5), rat(3, 5), rat(24, 5), rat(16, 5), rat(8, 5)});
}

TEST_CASE("cycle from arrows, pairings, chi") {
  const IntersectionLattice lat(two_curve_graph());
  const QVec z = lat.cycle_from_arrows();
  CHECK(z == qv({1, 2}));
  CHECK(lat.self_intersection(z) == rat(-2));
  CHECK(lat.k_dot(z) == rat(0));
  CHECK(lat.chi(z) == rat(1));
  CHECK(lat.is_antinef(z));

  const IntersectionLattice one(one_curve_graph());
  const QVec z2 = one.cycle_from_arrows();
  CHECK(z2 == qv({2}));
  CHECK(one.self_intersection(z2) == rat(-4));
  CHECK(one.k_dot(z2) == rat(2));
  CHECK(one.chi(z2) == rat(1));

  const IntersectionLattice chain(chain_graph());
  const QVec z3 = chain.cycle_from_arrows();
  CHECK(z3 == qv({1, 10, 8, 6, 4, 2}));
  CHECK(chain.self_intersection(z3) == rat(-10));
  CHECK(chain.k_dot(z3) == rat(10));
  CHECK(chain.chi(z3) == rat(0));

  const IntersectionLattice chain2(chain_graph_2());
  const QVec z4 = chain2.cycle_from_arrows();
  CHECK(z4 == qv({2, 4, 1, 6, 4, 2}));
  CHECK(chain2.self_intersection(z4) == rat(-10));
  CHECK(chain2.k_dot(z4) == rat(10));
  CHECK(chain2.chi(z4) == rat(0));

  CHECK_THROWS_AS((void)IntersectionLattice(a2_graph()).cycle_from_arrows(), GraphError);
}

TEST_CASE("pairing rejects wrong dimensions") {
  const IntersectionLattice lat(two_curve_graph());
  CHECK_THROWS_AS((void)lat.pairing(qv({1}), qv({1, 2})), GraphError);
  try {
    (void)lat.chi(qv({1, 2, 3}));
    FAIL("expected a dimension error");
  } catch (const GraphError& e) {
    CHECK(e.code() == GraphErrorCode::dimension_mismatch);
  }
}

TEST_CASE("canonical cycle") {
  const IntersectionLattice lat(two_curve_graph());
  CHECK(lat.canonical_cycle() == qv({1, 0}));
  CHECK(lat.chi(lat.canonical_cycle()) == rat(0));

  const IntersectionLattice chain(chain_graph());
  CHECK(chain.canonical_cycle() == qv({3, 10, 8, 6, 4, 2}));
  CHECK(chain.chi(chain.canonical_cycle()) == rat(0));

  CHECK(IntersectionLattice(cone_graph()).canonical_cycle() == qv({3}));
  CHECK(IntersectionLattice(a2_graph()).canonical_cycle() == qv({0, 0}));
}

TEST_CASE("fundamental cycle via the standard computation sequence") {
  CHECK(IntersectionLattice(two_curve_graph()).fundamental_cycle() == zv({1, 1}));
  CHECK(IntersectionLattice(a2_graph()).fundamental_cycle() == zv({1, 1}));
  CHECK(IntersectionLattice(cone_graph()).fundamental_cycle() == zv({1}));

  const IntersectionLattice lat(two_curve_graph());
  CHECK(lat.chi(to_rational(lat.fundamental_cycle())) == rat(0));
}

TEST_CASE("fundamental cycle matches the brute-force minimum") {
  for (const auto& g : {two_curve_graph(), a2_graph(), chain_graph_2()}) {
    const IntersectionLattice lat(g);
    const ZVec zf = lat.fundamental_cycle();
    bool fits = true;
    for (const Int& c : zf) fits = fits && c <= 6;
    REQUIRE(fits);
    CHECK(oracle::minimal_antinef_in_box(lat, 6) == std::vector<ZVec>{zf});
  }
}

TEST_CASE("enumeration below a bound") {
  const IntersectionLattice lat(two_curve_graph());
  CHECK(lat.enumerate_antinef_below(zv({2, 1})) ==
        std::vector<ZVec>{zv({1, 1}), zv({1, 2})});
  CHECK(lat.enumerate_antinef_below(zv({1, 1})).empty());

  const IntersectionLattice cone(cone_graph());
  CHECK(cone.enumerate_antinef_below(zv({3})) == std::vector<ZVec>{zv({1}), zv({2})});
  CHECK(cone.enumerate_antinef_below(zv({1})).empty());

  CHECK_THROWS_AS((void)lat.enumerate_antinef_below(zv({1})), GraphError);  // wrong length
}

TEST_CASE("enumeration up to the canonical cycle") {
  const IntersectionLattice cone(cone_graph());
  const auto res = cone.enumerate_antinef_not_exceeding_canonical();
  CHECK(res.cycles == std::vector<ZVec>{zv({1}), zv({2}), zv({3})});
  CHECK_FALSE(res.degenerate_warning);
  CHECK(cone.chi(to_rational(res.cycles[0])) == rat(-5));
  CHECK(cone.chi(to_rational(res.cycles[1])) == rat(-5));
  CHECK(cone.chi(to_rational(res.cycles[2])) == rat(0));

  // Z_K = E_1 here, so every anti-nef cycle already dominates it strictly.
  const auto res2 = IntersectionLattice(two_curve_graph())
                        .enumerate_antinef_not_exceeding_canonical();
  CHECK(res2.cycles.empty());
  CHECK_FALSE(res2.degenerate_warning);

  // Rational singularity: Z_K has no positive coefficient at all.
  const auto res3 = IntersectionLattice(a2_graph()).enumerate_antinef_not_exceeding_canonical();
  CHECK(res3.cycles.empty());
  CHECK(res3.degenerate_warning);

  // The index-one curve itself shows up when Z_K is a positive multiple.
  const auto res4 = IntersectionLattice(one_curve_graph())
                        .enumerate_antinef_not_exceeding_canonical();
  CHECK(res4.cycles == std::vector<ZVec>{zv({1})});
}

TEST_CASE("chi minimization over a box") {
  const IntersectionLattice lat(two_curve_graph());
  const auto res = lat.chi_min(zv({2, 2}));
  CHECK(res.value == rat(0));
  CHECK(res.witness == zv({1, 0}));  // lexicographically least among the minimizers

  const IntersectionLattice cone(cone_graph());
  const auto res2 = cone.chi_min(zv({3}));
  CHECK(res2.value == rat(-5));
  CHECK(res2.witness == zv({1}));

  const auto single = make_graph("", {Vertex{"A", -2, 0}}, {}, {});
  const auto res3 = IntersectionLattice(single).chi_min(zv({2}));
  CHECK(res3.value == rat(1));
  CHECK(res3.witness == zv({1}));

  CHECK_THROWS_AS((void)lat.chi_min(zv({0, 0})), std::invalid_argument);
  CHECK_THROWS_AS((void)lat.chi_min(zv({-1, 2})), std::invalid_argument);
  CHECK_THROWS_AS((void)IntersectionLattice(single).chi_min(zv({4000000})),
                  std::invalid_argument);
}

TEST_CASE("brute-force oracles agree with the production paths") {
  const IntersectionLattice lat(two_curve_graph());
  const auto all = oracle::antinef_in_box(lat, 3);
  for (const ZVec& z : all) CHECK(lat.is_antinef(to_rational(z)));
  // (1,1) is the smallest; everything anti-nef dominates it.
  CHECK(oracle::minimal_antinef_in_box(lat, 3) == std::vector<ZVec>{zv({1, 1})});
}

TEST_CASE("random corpora are deterministic") {
  const auto g1 = oracle::random_small_graphs(5, 99);
  const auto g2 = oracle::random_small_graphs(5, 99);
  REQUIRE(g1.size() == g2.size());
  for (std::size_t i = 0; i < g1.size(); ++i) CHECK(g1[i] == g2[i]);
  for (const auto& g : g1) CHECK(is_negative_definite(intersection_form(g)));

  CHECK(oracle::random_cycles(3, 10, 5, 1) == oracle::random_cycles(3, 10, 5, 1));
}

TEST_CASE("chi is integral on integral cycles") {
  const IntersectionLattice lat(chain_graph_2());
  for (const ZVec& z : oracle::random_cycles(lat.size(), 200, 10, 17)) {
    CHECK(is_integer(lat.chi(to_rational(z))));
  }
}
