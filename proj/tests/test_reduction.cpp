#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "ntc/reduction.hpp"

using namespace ntc;

using LL = std::vector<long long>;

TEST_CASE("q-sequence from absolute values") {
  const QSequence q = QSequence::from_values({10, 8, 7, 7});
  CHECK(q.q0() == 10);
  CHECK(q.drop(1) == 2);
  CHECK(q.drop(2) == 1);
  CHECK(q.drop(3) == 0);
  CHECK(q.drop(99) == 0);
  CHECK(q.step(1) == 1);
  CHECK(q.step(2) == 1);
  CHECK(q.step(3) == 0);
  CHECK(q.admissible());
  CHECK(q.nr() == 3);
  CHECK(q.br() == 3);
  CHECK(q.differences() == LL{2, 3, 3});

  CHECK_THROWS_AS((void)QSequence::from_values({10, 8, 7}), std::invalid_argument);
  CHECK_THROWS_AS((void)QSequence::from_values({10}), std::invalid_argument);
  CHECK_THROWS_AS((void)QSequence::from_values({7, 8, 8}), std::invalid_argument);
  CHECK_THROWS_AS((void)QSequence::from_values({3, -1, -1}), std::invalid_argument);
}

TEST_CASE("q-sequence from a difference profile") {
  const QSequence q = QSequence::from_differences({2, 3, 3, 3});
  CHECK_FALSE(q.q0().has_value());
  CHECK(q.drop(1) == 2);
  CHECK(q.drop(2) == 1);
  CHECK(q.drop(3) == 0);
  CHECK(q.br() == 3);
  CHECK(q.nr() == 3);

  CHECK_THROWS_AS((void)QSequence::from_differences({2}), std::invalid_argument);
  CHECK_THROWS_AS((void)QSequence::from_differences({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS((void)QSequence::from_differences({3, 2, 2}), std::invalid_argument);
}

TEST_CASE("inadmissible sequences are rejected by nr and br") {
  // drops (1, 3, 1, 0): the second drop exceeds the first.
  const QSequence q = QSequence::from_values({5, 4, 1, 0, 0});
  CHECK_FALSE(q.admissible());
  CHECK(q.step(1) == -2);
  CHECK_THROWS_WITH_AS((void)q.nr(), "q-sequence not admissible", std::invalid_argument);
  CHECK_THROWS_AS((void)q.br(), std::invalid_argument);
}

TEST_CASE("nr can come strictly before br") {
  // drops (2, 2, 1, 0): equal consecutive drops at n=1, zero only at n=4.
  const QSequence q = QSequence::from_differences({2, 4, 5, 5, 5});
  CHECK(q.nr() == 1);
  CHECK(q.br() == 4);
  CHECK(q.br() >= q.nr());
}

TEST_CASE("rescaling subsamples the difference profile") {
  const QSequence q = QSequence::from_differences({2, 3, 3, 3});
  // rescaled(1) renormalizes to the shortest stabilized profile; drops and
  // both indices are unchanged.
  CHECK(q.rescaled(1).differences() == LL{2, 3, 3});
  for (std::size_t n = 1; n <= 6; ++n) CHECK(q.rescaled(1).drop(n) == q.drop(n));
  CHECK(q.rescaled(1).br() == q.br());
  CHECK(q.rescaled(1).nr() == q.nr());
  CHECK(q.rescaled(2).differences() == LL{3, 3});
  CHECK(q.rescaled(2).br() == 2);
  CHECK(q.rescaled(3).br() == 2);
  CHECK(q.rescaled(5).br() == 2);
  CHECK_THROWS_AS((void)q.rescaled(0), std::invalid_argument);

  const QSequence v = QSequence::from_values({10, 8, 7, 7});
  CHECK(v.rescaled(2).q0() == 10);
}

TEST_CASE("br of a power") {
  CHECK(br_power(1, 1) == 1);
  CHECK(br_power(1, 7) == 1);
  CHECK(br_power(3, 1) == 3);
  CHECK(br_power(3, 2) == 2);
  CHECK(br_power(3, 3) == 2);
  CHECK(br_power(5, 2) == 3);
  CHECK_THROWS_AS((void)br_power(0, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)br_power(1, 0), std::invalid_argument);
}

TEST_CASE("b-sequence from steps") {
  const BSequence b = b_sequence(StepSequence{{2, 1, 1, 0}, 3, 1});
  CHECK(b.b == LL{1, 1, 0, 1});
  CHECK(b.r() == 3);
  CHECK(b.e0() == 3);
  CHECK(L_colengths(b) == LL{1, 2, 2});

  CHECK_THROWS_WITH_AS((void)b_sequence(StepSequence{{1, 2, 0}, 3, 1}),
                       "inadmissible steps", std::invalid_argument);
  CHECK_THROWS_AS((void)b_sequence(StepSequence{{2, 1, 1, 0}, 5, 1}), std::invalid_argument);
  CHECK_THROWS_AS((void)b_sequence(StepSequence{{2, 1}, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS((void)b_sequence(StepSequence{{2, 0, 0}, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS((void)b_sequence(StepSequence{{0}, 1, 1}), std::invalid_argument);
}

TEST_CASE("symmetry and complementarity agree") {
  const BSequence pal{{1, 0, 1, 0, 1}};
  CHECK(is_symmetric(pal));
  CHECK(complementarity_check(pal));

  const BSequence skew{{1, 1, 0, 1}};
  CHECK_FALSE(is_symmetric(skew));
  CHECK_FALSE(complementarity_check(skew));

  const BSequence pair{{1, 1}};
  CHECK(is_symmetric(pair));
  CHECK(complementarity_check(pair));
}

TEST_CASE("cycle criterion") {
  CHECK(gorenstein_cycle_criterion(-3, 9, 4));       // (3,6,6)
  CHECK_FALSE(gorenstein_cycle_criterion(-3, 5, 3)); // (3,5,5)
  CHECK(gorenstein_cycle_criterion(-2, 0, 1));
  CHECK(gorenstein_cycle_criterion(-10, 10, 2));
  CHECK_THROWS_AS((void)gorenstein_cycle_criterion(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)gorenstein_cycle_criterion(-2, 0, 0), std::invalid_argument);
}

TEST_CASE("weighted length identity for the graded pieces") {
  CHECK(eqbb_check(BSequence{{1, 0, 1, 0, 1}}, Rat(Int(-3))));  // 1*1 + 3*1 = 1 - (-3)
  CHECK(eqbb_check(BSequence{{1, 1, 0, 1}}, Rat(Int(-1))));     // 0 + 2 = 1 - (-1)
  CHECK(eqbb_check(BSequence{{1, 1}}, Rat(Int(1))));            // 0 = 1 - 1
  CHECK_FALSE(eqbb_check(BSequence{{1, 1}}, Rat(Int(0))));
}

TEST_CASE("classification by stabilization index") {
  CHECK(classify_by_br(1) == BrClass::pg);
  CHECK(classify_by_br(2) == BrClass::elliptic);
  CHECK(classify_by_br(3) == BrClass::higher);
  CHECK(classify_by_br(99) == BrClass::higher);
  CHECK_THROWS_AS((void)classify_by_br(0), std::invalid_argument);
  CHECK(std::string(to_string(BrClass::pg)) == "pg");
  CHECK(std::string(to_string(BrClass::elliptic)) == "elliptic");
  CHECK(std::string(to_string(BrClass::higher)) == "higher");
}

TEST_CASE("colength bound in the symmetric case") {
  CHECK(colength_bound_check(3, 10, 2));    // 3 <= 10
  CHECK(colength_bound_check(10, 10, 2));   // boundary 10 <= 10
  CHECK_FALSE(colength_bound_check(11, 10, 2));
  CHECK_THROWS_AS((void)colength_bound_check(1, 1, 1), std::invalid_argument);
}
