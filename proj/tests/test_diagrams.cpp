#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "wdg/diagrams.hpp"

using namespace wdg;

namespace {

PartitionInput make(LieType t, int rank, std::vector<int> mu, std::vector<int> nu = {},
                    DVariant v = DVariant::none) {
  PartitionInput in;
  in.lie_type = t;
  in.rank = rank;
  in.mu = std::move(mu);
  in.nu = std::move(nu);
  in.variant = v;
  return in;
}

DivisorSequence seq_of(LieType t, std::vector<int> d) {
  DivisorSequence s;
  s.lie_type = t;
  s.divisors = std::move(d);
  return s;
}

}  // namespace

TEST_CASE("divisors_from_input examples") {
  CHECK(divisors_from_input(make(LieType::C, 3, {2, 1})).divisors ==
        std::vector<int>{1, 1, 2, 2});
  CHECK(divisors_from_input(make(LieType::B, 2, {1}, {3})).divisors ==
        std::vector<int>{1, 1, 3});
  CHECK(divisors_from_input(make(LieType::A, 2, {2, 1})).divisors ==
        std::vector<int>{1, 2});
}

TEST_CASE("input validation names the violated constraint") {
  CHECK_THROWS_AS(validate(make(LieType::A, 2, {1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(validate(make(LieType::A, 2, {2, 2})), std::invalid_argument);
  CHECK_THROWS_AS(validate(make(LieType::C, 3, {1}, {1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(validate(make(LieType::B, 2, {1}, {2})), std::invalid_argument);
  CHECK_THROWS_AS(validate(make(LieType::D, 4, {2, 2})), std::invalid_argument);  // needs variant
  CHECK_THROWS_AS(validate(make(LieType::D, 4, {2, 1, 1}, {}, DVariant::plus)),
                  std::invalid_argument);
  CHECK_NOTHROW(validate(make(LieType::D, 4, {2, 2}, {}, DVariant::minus)));
}

TEST_CASE("xi_sequence examples") {
  CHECK(xi_sequence(seq_of(LieType::A, {2, 1})) == std::vector<int>{1, 0, -1});
  CHECK(xi_sequence(seq_of(LieType::A, {1, 1, 1})) == std::vector<int>{0, 0, 0});
  CHECK(xi_sequence(seq_of(LieType::C, {1, 1, 2, 2})) ==
        std::vector<int>{1, 1, 0, 0, -1, -1});
}

TEST_CASE("diagram_from_input examples") {
  CHECK(diagram_from_input(make(LieType::A, 2, {2, 1})).weights == std::vector<int>{1, 1});
  CHECK(diagram_from_input(make(LieType::A, 2, {1, 1, 1})).weights ==
        std::vector<int>{0, 0});
  CHECK(diagram_from_input(make(LieType::C, 2, {1}, {1})).weights ==
        std::vector<int>{1, 0});
}

TEST_CASE("oddness predicates") {
  WeightedDiagram d;
  d.lie_type = LieType::A;
  d.rank = 2;
  d.weights = {1, 1};
  CHECK(is_odd(d));
  d.weights = {0, 0};
  CHECK(!is_odd(d));
  CHECK(is_zero(d));
  d.weights = {2, 1};
  CHECK(!is_odd(d));
  CHECK(!is_zero(d));
}

TEST_CASE("reduce_step examples") {
  CHECK(reduce_step(seq_of(LieType::C, {1, 1, 4, 4})).divisors ==
        std::vector<int>{1, 1, 2, 2});
  CHECK(reduce_step(seq_of(LieType::A, {1, 3})).divisors == std::vector<int>{1, 1});
  CHECK(reduce_step(seq_of(LieType::B, {2, 2, 5})).divisors == std::vector<int>{2, 2, 3});
  // odd fixed point is rejected as a precondition violation
  CHECK_THROWS_AS(reduce_step(seq_of(LieType::C, {1, 1, 2, 2})), std::invalid_argument);
}

TEST_CASE("reduce_to_odd terminates odd or zero") {
  auto tr = reduce_to_odd(seq_of(LieType::C, {1, 1, 2, 2}));
  CHECK(tr.steps.size() == 1);  // already odd

  auto tr2 = reduce_to_odd(seq_of(LieType::A, {1, 5}));
  CHECK(tr2.steps.size() <= 3);  // at most two reduce steps
  auto d2 = diagram_from_divisors(tr2.result());
  CHECK((is_odd(d2) || is_zero(d2)));

  auto tr3 = reduce_to_odd(seq_of(LieType::A, {3, 3}));
  auto d3 = diagram_from_divisors(tr3.result());
  CHECK((is_odd(d3) || is_zero(d3)));
}

TEST_CASE("specialness examples") {
  CHECK(is_special(make(LieType::A, 4, {3, 2})));
  CHECK(is_special(seq_of(LieType::C, {1, 1, 2, 2})));
  CHECK(!is_special(seq_of(LieType::C, {1, 1, 2})));
  // sp_4 classics: (4) and (2,2) and 1^4 special, (2,1,1) not
  CHECK(is_special(seq_of(LieType::C, {4})));
  CHECK(is_special(seq_of(LieType::C, {2, 2})));
  CHECK(!is_special(seq_of(LieType::C, {1, 1, 2})));
  CHECK(is_special(seq_of(LieType::C, {1, 1, 1, 1})));
  // so_5: (2,2,1) is the unique non-special one
  CHECK(is_special(seq_of(LieType::B, {5})));
  CHECK(is_special(seq_of(LieType::B, {1, 1, 3})));
  CHECK(!is_special(seq_of(LieType::B, {1, 2, 2})));
  CHECK(is_special(seq_of(LieType::B, {1, 1, 1, 1, 1})));
}

TEST_CASE("enumerate_inputs counts and shape") {
  CHECK(enumerate_inputs(LieType::A, 2).size() == 3);  // p(3)
  CHECK(enumerate_inputs(LieType::B, 2).size() == 4);  // orbits of so_5
  for (const auto& in : enumerate_inputs(LieType::D, 3))
    CHECK(in.variant == DVariant::none);  // no very-even inputs at D_3
  int veryeven = 0;
  for (const auto& in : enumerate_inputs(LieType::D, 4))
    veryeven += in.variant != DVariant::none;
  CHECK(veryeven == 4);  // (2,2,2,2) and (4,4), both variants each
  // no duplicates anywhere
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D}) {
    auto all = enumerate_inputs(t, 5);
    std::set<std::string> ids;
    for (const auto& in : all) ids.insert(in.id());
    CHECK(ids.size() == all.size());
  }
}

TEST_CASE("every enumerated diagram has weights in {0,1,2}; divisors round-trip") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int n = min_rank(t); n <= 7; ++n)
      for (const auto& in : enumerate_inputs(t, n)) {
        auto d = diagram_from_input(in);  // throws if a weight escapes {0,1,2}
        CHECK(d.rank == n);
        auto seq = divisors_from_input(in);
        CHECK(input_from_divisors(seq, in.variant).id() == in.id());
        if (t == LieType::A) CHECK(is_special(in));
      }
}

TEST_CASE("reduce_step strictly decreases the total and preserves specialness") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int n = min_rank(t); n <= 7; ++n)
      for (const auto& in : enumerate_inputs(t, n)) {
        auto seq = divisors_from_input(in);
        auto d = diagram_from_divisors(seq);
        if (is_odd(d) || is_zero(d)) continue;
        auto tr = reduce_to_odd(seq);
        for (size_t s = 1; s < tr.steps.size(); ++s) {
          CHECK(tr.steps[s].total() < tr.steps[s - 1].total());
          CHECK(is_special(tr.steps[s]) == is_special(tr.steps[s - 1]));
        }
        auto last = diagram_from_divisors(tr.result());
        CHECK((is_odd(last) || is_zero(last)));
      }
}

TEST_CASE("odd_sequence on the smallest cases") {
  auto a2 = odd_sequence(diagram_from_input(make(LieType::A, 2, {2, 1})));
  CHECK(a2.symmetric == std::vector<int>{0, 1, 2, 3});

  auto c4 = odd_sequence(diagram_from_divisors(seq_of(LieType::C, {1, 1, 1, 1, 2, 2})));
  CHECK(c4.marks == std::vector<int>{2});
  CHECK(c4.gaps == std::vector<int>{2});

  // type D excluded family 2^2 1^2
  auto d3 = odd_sequence(diagram_from_divisors(seq_of(LieType::D, {1, 1, 2, 2})));
  CHECK(d3.d_case == OddSequence::DCase::case1);
  CHECK(d3.excluded_family);
  CHECK(d3.marks.empty());
}

TEST_CASE("odd_sequence validates every enumerated odd diagram up to rank 7") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int n = min_rank(t); n <= 7; ++n)
      for (const auto& in : enumerate_inputs(t, n)) {
        auto d = diagram_from_input(in);
        if (!is_odd(d)) continue;
        CHECK_NOTHROW(odd_sequence(d));
      }
}
