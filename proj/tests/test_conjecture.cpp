#include <doctest.h>

#include "cfc/classify.hpp"
#include "cfc/conjecture.hpp"
#include "cfc/error.hpp"

using namespace cfc;

TEST_CASE("direction_changes") {
  CHECK(direction_changes({1, 2, 4, 3, 5}) == std::set<int>{3, 4});
  CHECK(direction_changes({1, 3, 5}).empty());
  CHECK(direction_changes({1, 4, 3, 5, 2}) == std::set<int>{3, 4, 5});
  CHECK(direction_changes({1, 2}).empty());
}

TEST_CASE("direction changes never include the anchor") {
  for (std::size_t degree = 1; degree <= 6; ++degree) {
    for (auto const& p : all_permutations(degree)) {
      for (auto const& c : cycles(p)) {
        auto const d = direction_changes(c);
        for (int v : d) {
          CHECK(std::find(c.begin() + 1, c.end(), v) != c.end());
        }
      }
    }
  }
}

TEST_CASE("has_connected_support") {
  CHECK_FALSE(has_connected_support({1, 3, 5, 7}));
  CHECK(has_connected_support({2, 3, 4}));
  for (int a = 1; a <= 8; ++a) {
    CHECK(has_connected_support({a, a + 1}));
  }
}

TEST_CASE("conjecture_predicate") {
  CHECK(conjecture_predicate(to_permutation(Word(4, {1, 2, 3, 4}))));
  CHECK(to_permutation(Word(4, {1, 2, 3, 4})) == from_cycles(5, {{1, 2, 3, 4, 5}}));
  CHECK_FALSE(conjecture_predicate(from_cycles(5, {{1, 4, 3, 5, 2}})));
  CHECK(conjecture_predicate(Permutation::identity(4)));
}

TEST_CASE("check_conjecture") {
  auto one = check_conjecture(1);
  CHECK(one.elements_checked == 2);
  CHECK(one.agree);
  auto three = check_conjecture(3);
  CHECK(three.elements_checked == 24);
  CHECK(three.agree);
  CHECK(three.counterexamples.empty());
  auto four = check_conjecture(4);
  CHECK(four.elements_checked == 120);
  CHECK(four.agree);
  CHECK(check_conjecture(6).agree);
  CHECK_THROWS_AS(check_conjecture(9), Error);
  CHECK(check_conjecture(2, 2).agree);
  CHECK_THROWS_AS(check_conjecture(3, 2), Error);
}

TEST_CASE("predicate holds exactly on the CFC elements, rank <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::size_t holds = 0;
    for (auto const& p : all_permutations(static_cast<std::size_t>(n) + 1)) {
      holds += conjecture_predicate(p);
    }
    CHECK(holds == enumerate_cfc(n).size());
  }
}
