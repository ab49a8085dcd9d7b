#include <doctest.h>

#include <random>

#include "cfc/error.hpp"
#include "cfc/permutation.hpp"
#include "oracles.hpp"

using namespace cfc;

namespace {
  Word W(int rank, Letters l) {
    return Word(rank, std::move(l));
  }
  Permutation P(std::vector<int> v) {
    return Permutation(std::move(v));
  }
}  // namespace

TEST_CASE("to_permutation composes right to left") {
  auto p = to_permutation(W(4, {1, 2, 3, 4, 2}));
  CHECK(p.one_line() == std::vector<int>{2, 4, 3, 5, 1});
  CHECK(cycles(p) == std::vector<Cycle>{{1, 2, 4, 5}});
  CHECK(to_permutation(W(3, {2, 1, 3, 2})).one_line() == std::vector<int>{3, 4, 1, 2});
  // Right to left, (34)(23)(12)(34) sends 1 -> 4 -> 2 -> 1; the inverse
  // [2431] = (1 2 4) is the image of the reversed word.
  auto q = to_permutation(W(3, {3, 2, 1, 3}));
  CHECK(q.one_line() == std::vector<int>{4, 1, 3, 2});
  CHECK(cycles(q) == std::vector<Cycle>{{1, 4, 2}});
  CHECK(to_permutation(W(3, {3, 1, 2, 3})).one_line() == std::vector<int>{2, 4, 3, 1});
  CHECK(q.inverse().one_line() == std::vector<int>{2, 4, 3, 1});
  CHECK(contains_321(q));
  CHECK(to_permutation(W(3, {})).is_identity());
}

TEST_CASE("to_permutation matches the pointwise oracle and is a homomorphism") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int     rank = 1 + static_cast<int>(rng() % 7);
    auto    gen  = [&] {
      Letters l(rng() % 10);
      for (int& x : l) {
        x = 1 + static_cast<int>(rng() % static_cast<unsigned>(rank));
      }
      return l;
    };
    Letters a = gen(), b = gen();
    CHECK(to_permutation(W(rank, a)).one_line() == oracle::image(rank, a));
    CHECK(to_permutation(W(rank, a) * W(rank, b))
          == to_permutation(W(rank, a)) * to_permutation(W(rank, b)));
  }
}

TEST_CASE("inversions") {
  CHECK(inversions(P({2, 4, 3, 5, 1})) == 5);
  CHECK(inversions(Permutation::identity(6)) == 0);
  // Cayley-graph distance is the frozen reference for the 234513 example.
  auto lengths = oracle::cayley_lengths(5);
  CHECK(lengths.at({3, 1, 5, 4, 6, 2}) == 6);
  CHECK(inversions(P({3, 1, 5, 4, 6, 2})) == 6);
  CHECK(to_permutation(W(5, {2, 3, 4, 5, 1, 3})) == P({3, 1, 5, 4, 6, 2}));
  CHECK(is_reduced(W(5, {2, 3, 4, 5, 1, 3})));
}

TEST_CASE("inversions equal Cayley distance on all of S_5") {
  auto lengths = oracle::cayley_lengths(4);
  for (auto const& [v, d] : lengths) {
    CHECK(inversions(Permutation(v)) == static_cast<std::size_t>(d));
    CHECK(word_from_permutation(Permutation(v)).size() == static_cast<std::size_t>(d));
    CHECK(to_permutation(word_from_permutation(Permutation(v))) == Permutation(v));
  }
}

TEST_CASE("cycles") {
  CHECK(cycles(P({2, 4, 3, 5, 1})) == std::vector<Cycle>{{1, 2, 4, 5}});
  CHECK(cycles(P({3, 1, 5, 4, 6, 2})) == std::vector<Cycle>{{1, 3, 5, 6, 2}});
  CHECK(cycles(Permutation::identity(4)).empty());
}

TEST_CASE("cycles round trip through from_cycles") {
  for (auto const& p : all_permutations(6)) {
    CHECK(from_cycles(6, cycles(p)) == p);
  }
}

TEST_CASE("pattern scans") {
  auto w = find_321(P({3, 1, 5, 4, 6, 2}));
  REQUIRE(w);
  CHECK(contains_321(P({3, 1, 5, 4, 6, 2})));
  CHECK_FALSE(contains_321(P({2, 4, 1, 3})));
  CHECK(find_321(P({2, 4, 3, 1})) == std::array<int, 3>{2, 3, 4});
  CHECK(contains_3412(P({3, 4, 1, 2})));
  CHECK_FALSE(contains_3412(P({2, 4, 1, 3})));
  CHECK_FALSE(contains_3412(Permutation::identity(5)));
}

TEST_CASE("321-avoiders of S_n are counted by Catalan numbers") {
  std::size_t const expected[] = {1, 2, 5, 14, 42, 132};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t count = 0;
    for (auto const& p : all_permutations(n)) {
      count += contains_321(p) ? 0 : 1;
    }
    CHECK(count == expected[n - 1]);
  }
}

TEST_CASE("conjugate") {
  CHECK(conjugate(to_permutation(W(2, {1})), to_permutation(W(2, {1, 2})))
        == to_permutation(W(2, {2})));
  auto p = to_permutation(W(4, {1, 3, 2}));
  CHECK(conjugate(p, Permutation::identity(5)) == p);
  CHECK(conjugate(to_permutation(W(7, {3, 4, 5, 6})), to_permutation(W(7, {3, 4, 5, 6, 7})))
        == to_permutation(W(7, {4, 5, 6, 7})));
  CHECK_THROWS_AS(conjugate(p, Permutation::identity(4)), Error);
}

TEST_CASE("same_cycle_type") {
  CHECK(same_cycle_type(to_permutation(W(4, {1, 2, 3})), to_permutation(W(4, {2, 3, 4}))));
  // cycle types 3+1 vs 2+2
  CHECK(cycle_type(to_permutation(W(3, {1, 2}))) == std::vector<int>{3, 1});
  CHECK(cycle_type(to_permutation(W(3, {1, 3}))) == std::vector<int>{2, 2});
  CHECK_FALSE(same_cycle_type(to_permutation(W(3, {1, 2})), to_permutation(W(3, {1, 3}))));
  auto p = P({2, 3, 1, 4});
  CHECK(same_cycle_type(p, p));
  CHECK_THROWS_AS(same_cycle_type(p, Permutation::identity(3)), Error);
}

TEST_CASE("same_cycle_type agrees with exhaustive conjugacy search") {
  for (std::size_t degree = 1; degree <= 5; ++degree) {
    auto all = all_permutations(degree);
    for (auto const& p : all) {
      for (auto const& q : all) {
        CHECK(same_cycle_type(p, q) == oracle::conjugate_by_search(p, q));
      }
    }
  }
}

TEST_CASE("cycle text form") {
  CHECK(parse_cycle("(4 5 1 2)") == Cycle{1, 2, 4, 5});
  CHECK(to_string(Cycle{1, 2, 4, 5}) == "(1 2 4 5)");
  CHECK(cycles_to_string(P({2, 1, 4, 3})) == "(1 2)(3 4)");
  CHECK_THROWS_AS(parse_cycle("1 2"), Error);
  CHECK_THROWS_AS(parse_cycle("(1 1)"), Error);
  CHECK_THROWS_AS(P({1, 1, 2}), Error);
}
