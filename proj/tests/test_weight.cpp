#include <doctest.h>

#include <random>

#include "weylorder/error.hpp"
#include "weylorder/serialize.hpp"
#include "weylorder/weight.hpp"

using namespace weylorder;

namespace {

Weight w(std::vector<Coord> c) { return Weight(std::move(c)); }

Permutation random_perm(std::size_t m, std::mt19937& rng) {
  std::vector<std::size_t> img(m);
  for (std::size_t i = 0; i < m; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

}  // namespace

TEST_CASE("omega to epsilon") {
  CHECK(omega_to_epsilon(w({1, 0})) == std::vector<Coord>{1, 0});
  CHECK(omega_to_epsilon(w({0, 1})) == std::vector<Coord>{1, 1});
  CHECK(omega_to_epsilon(w({2, 1})) == std::vector<Coord>{3, 1});
}

TEST_CASE("epsilon to omega") {
  CHECK(epsilon_to_omega(std::vector<Coord>{1, 1}) == w({0, 1}));
  CHECK(epsilon_to_omega(std::vector<Coord>{3, 1}) == w({2, 1}));
  CHECK(epsilon_to_omega(std::vector<Coord>{0, 0}) == w({0, 0}));
}

TEST_CASE("round trip over a box") {
  for (Coord a = -3; a <= 3; ++a)
    for (Coord b = -3; b <= 3; ++b)
      for (Coord c = -3; c <= 3; ++c) {
        const Weight x = w({a, b, c});
        CHECK(epsilon_to_omega(omega_to_epsilon(x)) == x);
        const std::vector<Coord> e{a, b, c};
        CHECK(omega_to_epsilon(epsilon_to_omega(e)) == e);
      }
}

TEST_CASE("plain and padded actions") {
  // s_{1,2} swaps e_1 and e_2: omega_1 -> e_2 = -omega_1 + omega_2.
  CHECK(act(Permutation::transposition(2, 1, 2), w({1, 0})) == w({-1, 1}));
  CHECK(act(Permutation::identity(2), w({4, -2})) == w({4, -2}));
  CHECK(act(Permutation::identity(3), w({4, -2})) == w({4, -2}));
  // Padded (1,-1,0) -> (1,0,-1) -> shifted (2,1,0): omega coordinates (1,1).
  CHECK(act(Permutation::transposition(3, 2, 3), w({2, -1})) == w({1, 1}));
  CHECK_THROWS_AS(act(Permutation::identity(5), w({1, 0})), Error);
}

TEST_CASE("action is compatible with composition") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Coord> coord(-5, 5);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 5;
    std::vector<Coord> c(n);
    for (auto& x : c) x = coord(rng);
    const Weight x(c);
    for (std::size_t m : {n, n + 1}) {
      const auto s = random_perm(m, rng);
      const auto t = random_perm(m, rng);
      CHECK(act(s * t, x) == act(s, act(t, x)));
      CHECK(act(s.inverse(), act(s, x)) == x);
    }
  }
}

TEST_CASE("dominant representative") {
  SUBCASE("dominant input is fixed") {
    const auto r = dominant_representative(w({2, 1}));
    CHECK(r.weight.weight() == w({2, 1}));
    CHECK(r.sorting.is_identity());
  }
  SUBCASE("rank 2 example") {
    const auto r = dominant_representative(w({2, -1}));
    CHECK(r.weight.weight() == w({1, 1}));
    CHECK(r.sorting == Permutation::transposition(3, 2, 3));
  }
  SUBCASE("rank 1 example") {
    const auto r = dominant_representative(w({-1}));
    CHECK(r.weight.weight() == w({1}));
    CHECK(r.sorting == Permutation::transposition(2, 1, 2));
  }
  SUBCASE("random weights") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<Coord> coord(-4, 4);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Coord> c(1 + trial % 4);
      for (auto& x : c) x = coord(rng);
      const Weight x(c);
      const auto r = dominant_representative(x);
      CHECK(r.weight.weight().is_dominant());
      CHECK(act(r.sorting, x) == r.weight.weight());
      const auto all = dominating_permutations(x);
      CHECK(!all.empty());
      for (const auto& s : all) CHECK(act(s, x) == r.weight.weight());
    }
  }
}

TEST_CASE("dominating permutations count ties") {
  // Padded (1,1,0): the two equal entries can be ordered either way.
  CHECK(dominating_permutations(w({0, 1})).size() == 2);
  CHECK(dominating_permutations(w({0, 0})).size() == 6);
  CHECK(dominating_permutations(w({2, 1})).size() == 1);
}

TEST_CASE("permutation printing and validation") {
  CHECK(Permutation::identity(3).to_string() == "id");
  CHECK(Permutation::transposition(3, 2, 3).to_string() == "s2,3");
  CHECK(Permutation(std::vector<std::size_t>{2, 0, 1}).to_string() == "(1 3 2)");
  CHECK_THROWS_AS(Permutation(std::vector<std::size_t>{0, 0}), Error);
  CHECK(Permutation::transposition(4, 1, 3).is_involution());
}

TEST_CASE("dominant weights reject negative coordinates") {
  CHECK_THROWS_AS(DominantWeight(w({1, -1})), Error);
  try {
    DominantWeight(w({-1}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDominant);
  }
}

TEST_CASE("wire format") {
  CHECK(to_wire(w({2, 1})) == "2,1");
  CHECK(parse_weight_spec(" 2, 1 ") == w({2, 1}));
  CHECK(parse_weight_spec("-1,3") == w({-1, 3}));
  CHECK_THROWS_AS(parse_weight_spec("2,,1"), Error);
  CHECK_THROWS_AS(parse_weight_spec("a"), Error);
  CHECK_THROWS_AS(parse_weight_spec(""), Error);
  const auto t = parse_tuple_spec("2,1/0,0");
  CHECK(t.k() == 2);
  CHECK(to_wire(t) == "2,1/0,0");
  CHECK_THROWS_AS(parse_tuple_spec("2,1/0"), Error);
  CHECK_THROWS_AS(parse_tuple_spec("2,-1/0,0"), Error);
}
