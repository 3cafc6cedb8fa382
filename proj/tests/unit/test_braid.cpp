#include <catch_amalgamated.hpp>

#include "knotqc/braid.hpp"
#include "knotqc/errors.hpp"

using namespace knotqc;

namespace {

const BraidWord kCancelling(3, {1, -2, 1, -2, 2, -1, 2});

}  // namespace

TEST_CASE("parsing") {
  CHECK(parse_braid("1 1 1") == BraidWord(2, {1, 1, 1}));
  CHECK(parse_braid("") == BraidWord());
  CHECK(parse_braid("n=4 1 -2") == BraidWord(4, {1, -2}));
  CHECK_THROWS_AS(parse_braid("0"), ParseError);
  CHECK_THROWS_AS(parse_braid("1 x"), ParseError);
  CHECK_THROWS_AS(parse_braid("n=2 2"), ParseError);
  CHECK(parse_braid(to_string(kCancelling)) == kCancelling);
  CHECK_THROWS_AS(BraidWord(2, {2}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(0, {}), std::invalid_argument);
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(BraidWord(2, {1, -1})) == BraidWord(2, {}));
  CHECK(free_reduce(kCancelling) == BraidWord(3, {1}));
  CHECK(free_reduce(BraidWord(3, {1, 2, 1})) == BraidWord(3, {1, 2, 1}));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto b = random_braid(4, 12, seed);
    const auto r = free_reduce(b);
    CHECK(r.length() <= b.length());
    CHECK(free_reduce(r) == r);
    CHECK(permutation(r) == permutation(b));
  }
}

TEST_CASE("permutation image") {
  CHECK(permutation(BraidWord(3, {})).is_identity());
  CHECK(permutation(BraidWord(2, {1, 1, 1})) == Permutation(std::vector<int>{2, 1}));
  CHECK(permutation(kCancelling) == Permutation(std::vector<int>{2, 1, 3}));
  CHECK(is_pure(BraidWord(2, {1, 1})));
  CHECK_FALSE(is_pure(BraidWord(2, {1})));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto b = random_braid(5, 9, seed);
    CHECK(is_pure(b * b.inverse()));
    const auto u = random_braid(5, 6, seed + 1000);
    CHECK(permutation(u * b) == permutation(u).then(permutation(b)));
  }
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1}), std::invalid_argument);
}

TEST_CASE("relations hold in the symmetric group") {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        CHECK(permutation(BraidWord(n, {i, j})) == permutation(BraidWord(n, {j, i})));
      }
      if (i + 1 < n) {
        CHECK(permutation(BraidWord(n, {i, i + 1, i})) ==
              permutation(BraidWord(n, {i + 1, i, i + 1})));
      }
    }
  }
}

TEST_CASE("closure components and writhe") {
  CHECK(closure_components(BraidWord(2, {1, 1, 1})) == 1);
  CHECK(closure_components(BraidWord(3, {})) == 3);
  CHECK(closure_components(kCancelling) == 2);
  CHECK(writhe(BraidWord(2, {1, 1, 1})) == 3);
  CHECK(writhe(kCancelling) == 1);
  CHECK(writhe(BraidWord()) == 0);
}

TEST_CASE("Markov moves") {
  CHECK(markov_stabilize(BraidWord(2, {1})) == BraidWord(3, {1, 2}));
  CHECK(markov_stabilize(BraidWord()) == BraidWord(2, {1}));
  CHECK(closure_components(markov_stabilize(BraidWord())) == 1);
  const BraidWord b(3, {1, -2, 1});
  CHECK(markov_conjugate(b, BraidWord(3, {})) == b);
  CHECK(markov_conjugate(b, BraidWord(3, {2, 1})) == BraidWord(3, {2, 1, 1, -2, 1, -1, -2}));
  CHECK_THROWS_AS(markov_conjugate(b, BraidWord(2, {1})), std::invalid_argument);

  // Exhaustive over short words on 3 strands.
  std::vector<int> word;
  auto walk = [&](auto&& self, int left) -> void {
    const BraidWord w(3, word);
    CHECK(closure_components(markov_stabilize(w)) == closure_components(w));
    const BraidWord g(3, {2, -1});
    CHECK(closure_components(markov_conjugate(w, g)) == closure_components(w));
    CHECK(permutation(markov_conjugate(w, g)).cycle_count() == permutation(w).cycle_count());
    if (left == 0) return;
    for (int e : {1, 2, -1, -2}) {
      word.push_back(e);
      self(self, left - 1);
      word.pop_back();
    }
  };
  walk(walk, 5);
}

TEST_CASE("cabling") {
  const BraidWord b(3, {1, -2, 1});
  CHECK(cable(b, 1) == b);
  CHECK(cable(BraidWord(3, {}), 3) == BraidWord(9, {}));
  const auto c = cable(BraidWord(2, {1}), 2);
  CHECK(c.strands() == 4);
  CHECK(c.length() == 4);
  CHECK(permutation(c) == Permutation(std::vector<int>{3, 4, 1, 2}));
  CHECK_THROWS_AS(cable(b, 0), std::invalid_argument);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto w = random_braid(3, 6, seed);
    for (int r = 1; r <= 3; ++r) {
      const auto cw = cable(w, r);
      CHECK(writhe(cw) == r * r * writhe(w));
      // Block permutation: strand (j-1) r + m goes to (p(j)-1) r + m.
      const auto p = permutation(w);
      const auto pc = permutation(cw);
      for (int j = 1; j <= 3; ++j) {
        for (int m = 1; m <= r; ++m) CHECK(pc((j - 1) * r + m) == (p(j) - 1) * r + m);
      }
    }
  }
}

TEST_CASE("random braids") {
  CHECK(random_braid(4, 20, 7) == random_braid(4, 20, 7));
  CHECK(random_braid(4, 0, 7) == BraidWord(4, {}));
  CHECK_THROWS_AS(random_braid(1, 3, 0), std::invalid_argument);
  const auto b = random_braid(5, 10000, 1);
  for (int e : b.letters()) {
    CHECK(e != 0);
    CHECK(std::abs(e) <= 4);
  }
}
