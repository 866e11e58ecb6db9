#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "arrtop/words.hpp"

using namespace arrtop;

namespace {

BraidWord random_braid(std::mt19937& rng, int n, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  BraidWord b;
  b.strands = n;
  const int l = len(rng);
  for (int i = 0; i < l; ++i) b.letters.push_back(gen(rng) * (sign(rng) ? 1 : -1));
  return b;
}

FreeWord random_word(std::mt19937& rng, int rank, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> letters;
  const int l = len(rng);
  for (int i = 0; i < l; ++i) letters.push_back(gen(rng) * (sign(rng) ? 1 : -1));
  return FreeWord(rank, letters);
}

}  // namespace

TEST_CASE("free words are stored reduced") {
  FreeWord w(3, {1, 2, -2, -1, 3});
  REQUIRE(w.letters == std::vector<int>{3});
  REQUIRE((w * inverse(w)).empty());
  REQUIRE_THROWS_AS(FreeWord(2, {3}), RangeError);
}

TEST_CASE("half_twist basics") {
  REQUIRE(half_twist(3, 3, 5).letters.empty());
  REQUIRE(half_twist(1, 3, 4).letters == std::vector<int>{1, 2, 1});
  REQUIRE_THROWS_AS(half_twist(0, 2, 4), RangeError);
  REQUIRE_THROWS_AS(half_twist(3, 2, 4), RangeError);
  REQUIRE_THROWS_AS(half_twist(1, 5, 4), RangeError);
}

TEST_CASE("half_twist permutation reverses the block") {
  for (int n = 2; n <= 6; ++n) {
    Perm p = braid_permutation(half_twist(1, n, n));
    for (int i = 1; i <= n; ++i) REQUIRE(p(i) == n + 1 - i);
  }
  // interior block
  Perm p = braid_permutation(half_twist(2, 4, 5));
  REQUIRE(p.images == std::vector<int>{1, 4, 3, 2, 5});
}

TEST_CASE("braid action definition cases") {
  const FreeWord x1 = FreeWord::generator(2, 1);
  const FreeWord x2 = FreeWord::generator(2, 2);
  BraidWord s1(2, {1});
  REQUIRE(braid_act(s1, x1).letters == std::vector<int>{1, 2, -1});
  REQUIRE(braid_act(s1, x2).letters == std::vector<int>{1});
  BraidWord empty(2, {});
  REQUIRE(braid_act(empty, x1) == x1);
  REQUIRE_THROWS_AS(braid_act(BraidWord(3, {1}), x1), RankMismatch);
}

TEST_CASE("braid action inverse property") {
  std::mt19937 rng(101);
  const int n = 5;
  for (int trial = 0; trial < 200; ++trial) {
    BraidWord b = random_braid(rng, n, 8);
    FreeWord w = random_word(rng, n, 6);
    REQUIRE(braid_act(b, braid_act(inverse(b), w)) == w);
    REQUIRE(braid_act(inverse(b), braid_act(b, w)) == w);
  }
}

TEST_CASE("braid relations act identically") {
  for (int n = 3; n <= 6; ++n) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      BraidWord lhs(n, {i, i + 1, i});
      BraidWord rhs(n, {i + 1, i, i + 1});
      for (int g = 1; g <= n; ++g) {
        FreeWord x = FreeWord::generator(n, g);
        REQUIRE(braid_act(lhs, x) == braid_act(rhs, x));
      }
    }
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j) {
        BraidWord lhs(n, {i, j});
        BraidWord rhs(n, {j, i});
        for (int g = 1; g <= n; ++g) {
          FreeWord x = FreeWord::generator(n, g);
          REQUIRE(braid_act(lhs, x) == braid_act(rhs, x));
        }
      }
  }
}

TEST_CASE("braid action preserves products") {
  std::mt19937 rng(2023);
  const int n = 5;
  for (int trial = 0; trial < 100; ++trial) {
    BraidWord b = random_braid(rng, n, 6);
    FreeWord u = random_word(rng, n, 5);
    FreeWord v = random_word(rng, n, 5);
    REQUIRE(braid_act(b, u * v) == braid_act(b, u) * braid_act(b, v));
  }
}

TEST_CASE("braid_permutation is a homomorphism") {
  REQUIRE(braid_permutation(BraidWord(3, {})).is_identity());
  Perm p = braid_permutation(BraidWord(3, {1, 2}));
  // a 3-cycle
  REQUIRE(p.images == std::vector<int>{3, 1, 2});
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    BraidWord a = random_braid(rng, 5, 6), b = random_braid(rng, 5, 6);
    REQUIRE(braid_permutation(a * b) ==
            compose(braid_permutation(a), braid_permutation(b)));
  }
}

TEST_CASE("sign of a braid letter does not change its permutation") {
  REQUIRE(braid_permutation(BraidWord(4, {2})) == braid_permutation(BraidWord(4, {-2})));
}

TEST_CASE("conjugate_normal_form") {
  SECTION("a bare generator") {
    auto cf = conjugate_normal_form(FreeWord(5, {3}));
    REQUIRE(cf.gen == 3);
    REQUIRE(cf.conjugator.empty());
  }
  SECTION("conjugated generator") {
    auto cf = conjugate_normal_form(FreeWord(5, {-2, 5, 2}));
    REQUIRE(cf.gen == 5);
    REQUIRE(cf.conjugator.letters == std::vector<int>{2});
  }
  SECTION("longer conjugator") {
    FreeWord conj(6, {4, -1, 2});
    FreeWord w = inverse(conj) * FreeWord::generator(6, 6) * conj;
    auto cf = conjugate_normal_form(w);
    REQUIRE(cf.gen == 6);
    REQUIRE(cf.conjugator == conj);
  }
  SECTION("not conjugate to a generator") {
    REQUIRE_THROWS_AS(conjugate_normal_form(FreeWord(5, {1, 2})), NotConjugateToGenerator);
    REQUIRE_THROWS_AS(conjugate_normal_form(FreeWord(5, {1, 2, 1})), NotConjugateToGenerator);
  }
}

TEST_CASE("permutation compose and inverse") {
  Perm p{std::vector<int>{2, 3, 1}};
  REQUIRE(compose(p, p.inverse()).is_identity());
  REQUIRE(compose(p.inverse(), p).is_identity());
  Perm q{std::vector<int>{1, 3, 2}};
  // (p*q)(i) = q(p(i))
  REQUIRE(compose(p, q).images == std::vector<int>{3, 2, 1});
}
