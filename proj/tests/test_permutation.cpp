#include <doctest.h>

#include <random>

#include "permbound/generators.hpp"
#include "permbound/oracle.hpp"
#include "permbound/permutation.hpp"
#include "support/naive.hpp"

using namespace permbound;
using permbound::testing::all_permutations;
using permbound::testing::example1;
using permbound::testing::pair_count_inversions;

namespace {

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

}  // namespace

TEST_CASE("construction validates the bijection") {
  CHECK_NOTHROW(Permutation({2, 4, 1, 3}));
  CHECK_THROWS_AS(Permutation({1, 1, 3}), NotABijection);
  CHECK_THROWS_AS(Permutation({0, 1, 2}), NotABijection);
  CHECK_THROWS_AS(Permutation({1, 2, 4}), NotABijection);
}

TEST_CASE("text forms") {
  CHECK(parse_permutation("2413") == Permutation{2, 4, 1, 3});
  CHECK(parse_permutation(" 2 4 1 3 ") == Permutation{2, 4, 1, 3});
  CHECK(parse_permutation("10 9 8 7 6 5 4 3 2 1") == Permutation::reversal(10));
  CHECK(Permutation::reversal(10).to_string() == "10 9 8 7 6 5 4 3 2 1");
  CHECK_THROWS_AS(parse_permutation("1123"), ParseError);
  CHECK_THROWS_AS(parse_permutation("12a"), ParseError);
  CHECK_THROWS_AS(parse_permutation(""), ParseError);
  CHECK_THROWS_AS(parse_permutation("1234567891"), ParseError);  // compact form needs n <= 9
}

TEST_CASE("satisfies") {
  CHECK(satisfies(Permutation{2, 4, 1, 3}, example1()));
  CHECK_FALSE(satisfies(Permutation{1, 2, 3, 4}, example1()));
  CHECK(satisfies(Permutation{3, 1, 2}, RestrictionGraph(3)));
  CHECK_THROWS_AS(satisfies(Permutation{1, 2}, example1()), SizeMismatch);
}

TEST_CASE("linf_distance") {
  CHECK(linf_distance(Permutation{1, 4, 2, 3}, Permutation{3, 4, 1, 2}) == 2);
  CHECK(linf_distance(Permutation{2, 4, 1, 3}, Permutation{2, 4, 1, 3}) == 0);
  for (int n = 1; n <= 12; ++n) CHECK(linf_distance(Permutation::identity(n), Permutation::reversal(n)) == n - 1);
  CHECK_THROWS_AS(linf_distance(Permutation{1}, Permutation{1, 2}), SizeMismatch);
}

TEST_CASE("kendall_distance") {
  CHECK(kendall_distance(Permutation{3, 1, 2}, Permutation{3, 2, 1}) == 1);
  CHECK(kendall_distance(Permutation{2, 4, 1, 3}, Permutation{2, 4, 1, 3}) == 0);
  CHECK(kendall_distance(Permutation{1, 4, 2, 3}, Permutation{3, 4, 1, 2}) == 2);
  CHECK_THROWS_AS(kendall_distance(Permutation{1}, Permutation{1, 2}), SizeMismatch);
}

TEST_CASE("inversion_number") {
  CHECK(inversion_number(Permutation::identity(7)) == 0);
  for (int n = 1; n <= 12; ++n) CHECK(inversion_number(Permutation::reversal(n)) == n * (n - 1) / 2);
  CHECK(inversion_number(Permutation{2, 4, 1, 3}) == 3);  // (1,3) (2,3) (2,4)
}

TEST_CASE("merge count agrees with pair counting for every permutation with n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : all_permutations(n)) REQUIRE(inversion_number(p) == pair_count_inversions(p));
}

TEST_CASE("kendall distance is the inversion number of sigma o rho^-1") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& s : perms)
      for (const auto& r : perms) REQUIRE(kendall_distance(s, r) == inversion_number(compose(s, r.inverse())));
  }
  std::mt19937_64 rng(1);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 32);
    const auto s = random_permutation(n, rng);
    const auto r = random_permutation(n, rng);
    REQUIRE(kendall_distance(s, r) == inversion_number(compose(s, r.inverse())));
  }
}

TEST_CASE("metric axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 32);
    const auto a = random_permutation(n, rng);
    const auto b = random_permutation(n, rng);
    const auto c = random_permutation(n, rng);
    for (Metric m : {Metric::Linf, Metric::Kendall}) {
      REQUIRE(distance(m, a, b) >= 0);
      REQUIRE(distance(m, a, b) == distance(m, b, a));
      REQUIRE(distance(m, a, a) == 0);
      REQUIRE((a == b) == (distance(m, a, b) == 0));
      REQUIRE(distance(m, a, c) <= distance(m, a, b) + distance(m, b, c));
    }
  }
}

TEST_CASE("from_linear_extension") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 1);
    CHECK(from_linear_extension(order) == Permutation::reversal(n));
  }
  CHECK(from_linear_extension(std::vector<Vertex>{2, 4, 1, 3}) == Permutation{2, 4, 1, 3});
  CHECK(from_linear_extension(std::vector<Vertex>{2, 4, 3, 1}) == Permutation{1, 4, 2, 3});
  CHECK_THROWS_AS(from_linear_extension(std::vector<Vertex>{1, 1, 2}), NotABijection);
  CHECK_THROWS_AS(from_linear_extension(std::vector<Vertex>{1, 4}), NotABijection);
}

TEST_CASE("linear extensions map into the family; members respect the tight interval") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : labelled_dags(n)) {
      for (const auto& ext : linear_extensions(g)) REQUIRE(satisfies(from_linear_extension(ext), g));
      const Reachability r = transitive_closure(g);
      for (const auto& sigma : testing::filter_family(g))
        for (Vertex v = 1; v <= n; ++v) {
          REQUIRE(sigma.at(v) >= r.reachable_count(v) + 1);
          REQUIRE(sigma.at(v) <= n - r.inverse_reachable_count(v));
        }
    }
}
