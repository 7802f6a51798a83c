#include <doctest.h>

#include <random>

#include "uvbraid/perms.hpp"
#include "uvbraid/relators.hpp"
#include "uvbraid/verify.hpp"

using namespace uvbraid;

TEST_CASE("compose example") {
  const auto p = Perm::transposition(3, 1, 2) * Perm::transposition(3, 2, 3);
  CHECK(p.image(1) == 2);
  CHECK(p.image(2) == 3);
  CHECK(p.image(3) == 1);
  CHECK(p.to_cycles() == "(1 2 3)");
}

TEST_CASE("group axioms on S_4") {
  const auto all = all_perms(4);
  CHECK(all.size() == 24);
  const auto id = Perm::identity(4);
  for (const auto &a : all) {
    CHECK(a * id == a);
    CHECK(id * a == a);
    CHECK((a * a.inverse()).is_identity());
    for (const auto &b : all)
      for (int x = 1; x <= 4; ++x)
        CHECK((a * b).image(x) == a.image(b.image(x)));
  }
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("perm construction errors") {
  CHECK_THROWS_AS(Perm::from_images({1, 1, 2}), Error);
  CHECK_THROWS_AS(Perm::from_images({0, 1}), Error);
  CHECK_THROWS_AS(Perm::from_images({}), Error);
  CHECK_THROWS_AS(Perm::identity(3) * Perm::identity(4), Error);
  CHECK(Perm::from_images({2, 3, 1}).images() == std::vector<int>{2, 3, 1});
  CHECK(Perm::identity(5).to_cycles() == "()");
  CHECK(Perm::from_images({2, 1, 4, 5, 3}).to_cycles() == "(1 2)(3 4 5)");
}

TEST_CASE("pi_K and pi_P examples") {
  const Params p{3, 1};
  CHECK(pi_K(parse_word("s1.1 r2", p)) == Perm::adjacent(3, 2));
  CHECK(pi_K(UVWord(p)).is_identity());
  CHECK(pi_K(parse_word("r1 r1", p)).is_identity());
  CHECK(pi_P(parse_word("s1.1 r2", p)) == Perm::adjacent(3, 1) * Perm::adjacent(3, 2));
  CHECK(pi_P(parse_word("s1.1 S1.1", p)).is_identity());
  CHECK(pi_P(parse_word("r1", p)) == Perm::transposition(3, 1, 2));
}

TEST_CASE("iota examples and section property") {
  CHECK(iota(Perm::identity(4), {4, 1}).empty());
  CHECK(to_string(iota(Perm::adjacent(3, 1), {3, 1})) == "r1");
  for (int n = 1; n <= 6; ++n)
    for (const auto &perm : all_perms(n)) {
      const auto w = iota(perm, {n, 2});
      CHECK(pi_K(w) == perm);
      for (const auto &l : w.letters())
        CHECK(l.is_rho());
    }
  CHECK_THROWS_AS(iota(Perm::identity(3), {4, 1}), Error);
}

TEST_CASE("projections are homomorphisms") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const Params p{2 + k % 5, 1 + k % 3};
    const auto u = random_word(p, 12, rng);
    const auto v = random_word(p, 12, rng);
    CHECK(pi_K(u * v) == pi_K(u) * pi_K(v));
    CHECK(pi_P(u * v) == pi_P(u) * pi_P(v));
    CHECK(pi_P(u.inverse()) == pi_P(u).inverse());
  }
}

TEST_CASE("relators die under both projections") {
  for (int n = 2; n <= 7; ++n)
    for (int c = 1; c <= 3; ++c)
      for (const auto &rel : defining_relations({n, c})) {
        CHECK(pi_K(rel.relator()).is_identity());
        CHECK(pi_P(rel.relator()).is_identity());
      }
}
