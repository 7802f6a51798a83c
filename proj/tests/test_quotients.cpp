#include <doctest.h>

#include <random>

#include "uvbraid/homs.hpp"
#include "uvbraid/quotients.hpp"
#include "uvbraid/relators.hpp"
#include "uvbraid/verify.hpp"

using namespace uvbraid;

TEST_CASE("theta examples") {
  const auto s = theta(parse_word("s1.1", {3, 1}), 2);
  CHECK(s.vec == std::vector<long long>{1});
  CHECK(s.perm == Perm::adjacent(3, 1));
  CHECK(theta(parse_word("r1 r1", {3, 1}), 2).is_identity());
  CHECK(theta(parse_word("S1.2", {3, 2}), 3).vec == std::vector<long long>{0, 2});
  CHECK_THROWS_AS(theta(UVWord({3, 1}), 1), Error);
  CHECK_THROWS_AS(theta(UVWord({1, 1}), 2), Error);
}

TEST_CASE("theta kills every relator") {
  for (int n = 2; n <= 7; ++n)
    for (int c = 1; c <= 3; ++c)
      for (const auto &rel : defining_relations({n, c}))
        for (int d : {0, 2, 3})
          CHECK_MESSAGE(theta(rel.relator(), d).is_identity(), rel.id);
}

TEST_CASE("theta is a homomorphism and refines the abelianization") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 200; ++k) {
    const Params p{2 + k % 5, 1 + k % 3};
    const auto u = random_word(p, 14, rng);
    const auto v = random_word(p, 14, rng);
    for (int d : {0, 2, 5})
      CHECK(theta(u * v, d) == theta(u, d) * theta(v, d));
    CHECK(theta(u, 0).vec == abelianize(u).sigma_exponents);
    CHECK(theta(u, 0).perm == pi_P(u));
  }
}

TEST_CASE("quotient orders") {
  auto q = quotient_order({5, 2}, 2);
  CHECK(q.order == 480);
  CHECK(q.n_factorial == 120);
  CHECK(q.order > q.n_factorial);
  CHECK(q.certificate.method == "closure");
  CHECK(q.certificate.surjective);
  CHECK(quotient_order({2, 1}, 2).order == 4);
  CHECK(quotient_order({6, 1}, 3).order == 2160);
  CHECK_THROWS_AS(quotient_order({3, 1}, 0), Error);
}

TEST_CASE("theta is onto for small parameters") {
  for (int n = 2; n <= 5; ++n)
    for (int c = 1; c <= 2; ++c)
      for (int d : {2, 3}) {
        const auto q = quotient_order({n, c}, d);
        CHECK(q.certificate.method == "closure");
        CHECK(q.certificate.generated_order == q.order);
        CHECK(q.certificate.surjective);
      }
}

TEST_CASE("large orders use the structural certificate") {
  const auto q = quotient_order({12, 3}, 7);
  CHECK(q.certificate.method == "structural");
  CHECK(q.certificate.surjective);
  CHECK(q.order == BigInt(343) * BigInt(479001600));
  const auto huge = quotient_order({30, 3}, 5);
  CHECK(huge.order > BigInt(std::numeric_limits<std::uint64_t>::max()));
}
