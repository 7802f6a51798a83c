#include <doctest.h>

#include <random>

#include "uvbraid/oracle.hpp"
#include "uvbraid/semidirect.hpp"
#include "uvbraid/verify.hpp"

using namespace uvbraid;

TEST_CASE("oracle examples") {
  const Params p{3, 1};
  const auto u = parse_word("r1 s2.1 r1", p);
  const auto v = parse_word("r2 s1.1 r2", p);
  const auto r = bfs_equal(u, v);
  REQUIRE(r.verdict == Verdict::ProvenEqual);
  CHECK_FALSE(r.path.empty());
  CHECK(replay(free_reduce(u * v.inverse()), r.path).empty());
  for (const auto &step : r.path)
    CHECK(step.relation.rfind("MR2", 0) == 0);

  const auto same = bfs_equal(u, u);
  CHECK(same.verdict == Verdict::ProvenEqual);
  CHECK(same.path.empty());

  const auto no = bfs_equal(parse_word("r1", p), UVWord(p), {4, 1000});
  CHECK(no.verdict == Verdict::Unknown);
  CHECK_FALSE(no.reason.empty());
  CHECK_THROWS_AS(bfs_equal(UVWord({3, 1}), UVWord({4, 1})), Error);
}

TEST_CASE("rewrite rules come from relators") {
  const Params p{4, 2};
  const auto rules = rewrite_rules(p);
  CHECK_FALSE(rules.empty());
  for (const auto &rule : rules) {
    CHECK_FALSE(rule.pattern.empty());
    const UVWord lhs(p, rule.pattern);
    const UVWord rhs(p, rule.replacement);
    CHECK(are_equal(lhs, rhs));
  }
}

TEST_CASE("replay rejects bad certificates") {
  const Params p{3, 1};
  const auto start = parse_word("r1 r2", p);
  CHECK_THROWS_AS(replay(start, std::vector<ProofStep>{{100000, 0, ""}}), Error);
  CHECK_THROWS_AS(replay(start, std::vector<ProofStep>{{0, 7, ""}}), Error);
}

TEST_CASE("oracle proofs agree with the word problem") {
  std::mt19937_64 rng(17);
  std::size_t proven = 0;
  for (int k = 0; k < 120; ++k) {
    const Params p{3 + k % 2, 1 + (k / 2) % 2};
    const auto u = random_word(p, 1 + k % 4, rng);
    // Half the pairs are equal by construction: apply a relator-based rewrite.
    UVWord v = random_word(p, 1 + k % 4, rng);
    if (k % 2 == 0) {
      const auto rules = rewrite_rules(p);
      const auto &rule = rules[rng() % rules.size()];
      v = u * UVWord(p, rule.pattern) * UVWord(p, rule.replacement).inverse();
    }
    const auto r = bfs_equal(u, v, {6, 20000});
    if (r.verdict == Verdict::ProvenEqual) {
      ++proven;
      CHECK(are_equal(u, v));
      CHECK(replay(free_reduce(u * v.inverse()), r.path).empty());
    }
  }
  CHECK(proven >= 30);
}
