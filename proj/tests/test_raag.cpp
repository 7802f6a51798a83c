#include <doctest.h>

#include <random>

#include "uvbraid/raag.hpp"

using namespace uvbraid;

namespace {

Delta d(int i, int j, int t, int sign = 1) { return {i, j, t, sign}; }

DeltaWord dw(Params p, std::vector<Delta> letters) { return DeltaWord(p, std::move(letters)); }

DeltaWord random_delta_word(const CommGraph &g, std::size_t len, std::mt19937_64 &rng) {
  std::uniform_int_distribution<std::size_t> pick(0, g.vertex_count() - 1);
  std::bernoulli_distribution flip(0.5);
  DeltaWord w(g.params());
  for (std::size_t k = 0; k < len; ++k) {
    auto v = g.vertex(pick(rng));
    w.push_back(flip(rng) ? v : v.inverse());
  }
  return w;
}

} // namespace

TEST_CASE("graph shape") {
  auto g = build_graph({2, 1});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 0);
  g = build_graph({3, 2});
  CHECK(g.vertex_count() == 12);
  CHECK(g.edge_count() == 0);
  g = build_graph({4, 1});
  CHECK(g.vertex_count() == 12);
  CHECK(g.adjacent(g.index_of(d(1, 2, 1)), g.index_of(d(3, 4, 1))));
  CHECK_FALSE(g.adjacent(g.index_of(d(1, 2, 1)), g.index_of(d(2, 1, 1))));
  CHECK_THROWS_AS(build_graph({1, 1}), Error);
}

TEST_CASE("adjacency is colour blind and index_of is consistent") {
  for (int n = 2; n <= 6; ++n)
    for (int c = 1; c <= 3; ++c) {
      const auto g = build_graph({n, c});
      CHECK(g.vertex_count() == static_cast<std::size_t>(n * (n - 1) * c));
      for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        CHECK(g.index_of(g.vertex(u)) == u);
        CHECK_FALSE(g.adjacent(u, u));
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
          const auto &a = g.vertex(u);
          const auto &b = g.vertex(v);
          const bool disjoint = a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j;
          CHECK(g.adjacent(u, v) == disjoint);
        }
      }
    }
}

TEST_CASE("delta tokens") {
  const Params p{4, 2};
  CHECK(to_token(d(1, 3, 2, -1)) == "D1.3.2");
  CHECK(parse_delta("d2.4.1", p) == d(2, 4, 1));
  CHECK_THROWS_AS(parse_delta("d2.2.1", p), Error);
  CHECK_THROWS_AS(parse_delta("d1.2.3", p), Error);
  CHECK_THROWS_AS(parse_delta("d1.2", p), Error);
  CHECK_THROWS_AS(parse_delta("x1.2.1", p), Error);
  CHECK_THROWS_AS(parse_delta("d1.5.1", p), Error);
}

TEST_CASE("normal_form examples") {
  const Params p{4, 1};
  const auto g = build_graph(p);
  CHECK(normal_form(dw(p, {d(3, 4, 1), d(1, 2, 1)}), g) == dw(p, {d(1, 2, 1), d(3, 4, 1)}));
  CHECK(normal_form(dw(p, {d(1, 2, 1), d(3, 4, 1), d(1, 2, 1, -1)}), g) == dw(p, {d(3, 4, 1)}));
  const auto stuck = dw(p, {d(1, 2, 1), d(2, 1, 1), d(1, 2, 1, -1)});
  CHECK(normal_form(stuck, g) == stuck);
  CHECK_THROWS_AS(normal_form(dw({5, 1}, {}), g), Error);
}

TEST_CASE("normal_form properties") {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 6; ++n) {
    const auto g = build_graph({n, 2});
    for (int k = 0; k < 60; ++k) {
      const auto u = random_delta_word(g, k % 21, rng);
      const auto v = random_delta_word(g, (k * 7) % 21, rng);
      const auto nu = normal_form(u, g);
      CHECK(normal_form(nu, g) == nu);
      CHECK(normal_form(u * u.inverse(), g).empty());
      CHECK(normal_form(u * v, g) == normal_form(nu * normal_form(v, g), g));
      CHECK(normal_form(nu.inverse(), g) == normal_form(u.inverse(), g));
    }
  }
}

TEST_CASE("normal form of a shuffled commuting word is sorted") {
  const Params p{6, 1};
  const auto g = build_graph(p);
  const auto w = dw(p, {d(5, 6, 1), d(3, 4, 1), d(1, 2, 1, -1)});
  CHECK(to_string(normal_form(w, g)) == "D1.2.1 d3.4.1 d5.6.1");
}

TEST_CASE("edgeless graphs reduce freely") {
  const Params p{3, 2};
  const auto g = build_graph(p);
  const auto w = dw(p, {d(1, 3, 1), d(2, 3, 2), d(1, 2, 1)});
  CHECK(normal_form(w, g) == w);
}

TEST_CASE("clique number matches floor(n/2)") {
  CHECK(clique_number(build_graph({5, 1})) == 2);
  CHECK(clique_number(build_graph({5, 3})) == 2);
  CHECK(clique_number(build_graph({2, 1})) == 1);
  CHECK(clique_number(build_graph({8, 1})) == 4);
  for (int n = 2; n <= 8; ++n)
    for (int c = 1; c <= 3; ++c) {
      const auto g = build_graph({n, c});
      const auto r = maximum_clique(g);
      CHECK(r.size == static_cast<std::size_t>(n / 2));
      REQUIRE(r.clique.size() == r.size);
      for (std::size_t a = 0; a < r.clique.size(); ++a)
        for (std::size_t b = a + 1; b < r.clique.size(); ++b)
          CHECK(deltas_commute(r.clique[a], r.clique[b]));
    }
}

TEST_CASE("P3 freeness") {
  CHECK(is_p3_free(build_graph({3, 1})).p3_free);
  CHECK(is_p3_free(build_graph({2, 3})).p3_free);
  const auto g = build_graph({4, 1});
  const auto r = is_p3_free(g);
  CHECK_FALSE(r.p3_free);
  REQUIRE(r.witness);
  CHECK(*r.witness == std::array<Delta, 3>{d(1, 2, 1), d(3, 4, 1), d(2, 1, 1)});
  for (int n = 2; n <= 8; ++n) {
    const auto h = build_graph({n, 2});
    const auto res = is_p3_free(h);
    CHECK(res.p3_free == (n <= 3));
    if (res.witness)
      CHECK(valid_p3(h, *res.witness));
  }
}

TEST_CASE("F2 x F2 witness") {
  const auto g = build_graph({4, 1});
  const auto w = f2xf2_witness(g);
  REQUIRE(w);
  CHECK(*w == std::array<Delta, 4>{d(1, 2, 1), d(2, 1, 1), d(3, 4, 1), d(4, 3, 1)});
  CHECK_FALSE(f2xf2_witness(build_graph({3, 5})));
  const auto g7 = build_graph({7, 2});
  const auto w7 = f2xf2_witness(g7);
  REQUIRE(w7);
  CHECK(valid_f2xf2(g7, *w7));
  CHECK_FALSE(valid_f2xf2(g, {d(1, 2, 1), d(3, 4, 1), d(2, 1, 1), d(4, 3, 1)}));
}

TEST_CASE("no dominating vertices") {
  for (int n = 2; n <= 8; ++n)
    for (int c = 1; c <= 3; ++c)
      CHECK(dominating_vertices(build_graph({n, c})).empty());
}

TEST_CASE("dot export") {
  const auto dot = build_graph({4, 1}).to_dot();
  CHECK(dot.find("\"d1.2.1\" -- \"d3.4.1\"") != std::string::npos);
  CHECK(dot.find("\"d1.2.1\" -- \"d2.1.1\"") == std::string::npos);
}
