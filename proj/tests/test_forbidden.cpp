#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "turan/families.hpp"
#include "turan/forbidden.hpp"

using namespace turan;

namespace {
const ForbiddenSpec kGem = ForbiddenSpec::gem();
}

TEST_CASE("gem detection fixed cases") {
  CHECK(contains_subgraph(build_family({FamilyKind::Fan, {5}}), kGem));
  CHECK_FALSE(contains_subgraph(build_family({FamilyKind::Cycle, {5}}), kGem));
  CHECK_FALSE(contains_subgraph(build_family({FamilyKind::SnkT, {14, 2, 2}}), kGem));
  CHECK(contains_subgraph(build_family({FamilyKind::Complete, {5}}), kGem));
  CHECK(contains_subgraph(build_family({FamilyKind::Fan, {7}}), kGem));  // larger fan
  CHECK_FALSE(contains_subgraph(build_family({FamilyKind::Snk, {13, 2}}), kGem));
}

TEST_CASE("gem pattern recognition enables the fast path") {
  CHECK(kGem.is_gem);
  const ForbiddenSpec c4 = ForbiddenSpec::make(build_family({FamilyKind::Cycle, {4}}));
  CHECK_FALSE(c4.is_gem);
  CHECK_THROWS_AS(ForbiddenSpec::make(Graph(9)), std::invalid_argument);
  CHECK_THROWS_AS(ForbiddenSpec::make(Graph(2)), std::invalid_argument);  // isolated
}

TEST_CASE("detection agrees with brute-force embedding on small graphs") {
  Xoshiro256 rng = Xoshiro256::derive(11, 0);
  const std::vector<ForbiddenSpec> patterns = {
      kGem,
      ForbiddenSpec::make(build_family({FamilyKind::Cycle, {4}})),
      ForbiddenSpec::make(build_family({FamilyKind::Complete, {3}})),
      ForbiddenSpec::make(build_family({FamilyKind::Path, {5}})),
      ForbiddenSpec::make(build_family({FamilyKind::Star, {4}})),
  };
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const Graph g = oracles::random_graph(rng, n, 0.25 + 0.5 * rng.uniform());
    for (const auto& f : patterns) {
      CHECK(contains_subgraph(g, f) == oracles::brute_contains(g, f.pattern));
    }
  }
}

TEST_CASE("witness embedding is a valid map") {
  const Graph k5 = build_family({FamilyKind::Complete, {5}});
  const auto witness = find_embedding(k5, kGem);
  REQUIRE(witness.has_value());
  const Graph& pat = kGem.pattern;
  for (int a = 0; a < pat.order(); ++a) {
    for (int b = a + 1; b < pat.order(); ++b) {
      if (pat.has_edge(a, b)) {
        CHECK(k5.has_edge((*witness)[static_cast<std::size_t>(a)],
                          (*witness)[static_cast<std::size_t>(b)]));
      }
    }
  }
}

TEST_CASE("ffree_after_edit agrees with the full recheck") {
  Xoshiro256 rng = Xoshiro256::derive(23, 0);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(7));
    const Graph g = oracles::random_graph(rng, n, 0.3);

    std::vector<std::pair<int, int>> added, removed;
    const auto edges = g.edges();
    if (!edges.empty() && rng.uniform() < 0.5) {
      removed.push_back(edges[rng.below(edges.size())]);
    }
    const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (a != b && !g.has_edge(a, b)) added.push_back({a, b});

    Graph edited = g;
    for (auto [u, v] : removed) edited.remove_edge(u, v);
    for (auto [u, v] : added) edited.add_edge(u, v);

    for (const ForbiddenSpec& f :
         {kGem, ForbiddenSpec::make(build_family({FamilyKind::Cycle, {4}}))}) {
      CHECK(ffree_after_edit(g, f, added, removed) == !contains_subgraph(edited, f));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("adding a gem-completing edge is caught, deletion is monotone") {
  // K_4 plus a pendant v at vertex 0: G[N(0)] is a triangle plus the
  // isolated v, so no P_4 and no gem. Adding v-1 creates the path
  // v-1-2-3 inside N(0), completing a gem at hub 0.
  Graph g = build_family({FamilyKind::Complete, {4}});
  const int v = g.add_vertex();
  g.add_edge(v, 0);
  CHECK_FALSE(contains_subgraph(g, kGem));
  CHECK_FALSE(ffree_after_edit(g, kGem, {{v, 1}}, {}));

  // Monotonicity: removing any edge from a gem-free graph keeps it free.
  Xoshiro256 rng = Xoshiro256::derive(31, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph h = oracles::random_graph(rng, 4 + static_cast<int>(rng.below(6)), 0.4);
    if (contains_subgraph(h, kGem)) continue;
    for (auto [a, b] : h.edges()) {
      CHECK(ffree_after_edit(h, kGem, {}, {{a, b}}));
    }
  }
}

TEST_CASE("classify_neighborhood fixed cases") {
  SUBCASE("S_{13,2} at a clique vertex: the co-clique vertex dominates") {
    // N(0) = {1} u 11 leaves, and 1 is adjacent to every leaf: one K_{1,11}.
    const Graph g = build_family({FamilyKind::Snk, {13, 2}});
    const auto d = classify_neighborhood(g, 0);
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].cls == ComponentClass::Star);
    CHECK(d.components[0].star_leaves == 11);
    CHECK(d.n_zero.empty());
    CHECK(d.n_plus.count() == 12);
    CHECK(d.w.empty());
  }
  SUBCASE("S_{13,2} at a leaf: one K_2 component (a 1-leaf star)") {
    const Graph g = build_family({FamilyKind::Snk, {13, 2}});
    const auto d = classify_neighborhood(g, 5);
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].cls == ComponentClass::Star);
    CHECK(d.components[0].star_leaves == 1);
    CHECK(d.w.count() == 10);  // the other leaves
  }
  SUBCASE("K_4: one triangle") {
    const auto d = classify_neighborhood(build_family({FamilyKind::Complete, {4}}), 0);
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].cls == ComponentClass::Triangle);
  }
  SUBCASE("gem hub: P_4 is Other") {
    const auto d = classify_neighborhood(build_family({FamilyKind::Fan, {5}}), 0);
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].cls == ComponentClass::Other);
    CHECK(d.has_other());
  }
  SUBCASE("S_{14,2}^2 at the hub: one K_{1,10} star plus two pendant singletons") {
    const Graph g = build_family({FamilyKind::SnkT, {14, 2, 2}});
    const auto d = classify_neighborhood(g, 0);
    int stars = 0, singles = 0;
    for (const auto& c : d.components) {
      if (c.cls == ComponentClass::Star) {
        ++stars;
        CHECK(c.star_leaves == 10);
      }
      if (c.cls == ComponentClass::Singleton) ++singles;
    }
    CHECK(stars == 1);  // the co-clique vertex with the ten joint leaves
    CHECK(singles == 2);
    CHECK_FALSE(d.has_other());
    CHECK(d.w.empty());
  }
  SUBCASE("W and W0 partition bookkeeping") {
    const Graph p5 = build_family({FamilyKind::Path, {5}});
    const auto d = classify_neighborhood(p5, 1);
    CHECK(d.w.count() == 2);      // vertices 3, 4
    CHECK(d.n_zero.count() == 2); // 0 and 2 are nonadjacent
    CHECK(d.w_zero == VertexSet::single(3));
  }
}
