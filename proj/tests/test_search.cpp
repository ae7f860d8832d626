#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "oracles.hpp"
#include "turan/families.hpp"
#include "turan/graph6.hpp"
#include "turan/search.hpp"
#include "turan/spectral.hpp"

using namespace turan;

namespace {

SearchConfig small_config(int m) {
  SearchConfig cfg;
  cfg.m = m;
  cfg.restarts = 8;
  cfg.max_steps = 400;
  cfg.seed = 20260825;
  return cfg;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/" + name) { std::remove(path.c_str()); }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("local_search determinism") {
  const SearchConfig cfg = small_config(9);
  const RunLog a = local_search(cfg);
  const RunLog b = local_search(cfg);
  REQUIRE(a.per_restart.size() == b.per_restart.size());
  for (std::size_t i = 0; i < a.per_restart.size(); ++i) {
    CHECK(a.per_restart[i].graph6 == b.per_restart[i].graph6);
    CHECK(a.per_restart[i].rho == b.per_restart[i].rho);
    CHECK(a.per_restart[i].steps == b.per_restart[i].steps);
  }
  CHECK(a.best.graph6 == b.best.graph6);
  CHECK(a.best.rho == b.best.rho);
}

TEST_CASE("local_search feasibility and soundness at m=11") {
  const RunLog log = local_search(small_config(11));
  const ForbiddenSpec gem = ForbiddenSpec::gem();
  for (const RestartResult& r : log.per_restart) {
    const Graph g = graph6_decode(r.graph6);
    CHECK(g.edge_count() == 11);
    CHECK(is_connected(g));
    CHECK_FALSE(g.has_isolated());
    CHECK_FALSE(contains_subgraph(g, gem));
  }
  // Best of the restarts reaches the exhaustive maximizer S_{7,2}.
  CHECK(log.best.rho == doctest::Approx(0.5 * (1 + std::sqrt(41.0))).epsilon(1e-8));
  CHECK(isomorphic(graph6_decode(log.best.graph6), build_family({FamilyKind::Snk, {7, 2}})));
}

TEST_CASE("exclusion correctness") {
  SearchConfig cfg = small_config(11);
  const Graph rank1 = build_family({FamilyKind::Snk, {7, 2}});
  cfg.excluded.push_back(canonical_form(rank1));
  const RunLog log = local_search(cfg);
  for (const RestartResult& r : log.per_restart) {
    CHECK_FALSE(isomorphic(graph6_decode(r.graph6), rank1));
  }
  CHECK(log.best.rho < 0.5 * (1 + std::sqrt(41.0)));
}

TEST_CASE("certify exhaustive") {
  SearchConfig cfg = small_config(13);
  const CertifyResult res = certify_theorem(13, CertifyMode::Exhaustive, cfg);
  CHECK(res.pass);
  REQUIRE(res.records.size() >= 2);
  CHECK(isomorphic(graph6_decode(res.records[0].graph6), build_family({FamilyKind::Snk, {8, 2}})));
  CHECK(res.records[0].rho == doctest::Approx(4.0).epsilon(1e-9));  // root of x^2-x-12
  CHECK(res.verdict.find("PASS") == 0);
}

TEST_CASE("certify pool at small odd m") {
  SearchConfig cfg = small_config(15);
  const CertifyResult res = certify_theorem(15, CertifyMode::Pool, cfg);
  REQUIRE_FALSE(res.records.empty());
  CHECK(res.verdict.find("pool evidence") != std::string::npos);
  CHECK(isomorphic(graph6_decode(res.records[0].graph6), build_family({FamilyKind::Snk, {9, 2}})));
  CHECK(res.records[0].rho == doctest::Approx(0.5 * (1 + std::sqrt(57.0))).epsilon(1e-8));
  for (const auto& r : res.records) {
    CHECK(graph6_decode(r.graph6).edge_count() == 15);
  }
}

TEST_CASE("record store") {
  TempFile store("turan_test_records.jsonl");

  ExtremalRecord r;
  r.m = 11;
  r.forbidden = "gem";
  r.rank = 1;
  r.graph6 = "FzqZW";
  r.rho = 3.7015621187;
  r.method = "exhaustive";
  r.margin = 0.02;
  append_records(store.path, {r});

  SUBCASE("round trip is byte-identical") {
    const auto got = query_records(store.path, {});
    REQUIRE(got.size() == 1);
    CHECK(got[0].m == r.m);
    CHECK(got[0].graph6 == r.graph6);
    CHECK(got[0].rho == r.rho);  // exact double round trip through JSON
    CHECK(got[0].margin == r.margin);
  }

  SUBCASE("upsert by key: last line wins") {
    ExtremalRecord r2 = r;
    r2.rho = 3.75;
    append_records(store.path, {r2});
    const auto got = query_records(store.path, {});
    REQUIRE(got.size() == 1);
    CHECK(got[0].rho == 3.75);
  }

  SUBCASE("corrupt lines are skipped with a warning") {
    {
      std::ofstream out(store.path, std::ios::app);
      out << "{this is not json\n";
    }
    ExtremalRecord r3 = r;
    r3.m = 13;
    append_records(store.path, {r3});
    std::vector<std::string> warnings;
    const auto got = query_records(store.path, {}, &warnings);
    CHECK(got.size() == 2);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("line 2") != std::string::npos);
  }

  SUBCASE("filters") {
    ExtremalRecord r4 = r;
    r4.m = 23;
    r4.rank = 2;
    r4.method = "construction-pool";
    append_records(store.path, {r4});
    RecordFilter f;
    f.m_min = 20;
    f.m_max = 30;
    f.rank = 2;
    const auto got = query_records(store.path, f);
    REQUIRE(got.size() == 1);
    CHECK(got[0].m == 23);
    RecordFilter fm;
    fm.method = "exhaustive";
    CHECK(query_records(store.path, fm).size() == 1);
  }
}

TEST_CASE("search config validation") {
  SearchConfig cfg = small_config(0);
  CHECK_THROWS_AS(local_search(cfg), std::invalid_argument);
  cfg.m = 5;
  cfg.restarts = 0;
  CHECK_THROWS_AS(local_search(cfg), std::invalid_argument);
}

TEST_CASE("infeasible start reports an error") {
  // m=1 admits only K_2; excluding it leaves nothing to search.
  SearchConfig cfg = small_config(1);
  Graph k2(2);
  k2.add_edge(0, 1);
  cfg.excluded.push_back(canonical_form(k2));
  CHECK_THROWS_AS(local_search(cfg), std::runtime_error);
}
