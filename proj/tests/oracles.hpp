// Test-only oracles, independent of the library's search and enumeration
// paths: permutation-based embedding and isomorphism checks, and a naive
// labeled-graph generator for completeness counts.
#ifndef TURAN_TESTS_ORACLES_HPP
#define TURAN_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "turan/canonical.hpp"
#include "turan/graph.hpp"
#include "turan/rng.hpp"
#include "turan/structure.hpp"

namespace turan::oracles {

/// Does some injective map send E(f) into E(g)? Checks every injective
/// assignment; fine for f.order() <= g.order() <= 8.
inline bool brute_contains(const Graph& g, const Graph& f) {
  const int n = g.order(), k = f.order();
  if (k > n) return false;
  std::vector<int> map(static_cast<std::size_t>(k), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == k) return true;
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (f.has_edge(i, j) && !g.has_edge(v, map[static_cast<std::size_t>(j)])) ok = false;
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(i)] = v;
      used[static_cast<std::size_t>(v)] = true;
      if (rec(i + 1)) return true;
      used[static_cast<std::size_t>(v)] = false;
    }
    return false;
  };
  return rec(0);
}

inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  const int n = g.order();
  if (n != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) {
        if (g.has_edge(u, v) != h.has_edge(perm[static_cast<std::size_t>(u)],
                                           perm[static_cast<std::size_t>(v)])) {
          ok = false;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// All unlabeled graphs with exactly m edges and no isolated vertices,
/// deduplicated by canonical form, by brute force over labeled graphs
/// (edge subsets of size m). A connected graph needs at most m+1
/// vertices; without that restriction a matching needs 2m, so the
/// unrestricted sweep is only affordable for small m.
inline std::vector<Graph> naive_graphs_with_m_edges(
    int m, bool connected_only, const std::function<bool(const Graph&)>& keep = nullptr) {
  std::set<std::string> forms;
  std::vector<Graph> out;
  const int n_max = connected_only ? m + 1 : 2 * m;
  for (int n = 2; n <= n_max; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    // All m-subsets of the edge slots.
    std::vector<int> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    const int s = static_cast<int>(slots.size());
    if (m > s) continue;
    while (true) {
      Graph g(n);
      for (int i : idx) g.add_edge(slots[static_cast<std::size_t>(i)].first,
                                   slots[static_cast<std::size_t>(i)].second);
      if (!g.has_isolated() && (!connected_only || is_connected(g)) && (!keep || keep(g))) {
        auto cf = canonical_form(g);
        if (forms.insert(cf.bytes).second) out.push_back(g);
      }
      // next combination
      int i = m - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == s - m + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m; ++j) {
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  return out;
}

inline Graph random_graph(Xoshiro256& rng, int n, double p) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform() < p) g.add_edge(u, v);
    }
  }
  return g;
}

/// Random connected graph: a random spanning tree plus density p extras.
inline Graph random_connected_graph(Xoshiro256& rng, int n, double p) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    g.add_edge(v, static_cast<int>(rng.below(static_cast<std::uint64_t>(v))));
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v) && rng.uniform() < p) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace turan::oracles

#endif
