#include "turan/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "turan/graph6.hpp"
#include "turan/spectral.hpp"

namespace turan {

std::vector<Graph> enumerate_ffree(int m, const ForbiddenSpec& f, const EnumerateOptions& opts) {
  if (m < 1) throw std::invalid_argument("enumerate_ffree: m must be >= 1");
  if (m > opts.resource_guard && !opts.override_guard) {
    throw std::runtime_error("enumerate_ffree: m = " + std::to_string(m) +
                             " beyond the resource guard (" + std::to_string(opts.resource_guard) +
                             "); pass override to proceed");
  }
  if (f.pattern.edge_count() == 0) throw std::invalid_argument("empty forbidden pattern");

  // Level = canonical representatives of F-free graphs with `level` edges
  // and no isolated vertices (connected throughout in connected mode).
  std::unordered_map<std::string, Graph> level;
  {
    Graph k2(2);
    k2.add_edge(0, 1);
    if (!contains_subgraph(k2, f)) level.emplace(canonical_form(k2).bytes, k2);
  }
  if (opts.on_level) opts.on_level(1, level.size());

  for (int e = 2; e <= m && !level.empty(); ++e) {
    std::unordered_map<std::string, Graph> next;
    auto offer = [&](const Graph& child, int u, int v) {
      if (creates_pattern_through_edge(child, f, u, v)) return;
      CanonicalForm cf = canonical_form(child);
      if (next.contains(cf.bytes)) return;
      // Stored representatives carry the canonical labeling, so the
      // output stream is fully deterministic.
      Graph canon = graph6_decode(cf.bytes);
      next.emplace(std::move(cf.bytes), std::move(canon));
    };
    for (const auto& [bytes, g] : level) {
      const int n = g.order();
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph child = g;
          child.add_edge(u, v);
          offer(child, u, v);
        }
      }
      for (int u = 0; u < n; ++u) {
        Graph child = g;
        const int p = child.add_vertex();
        child.add_edge(u, p);
        offer(child, u, p);
      }
      if (!opts.connected_only) {
        Graph child = g;
        const int a = child.add_vertex();
        const int b = child.add_vertex();
        child.add_edge(a, b);
        offer(child, a, b);
      }
    }
    level = std::move(next);
    if (opts.on_level) opts.on_level(e, level.size());
  }

  std::vector<std::pair<std::string, Graph>> out(level.begin(), level.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> graphs;
  graphs.reserve(out.size());
  for (auto& [bytes, g] : out) graphs.push_back(std::move(g));
  return graphs;
}

std::vector<ExtremalRecord> extremal_scan(int m, const ForbiddenSpec& f,
                                          const std::string& forbidden_id, int top_k,
                                          double margin_tol) {
  const std::vector<Graph> all = enumerate_ffree(m, f);
  std::vector<std::pair<double, const Graph*>> ranked;
  ranked.reserve(all.size());
  for (const Graph& g : all) ranked.emplace_back(perron(g).rho, &g);
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  std::vector<ExtremalRecord> records;
  const int limit = std::min<int>(top_k, static_cast<int>(ranked.size()));
  for (int i = 0; i < limit; ++i) {
    ExtremalRecord r;
    r.m = m;
    r.forbidden = forbidden_id;
    r.rank = i + 1;
    r.graph6 = graph6_encode(canonical_graph(*ranked[static_cast<std::size_t>(i)].second));
    r.rho = ranked[static_cast<std::size_t>(i)].first;
    r.method = "exhaustive";
    if (static_cast<std::size_t>(i) + 1 < ranked.size()) {
      r.margin = r.rho - ranked[static_cast<std::size_t>(i) + 1].first;
      r.indistinguishable = r.margin < margin_tol;
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace turan
