#include "turan/canonical.hpp"

#include <algorithm>
#include <map>

#include "turan/graph6.hpp"

namespace turan {

namespace {

using Partition = std::vector<std::vector<int>>;

// Equitable refinement: split cells by the vector of neighbor counts
// into every cell, ordering subcells by that invariant so the outcome does
// not depend on input labels.
void refine(const Graph& g, Partition& parts) {
  bool changed = true;
  while (changed) {
    changed = false;
    Partition next;
    next.reserve(parts.size());
    for (const auto& cell : parts) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> groups;
      for (int v : cell) {
        std::vector<int> key;
        key.reserve(parts.size());
        for (const auto& other : parts) {
          int c = 0;
          for (int w : other) c += g.has_edge(v, w) ? 1 : 0;
          key.push_back(c);
        }
        groups[key].push_back(v);
      }
      if (groups.size() > 1) changed = true;
      for (auto& [key, vs] : groups) next.push_back(std::move(vs));
    }
    parts = std::move(next);
  }
}

struct CanonSearch {
  const Graph& g;
  std::string best;
  bool have_best = false;

  // N(u) \ {v} == N(v) \ {u}: swapping u and v is an automorphism.
  bool twins(int u, int v) const {
    VertexSet nu = g.neighbors(u);
    VertexSet nv = g.neighbors(v);
    nu.reset(v);
    nv.reset(u);
    return nu == nv;
  }

  void leaf(const Partition& parts) {
    std::vector<int> label(static_cast<std::size_t>(g.order()));
    int next = 0;
    for (const auto& cell : parts) label[static_cast<std::size_t>(cell[0])] = next++;
    Graph h(g.order());
    for (auto [u, v] : g.edges()) {
      h.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
    }
    std::string enc = graph6_encode(h);
    if (!have_best || enc < best) {
      best = std::move(enc);
      have_best = true;
    }
  }

  void descend(Partition parts) {
    refine(g, parts);
    std::size_t target = parts.size();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].size() > 1) {
        target = i;
        break;
      }
    }
    if (target == parts.size()) {
      leaf(parts);
      return;
    }
    const std::vector<int>& cell = parts[target];
    std::vector<int> reps;
    for (int v : cell) {
      bool dup = false;
      for (int r : reps) {
        if (twins(v, r)) {
          dup = true;
          break;
        }
      }
      if (!dup) reps.push_back(v);
    }
    for (int v : reps) {
      Partition child;
      child.reserve(parts.size() + 1);
      for (std::size_t i = 0; i < target; ++i) child.push_back(parts[i]);
      child.push_back({v});
      std::vector<int> rest;
      for (int w : cell) {
        if (w != v) rest.push_back(w);
      }
      child.push_back(std::move(rest));
      for (std::size_t i = target + 1; i < parts.size(); ++i) child.push_back(parts[i]);
      descend(std::move(child));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() == 0) return {graph6_encode(g)};
  CanonSearch search{g};
  search.descend({[&] {
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
    return all;
  }()});
  return {std::move(search.best)};
}

Graph canonical_graph(const Graph& g) { return graph6_decode(canonical_form(g).bytes); }

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace turan
