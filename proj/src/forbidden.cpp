#include "turan/forbidden.hpp"

#include <algorithm>
#include <stdexcept>

#include "turan/families.hpp"

namespace turan {

namespace {

// Pattern vertices reordered so each vertex after the first is adjacent to
// an earlier one (connected patterns), highest degree first among ties.
std::vector<int> pattern_order(const Graph& f) {
  const int k = f.order();
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(k), false);
  for (int step = 0; step < k; ++step) {
    int best = -1;
    bool best_attached = false;
    for (int v = 0; v < k; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      bool attached = false;
      for (int u : order) {
        if (f.has_edge(u, v)) { attached = true; break; }
      }
      if (best < 0 || (attached && !best_attached) ||
          (attached == best_attached && f.degree(v) > f.degree(best))) {
        best = v;
        best_attached = attached;
      }
    }
    order.push_back(best);
    placed[static_cast<std::size_t>(best)] = true;
  }
  return order;
}

struct EmbedSearch {
  const Graph& g;
  const Graph& f;
  std::vector<int> order;         // pattern vertices in assignment order
  std::vector<int> image;         // order index -> host vertex
  VertexSet used;
  // Optional anchor: order[0] -> anchor0, order[1] -> anchor1.
  int anchor0 = -1, anchor1 = -1;

  bool candidates(int step, VertexSet& out) const {
    out.clear();
    const int pv = order[static_cast<std::size_t>(step)];
    bool constrained = false;
    for (int j = 0; j < step; ++j) {
      if (f.has_edge(pv, order[static_cast<std::size_t>(j)])) {
        const VertexSet& nb = g.neighbors(image[static_cast<std::size_t>(j)]);
        out = constrained ? (out & nb) : nb;
        constrained = true;
      }
    }
    if (!constrained) out = g.vertex_set();
    out = out.minus(used);
    return !out.empty();
  }

  bool extend(int step) {
    if (step == static_cast<int>(order.size())) return true;
    if (step == 0 && anchor0 >= 0) return try_vertex(step, anchor0);
    if (step == 1 && anchor1 >= 0) return try_vertex(step, anchor1);
    VertexSet cand;
    if (!candidates(step, cand)) return false;
    const int pv = order[static_cast<std::size_t>(step)];
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      if (g.degree(v) < f.degree(pv)) continue;
      if (try_vertex(step, v)) return true;
    }
    return false;
  }

  bool try_vertex(int step, int v) {
    if (used.test(v)) return false;
    // Adjacency to all previously mapped pattern neighbors.
    const int pv = order[static_cast<std::size_t>(step)];
    for (int j = 0; j < step; ++j) {
      if (f.has_edge(pv, order[static_cast<std::size_t>(j)]) &&
          !g.has_edge(image[static_cast<std::size_t>(j)], v)) {
        return false;
      }
    }
    image[static_cast<std::size_t>(step)] = v;
    used.set(v);
    if (extend(step + 1)) return true;
    used.reset(v);
    return false;
  }
};

std::optional<std::vector<int>> embed(const Graph& g, const Graph& f, int a0 = -1, int a1 = -1) {
  if (f.order() > g.order() || f.edge_count() > g.edge_count()) return std::nullopt;
  EmbedSearch s{g, f, pattern_order(f), std::vector<int>(static_cast<std::size_t>(f.order())), {}};
  s.anchor0 = a0;
  s.anchor1 = a1;
  if (!s.extend(0)) return std::nullopt;
  std::vector<int> map(static_cast<std::size_t>(f.order()));
  for (std::size_t i = 0; i < s.order.size(); ++i) {
    map[static_cast<std::size_t>(s.order[i])] = s.image[i];
  }
  return map;
}

// Gem fast path: G contains H_5 iff some hub h has a P_4 inside G[N(h)].
bool has_gem(const Graph& g) {
  for (int h = 0; h < g.order(); ++h) {
    if (g.degree(h) < 4) continue;
    const VertexSet nh = g.neighbors(h);
    for (int b = nh.first(); b >= 0; b = nh.next(b)) {
      VertexSet nb = g.neighbors(b) & nh;
      for (int c = nb.first(); c >= 0; c = nb.next(c)) {
        // Need a in N(b), d in N(c) inside N(h), {a,d} disjoint from {b,c}
        // and a != d.
        VertexSet left = (g.neighbors(b) & nh);
        left.reset(c);
        VertexSet right = (g.neighbors(c) & nh);
        right.reset(b);
        if (left.empty() || right.empty()) continue;
        if (left.count() == 1 && right.count() == 1 && left == right) continue;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

ForbiddenSpec ForbiddenSpec::make(Graph f) {
  if (f.order() > 8) throw std::invalid_argument("forbidden pattern order exceeds 8");
  if (f.has_isolated()) throw std::invalid_argument("forbidden pattern has isolated vertices");
  ForbiddenSpec spec{std::move(f)};
  // Recognize the gem directly: order 5, size 7, a degree-4 hub whose
  // neighborhood induces a path.
  const Graph& p = spec.pattern;
  if (p.order() == 5 && p.edge_count() == 7) {
    for (int h = 0; h < 5; ++h) {
      if (p.degree(h) != 4) continue;
      int deg2 = 0, deg3 = 0;
      for (int v = 0; v < 5; ++v) {
        if (v == h) continue;
        if (p.degree(v) == 2) ++deg2;
        if (p.degree(v) == 3) ++deg3;
      }
      spec.is_gem = (deg2 == 2 && deg3 == 2);
    }
  }
  return spec;
}

ForbiddenSpec ForbiddenSpec::gem() {
  return make(build_family({FamilyKind::Fan, {5}}));
}

bool contains_subgraph(const Graph& g, const ForbiddenSpec& f) {
  if (f.is_gem) return has_gem(g);
  return embed(g, f.pattern).has_value();
}

std::optional<std::vector<int>> find_embedding(const Graph& g, const ForbiddenSpec& f) {
  return embed(g, f.pattern);
}

bool ffree_after_edit(const Graph& g, const ForbiddenSpec& f,
                      const std::vector<std::pair<int, int>>& added_edges,
                      const std::vector<std::pair<int, int>>& removed_edges) {
  Graph base = g;
  for (auto [u, v] : removed_edges) base.remove_edge(u, v);
  if (contains_subgraph(base, f)) return false;  // deletions never create F
  if (added_edges.empty()) return true;
  Graph edited = base;
  for (auto [u, v] : added_edges) edited.add_edge(u, v);
  for (auto [u, v] : added_edges) {
    if (creates_pattern_through_edge(edited, f, u, v)) return false;
  }
  return true;
}

bool creates_pattern_through_edge(const Graph& edited, const ForbiddenSpec& f, int u, int v) {
  if (f.is_gem) {
    // A gem using edge (u,v) has its hub at u, at v, or at a common
    // neighbor of both.
    VertexSet hubs = edited.neighbors(u) & edited.neighbors(v);
    hubs.set(u);
    hubs.set(v);
    for (int h = hubs.first(); h >= 0; h = hubs.next(h)) {
      if (edited.degree(h) < 4) continue;
      const VertexSet nh = edited.neighbors(h);
      for (int b = nh.first(); b >= 0; b = nh.next(b)) {
        VertexSet nb = edited.neighbors(b) & nh;
        for (int c = nb.next(b); c >= 0; c = nb.next(c)) {
          VertexSet left = (edited.neighbors(b) & nh);
          left.reset(c);
          VertexSet right = (edited.neighbors(c) & nh);
          right.reset(b);
          if (left.empty() || right.empty()) continue;
          if (left.count() == 1 && right.count() == 1 && left == right) continue;
          return true;
        }
      }
    }
    return false;
  }
  const auto pedges = f.pattern.edges();
  const std::vector<int> base_order = pattern_order(f.pattern);
  for (auto [a, b] : pedges) {
    for (int flip = 0; flip < 2; ++flip) {
      EmbedSearch s{edited, f.pattern, {},
                    std::vector<int>(static_cast<std::size_t>(f.pattern.order())), {}};
      s.order.push_back(a);
      s.order.push_back(b);
      for (int w : base_order) {
        if (w != a && w != b) s.order.push_back(w);
      }
      s.anchor0 = flip ? v : u;
      s.anchor1 = flip ? u : v;
      if (s.extend(0)) return true;
    }
  }
  return false;
}

NeighborhoodDecomposition classify_neighborhood(const Graph& g, int u) {
  if (u < 0 || u >= g.order()) throw std::invalid_argument("vertex out of range");
  NeighborhoodDecomposition d;
  d.hub = u;
  const VertexSet nh = g.neighbors(u);
  d.w = g.vertex_set().minus(g.closed_neighborhood(u));

  // Components of G[N(u)] by BFS inside the mask.
  VertexSet seen;
  for (int s = nh.first(); s >= 0; s = nh.next(s)) {
    if (seen.test(s)) continue;
    VertexSet comp = VertexSet::single(s);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v = frontier.first(); v >= 0; v = frontier.next(v)) {
        next |= (g.neighbors(v) & nh);
      }
      frontier = next.minus(comp);
      comp |= frontier;
    }
    seen |= comp;

    NeighborhoodComponent nc;
    nc.vertices = comp;
    const int size = comp.count();
    int edges2 = 0, maxdeg = 0;
    for (int v = comp.first(); v >= 0; v = comp.next(v)) {
      const int dv = (g.neighbors(v) & comp).count();
      edges2 += dv;
      maxdeg = std::max(maxdeg, dv);
    }
    const int edges = edges2 / 2;
    if (size == 1) {
      nc.cls = ComponentClass::Singleton;
      d.n_zero |= comp;
    } else if (size == 3 && edges == 3) {
      nc.cls = ComponentClass::Triangle;
    } else if (edges == size - 1 && maxdeg == size - 1) {
      nc.cls = ComponentClass::Star;
      nc.star_leaves = size - 1;
    } else {
      nc.cls = ComponentClass::Other;
    }
    d.components.push_back(nc);
  }
  d.n_plus = nh.minus(d.n_zero);
  for (int v = d.n_zero.first(); v >= 0; v = d.n_zero.next(v)) {
    d.w_zero |= (g.neighbors(v) & d.w);
  }
  return d;
}

}  // namespace turan
