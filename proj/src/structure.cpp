#include "turan/structure.hpp"

#include <algorithm>

namespace turan {

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (int s = 0; s < g.order(); ++s) {
    if (seen.test(s)) continue;
    VertexSet comp = VertexSet::single(s);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v = frontier.first(); v >= 0; v = frontier.next(v)) {
        next |= g.neighbors(v);
      }
      frontier = next.minus(comp);
      comp |= frontier;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return components(g).size() == 1;
}

namespace {

struct BlockDfs {
  const Graph& g;
  std::vector<int> depth, low;
  std::vector<std::pair<int, int>> edge_stack;
  StructureReport& report;

  BlockDfs(const Graph& gr, StructureReport& rep)
      : g(gr), depth(static_cast<std::size_t>(gr.order()), -1),
        low(static_cast<std::size_t>(gr.order()), 0), report(rep) {}

  void pop_block(std::pair<int, int> until) {
    Block b;
    while (true) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      b.vertices.set(e.first);
      b.vertices.set(e.second);
      b.edges.push_back(e);
      if (e == until) break;
    }
    report.blocks.push_back(std::move(b));
  }

  void run(int root) {
    // Iterative DFS; children counted at the root for the root cut rule.
    struct Frame { int v, parent; int next = 0; };
    std::vector<Frame> stack;
    stack.push_back({root, -1});
    depth[root] = 0;
    low[root] = 0;
    int root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      int u = f.v;
      bool descended = false;
      for (int w = (f.next == 0 ? g.neighbors(u).first() : g.neighbors(u).next(f.next - 1));
           w >= 0; w = g.neighbors(u).next(w)) {
        f.next = w + 1;
        if (depth[w] < 0) {
          edge_stack.emplace_back(u, w);
          depth[w] = depth[u] + 1;
          low[w] = depth[w];
          if (u == root) ++root_children;
          stack.push_back({w, u});
          descended = true;
          break;
        }
        if (w != f.parent && depth[w] < depth[u]) {
          edge_stack.emplace_back(u, w);
          low[u] = std::min(low[u], depth[w]);
        }
      }
      if (descended) continue;
      stack.pop_back();
      if (!stack.empty()) {
        int p = stack.back().v;
        low[p] = std::min(low[p], low[u]);
        if (low[u] >= depth[p]) {
          pop_block({p, u});
          if (p != root) report.cut_vertices.set(p);
        }
      }
    }
    if (root_children >= 2) report.cut_vertices.set(root);
  }
};

}  // namespace

StructureReport structure(const Graph& g) {
  StructureReport rep;
  rep.is_connected = is_connected(g);
  BlockDfs dfs(g, rep);
  for (int v = 0; v < g.order(); ++v) {
    if (dfs.depth[static_cast<std::size_t>(v)] < 0 && g.degree(v) > 0) dfs.run(v);
  }
  for (Block& b : rep.blocks) {
    b.is_end_block = (b.vertices & rep.cut_vertices).count() <= 1;
  }
  return rep;
}

VertexSet second_neighborhood(const Graph& g, int u) {
  VertexSet out;
  for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v)) {
    out |= g.neighbors(v);
  }
  return out.minus(g.closed_neighborhood(u));
}

}  // namespace turan
