#include "turan/transforms.hpp"

#include <stdexcept>

#include "turan/structure.hpp"

namespace turan {

void RotationMove::validate(const Graph& g) const {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || u == v) {
    throw std::invalid_argument("rotation: u, v must be distinct vertices");
  }
  if (moved.empty()) throw std::invalid_argument("rotation: moved set is empty");
  if (moved.test(u)) throw std::invalid_argument("rotation: moved set contains u");
  if (!moved.subset_of(g.neighbors(v))) {
    throw std::invalid_argument("rotation: moved set must lie in N(v)");
  }
  if (!(moved & g.neighbors(u)).empty()) {
    throw std::invalid_argument("rotation: moved set must avoid N(u)");
  }
}

Graph rotate_edges(const Graph& g, const RotationMove& move) {
  move.validate(g);
  Graph out = g;
  for (int x = move.moved.first(); x >= 0; x = move.moved.next(x)) {
    out.remove_edge(move.v, x);
    out.add_edge(move.u, x);
  }
  return out;
}

std::optional<Graph> reattach_end_block(const Graph& g, int u) {
  const StructureReport rep = structure(g);
  for (const Block& b : rep.blocks) {
    if (!b.is_end_block || b.vertices.test(u)) continue;
    const VertexSet cuts = b.vertices & rep.cut_vertices;
    if (cuts.count() != 1) continue;  // the whole component, nothing beyond it
    const int v = cuts.first();
    RotationMove move{u, v, b.vertices & g.neighbors(v)};
    return rotate_edges(g, move);
  }
  return std::nullopt;
}

Graph w_split(const Graph& g, int hub, int v, const std::vector<int>& w_list) {
  if (!g.has_edge(hub, v)) throw std::invalid_argument("w_split: hub and v must be adjacent");
  VertexSet leaves = g.neighbors(v);
  leaves.reset(hub);
  for (int w : w_list) {
    if (w == hub || w == v) throw std::invalid_argument("w_split: w coincides with hub or v");
    if (g.degree(w) < 2) throw std::invalid_argument("w_split: each w needs degree >= 2");
    if (!g.neighbors(w).subset_of(leaves)) {
      throw std::invalid_argument("w_split: N(w) must lie in N(v) \\ {hub}");
    }
  }
  Graph out = g;
  for (int w : w_list) {
    const int d = out.degree(w);
    for (int x = out.neighbors(w).first(); x >= 0; x = out.neighbors(w).first()) {
      out.remove_edge(w, x);
    }
    for (int j = 0; j < d / 2; ++j) {
      const int k = out.add_vertex();
      out.add_edge(k, hub);
      out.add_edge(k, v);
    }
    if (d % 2 == 1) {
      const int k = out.add_vertex();
      out.add_edge(k, hub);
    }
  }
  return out.without_isolated();
}

}  // namespace turan
