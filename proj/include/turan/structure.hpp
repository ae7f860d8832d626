#ifndef TURAN_STRUCTURE_HPP
#define TURAN_STRUCTURE_HPP

#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// One block (maximal 2-connected subgraph, or a bridge/K_2) of a graph.
struct Block {
  VertexSet vertices;
  std::vector<std::pair<int, int>> edges;
  bool is_end_block = false;  // contains at most one cut vertex
};

struct StructureReport {
  bool is_connected = false;
  VertexSet cut_vertices;
  std::vector<Block> blocks;
};

bool is_connected(const Graph& g);

/// Connected components as vertex sets.
std::vector<VertexSet> components(const Graph& g);

/// Block decomposition (Tarjan lowpoint DFS). Blocks partition the edge
/// set; an isolated vertex belongs to no block.
StructureReport structure(const Graph& g);

/// N^2(u): vertices at distance exactly two from u.
VertexSet second_neighborhood(const Graph& g, int u);

}  // namespace turan

#endif
