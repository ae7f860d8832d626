#ifndef TURAN_TRANSFORMS_HPP
#define TURAN_TRANSFORMS_HPP

#include <optional>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// A Kelmans-type rotation: every edge v-x with x in `moved` is replaced
/// by u-x. When x_u >= x_v in the Perron vector, the spectral radius
/// strictly increases; that condition lives with the caller, not here.
struct RotationMove {
  int u;            // target vertex
  int v;            // source vertex
  VertexSet moved;  // subset of N(v) \ N(u), u excluded

  void validate(const Graph& g) const;
};

/// Applies the rotation. Edge count is preserved.
Graph rotate_edges(const Graph& g, const RotationMove& move);

/// Moves the edges joining a cut vertex v to the rest of its end-block B
/// (with u outside B) over to u, making u a cut vertex. Returns nullopt
/// when no qualifying end-block exists.
std::optional<Graph> reattach_end_block(const Graph& g, int u);

/// Replaces each w_i (whose neighborhood must lie in N(v) \ {hub}, with
/// degree d_i >= 2) by floor(d_i/2) new vertices adjacent to both hub and
/// v, plus one hub-pendant when d_i is odd; isolated leftovers are
/// removed. Edge count is preserved: 2*floor(d_i/2) + (d_i mod 2) = d_i.
Graph w_split(const Graph& g, int hub, int v, const std::vector<int>& w_list);

}  // namespace turan

#endif
