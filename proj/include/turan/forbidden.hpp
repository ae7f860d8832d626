#ifndef TURAN_FORBIDDEN_HPP
#define TURAN_FORBIDDEN_HPP

#include <optional>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// A forbidden subgraph pattern F of order at most 8, no isolated vertices.
/// "Subgraph" is non-induced throughout.
struct ForbiddenSpec {
  Graph pattern;

  static ForbiddenSpec make(Graph f);
  /// The gem H_5 = K_1 v P_4.
  static ForbiddenSpec gem();
  bool is_gem = false;  // enables the specialized detection fast path
};

/// True iff some injective vertex map sends E(f) into E(g).
bool contains_subgraph(const Graph& g, const ForbiddenSpec& f);

/// As above, also returning one witness embedding (pattern label -> host
/// vertex) when an embedding exists.
std::optional<std::vector<int>> find_embedding(const Graph& g, const ForbiddenSpec& f);

/// F-freeness of g after removing `removed_edges` and adding `added_edges`,
/// checked incrementally: deletions cannot create a copy of F, so only
/// embeddings through an added edge are searched. Agrees with the naive
/// recheck of the edited graph.
bool ffree_after_edit(const Graph& g, const ForbiddenSpec& f,
                      const std::vector<std::pair<int, int>>& added_edges,
                      const std::vector<std::pair<int, int>>& removed_edges);

/// True iff `edited` contains F through the edge (u, v). With an F-free
/// graph before the edit, this is the whole freeness recheck.
bool creates_pattern_through_edge(const Graph& edited, const ForbiddenSpec& f, int u, int v);

enum class ComponentClass { Triangle, Star, Singleton, Other };

struct NeighborhoodComponent {
  VertexSet vertices;
  ComponentClass cls;
  int star_leaves = 0;  // r for Star(r); 0 otherwise
};

/// The partition around a hub vertex: N(u) split into the isolated
/// vertices N0 of G[N(u)] and the rest N+, W = V \ N[u], and
/// W0 = union of N_W(x) over x in N0.
struct NeighborhoodDecomposition {
  int hub;
  VertexSet n_zero;
  VertexSet n_plus;
  VertexSet w;
  VertexSet w_zero;
  std::vector<NeighborhoodComponent> components;

  bool has_other() const {
    for (const auto& c : components) {
      if (c.cls == ComponentClass::Other) return true;
    }
    return false;
  }
};

/// Classifies each connected component of G[N(u)] as a triangle, a star
/// K_{1,r}, a singleton, or Other. Other is reported, never an error.
NeighborhoodDecomposition classify_neighborhood(const Graph& g, int u);

}  // namespace turan

#endif
