#ifndef TURAN_FAMILIES_HPP
#define TURAN_FAMILIES_HPP

#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

enum class FamilyKind {
  Path,              // P_n, params {n}
  Cycle,             // C_n, params {n}
  Star,              // K_{1,n-1}, params {n}
  CompleteBipartite, // K_{a,b}, params {a, b}
  Complete,          // K_n, params {n}
  Snk,               // K_k joined to n-k isolated vertices, params {n, k}
  SnkT,              // S_{n-t,k} plus t pendants at the max-degree vertex, params {n, k, t}
  SnK,               // star K_{1,n-1} plus k disjoint edges among leaves, params {n, k}
  Fan,               // H_n = K_1 v P_{n-1}, params {n}
  SubdividedK2t,     // K_{2,t} with one edge subdivided, params {t}
  JoinCliqueEmpty,   // K_k v qK_1, params {k, q}
};

/// Parametric description of a named construction.
struct FamilySpec {
  FamilyKind kind;
  std::vector<int> params;
};

const char* family_kind_name(FamilyKind kind);

/// Builds the named graph with the documented labeling: clique (or hub)
/// vertices first, then the independent part, then pendants. Invalid
/// parameters are rejected with a message naming the violated bound.
Graph build_family(const FamilySpec& spec);

/// Parses "snk(13,2)", "fan(5)", "path(4)", ... (case-insensitive kind).
FamilySpec parse_family(const std::string& text);

/// G v H: disjoint union plus all cross edges.
Graph join(const Graph& g, const Graph& h);

/// G u H on disjoint labels; h's vertices are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace turan

#endif
