#ifndef TURAN_CANONICAL_HPP
#define TURAN_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Isomorphism-invariant adjacency encoding: equal forms iff the graphs
/// are isomorphic (validated against brute force for n <= 8).
struct CanonicalForm {
  std::string bytes;
  auto operator<=>(const CanonicalForm&) const = default;
};

/// Canonical form by equitable-refinement backtracking. Vertices that are
/// twins within a refinement cell (identical rows up to their mutual
/// edge) are branch-pruned, which collapses the leaf-heavy star-like
/// graphs this library lives on.
CanonicalForm canonical_form(const Graph& g);

/// The canonically relabeled graph itself (decodes to the same form).
Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& g, const Graph& h);

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const {
    return std::hash<std::string>{}(f.bytes);
  }
};

}  // namespace turan

#endif
