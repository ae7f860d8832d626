#ifndef TURAN_ENUMERATE_HPP
#define TURAN_ENUMERATE_HPP

#include <functional>
#include <string>
#include <vector>

#include "turan/canonical.hpp"
#include "turan/forbidden.hpp"
#include "turan/graph.hpp"

namespace turan {

/// One row of an extremal ranking.
struct ExtremalRecord {
  int m = 0;
  std::string forbidden;  // pattern id, e.g. "gem"
  int rank = 0;           // 1 = maximizer
  std::string graph6;
  double rho = 0.0;
  std::string method;  // exhaustive | construction-pool | local-search
  double margin = 0.0;  // gap to the next rank
  bool indistinguishable = false;
};

struct EnumerateOptions {
  bool connected_only = true;
  int resource_guard = 16;      // refuse m beyond this unless overridden
  bool override_guard = false;
  std::function<void(int level, std::size_t count)> on_level = nullptr;
};

/// All non-isomorphic F-free graphs with exactly m edges and no isolated
/// vertices (connected when connected_only), one canonical representative
/// per class, ordered by canonical form. Levelwise edge augmentation:
/// every such graph arises from one with m-1 edges by adding an edge, and
/// F-freeness is monotone under deletion, so pruning at every level is
/// lossless.
std::vector<Graph> enumerate_ffree(int m, const ForbiddenSpec& f, const EnumerateOptions& opts = {});

/// Ranks the enumerated graphs by spectral radius. Margins are gaps to
/// the next rank; a gap below `margin_tol` sets the indistinguishable
/// flag.
std::vector<ExtremalRecord> extremal_scan(int m, const ForbiddenSpec& f,
                                          const std::string& forbidden_id, int top_k,
                                          double margin_tol = 1e-9);

}  // namespace turan

#endif
