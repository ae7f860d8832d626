#ifndef TURAN_SEARCH_HPP
#define TURAN_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "turan/canonical.hpp"
#include "turan/enumerate.hpp"
#include "turan/forbidden.hpp"

namespace turan {

/// Configuration of one local-search campaign. Identical configs (seed
/// included) give identical trajectories.
struct SearchConfig {
  int m = 0;
  ForbiddenSpec forbidden = ForbiddenSpec::gem();
  std::string forbidden_id = "gem";
  std::vector<CanonicalForm> excluded;  // graphs banned from being visited
  int restarts = 20;
  int max_steps = 2000;
  std::uint64_t seed = 1;
  double margin = 1e-9;
  double tol = 1e-12;
};

struct RestartResult {
  std::string graph6;
  double rho = 0.0;
  int steps = 0;
};

struct RunLog {
  SearchConfig config;
  std::vector<RestartResult> per_restart;
  ExtremalRecord best;
  double wall_seconds = 0.0;
};

/// Hill climbing over connected F-free graphs with exactly m edges,
/// guided by Perron-weighted edge rotations, with random single-edge
/// reattachments for diversification. Every accepted move strictly
/// increases rho by more than cfg.margin; a step with no improving move
/// ends the restart. Graphs isomorphic to an excluded form are never
/// visited.
RunLog local_search(const SearchConfig& cfg);

enum class CertifyMode { Exhaustive, Pool };

struct CertifyResult {
  int m = 0;
  CertifyMode mode;
  std::vector<ExtremalRecord> records;  // ranked
  bool pass = false;
  bool indistinguishable = false;
  std::string verdict;  // human-readable summary
};

/// Ranks the rho-maximizer and runner-up among gem-free graphs of odd
/// size m. Exhaustive mode enumerates (within the resource guard) and
/// checks rank 1 against S_{(m+3)/2,2} (and rank 2 against
/// S_{(m+5)/2,2}^2 when m >= 23). Pool mode ranks a construction pool
/// plus local-search bests plus one round of end-block reattachments;
/// its verdict is labeled pool evidence, not proof.
CertifyResult certify_theorem(int m, CertifyMode mode, const SearchConfig& search_cfg);

/// --- record store: append-only JSON lines -------------------------------

/// Appends records to the store. Re-running a certification upserts
/// logically: queries let the latest line win per (m, forbidden, rank,
/// method).
void append_records(const std::string& path, const std::vector<ExtremalRecord>& records);

struct RecordFilter {
  int m_min = 0, m_max = 1 << 30;
  int rank = 0;               // 0 = any
  std::string method;         // empty = any
};

/// Loads the store, skipping corrupt lines with a warning pushed to
/// `warnings` (never aborts), deduplicating by key with the last line
/// winning, and applying the filter. Results are ordered by (m, rank).
std::vector<ExtremalRecord> query_records(const std::string& path, const RecordFilter& filter,
                                          std::vector<std::string>* warnings = nullptr);

}  // namespace turan

#endif
