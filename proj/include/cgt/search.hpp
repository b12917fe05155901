#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgt/scaffold.hpp"

namespace cgt {

enum class SearchStatus {
  found,             // stopped because the solution quota was reached
  space_exhausted,   // the whole family was enumerated
  budget_exhausted,  // the time budget ran out first
};

struct SearchOptions {
  double budget_seconds = 0;   // 0 = no limit
  bool first_only = false;
  std::size_t max_solutions = 0;  // 0 = no limit
  unsigned long long node_cap_per_shape = 0;  // 0 = no cap; hitting the cap
                                              // counts as spent budget
  bool force_even_currents = false;  // diagnostic switch: restricts every free
                                     // slot to even elements
  bool progress = false;             // occasional notes on stderr
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::space_exhausted;
  std::vector<CurrentGraph> solutions;  // law-checked, one per +/- class
  unsigned long long shapes_enumerated = 0;
  unsigned long long shapes_searched = 0;  // survived the embedding filters
  unsigned long long nodes = 0;            // assignments explored
};

// Enumerates the scaffold's shape family, keeps shapes whose fixed embedding
// can satisfy the parity laws, and completes the free currents by
// backtracking with Kirchhoff propagation. Every emitted graph passes the
// full law suite for the scaffold's mode. Deterministic for fixed inputs.
SearchOutcome search(const Scaffold& sc, const SearchOptions& opt);

// Standalone pruning check for a partial current assignment on a fixed
// shape, as used inside the search: completed trivalent vertices must obey
// Kirchhoff's law, no current may repeat up to sign beyond the mode's cap,
// and no face log may repeat an element among its fully-assigned entries.
struct PruneVerdict {
  bool prune = false;
  std::string reason;
};
PruneVerdict prune_partial(const CurrentGraph& shape,
                           const std::vector<std::optional<GroupElement>>& currents,
                           Mode mode);

}  // namespace cgt
