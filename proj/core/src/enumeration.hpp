#pragma once

#include <vector>

#include "smippc/code.hpp"

namespace smippc::detail {

// Shared parent-set machinery. Candidate codewords are confined to the
// members of the pattern; the subset scan runs over bitmasks of that
// candidate list, so the cap bounds the scan at 2^cap masks.

struct ParentScan {
  bool any = false;        // some subset of the candidates covers the pattern
  IndexSet intersection;   // meaningful when any
  IndexSet candidates;     // the pattern members scanned
};

/// Intersection of all covering subsets with at most max_size members
/// (max_size = 0 means unbounded). Throws cap_exceeded when the candidate
/// list outgrows the cap.
ParentScan scan_parents(const Code& code, const Pattern& r, unsigned max_size,
                        std::size_t cap);

/// Materializes every covering subset, ordered lexicographically by
/// increasing index sequence with prefixes first.
std::vector<IndexSet> covering_subsets(const Code& code, const Pattern& r,
                                       unsigned max_size, std::size_t cap);

}  // namespace smippc::detail
