#pragma once

#include <cstdint>

#include "locdim/poset.hpp"

namespace locdim {

// Minimal relation bitmask over all relabelings; bit i*n+j set when
// sigma(i+1) < sigma(j+1). Only defined for n <= 8 (fits one word).
std::uint64_t canonical_key(const Poset& p);

// Backtracking isomorphism test with degree-profile pruning. Intended for
// the small posets that appear in tests.
bool is_isomorphic(const Poset& a, const Poset& b);

// All posets on n elements up to isomorphism (n <= 6), enumerated from
// transitively closed upper-triangular relations and deduplicated by
// canonical key. Deterministic order: (relation count, canonical key).
std::vector<Poset> all_posets(int n);

} // namespace locdim
