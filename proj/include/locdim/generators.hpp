#pragma once

#include "locdim/poset.hpp"

namespace locdim {

struct Generated {
    Poset poset;
    ElementMap map;
};

inline constexpr long kElementCap = 4096;

Generated chain(int n);
Generated antichain(int n);

// Minimal elements a_1..a_n (ids 1..n), maximal b_1..b_n (ids n+1..2n),
// a_i < b_j exactly when i != j.
Generated standard_example(int n);

// Subset lattice of {1..n} ordered by strict containment; id = bitmask + 1.
Generated boolean_lattice(int n);

// Two-layer subset poset: all s-subsets below all t-subsets they are
// contained in. Requires 0 <= s < t <= n.
Generated layers(int s, int t, int n);

// Split of P: elements x' (ids 1..n) and x'' (ids n+1..2n),
// x' < y'' exactly when x <= y in P. Height <= 2 by construction.
Generated split(const Poset& p);

// Componentwise product order on pairs; (x,q) id = (x-1)*|Q| + q.
// Throws SizeError when |P|*|Q| > cap.
Generated product(const Poset& p, const Poset& q, long cap = kElementCap);

} // namespace locdim
