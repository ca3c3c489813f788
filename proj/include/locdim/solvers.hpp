#pragma once

#include <cstdint>
#include <vector>

#include "locdim/cover.hpp"
#include "locdim/diffgraph.hpp"
#include "locdim/poset.hpp"
#include "locdim/realizer.hpp"

namespace locdim {

/* Exact solvers. All of them are certificate-producing brute force at desk
 * scale; budgets are hard errors, never silent truncation. A zero field
 * means "solver default" for max_elements / max_edges and "unlimited" for
 * the node and time caps. */
struct SolveBudget {
    int max_elements = 0;      // dim defaults to 8, ldim to 6
    int max_edges = 0;         // cover solver defaults to 20
    long long max_nodes = 0;   // search nodes before NodeLimitError
    long long max_ms = 0;      // wall clock before NodeLimitError
};

struct SolveStats {
    long long nodes = 0;
    double millis = 0.0;
};

struct DimResult {
    int value = 0;
    std::vector<Ple> witness; // full linear extensions
    SolveStats stats;
};

struct LdimResult {
    int value = 0;
    LocalRealizer witness;
    SolveStats stats;
};

enum class CoverObjective {
    BicliqueLocal,    // lbc: bicliques, minimize max vertex multiplicity
    DifferenceLocal,  // ldc: difference subgraphs, same objective
    DifferenceTotal,  // tdc: difference subgraphs, minimize total vertex count
};

struct CoverResult {
    int value = 0;
    CoverFamily witness;
    SolveStats stats;
};

// Minimum realizer size. Enumerates every linear extension, then runs an
// iterative-deepening set cover over the ordered incomparable pairs.
DimResult exact_dim(const Poset& p, const SolveBudget& budget = {});

// Minimum mu over local realizers. Pool: every linear extension of every
// induced subposet with >= 2 elements. Iterative deepening on the target
// mu; depth-first over unmet requirements with per-element capacity caps.
LdimResult exact_ldim(const Poset& p, const SolveBudget& budget = {});

// Exact lbc / ldc / tdc by branch and bound over the (eagerly enumerated)
// candidate members: every subset of E(G) that forms a biclique resp. a
// nested-neighborhood subgraph.
CoverResult exact_cover_number(const BipartiteGraph& g, CoverObjective objective,
                               const SolveBudget& budget = {});

} // namespace locdim
