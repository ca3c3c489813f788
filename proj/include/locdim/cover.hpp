#pragma once

#include <optional>
#include <string>

#include "locdim/diffgraph.hpp"
#include "locdim/poset.hpp"
#include "locdim/realizer.hpp"

namespace locdim {

enum class MemberShape { Rect, Diff };

/* One cover member, embedded in a host bipartite graph.
 * Rect: complete bipartite rows x cols (both sorted ascending).
 * Diff: rows in nesting order (largest neighborhood first), cols in
 * neighborhood order; row rows[i] is adjacent to the first f[i] cols. */
struct CoverMember {
    MemberShape shape = MemberShape::Rect;
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<int> f; // Diff only

    std::vector<std::pair<int, int>> edge_list() const;

    static CoverMember rect(std::vector<int> rows, std::vector<int> cols);
};

struct CoverFamily {
    std::vector<CoverMember> members;
};

enum class CoverKind { Biclique, Difference };

enum class CoverViolationKind { Shape, UncoveredEdge, ForeignEdge };

struct CoverViolation {
    CoverViolationKind kind;
    int member_index = -1;
    std::pair<int, int> edge{0, 0};
    std::string detail;
    std::string describe() const;
};

struct CoverCheck {
    bool ok = false;
    std::vector<int> row_mult, col_mult; // index = vertex id
    int max_mult = 0;
    long total_vertices = 0; // sum of member vertex counts
    std::optional<CoverViolation> violation;
};

// Union of member edge sets must equal E(g) exactly; members must have
// their declared shape (under Biclique a Diff-shaped member passes only if
// complete). Multiplicities are reported on success.
CoverCheck verify_cover(const BipartiteGraph& g, const CoverFamily& f, CoverKind kind);

/* Critical pair graph of a height <= 2 poset: rows are the minimal
 * elements (isolated elements included), columns the maximal non-minimal
 * elements, both ascending by id; (a, b) is an edge when a || b. */
struct CriticalPairGraph {
    BipartiteGraph graph;
    std::vector<int> row_elements; // graph row index -> poset id
    std::vector<int> col_elements; // graph col index -> poset id
};

CriticalPairGraph critical_pair_graph(const Poset& p); // HeightError

// Height <= 2 poset on rows + cols elements: row u < col w exactly when
// (u, w) is NOT an edge. Rows keep ids 1..rows, col w becomes rows + w.
Poset poset_from_bipartite(const BipartiteGraph& g);

// The difference graph of a ple of a height <= 2 poset: edges are the
// critical pairs (a, b) the ple reverses (b before a). Nested by
// construction; may be empty. Embedded in critical_pair_graph(p).
CoverMember ple_to_difference_graph(const Poset& p, const Ple& l); // NotPleError

} // namespace locdim
