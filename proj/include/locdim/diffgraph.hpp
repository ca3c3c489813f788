#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "locdim/errors.hpp"

namespace locdim {

/* Bipartite graph on row vertices 1..rows and column vertices 1..cols.
 * Edge lists are kept sorted lexicographic and duplicate-free. */
struct BipartiteGraph {
    int rows = 0, cols = 0;
    std::vector<std::pair<int, int>> edges;

    static BipartiteGraph make(int rows, int cols, std::vector<std::pair<int, int>> edges);

    bool has_edge(int u, int w) const;
    int row_degree(int u) const;
    int col_degree(int w) const;
    std::vector<int> row_neighborhood(int u) const; // sorted column ids
};

/* Difference graph H(a,b;f): rows 1..a, row i adjacent to columns
 * 1..f(i), f non-increasing and positive, b = f(1). The empty graph
 * (a = 0) is allowed and corresponds to the empty partition. */
struct DifferenceGraph {
    std::vector<int> f; // f[i-1] = f(i)

    int row_count() const { return static_cast<int>(f.size()); }
    int col_count() const { return f.empty() ? 0 : f[0]; }
    long edge_count() const;
};

// Rows sorted by degree are exactly the partition parts.
std::vector<int> to_partition(const DifferenceGraph& h);

// Throws PartitionError unless parts are positive and non-increasing.
DifferenceGraph from_partition(const std::vector<int>& parts);

// Conjugate shape: g(j) = #{i : f(i) >= j}. Same edge count.
DifferenceGraph transpose(const DifferenceGraph& h);

BipartiteGraph to_bipartite(const DifferenceGraph& h);

// Is the row-neighborhood family of g nested (so g is a difference graph
// after dropping isolated vertices)?
bool has_nested_neighborhoods(const BipartiteGraph& g);

// Exact p(m), checked 64-bit. Throws ParamError for m < 0 or m > 10^4 and
// OverflowError if the count exceeds 64 bits (near m = 417).
std::uint64_t count_partitions(int m);

// Seeded G(rows, cols, p): one unit-interval draw per pair in row-major
// order, edge when the draw is below p. mt19937_64 keeps this reproducible
// across platforms.
BipartiteGraph sample_bipartite(int rows, int cols, double p, std::uint64_t seed);

} // namespace locdim
