#include "locdim/diffgraph.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace locdim {

BipartiteGraph BipartiteGraph::make(int rows, int cols,
                                    std::vector<std::pair<int, int>> edges) {
    if (rows < 0 || cols < 0) throw ParamError("negative class size");
    for (auto [u, w] : edges)
        if (u < 1 || u > rows || w < 1 || w > cols)
            throw IdRangeError("edge (" + std::to_string(u) + "," + std::to_string(w) +
                               ") out of range");
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw ParamError("duplicate edge");
    return BipartiteGraph{rows, cols, std::move(edges)};
}

bool BipartiteGraph::has_edge(int u, int w) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, w));
}

int BipartiteGraph::row_degree(int u) const {
    int d = 0;
    for (auto& [a, b] : edges)
        if (a == u) ++d;
    return d;
}

int BipartiteGraph::col_degree(int w) const {
    int d = 0;
    for (auto& [a, b] : edges)
        if (b == w) ++d;
    return d;
}

std::vector<int> BipartiteGraph::row_neighborhood(int u) const {
    std::vector<int> out;
    for (auto& [a, b] : edges)
        if (a == u) out.push_back(b);
    return out;
}

long DifferenceGraph::edge_count() const {
    long m = 0;
    for (int fi : f) m += fi;
    return m;
}

std::vector<int> to_partition(const DifferenceGraph& h) {
    return h.f;
}

DifferenceGraph from_partition(const std::vector<int>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw PartitionError("parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw PartitionError("parts must be non-increasing");
    }
    return DifferenceGraph{parts};
}

DifferenceGraph transpose(const DifferenceGraph& h) {
    DifferenceGraph g;
    int b = h.col_count();
    for (int j = 1; j <= b; ++j) {
        int count = 0;
        for (int fi : h.f)
            if (fi >= j) ++count;
        g.f.push_back(count);
    }
    return g;
}

BipartiteGraph to_bipartite(const DifferenceGraph& h) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= h.row_count(); ++i)
        for (int j = 1; j <= h.f[i - 1]; ++j) edges.emplace_back(i, j);
    return BipartiteGraph::make(h.row_count(), h.col_count(), std::move(edges));
}

bool has_nested_neighborhoods(const BipartiteGraph& g) {
    std::vector<std::vector<int>> nb(static_cast<size_t>(g.rows) + 1);
    for (auto& [u, w] : g.edges) nb[u].push_back(w);
    for (int u = 1; u <= g.rows; ++u)
        for (int v = u + 1; v <= g.rows; ++v) {
            bool u_in_v = std::includes(nb[v].begin(), nb[v].end(), nb[u].begin(), nb[u].end());
            bool v_in_u = std::includes(nb[u].begin(), nb[u].end(), nb[v].begin(), nb[v].end());
            if (!u_in_v && !v_in_u) return false;
        }
    return true;
}

std::uint64_t count_partitions(int m) {
    if (m < 0 || m > 10000) throw ParamError("partition count limited to 0 <= m <= 10^4");
    // p(n, k): partitions of n into parts <= k, rolling on k
    std::vector<std::uint64_t> dp(static_cast<size_t>(m) + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= m; ++part)
        for (int total = part; total <= m; ++total) {
            std::uint64_t sum;
            if (__builtin_add_overflow(dp[total], dp[total - part], &sum))
                throw OverflowError("partition count exceeds 64 bits at m = " +
                                    std::to_string(m));
            dp[total] = sum;
        }
    return dp[m];
}

BipartiteGraph sample_bipartite(int rows, int cols, double p, std::uint64_t seed) {
    if (rows < 0 || cols < 0) throw ParamError("negative class size");
    if (!(p >= 0.0 && p <= 1.0)) throw ParamError("edge probability outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= rows; ++u)
        for (int w = 1; w <= cols; ++w) {
            double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < p) edges.emplace_back(u, w);
        }
    return BipartiteGraph::make(rows, cols, std::move(edges));
}

} // namespace locdim
