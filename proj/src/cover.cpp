#include "locdim/cover.hpp"

#include <algorithm>
#include <set>

namespace locdim {

CoverMember CoverMember::rect(std::vector<int> rows, std::vector<int> cols) {
    CoverMember m;
    m.shape = MemberShape::Rect;
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    m.rows = std::move(rows);
    m.cols = std::move(cols);
    return m;
}

std::vector<std::pair<int, int>> CoverMember::edge_list() const {
    std::vector<std::pair<int, int>> out;
    if (shape == MemberShape::Rect) {
        for (int u : rows)
            for (int w : cols) out.emplace_back(u, w);
    } else {
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < f[i]; ++j) out.emplace_back(rows[i], cols[static_cast<size_t>(j)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string CoverViolation::describe() const {
    switch (kind) {
        case CoverViolationKind::Shape:
            return "member " + std::to_string(member_index + 1) + ": " + detail;
        case CoverViolationKind::ForeignEdge:
            return "member " + std::to_string(member_index + 1) + " uses edge (" +
                   std::to_string(edge.first) + "," + std::to_string(edge.second) +
                   ") absent from the host graph";
        case CoverViolationKind::UncoveredEdge:
            return "edge (" + std::to_string(edge.first) + "," + std::to_string(edge.second) +
                   ") is not covered";
    }
    return "";
}

namespace {

// empty string = fine; otherwise the shape complaint
std::string member_shape_problem(const BipartiteGraph& g, const CoverMember& m,
                                 CoverKind kind) {
    if (m.rows.empty() || m.cols.empty()) return "member has an empty side";
    for (int u : m.rows)
        if (u < 1 || u > g.rows) return "row " + std::to_string(u) + " out of range";
    for (int w : m.cols)
        if (w < 1 || w > g.cols) return "column " + std::to_string(w) + " out of range";
    {
        auto r = m.rows;
        auto c = m.cols;
        std::sort(r.begin(), r.end());
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(r.begin(), r.end()) != r.end()) return "duplicate row";
        if (std::adjacent_find(c.begin(), c.end()) != c.end()) return "duplicate column";
    }
    if (m.shape == MemberShape::Rect) {
        if (!m.f.empty()) return "rect member carries a neighborhood profile";
        return "";
    }
    // Diff shape: profile must describe nested prefixes of cols
    if (m.f.size() != m.rows.size()) return "profile length differs from row count";
    for (size_t i = 0; i < m.f.size(); ++i) {
        if (m.f[i] < 1) return "profile entries must be positive";
        if (m.f[i] > static_cast<int>(m.cols.size())) return "profile exceeds column count";
        if (i > 0 && m.f[i] > m.f[i - 1]) return "profile not non-increasing";
    }
    if (m.f[0] != static_cast<int>(m.cols.size()))
        return "first profile entry must use every column";
    if (kind == CoverKind::Biclique) {
        for (int fi : m.f)
            if (fi != static_cast<int>(m.cols.size()))
                return "difference-shaped member is not complete bipartite";
    }
    return "";
}

} // namespace

CoverCheck verify_cover(const BipartiteGraph& g, const CoverFamily& f, CoverKind kind) {
    CoverCheck res;
    res.row_mult.assign(static_cast<size_t>(g.rows) + 1, 0);
    res.col_mult.assign(static_cast<size_t>(g.cols) + 1, 0);

    std::set<std::pair<int, int>> covered;
    for (size_t mi = 0; mi < f.members.size(); ++mi) {
        const CoverMember& m = f.members[mi];
        std::string problem = member_shape_problem(g, m, kind);
        if (!problem.empty()) {
            res.violation = CoverViolation{CoverViolationKind::Shape,
                                           static_cast<int>(mi), {0, 0}, problem};
            return res;
        }
        for (auto e : m.edge_list()) {
            if (!g.has_edge(e.first, e.second)) {
                res.violation =
                    CoverViolation{CoverViolationKind::ForeignEdge, static_cast<int>(mi), e, ""};
                return res;
            }
            covered.insert(e);
        }
        for (int u : m.rows) ++res.row_mult[u];
        for (int w : m.cols) ++res.col_mult[w];
        res.total_vertices += static_cast<long>(m.rows.size() + m.cols.size());
    }
    for (auto& e : g.edges)
        if (!covered.count(e)) {
            res.violation = CoverViolation{CoverViolationKind::UncoveredEdge, -1, e, ""};
            return res;
        }
    for (int u = 1; u <= g.rows; ++u) res.max_mult = std::max(res.max_mult, res.row_mult[u]);
    for (int w = 1; w <= g.cols; ++w) res.max_mult = std::max(res.max_mult, res.col_mult[w]);
    res.ok = true;
    return res;
}

CriticalPairGraph critical_pair_graph(const Poset& p) {
    if (p.height() > 2) throw HeightError("critical pair graph needs height <= 2");
    CriticalPairGraph out;
    std::vector<int> to_row(static_cast<size_t>(p.size()) + 1, 0);
    std::vector<int> to_col(static_cast<size_t>(p.size()) + 1, 0);
    for (int x = 1; x <= p.size(); ++x) {
        bool minimal = true, maximal = true;
        for (int y = 1; y <= p.size(); ++y) {
            if (p.less(y, x)) minimal = false;
            if (p.less(x, y)) maximal = false;
        }
        if (minimal) { // isolated elements land here too
            out.row_elements.push_back(x);
            to_row[x] = static_cast<int>(out.row_elements.size());
        } else {
            (void)maximal; // height <= 2 forces maximal here
            out.col_elements.push_back(x);
            to_col[x] = static_cast<int>(out.col_elements.size());
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < out.row_elements.size(); ++i)
        for (size_t j = 0; j < out.col_elements.size(); ++j)
            if (p.incomparable(out.row_elements[i], out.col_elements[j]))
                edges.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    out.graph = BipartiteGraph::make(static_cast<int>(out.row_elements.size()),
                                     static_cast<int>(out.col_elements.size()),
                                     std::move(edges));
    return out;
}

Poset poset_from_bipartite(const BipartiteGraph& g) {
    if (g.rows + g.cols < 1) throw ParamError("empty graph");
    std::vector<std::pair<int, int>> rels;
    for (int u = 1; u <= g.rows; ++u)
        for (int w = 1; w <= g.cols; ++w)
            if (!g.has_edge(u, w)) rels.emplace_back(u, g.rows + w);
    return Poset::from_relations(g.rows + g.cols, rels);
}

CoverMember ple_to_difference_graph(const Poset& p, const Ple& l) {
    CriticalPairGraph cpg = critical_pair_graph(p);
    {
        LocalRealizer single;
        single.ples.push_back(l);
        VerifyResult vr = verify_local_realizer(p, single);
        if (vr.violation && vr.violation->kind == ViolationKind::NotAPle)
            throw NotPleError("input is not a ple of the poset");
    }
    std::vector<int> to_row(static_cast<size_t>(p.size()) + 1, 0);
    std::vector<int> to_col(static_cast<size_t>(p.size()) + 1, 0);
    for (size_t i = 0; i < cpg.row_elements.size(); ++i) to_row[cpg.row_elements[i]] = static_cast<int>(i) + 1;
    for (size_t j = 0; j < cpg.col_elements.size(); ++j) to_col[cpg.col_elements[j]] = static_cast<int>(j) + 1;

    // reversed critical pairs: column element strictly before row element
    std::set<std::pair<int, int>> edges;
    const std::vector<int>& ord = l.order;
    for (size_t i = 0; i < ord.size(); ++i)
        for (size_t j = i + 1; j < ord.size(); ++j) {
            int b = ord[i], a = ord[j];
            if (to_col[b] && to_row[a] && p.incomparable(a, b))
                edges.insert({to_row[a], to_col[b]});
        }

    CoverMember m;
    m.shape = MemberShape::Diff;
    if (edges.empty()) return m; // ple trims away entirely

    std::vector<std::pair<int, int>> row_deg, col_deg; // (-degree, id) for ordering
    {
        std::vector<int> rd(static_cast<size_t>(cpg.graph.rows) + 1, 0);
        std::vector<int> cd(static_cast<size_t>(cpg.graph.cols) + 1, 0);
        for (auto& e : edges) {
            ++rd[e.first];
            ++cd[e.second];
        }
        for (int u = 1; u <= cpg.graph.rows; ++u)
            if (rd[u]) row_deg.emplace_back(-rd[u], u);
        for (int w = 1; w <= cpg.graph.cols; ++w)
            if (cd[w]) col_deg.emplace_back(-cd[w], w);
        std::sort(row_deg.begin(), row_deg.end());
        std::sort(col_deg.begin(), col_deg.end());
    }
    for (auto& [negdeg, u] : row_deg) {
        m.rows.push_back(u);
        m.f.push_back(-negdeg);
    }
    for (auto& [negdeg, w] : col_deg) m.cols.push_back(w);

    // the reversed pairs of a ple always nest; check the embedding is exact
    for (size_t i = 0; i < m.rows.size(); ++i)
        for (int j = 0; j < m.f[i]; ++j)
            if (!edges.count({m.rows[i], m.cols[static_cast<size_t>(j)]}))
                throw Error("internal: reversed pairs failed to nest");
    return m;
}

} // namespace locdim
