#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "locdim/cover.hpp"
#include "locdim/errors.hpp"
#include "locdim/generators.hpp"

using namespace locdim;

namespace {

CoverMember diff_member(std::vector<int> rows, std::vector<int> cols, std::vector<int> f) {
    CoverMember m;
    m.shape = MemberShape::Diff;
    m.rows = std::move(rows);
    m.cols = std::move(cols);
    m.f = std::move(f);
    return m;
}

// the staircase with rows 3, 2, 1
BipartiteGraph h3() { return to_bipartite(from_partition({3, 2, 1})); }

// hand cover of h3 with multiplicity 2: full first column, top-right pair, center
CoverFamily h3_cover() {
    CoverFamily c;
    c.members.push_back(CoverMember::rect({1, 2, 3}, {1}));
    c.members.push_back(CoverMember::rect({1}, {2, 3}));
    c.members.push_back(CoverMember::rect({2}, {2}));
    return c;
}

} // namespace

TEST_CASE("rect members enumerate the full grid") {
    CoverMember m = CoverMember::rect({2, 1}, {3, 1});
    CHECK(m.rows == std::vector<int>{1, 2}); // sorted by the factory
    CHECK(m.edge_list() ==
          std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {2, 1}, {2, 3}});
}

TEST_CASE("diff members follow the profile") {
    CoverMember m = diff_member({2, 1}, {3, 1}, {2, 1});
    // row 2 sees cols 3 and 1; row 1 sees col 3 only
    CHECK(m.edge_list() == std::vector<std::pair<int, int>>{{1, 3}, {2, 1}, {2, 3}});
}

TEST_CASE("a clean biclique cover verifies with its multiplicities") {
    CoverCheck res = verify_cover(h3(), h3_cover(), CoverKind::Biclique);
    REQUIRE(res.ok);
    CHECK(res.max_mult == 2);
    CHECK(res.row_mult == std::vector<int>{0, 2, 2, 1});
    CHECK(res.col_mult == std::vector<int>{0, 1, 2, 1});
    CHECK(res.total_vertices == 9);
}

TEST_CASE("the whole difference graph is a one-member difference cover") {
    CoverFamily c;
    c.members.push_back(diff_member({1, 2, 3}, {1, 2, 3}, {3, 2, 1}));
    CoverCheck res = verify_cover(h3(), c, CoverKind::Difference);
    REQUIRE(res.ok);
    CHECK(res.max_mult == 1);
    CHECK(res.total_vertices == 6);

    // the same member is not complete, so the biclique reading rejects it
    CoverCheck strict = verify_cover(h3(), c, CoverKind::Biclique);
    REQUIRE_FALSE(strict.ok);
    CHECK(strict.violation->kind == CoverViolationKind::Shape);

    // a complete diff-shaped member passes as a biclique
    CoverFamily square;
    square.members.push_back(diff_member({1, 2}, {1, 2}, {2, 2}));
    CoverCheck sq = verify_cover(BipartiteGraph::make(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}),
                                 square, CoverKind::Biclique);
    CHECK(sq.ok);
}

TEST_CASE("uncovered and foreign edges are flagged") {
    CoverFamily missing;
    missing.members.push_back(CoverMember::rect({1, 2, 3}, {1}));
    missing.members.push_back(CoverMember::rect({1}, {2, 3}));
    CoverCheck res = verify_cover(h3(), missing, CoverKind::Biclique);
    REQUIRE_FALSE(res.ok);
    CHECK(res.violation->kind == CoverViolationKind::UncoveredEdge);
    CHECK(res.violation->edge == std::pair<int, int>{2, 2});

    CoverFamily foreign = h3_cover();
    foreign.members.push_back(CoverMember::rect({3}, {3})); // (3,3) not in h3
    CoverCheck res2 = verify_cover(h3(), foreign, CoverKind::Biclique);
    REQUIRE_FALSE(res2.ok);
    CHECK(res2.violation->kind == CoverViolationKind::ForeignEdge);
    CHECK(res2.violation->edge == std::pair<int, int>{3, 3});
}

TEST_CASE("shape problems are caught before anything else") {
    BipartiteGraph g = h3();
    auto expect_shape = [&](CoverMember m, CoverKind kind = CoverKind::Difference) {
        CoverFamily c;
        c.members.push_back(std::move(m));
        CoverCheck res = verify_cover(g, c, kind);
        REQUIRE_FALSE(res.ok);
        CHECK(res.violation->kind == CoverViolationKind::Shape);
    };
    expect_shape(CoverMember::rect({}, {1}));          // empty side
    expect_shape(CoverMember::rect({4}, {1}));         // row out of range
    expect_shape(CoverMember::rect({1}, {4}));         // column out of range
    expect_shape(CoverMember::rect({1, 1}, {1}));      // duplicate row
    expect_shape(diff_member({1, 2}, {1, 2}, {2}));    // profile too short
    expect_shape(diff_member({1, 2}, {1, 2}, {1, 2})); // profile increasing
    expect_shape(diff_member({1, 2}, {1, 2}, {2, 0})); // nonpositive entry
    expect_shape(diff_member({1, 2}, {1, 2}, {1, 1})); // first entry must use all columns
    CoverMember rect_with_f = CoverMember::rect({1}, {1});
    rect_with_f.f = {1};
    expect_shape(std::move(rect_with_f));
}

TEST_CASE("empty cover of the empty graph is fine") {
    BipartiteGraph g = BipartiteGraph::make(2, 2, {});
    CoverCheck res = verify_cover(g, CoverFamily{}, CoverKind::Biclique);
    CHECK(res.ok);
    CHECK(res.max_mult == 0);
    CHECK(res.total_vertices == 0);
}

TEST_CASE("critical pair graph of the standard example") {
    Poset p = standard_example(3).poset;
    CriticalPairGraph cg = critical_pair_graph(p);
    CHECK(cg.row_elements == std::vector<int>{1, 2, 3});
    CHECK(cg.col_elements == std::vector<int>{4, 5, 6});
    CHECK(cg.graph.edges ==
          std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}}); // a_i vs b_i only
    CHECK_THROWS_AS(critical_pair_graph(chain(3).poset), HeightError);
}

TEST_CASE("isolated elements count as rows") {
    Poset p = Poset::from_relations(3, {{1, 2}}); // 3 isolated
    CriticalPairGraph cg = critical_pair_graph(p);
    CHECK(cg.row_elements == std::vector<int>{1, 3});
    CHECK(cg.col_elements == std::vector<int>{2});
    CHECK(cg.graph.edges == std::vector<std::pair<int, int>>{{2, 1}}); // 3 vs 2
}

TEST_CASE("poset_from_bipartite inverts the critical pair graph") {
    Poset s3 = standard_example(3).poset;
    Poset back = poset_from_bipartite(critical_pair_graph(s3).graph);
    CHECK(back.same_relation(s3)); // ids line up for the standard labeling

    BipartiteGraph g = BipartiteGraph::make(2, 2, {{1, 2}});
    Poset p = poset_from_bipartite(g);
    CHECK(p.less(1, 3));          // non-edges become relations
    CHECK(p.less(2, 3));
    CHECK(p.less(2, 4));
    CHECK(p.incomparable(1, 4));  // the edge stays incomparable
    CHECK(p.height() == 2);
}

TEST_CASE("a ple maps to the difference graph of the pairs it reverses") {
    Poset p = standard_example(3).poset;
    CoverMember m = ple_to_difference_graph(p, Ple{{4, 1}}); // b1 before a1
    CHECK(m.shape == MemberShape::Diff);
    CHECK(m.rows == std::vector<int>{1});
    CHECK(m.cols == std::vector<int>{1});
    CHECK(m.f == std::vector<int>{1});

    // the three reversing ples cover the whole critical pair graph once each
    CoverFamily c;
    for (int i = 1; i <= 3; ++i)
        c.members.push_back(ple_to_difference_graph(p, Ple{{3 + i, i}}));
    CoverCheck res = verify_cover(critical_pair_graph(p).graph, c, CoverKind::Difference);
    REQUIRE(res.ok);
    CHECK(res.max_mult == 1);

    // a ple reversing nothing gives an empty member
    CHECK(ple_to_difference_graph(p, Ple{{1, 4}}).rows.empty());
    // non-ples are rejected
    CHECK_THROWS_AS(ple_to_difference_graph(p, Ple{{4, 4}}), NotPleError);
}

TEST_CASE("nested reversals from one ple") {
    // height-2 fan: 1 minimal under both 3 and 4; 2 under 4 only
    Poset p = Poset::from_relations(4, {{1, 3}, {2, 3}, {2, 4}});
    // critical pairs: (1, 4) only? 1 || 4, 1 || 2 within class, 3 || 4 within class
    CriticalPairGraph cg = critical_pair_graph(p);
    CHECK(cg.row_elements == std::vector<int>{1, 2});
    CHECK(cg.col_elements == std::vector<int>{3, 4});
    CHECK(cg.graph.edges == std::vector<std::pair<int, int>>{{1, 2}});

    CoverMember m = ple_to_difference_graph(p, Ple{{4, 1}});
    CHECK(m.rows == std::vector<int>{1});
    CHECK(m.cols == std::vector<int>{2});
    CHECK(m.f == std::vector<int>{1});
}
