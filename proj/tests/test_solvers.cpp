#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "locdim/cover.hpp"
#include "locdim/errors.hpp"
#include "locdim/generators.hpp"
#include "locdim/isomorphism.hpp"
#include "locdim/solvers.hpp"

using namespace locdim;

namespace {

SolveBudget elems(int n) {
    SolveBudget b;
    b.max_elements = n;
    return b;
}

} // namespace

TEST_CASE("dimension of the basic families") {
    CHECK(exact_dim(chain(1).poset).value == 1);
    CHECK(exact_dim(chain(5).poset).value == 1);
    CHECK(exact_dim(antichain(2).poset).value == 2);
    CHECK(exact_dim(antichain(5).poset).value == 2);
    CHECK(exact_dim(standard_example(2).poset).value == 2);
    Poset diamond = Poset::from_relations(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
    CHECK(exact_dim(diamond).value == 2);
}

TEST_CASE("dimension witnesses re-verify at the reported size") {
    Poset p = standard_example(3).poset;
    DimResult res = exact_dim(p);
    CHECK(res.value == 3);
    CHECK(res.witness.size() == 3);
    CHECK(verify_realizer(p, res.witness).ok);
    CHECK(res.stats.nodes > 0);
}

TEST_CASE("dimension solver budgets") {
    CHECK_THROWS_AS(exact_dim(standard_example(5).poset, elems(9)), BudgetError);
    CHECK_THROWS_AS(exact_dim(antichain(11).poset, elems(11)), SizeError);
    SolveBudget tight = elems(6);
    tight.max_nodes = 1;
    CHECK_THROWS_AS(exact_dim(standard_example(3).poset, tight), NodeLimitError);
}

TEST_CASE("local dimension of the basic families") {
    CHECK(exact_ldim(chain(1).poset).value == 1);
    CHECK(exact_ldim(chain(4).poset).value == 1);
    CHECK(exact_ldim(antichain(2).poset).value == 2);
    CHECK(exact_ldim(antichain(5).poset).value == 2);
    Poset diamond = Poset::from_relations(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
    CHECK(exact_ldim(diamond).value == 2);
    CHECK(exact_ldim(standard_example(3).poset).value == 3);
}

TEST_CASE("local dimension witnesses re-verify at mu equal to the value") {
    Poset p = standard_example(3).poset;
    LdimResult res = exact_ldim(p);
    CHECK(res.value == 3);
    VerifyResult check = verify_local_realizer(p, res.witness);
    REQUIRE(check.ok);
    CHECK(check.stats.mu == res.value);
}

TEST_CASE("local dimension never exceeds dimension on four-element posets") {
    for (const Poset& p : all_posets(4)) {
        int d = exact_dim(p, elems(4)).value;
        int l = exact_ldim(p, elems(4)).value;
        CHECK(l <= d);
        CHECK(l >= 1);
    }
}

TEST_CASE("local dimension solver budgets") {
    CHECK_THROWS_AS(exact_ldim(standard_example(4).poset), BudgetError); // 8 over default 6
    CHECK_THROWS_AS(exact_ldim(antichain(15).poset, elems(15)), SizeError);
    // sparse posets overflow the ple pool long before the element cap
    CHECK_THROWS_AS(exact_ldim(antichain(10).poset, elems(10)), SizeError);
    SolveBudget tight = elems(10);
    tight.max_nodes = 100;
    CHECK_THROWS_AS(exact_ldim(standard_example(5).poset, tight), NodeLimitError);
}

TEST_CASE("solvers are deterministic") {
    Poset p = standard_example(3).poset;
    LdimResult a = exact_ldim(p);
    LdimResult b = exact_ldim(p);
    CHECK(a.value == b.value);
    CHECK(a.stats.nodes == b.stats.nodes);
    REQUIRE(a.witness.ples.size() == b.witness.ples.size());
    for (size_t i = 0; i < a.witness.ples.size(); ++i)
        CHECK(a.witness.ples[i].order == b.witness.ples[i].order);
}

TEST_CASE("cover numbers of the three-step staircase") {
    BipartiteGraph g = to_bipartite(from_partition({3, 2, 1}));

    CoverResult lbc = exact_cover_number(g, CoverObjective::BicliqueLocal);
    CHECK(lbc.value == 2);
    CoverCheck cb = verify_cover(g, lbc.witness, CoverKind::Biclique);
    REQUIRE(cb.ok);
    CHECK(cb.max_mult == 2);

    // the staircase is itself a difference graph
    CoverResult ldc = exact_cover_number(g, CoverObjective::DifferenceLocal);
    CHECK(ldc.value == 1);
    CHECK(verify_cover(g, ldc.witness, CoverKind::Difference).ok);

    // every one of the six vertices must appear at least once
    CoverResult tdc = exact_cover_number(g, CoverObjective::DifferenceTotal);
    CHECK(tdc.value == 6);
    CoverCheck cd = verify_cover(g, tdc.witness, CoverKind::Difference);
    REQUIRE(cd.ok);
    CHECK(cd.total_vertices == 6);
}

TEST_CASE("cover numbers of tiny graphs") {
    BipartiteGraph empty = BipartiteGraph::make(2, 2, {});
    CHECK(exact_cover_number(empty, CoverObjective::BicliqueLocal).value == 0);

    BipartiteGraph one = BipartiteGraph::make(1, 1, {{1, 1}});
    CHECK(exact_cover_number(one, CoverObjective::BicliqueLocal).value == 1);
    CHECK(exact_cover_number(one, CoverObjective::DifferenceTotal).value == 2);

    // vertex-disjoint members keep the matching at multiplicity 1
    BipartiteGraph m3 = BipartiteGraph::make(3, 3, {{1, 1}, {2, 2}, {3, 3}});
    CHECK(exact_cover_number(m3, CoverObjective::BicliqueLocal).value == 1);

    // the two-edge path needs two bicliques through its middle vertex
    BipartiteGraph p3 = BipartiteGraph::make(2, 2, {{1, 1}, {1, 2}, {2, 2}});
    CHECK(exact_cover_number(p3, CoverObjective::BicliqueLocal).value == 2);
    CHECK(exact_cover_number(p3, CoverObjective::DifferenceLocal).value == 1);

    BipartiteGraph k22 = BipartiteGraph::make(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
    CHECK(exact_cover_number(k22, CoverObjective::BicliqueLocal).value == 1);
}

TEST_CASE("difference covers never beat biclique covers") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        BipartiteGraph g = sample_bipartite(3, 4, 0.45, seed);
        if (g.edges.size() > 12) continue;
        int lbc = exact_cover_number(g, CoverObjective::BicliqueLocal).value;
        int ldc = exact_cover_number(g, CoverObjective::DifferenceLocal).value;
        CHECK(ldc <= lbc);
    }
}

TEST_CASE("cover solver budgets") {
    BipartiteGraph big = to_bipartite(from_partition({6, 5, 4, 3, 2, 1})); // 21 edges
    CHECK_THROWS_AS(exact_cover_number(big, CoverObjective::BicliqueLocal), BudgetError);

    SolveBudget wide;
    wide.max_edges = 23;
    BipartiteGraph huge = to_bipartite(from_partition({6, 6, 6, 5})); // 23 edges
    CHECK_THROWS_AS(exact_cover_number(huge, CoverObjective::BicliqueLocal, wide), SizeError);

    SolveBudget tight;
    tight.max_nodes = 1;
    BipartiteGraph g = to_bipartite(from_partition({3, 2, 1}));
    CHECK_THROWS_AS(exact_cover_number(g, CoverObjective::BicliqueLocal, tight),
                    NodeLimitError);
}
