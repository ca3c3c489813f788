#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "locdim/errors.hpp"
#include "locdim/generators.hpp"
#include "locdim/isomorphism.hpp"
#include "locdim/poset.hpp"

using namespace locdim;

namespace {

bool respects(const Poset& p, const std::vector<int>& order) {
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j)
            if (p.less(order[j], order[i])) return false;
    return true;
}

} // namespace

TEST_CASE("from_relations closes transitively") {
    Poset p = Poset::from_relations(4, {{1, 2}, {2, 3}});
    CHECK(p.less(1, 2));
    CHECK(p.less(2, 3));
    CHECK(p.less(1, 3)); // closure
    CHECK_FALSE(p.less(3, 1));
    CHECK_FALSE(p.less(1, 1));
    CHECK(p.comparable(1, 3));
    CHECK(p.incomparable(1, 4));
    CHECK(p.incomparable(4, 1));
}

TEST_CASE("from_relations rejects bad input") {
    CHECK_THROWS_AS(Poset::from_relations(2, {{1, 2}, {2, 1}}), CycleError);
    CHECK_THROWS_AS(Poset::from_relations(3, {{1, 2}, {2, 3}, {3, 1}}), CycleError);
    CHECK_THROWS_AS(Poset::from_relations(2, {{1, 3}}), IdRangeError);
    CHECK_THROWS_AS(Poset::from_relations(2, {{0, 1}}), IdRangeError);
}

TEST_CASE("relation and covering pairs") {
    Poset p = Poset::from_relations(3, {{1, 2}, {2, 3}});
    auto rel = p.relation_pairs();
    std::sort(rel.begin(), rel.end());
    CHECK(rel == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
    auto cov = p.covering_pairs();
    std::sort(cov.begin(), cov.end());
    CHECK(cov == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}); // 1 < 3 not a cover
}

TEST_CASE("height counts the longest chain") {
    CHECK(chain(4).poset.height() == 4);
    CHECK(antichain(3).poset.height() == 1);
    CHECK(standard_example(3).poset.height() == 2);
    Poset p = Poset::from_relations(5, {{1, 2}, {2, 3}, {4, 5}});
    CHECK(p.height() == 3);
}

TEST_CASE("minimal and maximal elements come back ascending") {
    Poset p = Poset::from_relations(5, {{3, 1}, {3, 2}, {4, 2}});
    CHECK(p.minimal_elements() == std::vector<int>{3, 4, 5});
    CHECK(p.maximal_elements() == std::vector<int>{1, 2, 5});
}

TEST_CASE("incomparable pairs of the two-element standard example") {
    Poset p = standard_example(2).poset; // a1 a2 | b1 b2, a_i < b_j iff i != j
    auto inc = p.incomparable_pairs();   // ordered: both directions listed
    std::sort(inc.begin(), inc.end());
    CHECK(inc == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 1}, {2, 4},
                                                  {3, 1}, {3, 4}, {4, 2}, {4, 3}});
}

TEST_CASE("topological order prefers the smallest available id") {
    Poset p = Poset::from_relations(3, {{2, 1}});
    CHECK(p.topological_order() == std::vector<int>{2, 1, 3});
    CHECK(chain(4).poset.topological_order() == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("linear extension enumeration") {
    CHECK(chain(3).poset.linear_extensions().size() == 1);
    CHECK(antichain(3).poset.linear_extensions().size() == 6);
    Poset diamond = Poset::from_relations(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
    auto les = diamond.linear_extensions();
    CHECK(les.size() == 2);
    for (const auto& le : les) {
        CHECK(le.size() == 4);
        CHECK(respects(diamond, le));
    }
    CHECK_THROWS_AS(chain(11).poset.linear_extensions(), SizeError);
    CHECK(chain(11).poset.linear_extensions(11).size() == 1);
}

TEST_CASE("induced subposet keeps the relation and the id maps") {
    Poset p = Poset::from_relations(4, {{1, 2}, {2, 3}, {1, 4}});
    Poset::Induced sub = p.induced({2, 3, 4});
    CHECK(sub.poset.size() == 3);
    CHECK(sub.to_orig[1] == 2);
    CHECK(sub.to_orig[2] == 3);
    CHECK(sub.to_orig[3] == 4);
    CHECK(sub.to_sub[2] == 1);
    CHECK(sub.poset.less(1, 2)); // 2 < 3 survives
    CHECK(sub.poset.incomparable(2, 3));

    Poset::Induced red = p.remove({1});
    CHECK(red.poset.same_relation(sub.poset));
    CHECK(red.to_orig == sub.to_orig);
}

TEST_CASE("generator shapes") {
    Generated c = chain(4);
    CHECK(c.poset.size() == 4);
    CHECK(c.poset.less(1, 4));

    Generated a = antichain(4);
    CHECK(a.poset.incomparable_pairs().size() == 12); // ordered pairs

    Generated s = standard_example(3); // a_i = 1..3, b_j = 4..6
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j)
                CHECK(s.poset.incomparable(i, 3 + j));
            else
                CHECK(s.poset.less(i, 3 + j));
        }

    Generated b = boolean_lattice(3); // id = subset mask + 1
    CHECK(b.poset.size() == 8);
    CHECK(b.poset.less(1, 8));         // {} < {1,2,3}
    CHECK(b.poset.less(2, 4));         // {1} < {1,2}
    CHECK(b.poset.incomparable(2, 5)); // {1} vs {3}
    CHECK(b.poset.height() == 4);
}

TEST_CASE("generators reject bad parameters") {
    CHECK_THROWS_AS(chain(0), ParamError);
    CHECK_THROWS_AS(antichain(-1), ParamError);
    CHECK_THROWS_AS(standard_example(0), ParamError);
    CHECK_THROWS_AS(boolean_lattice(13), ParamError); // 2^13 over the cap
    CHECK_THROWS_AS(layers(2, 2, 4), ParamError);
    CHECK_THROWS_AS(layers(-1, 1, 3), ParamError);
}

TEST_CASE("split doubles the poset into height two") {
    Generated sp = split(chain(2).poset); // 1', 2', 1'', 2''
    CHECK(sp.poset.size() == 4);
    CHECK(sp.poset.height() == 2);
    CHECK(sp.poset.less(1, 3));  // 1 <= 1
    CHECK(sp.poset.less(1, 4));  // 1 <= 2
    CHECK(sp.poset.less(2, 4));  // 2 <= 2
    CHECK(sp.poset.incomparable(2, 3));
    CHECK(sp.poset.incomparable(1, 2));
    CHECK(sp.poset.incomparable(3, 4));

    // splitting an antichain keeps only the x' < x'' edges
    Generated sa = split(antichain(3).poset);
    CHECK(sa.poset.relation_pairs().size() == 3);
}

TEST_CASE("product numbering and relation") {
    Generated pr = product(chain(2).poset, chain(3).poset); // (x,q) -> (x-1)*3+q
    CHECK(pr.poset.size() == 6);
    CHECK(pr.poset.less(1, 2));  // (1,1) < (1,2)
    CHECK(pr.poset.less(1, 4));  // (1,1) < (2,1)
    CHECK(pr.poset.less(3, 6));  // (1,3) < (2,3)
    CHECK(pr.poset.incomparable(3, 4)); // (1,3) vs (2,1)
}

TEST_CASE("layers matches the standard example") {
    for (int n = 3; n <= 6; ++n)
        CHECK(is_isomorphic(layers(1, n - 1, n).poset, standard_example(n).poset));
}

TEST_CASE("product is associative up to isomorphism on small instances") {
    Poset c2 = chain(2).poset;
    Poset c3 = chain(3).poset;
    Poset v = Poset::from_relations(3, {{1, 2}, {1, 3}});
    Poset left = product(product(c2, c3).poset, v).poset;
    Poset right = product(c2, product(c3, v).poset).poset;
    CHECK(is_isomorphic(left, right));
}

TEST_CASE("boolean lattice is an iterated product of two-chains") {
    Poset acc = chain(2).poset;
    for (int n = 2; n <= 4; ++n) {
        acc = product(acc, chain(2).poset).poset;
        CHECK(is_isomorphic(acc, boolean_lattice(n).poset));
    }
}

TEST_CASE("canonical key is a relabeling invariant") {
    Poset p = Poset::from_relations(4, {{1, 2}, {3, 4}});
    Poset q = Poset::from_relations(4, {{4, 1}, {2, 3}});
    CHECK(canonical_key(p) == canonical_key(q));
    CHECK(canonical_key(p) != canonical_key(chain(4).poset));
}

TEST_CASE("isomorphism test") {
    CHECK(is_isomorphic(standard_example(2).poset,
                        Poset::from_relations(4, {{1, 3}, {2, 4}}))); // relabeled 2+2 crown
    CHECK_FALSE(is_isomorphic(chain(3).poset, Poset::from_relations(3, {{1, 2}})));
    CHECK_FALSE(is_isomorphic(chain(3).poset, chain(4).poset));
}

TEST_CASE("poset enumeration hits the known class counts") {
    const int expected[] = {1, 2, 5, 16, 63};
    for (int n = 1; n <= 5; ++n) {
        auto all = all_posets(n);
        CHECK(all.size() == static_cast<size_t>(expected[n - 1]));
        std::set<std::uint64_t> keys;
        for (const Poset& p : all) {
            CHECK(p.size() == n);
            keys.insert(canonical_key(p));
        }
        CHECK(keys.size() == all.size()); // pairwise non-isomorphic
    }
    CHECK(all_posets(6).size() == 318);
    CHECK_THROWS_AS(all_posets(7), ParamError);
}
