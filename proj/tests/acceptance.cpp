// Acceptance gate: nine end-to-end checks, one pass/fail line each.
// --quick restricts the removal sweep (criterion 5) to five-element posets.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "locdim/constructions.hpp"
#include "locdim/cover.hpp"
#include "locdim/errors.hpp"
#include "locdim/generators.hpp"
#include "locdim/isomorphism.hpp"
#include "locdim/solvers.hpp"

using namespace locdim;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

SolveBudget elems(int n) {
    SolveBudget b;
    b.max_elements = n;
    return b;
}

Poset random_height2(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> rel;
    std::vector<char> low(static_cast<size_t>(n) + 1, 0);
    for (int x = 1; x <= n; ++x) low[x] = (rng() & 1) != 0;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            if (low[x] && !low[y] && coin(rng) < 0.4) rel.emplace_back(x, y);
    return Poset::from_relations(n, rel);
}

Poset random_poset(std::mt19937_64& rng, int n) {
    // edges only from smaller to larger id, so the relation is acyclic
    std::vector<std::pair<int, int>> rel;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            if (coin(rng) < 0.3) rel.emplace_back(x, y);
    return Poset::from_relations(n, rel);
}

// ---- criterion 1: the standard examples -------------------------------

bool crit1(bool, std::string& note) {
    bool ok = true;
    double worst = 0.0;
    for (int n : {3, 4}) {
        Poset p = standard_example(n).poset;
        auto t0 = Clock::now();
        DimResult r = exact_dim(p);
        double s = seconds_since(t0);
        worst = std::max(worst, s);
        ok = ok && r.value == n && static_cast<int>(r.witness.size()) == n &&
             verify_realizer(p, r.witness).ok && s < 10.0;
    }
    for (int n : {3, 4, 5}) {
        Poset p = standard_example(n).poset;
        auto t0 = Clock::now();
        LdimResult r = exact_ldim(p, elems(10));
        double s = seconds_since(t0);
        worst = std::max(worst, s);
        VerifyResult chk = verify_local_realizer(p, r.witness);
        ok = ok && r.value == 3 && chk.ok && chk.stats.mu == 3 && s < 10.0;
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "slowest solve %.1fs", worst);
    note = buf;
    return ok;
}

// ---- criterion 2: local dimension never exceeds dimension --------------

bool crit2(bool, std::string& note) {
    const int expect_classes[] = {1, 2, 5, 16, 63};
    bool ok = true;
    long checked = 0;
    for (int n = 1; n <= 5; ++n) {
        std::vector<Poset> classes = all_posets(n);
        ok = ok && static_cast<int>(classes.size()) == expect_classes[n - 1];
        for (const Poset& p : classes) {
            ok = ok && exact_ldim(p).value <= exact_dim(p).value;
            ++checked;
        }
    }
    note = std::to_string(checked) + " classes";
    return ok;
}

// ---- criterion 3: height-2 construction stays within the cover bound ---

bool crit3(bool, std::string& note) {
    auto t0 = Clock::now();
    std::mt19937_64 rng(20337);
    bool ok = true;
    for (int round = 0; round < 200; ++round) {
        int n = 2 + static_cast<int>(rng() % 199);
        Poset p = random_height2(rng, n);
        LocalRealizer r = height2_local_realizer(p);
        VerifyResult chk = verify_local_realizer(p, r);
        if (!chk.ok) {
            ok = false;
            continue;
        }
        CriticalPairGraph cg = critical_pair_graph(p);
        CoverFamily cov = block_trace_cover(cg.graph);
        CoverCheck cchk = verify_cover(cg.graph, cov, CoverKind::Biclique);
        ok = ok && cchk.ok && chk.stats.mu <= 2 + cchk.max_mult;

        long covered = 0;
        for (const CoverMember& m : cov.members)
            covered += static_cast<long>(m.edge_list().size());
        ok = ok && covered == static_cast<long>(cg.graph.edges.size());

        int a = cg.graph.rows;
        int b = 1;
        if (!cg.graph.edges.empty()) {
            double inner = std::log2(std::log2(double(std::max(a, 4))));
            b = std::max(1, int(std::floor(std::log2(double(a)) - 2.0 * inner)));
        }
        int col_cap = (a + b - 1) / b;
        int row_cap = 1 << (b - 1);
        for (int u = 1; u <= cg.graph.rows; ++u) ok = ok && cchk.row_mult[u] <= row_cap;
        for (int w = 1; w <= cg.graph.cols; ++w) ok = ok && cchk.col_mult[w] <= col_cap;
    }
    double s = seconds_since(t0);
    char buf[48];
    std::snprintf(buf, sizeof buf, "200 posets in %.1fs", s);
    note = buf;
    return ok && s < 30.0;
}

// ---- criterion 4: products add frequencies -----------------------------

bool crit4(bool, std::string& note) {
    auto t0 = Clock::now();
    std::mt19937_64 rng(40404);
    bool ok = true;
    for (int round = 0; round < 50; ++round) {
        int np = 2 + static_cast<int>(rng() % 4);
        int nq = 2 + static_cast<int>(rng() % 4);
        Poset p = random_poset(rng, np);
        Poset q = random_poset(rng, nq);
        LocalRealizer rp = exact_ldim(p).witness;
        LocalRealizer rq = exact_ldim(q).witness;
        LocalRealizer prod =
            product_realizer(p, q, rp, rq, p.topological_order(), q.topological_order());
        Generated g = product(p, q);
        VerifyResult chk = verify_local_realizer(g.poset, prod);
        if (!chk.ok) {
            ok = false;
            continue;
        }
        MuStats fp = mu_stats(rp, np);
        MuStats fq = mu_stats(rq, nq);
        MuStats fg = mu_stats(prod, g.poset.size());
        for (int x = 1; x <= np && ok; ++x)
            for (int y = 1; y <= nq && ok; ++y)
                ok = fg.freq[(x - 1) * nq + y] == fp.freq[x] + fq.freq[y];
    }

    // iterated chain square: mu n on 2^n elements
    Poset cube = chain(2).poset;
    LocalRealizer unit;
    unit.ples.push_back(Ple{{1, 2}});
    LocalRealizer cr = unit;
    for (int n = 2; n <= 6; ++n) {
        cr = product_realizer(cube, chain(2).poset, cr, unit, cube.topological_order(), {1, 2});
        cube = product(cube, chain(2).poset).poset;
        VerifyResult chk = verify_local_realizer(cube, cr);
        ok = ok && chk.ok && chk.stats.mu == n && cube.size() == (1 << n);
    }
    double s = seconds_since(t0);
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.1fs", s);
    note = buf;
    return ok && s < 30.0;
}

// ---- criterion 5: removal reductions with exact values -----------------

bool crit5(bool quick, std::string& note) {
    auto t0 = Clock::now();
    bool ok = true;
    long quads = 0, pairs = 0;

    for (int n = 5; n <= (quick ? 5 : 6); ++n) {
        for (const Poset& p : all_posets(n)) {
            QuadrupleReport rep = removable_quadruple(p, elems(10));
            VerifyResult chk = verify_local_realizer(p, rep.realizer);
            std::vector<int> gone(rep.removed.begin(), rep.removed.end());
            Poset reduced = p.remove(gone).poset;
            int lp = exact_ldim(p, elems(6)).value;
            int lr = reduced.size() == 0 ? 0 : exact_ldim(reduced, elems(6)).value;
            ok = ok && chk.ok && chk.stats.mu == rep.mu && lp <= lr + 2;
            ++quads;
        }
    }

    for (int n = 3; n <= (quick ? 5 : 6); ++n) {
        for (const Poset& p : all_posets(n)) {
            if (p.height() > 2) continue;
            PairRemovalReport rep = removable_pair_height2(p, elems(6));
            VerifyResult chk = verify_local_realizer(p, rep.removal.realizer);
            ok = ok && chk.ok && rep.certified && rep.ldim_value <= rep.ldim_reduced + 1;
            ++pairs;
        }
    }
    double s = seconds_since(t0);
    char buf[72];
    std::snprintf(buf, sizeof buf, "%ld quadruples, %ld pairs in %.1fs", quads, pairs, s);
    note = buf;
    return ok && s < 3600.0;
}

// ---- criterion 6: difference graphs biject with partitions -------------

void list_partitions(int m, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(m, cap); part >= 1; --part) {
        cur.push_back(part);
        list_partitions(m - part, part, cur, out);
        cur.pop_back();
    }
}

bool crit6(bool, std::string& note) {
    auto t0 = Clock::now();
    bool ok = true;
    for (int m = 1; m <= 12; ++m) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        list_partitions(m, m, cur, parts);
        std::set<std::tuple<int, int, std::vector<std::pair<int, int>>>> graphs;
        for (const auto& pr : parts) {
            BipartiteGraph g = to_bipartite(from_partition(pr));
            ok = ok && static_cast<int>(g.edges.size()) == m;
            graphs.insert({g.rows, g.cols, g.edges});
        }
        unsigned long long count = count_partitions(m);
        ok = ok && graphs.size() == parts.size() && count == parts.size();
        if (m == 5) ok = ok && count == 7;
        if (m == 12) ok = ok && count == 77;
    }
    double s = seconds_since(t0);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    note = buf;
    return ok && s < 5.0;
}

// ---- criterion 7: young covers and staircases --------------------------

bool crit7(bool, std::string& note) {
    auto t0 = Clock::now();
    bool ok = true;
    long tried = 0;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int row, int cap) -> void {
        if (!parts.empty()) {
            DifferenceGraph h = from_partition(parts);
            CoverFamily cov = young_cover(h);
            CoverCheck chk = verify_cover(to_bipartite(h), cov, CoverKind::Biclique);
            int m = h.row_count();
            ok = ok && chk.ok && chk.max_mult <= static_cast<int>(std::ceil(std::log2(m + 1)));
            ++tried;
        }
        if (row == 8) return;
        for (int part = cap; part >= 1; --part) {
            parts.push_back(part);
            self(self, row + 1, part);
            parts.pop_back();
        }
    };
    rec(rec, 0, 8);

    const int want[] = {2, 3, 3}; // exact multiplicities for k = 2, 3, 4
    for (int k = 2; k <= 4; ++k) {
        int rows = (1 << k) - 1;
        std::vector<int> stair(static_cast<size_t>(rows));
        for (int i = 0; i < rows; ++i) stair[static_cast<size_t>(i)] = rows - i;
        CoverFamily c = staircase_cover(k);
        CoverCheck chk = verify_cover(to_bipartite(from_partition(stair)), c, CoverKind::Biclique);
        ok = ok && chk.ok && chk.max_mult == want[k - 2] && chk.max_mult <= 3;
    }

    BipartiteGraph h3 = to_bipartite(from_partition({3, 2, 1}));
    ok = ok && exact_cover_number(h3, CoverObjective::BicliqueLocal).value == 2;

    double s = seconds_since(t0);
    char buf[48];
    std::snprintf(buf, sizeof buf, "%ld partitions in %.1fs", tried, s);
    note = buf;
    return ok && s < 60.0;
}

// ---- criterion 8: the cover-number sandwich ----------------------------

bool crit8(bool, std::string& note) {
    auto t0 = Clock::now();
    std::vector<BipartiteGraph> corpus = {
        BipartiteGraph::make(1, 1, {{1, 1}}),
        BipartiteGraph::make(2, 2, {}),
        BipartiteGraph::make(3, 3, {{1, 1}, {2, 2}, {3, 3}}),
        BipartiteGraph::make(2, 2, {{1, 1}, {1, 2}, {2, 2}}),
        BipartiteGraph::make(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}),
        BipartiteGraph::make(3, 3,
                             {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}}),
        to_bipartite(from_partition({3, 2, 1})),
        to_bipartite(from_partition({4, 3, 2, 1})),
        to_bipartite(from_partition({5, 1})),
        BipartiteGraph::make(4, 2, {{1, 1}, {2, 1}, {3, 2}, {4, 2}, {1, 2}}),
    };
    for (unsigned long seed = 1; seed <= 12; ++seed) {
        BipartiteGraph g = sample_bipartite(4, 4, 0.4, seed);
        if (g.edges.size() <= 10) corpus.push_back(g);
    }

    bool ok = true;
    for (const BipartiteGraph& g : corpus) {
        CoverResult lbc = exact_cover_number(g, CoverObjective::BicliqueLocal);
        CoverResult ldc = exact_cover_number(g, CoverObjective::DifferenceLocal);
        if (!g.edges.empty()) {
            CoverCheck cb = verify_cover(g, lbc.witness, CoverKind::Biclique);
            CoverCheck cd = verify_cover(g, ldc.witness, CoverKind::Difference);
            ok = ok && cb.ok && cb.max_mult == lbc.value && cd.ok && cd.max_mult == ldc.value;
        }
        int v = g.rows + g.cols;
        int cap = static_cast<int>(std::ceil(std::log2(v / 2.0 + 1.0)));
        ok = ok && ldc.value <= lbc.value && lbc.value <= ldc.value * cap;
    }
    double s = seconds_since(t0);
    char buf[48];
    std::snprintf(buf, sizeof buf, "%zu graphs in %.1fs", corpus.size(), s);
    note = buf;
    return ok && s < 300.0;
}

// ---- criterion 9: the binomial chain and the large bound ---------------

bool crit9(bool, std::string& note) {
    auto t0 = Clock::now();
    bool ok = true;
    for (int n = 8; n <= 256; ++n) ok = ok && boolean_lb_report(n).chain_holds;
    double bv = boolean_lb_report(1024).bound_value;
    ok = ok && std::fabs(bv - 27.2) <= 0.272;
    double s = seconds_since(t0);
    char buf[48];
    std::snprintf(buf, sizeof buf, "bound_value %.4f, %.1fs", bv, s);
    note = buf;
    return ok && s < 5.0;
}

} // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--quick") quick = true;

    struct Criterion {
        int id;
        const char* label;
        bool (*fn)(bool, std::string&);
    };
    const Criterion table[] = {
        {1, "standard examples: dim 3/4, local dimension 3, verified witnesses", crit1},
        {2, "local dimension never exceeds dimension (all classes, n <= 5)", crit2},
        {3, "height-2 realizers stay within the block-trace cover bound", crit3},
        {4, "product realizers add frequencies; hypercube reaches mu = n", crit4},
        {5, "removal reductions hold with exact values", crit5},
        {6, "difference graphs with m edges biject with partitions, m <= 12", crit6},
        {7, "young covers are logarithmic; staircase multiplicities exact", crit7},
        {8, "cover-number sandwich on the fixture corpus", crit8},
        {9, "binomial chain through n = 256; large bound on target", crit9},
    };

    int failures = 0;
    for (const Criterion& c : table) {
        bool ok = false;
        std::string detail;
        try {
            ok = c.fn(quick, detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %d: %s  %s", c.id, ok ? "PASS" : "FAIL", c.label);
        if (!detail.empty()) std::printf(" (%s)", detail.c_str());
        std::printf("\n");
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
