#include "locdim/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace locdim {

CoverFamily block_trace_cover(const BipartiteGraph& g, int b) {
    if (b < 0) throw ParamError("block size must be positive (0 selects the default)");
    CoverFamily out;
    if (g.edges.empty()) return out;
    int a = g.rows;
    if (b == 0) {
        double inner = std::log2(std::log2(double(std::max(a, 4))));
        b = std::max(1, int(std::floor(std::log2(double(a)) - 2.0 * inner)));
    }
    std::vector<std::vector<int>> colrows(static_cast<size_t>(g.cols) + 1);
    for (const auto& e : g.edges) colrows[e.second].push_back(e.first); // ascending
    for (int lo = 1; lo <= a; lo += b) {
        int hi = std::min(a, lo + b - 1);
        // columns sharing a neighborhood trace within the block; map order
        // keeps the output deterministic
        std::map<std::vector<int>, std::vector<int>> groups;
        for (int w = 1; w <= g.cols; ++w) {
            const std::vector<int>& rs = colrows[w];
            auto first = std::lower_bound(rs.begin(), rs.end(), lo);
            auto last = std::upper_bound(rs.begin(), rs.end(), hi);
            if (first != last) groups[std::vector<int>(first, last)].push_back(w);
        }
        for (const auto& kv : groups) out.members.push_back(CoverMember::rect(kv.first, kv.second));
    }
    return out;
}

LocalRealizer height2_local_realizer(const Poset& p) {
    CriticalPairGraph cpg = critical_pair_graph(p);
    const std::vector<int>& a = cpg.row_elements;
    const std::vector<int>& b = cpg.col_elements;

    Ple l1, l2;
    l1.order = a;
    l1.order.insert(l1.order.end(), b.begin(), b.end());
    l2.order.assign(a.rbegin(), a.rend());
    l2.order.insert(l2.order.end(), b.rbegin(), b.rend());

    LocalRealizer r;
    bool both = l2.order != l1.order; // l2 only reverses within-class pairs
    r.ples.push_back(std::move(l1));
    if (both) r.ples.push_back(std::move(l2));
    for (const CoverMember& m : block_trace_cover(cpg.graph).members) {
        Ple q; // reverses (b, a) for every critical pair of the member
        for (int w : m.cols) q.order.push_back(b[static_cast<size_t>(w) - 1]);
        for (int u : m.rows) q.order.push_back(a[static_cast<size_t>(u) - 1]);
        r.ples.push_back(std::move(q));
    }
    return r;
}

SplitBoundReport ldim_bound_via_split(const Poset& p, const SolveBudget& budget) {
    SplitBoundReport rep;
    rep.split = split(p);
    rep.q_realizer = height2_local_realizer(rep.split.poset);
    rep.mu_q = mu_stats(rep.q_realizer, rep.split.poset.size()).mu;
    rep.upper = 2 * rep.mu_q - 1;
    int limit = budget.max_elements > 0 ? budget.max_elements : 6;
    if (rep.split.poset.size() <= limit) {
        try {
            rep.ldim_q = exact_ldim(rep.split.poset, budget).value;
            rep.lower = std::max(1, rep.ldim_q - 2);
            rep.lower_exact = true;
        } catch (const NodeLimitError&) {
            // keep the trivial lower bound
        } catch (const SizeError&) {
            // ple pool too large for the split; same fallback
        }
    }
    return rep;
}

bool is_full_linear_extension(const Poset& p, const std::vector<int>& order) {
    int n = p.size();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int e : order) {
        if (e < 1 || e > n || seen[e]) return false;
        seen[e] = 1;
    }
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j)
            if (p.less(order[j], order[i])) return false;
    return true;
}

LocalRealizer product_realizer(const Poset& p, const Poset& q, const LocalRealizer& rp,
                               const LocalRealizer& rq, const std::vector<int>& l0,
                               const std::vector<int>& m0) {
    VerifyResult vp = verify_local_realizer(p, rp);
    if (!vp.ok)
        throw PreconditionError("realizer of the first factor: " + vp.violation->describe());
    VerifyResult vq = verify_local_realizer(q, rq);
    if (!vq.ok)
        throw PreconditionError("realizer of the second factor: " + vq.violation->describe());
    if (!is_full_linear_extension(p, l0))
        throw PreconditionError("l0 is not a full linear extension of the first factor");
    if (!is_full_linear_extension(q, m0))
        throw PreconditionError("m0 is not a full linear extension of the second factor");

    int nq = q.size();
    LocalRealizer out;
    // each ple of p spread over all of q, layer by layer
    for (const Ple& li : rp.ples) {
        Ple t;
        t.order.reserve(li.order.size() * m0.size());
        for (int x : li.order)
            for (int y : m0) t.order.push_back((x - 1) * nq + y);
        out.ples.push_back(std::move(t));
    }
    for (const Ple& mj : rq.ples) {
        Ple t;
        t.order.reserve(mj.order.size() * l0.size());
        for (int y : mj.order)
            for (int x : l0) t.order.push_back((x - 1) * nq + y);
        out.ples.push_back(std::move(t));
    }
    return out;
}

namespace {

void require_chain(const Poset& p, const std::vector<int>& c, const char* name) {
    for (int x : c)
        if (x < 1 || x > p.size())
            throw IdRangeError("chain element " + std::to_string(x) + " out of range");
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j)
            if (c[i] == c[j] || !p.comparable(c[i], c[j]))
                throw ChainError(std::string(name) + " is not a chain");
}

} // namespace

std::vector<int> bogart_extension(const Poset& p, const std::vector<int>& ca,
                                  const std::vector<int>& cb) {
    require_chain(p, ca, "ca");
    require_chain(p, cb, "cb");
    for (int x : ca)
        for (int z : cb)
            if (!p.incomparable(x, z))
                throw ChainError("ca and cb are not mutually incomparable");

    int n = p.size();
    std::vector<std::pair<int, int>> rel = p.relation_pairs();
    for (int x : ca)
        for (int z = 1; z <= n; ++z)
            if (p.incomparable(x, z)) rel.emplace_back(x, z);
    for (int y : cb)
        for (int z = 1; z <= n; ++z)
            if (p.incomparable(z, y)) rel.emplace_back(z, y);
    try {
        return Poset::from_relations(n, rel).topological_order();
    } catch (const CycleError&) {
        throw InternalCycleError("bogart extension: augmented order has a cycle");
    }
}

namespace {

Ple remap_ple(const Ple& src, const std::vector<int>& to_orig) {
    Ple t;
    t.order.reserve(src.order.size());
    for (int e : src.order) t.order.push_back(to_orig[e]);
    return t;
}

struct ReducedCheck {
    Poset::Induced sub;
    int mu = 0;
};

ReducedCheck check_reduced(const Poset& p, const std::vector<int>& removed,
                           const LocalRealizer& reduced) {
    std::vector<char> seen(static_cast<size_t>(p.size()) + 1, 0);
    for (int x : removed) {
        if (x < 1 || x > p.size())
            throw PreconditionError("removed element " + std::to_string(x) + " out of range");
        if (seen[x]) throw PreconditionError("removed elements are not distinct");
        seen[x] = 1;
    }
    if (static_cast<int>(removed.size()) >= p.size())
        throw PreconditionError("removal leaves no elements");
    ReducedCheck rc{p.remove(removed), 0};
    VerifyResult v = verify_local_realizer(rc.sub.poset, reduced);
    if (!v.ok)
        throw PreconditionError("reduced realizer does not verify: " + v.violation->describe());
    rc.mu = v.stats.mu;
    return rc;
}

bool is_minimal(const Poset& p, int x) {
    for (int w = 1; w <= p.size(); ++w)
        if (p.less(w, x)) return false;
    return true;
}

bool is_maximal(const Poset& p, int x) {
    for (int w = 1; w <= p.size(); ++w)
        if (p.less(x, w)) return false;
    return true;
}

// The reduced poset's least element is the anchor: every element of the
// reduced poset shares a ple with it (a co-occurrence or reversal
// requirement forces that), so wrapping exactly those ples in
// x < L_i < y re-covers all pairs through x and y from the inside.
std::vector<Ple> wrap_anchor(const LocalRealizer& reduced, const Poset::Induced& sub, int x,
                             int y) {
    std::vector<Ple> out;
    out.reserve(reduced.ples.size());
    for (const Ple& l : reduced.ples) {
        Ple t = remap_ple(l, sub.to_orig);
        if (l.contains(1)) {
            t.order.insert(t.order.begin(), x);
            t.order.push_back(y);
        }
        out.push_back(std::move(t));
    }
    return out;
}

// topological order of the induced subposet, in original ids
std::vector<int> induced_topo(const Poset& p, const std::vector<int>& elems) {
    if (elems.empty()) return {};
    Poset::Induced sub = p.induced(elems);
    std::vector<int> out;
    out.reserve(elems.size());
    for (int e : sub.poset.topological_order()) out.push_back(sub.to_orig[e]);
    return out;
}

} // namespace

RemovalResult two_chain_removal(const Poset& p, const std::vector<int>& c1,
                                const std::vector<int>& c2, const LocalRealizer& reduced) {
    auto chain_ok = [&p](const std::vector<int>& c) {
        for (int x : c)
            if (x < 1 || x > p.size()) return false;
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j)
                if (c[i] == c[j] || !p.comparable(c[i], c[j])) return false;
        return true;
    };
    if (!chain_ok(c1)) throw PreconditionError("c1 is not a chain of the poset");
    if (!chain_ok(c2)) throw PreconditionError("c2 is not a chain of the poset");
    for (int u : c1)
        for (int w : c2)
            if (!p.incomparable(u, w))
                throw PreconditionError("c1 and c2 are not mutually incomparable");

    std::vector<int> removed = c1;
    removed.insert(removed.end(), c2.begin(), c2.end());
    ReducedCheck rc = check_reduced(p, removed, reduced);

    RemovalResult res;
    res.removed = std::move(removed);
    res.mu_reduced = rc.mu;
    for (const Ple& l : reduced.ples) res.realizer.ples.push_back(remap_ple(l, rc.sub.to_orig));
    res.realizer.ples.push_back(Ple{bogart_extension(p, c1, c2)});
    res.realizer.ples.push_back(Ple{bogart_extension(p, c2, c1)});
    res.mu = mu_stats(res.realizer, p.size()).mu;
    return res;
}

RemovalResult one_chain_removal(const Poset& p, const std::vector<int>& c,
                                const LocalRealizer& reduced) {
    return two_chain_removal(p, c, {}, reduced);
}

RemovalResult minmax_pair_removal(const Poset& p, int x, int y, const LocalRealizer& reduced) {
    if (p.size() < 3) throw PreconditionError("poset needs at least 3 elements");
    if (x < 1 || x > p.size() || y < 1 || y > p.size())
        throw PreconditionError("pair out of range");
    if (!p.incomparable(x, y)) throw PreconditionError("x and y are not incomparable");
    if (!is_minimal(p, x)) throw PreconditionError("x is not minimal");
    if (!is_maximal(p, y)) throw PreconditionError("y is not maximal");

    ReducedCheck rc = check_reduced(p, {x, y}, reduced);
    RemovalResult res;
    res.removed = {x, y};
    res.mu_reduced = rc.mu;
    res.realizer.ples = wrap_anchor(reduced, rc.sub, x, y);
    // y leads and x trails its incomparables here; the wrapped ples cover
    // the two opposite directions
    res.realizer.ples.push_back(Ple{bogart_extension(p, {y}, {x})});
    res.mu = mu_stats(res.realizer, p.size()).mu;
    return res;
}

RemovalResult special_pair_removal(const Poset& p, int x, int y, const LocalRealizer& reduced) {
    if (p.size() < 3) throw PreconditionError("poset needs at least 3 elements");
    if (x < 1 || x > p.size() || y < 1 || y > p.size())
        throw PreconditionError("pair out of range");
    if (!p.less(x, y)) throw PreconditionError("x is not below y");
    if (!is_minimal(p, x)) throw PreconditionError("x is not minimal");
    if (!is_maximal(p, y)) throw PreconditionError("y is not maximal");
    std::vector<int> ix, iy;
    for (int w = 1; w <= p.size(); ++w) {
        bool wx = p.incomparable(w, x), wy = p.incomparable(w, y);
        if (wx && wy)
            throw PreconditionError("element " + std::to_string(w) +
                                    " is incomparable to both x and y");
        if (wx) ix.push_back(w);
        if (wy) iy.push_back(w);
    }

    ReducedCheck rc = check_reduced(p, {x, y}, reduced);
    RemovalResult res;
    res.removed = {x, y};
    res.mu_reduced = rc.mu;
    res.realizer.ples = wrap_anchor(reduced, rc.sub, x, y);
    Ple rx, ry; // I_x < x and y < I_y; I_x and I_y are disjoint, so each
                // element pays for at most one of them
    rx.order = induced_topo(p, ix);
    rx.order.push_back(x);
    ry.order.push_back(y);
    for (int e : induced_topo(p, iy)) ry.order.push_back(e);
    res.realizer.ples.push_back(std::move(rx));
    res.realizer.ples.push_back(std::move(ry));
    res.mu = mu_stats(res.realizer, p.size()).mu;
    return res;
}

namespace {

struct PairPick {
    int x = 0, y = 0;
    bool minmax = false; // incomparable pair vs comparable special pair
};

PairPick choose_height2_pair(const Poset& p) {
    std::vector<int> mins = p.minimal_elements();
    std::vector<int> maxs = p.maximal_elements();
    for (int a : mins)
        for (int b : maxs)
            if (p.incomparable(a, b)) return {a, b, true};
    // every minimal sits below every maximal; anything incomparable to the
    // pair's bottom would be a second maximal element comparable to it
    return {mins.front(), maxs.front(), false};
}

RemovalResult apply_pair(const Poset& p, const PairPick& pick, const LocalRealizer& reduced) {
    return pick.minmax ? minmax_pair_removal(p, pick.x, pick.y, reduced)
                       : special_pair_removal(p, pick.x, pick.y, reduced);
}

int ldim_element_limit(const SolveBudget& budget) {
    return std::max(4, budget.max_elements > 0 ? budget.max_elements : 6);
}

// least (a, b, c) with a < b < c in scan order; {0,0,0} when none
std::array<int, 3> least_three_chain(const Poset& p) {
    int n = p.size();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (!p.less(a, b)) continue;
            for (int c = 1; c <= n; ++c)
                if (p.less(b, c)) return {a, b, c};
        }
    return {0, 0, 0};
}

LocalRealizer realizer_within(const Poset& p, const SolveBudget& budget) {
    if (p.size() <= ldim_element_limit(budget)) return exact_ldim(p, budget).witness;
    if (p.height() <= 2) return removable_pair_height2(p, budget).removal.realizer;
    return removable_quadruple(p, budget).realizer;
}

} // namespace

PairRemovalReport removable_pair_height2(const Poset& p, const SolveBudget& budget) {
    if (p.height() > 2) throw HeightError("poset has height greater than 2");
    if (p.size() < 3) throw SizeError("removable pair needs at least 3 elements");

    int limit = ldim_element_limit(budget);
    PairRemovalReport rep;
    PairPick pick = choose_height2_pair(p);
    rep.x = pick.x;
    rep.y = pick.y;

    Poset::Induced red = p.remove({pick.x, pick.y});
    LocalRealizer reduced_r;
    int exact_reduced = -1;
    if (red.poset.size() <= limit) {
        LdimResult lr = exact_ldim(red.poset, budget);
        reduced_r = std::move(lr.witness);
        exact_reduced = lr.value;
    } else {
        reduced_r = removable_pair_height2(red.poset, budget).removal.realizer;
    }
    rep.removal = apply_pair(p, pick, reduced_r);

    if (exact_reduced >= 0 && p.size() <= limit) {
        try {
            rep.ldim_value = exact_ldim(p, budget).value;
            rep.ldim_reduced = exact_reduced;
            rep.certified = true;
        } catch (const NodeLimitError&) {
            // certificate abandoned, the construction stands on its own
        }
    }
    return rep;
}

QuadrupleReport removable_quadruple(const Poset& p, const SolveBudget& budget) {
    int n = p.size();
    if (n < 5) throw SizeError("removable quadruple needs at least 5 elements");
    QuadrupleReport rep;
    int h = p.height();

    if (h >= 4) {
        // least 4-chain: up[v] = longest chain upward from v
        std::vector<int> up(static_cast<size_t>(n) + 1, 1);
        std::vector<int> topo = p.topological_order();
        for (auto it = topo.rbegin(); it != topo.rend(); ++it)
            for (int w = 1; w <= n; ++w)
                if (p.less(*it, w)) up[*it] = std::max(up[*it], up[w] + 1);
        std::vector<int> chain;
        for (int need = 4; need >= 1; --need)
            for (int v = 1; v <= n; ++v)
                if (up[v] >= need && (chain.empty() || p.less(chain.back(), v))) {
                    chain.push_back(v);
                    break;
                }
        LocalRealizer rw = realizer_within(p.remove(chain).poset, budget);
        RemovalResult rr = one_chain_removal(p, chain, rw);
        std::copy(chain.begin(), chain.end(), rep.removed.begin());
        rep.realizer = std::move(rr.realizer);
        rep.mu = rr.mu;
        rep.mu_reduced = rr.mu_reduced;
        return rep;
    }

    if (h <= 2) {
        PairPick p1 = choose_height2_pair(p);
        Poset::Induced red1 = p.remove({p1.x, p1.y});
        PairPick p2 = choose_height2_pair(red1.poset);
        Poset::Induced red2 = red1.poset.remove({p2.x, p2.y});
        LocalRealizer w2 = realizer_within(red2.poset, budget);
        rep.mu_reduced = mu_stats(w2, red2.poset.size()).mu;
        RemovalResult mid = apply_pair(red1.poset, p2, w2);
        RemovalResult full = apply_pair(p, p1, mid.realizer);
        rep.removed = {p1.x, p1.y, red1.to_orig[p2.x], red1.to_orig[p2.y]};
        rep.realizer = std::move(full.realizer);
        rep.mu = full.mu;
        return rep;
    }

    // height exactly 3: hunt for a 3-chain with an element incomparable to
    // both of its ends (it is then automatically incomparable to the middle)
    std::array<int, 3> first_chain{};
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (!p.less(a, b)) continue;
            for (int c = 1; c <= n; ++c) {
                if (!p.less(b, c)) continue;
                if (!first_chain[0]) first_chain = {a, b, c};
                for (int z = 1; z <= n; ++z)
                    if (p.incomparable(z, a) && p.incomparable(z, c)) {
                        LocalRealizer rw = realizer_within(p.remove({a, b, c, z}).poset, budget);
                        RemovalResult rr = two_chain_removal(p, {a, b, c}, {z}, rw);
                        rep.removed = {a, b, c, z};
                        rep.realizer = std::move(rr.realizer);
                        rep.mu = rr.mu;
                        rep.mu_reduced = rr.mu_reduced;
                        return rep;
                    }
            }
        }

    // no such element anywhere: the ends of any maximum chain form a
    // special pair, twice over. Ends of a 3-chain are minimal and maximal
    // here, else the height would exceed 3.
    int a0 = first_chain[0], c0 = first_chain[2];
    Poset::Induced red1 = p.remove({a0, c0});
    PairPick p2;
    if (red1.poset.height() <= 2) {
        p2 = choose_height2_pair(red1.poset);
    } else {
        std::array<int, 3> ch1 = least_three_chain(red1.poset);
        p2 = {ch1[0], ch1[2], false}; // inherits the no-such-element property
    }
    Poset::Induced red2 = red1.poset.remove({p2.x, p2.y});
    LocalRealizer w2 = realizer_within(red2.poset, budget);
    rep.mu_reduced = mu_stats(w2, red2.poset.size()).mu;
    RemovalResult mid = apply_pair(red1.poset, p2, w2);
    RemovalResult full = special_pair_removal(p, a0, c0, mid.realizer);
    rep.removed = {a0, c0, red1.to_orig[p2.x], red1.to_orig[p2.y]};
    rep.realizer = std::move(full.realizer);
    rep.mu = full.mu;
    return rep;
}

namespace {

// rows i1..i2 all extend past column j0; one rectangle through the middle
// row, then the leftover top-right and bottom-left corners
void young_rec(CoverFamily& out, const DifferenceGraph& h, int i1, int i2, int j0) {
    int m = i2 - i1 + 1;
    int pvt = i1 + (m + 1) / 2 - 1;
    int fp = h.f[static_cast<size_t>(pvt) - 1];
    std::vector<int> rows, cols;
    for (int i = i1; i <= pvt; ++i) rows.push_back(i);
    for (int j = j0 + 1; j <= fp; ++j) cols.push_back(j);
    out.members.push_back(CoverMember::rect(std::move(rows), std::move(cols)));
    int t = i1 - 1; // rows above the pivot that stick out to the right
    while (t + 1 <= pvt && h.f[static_cast<size_t>(t)] > fp) ++t;
    if (t >= i1) young_rec(out, h, i1, t, fp);
    if (pvt + 1 <= i2) young_rec(out, h, pvt + 1, i2, j0);
}

} // namespace

CoverFamily young_cover(const DifferenceGraph& h) {
    if (h.row_count() == 0) throw ParamError("difference graph is empty");
    CoverFamily out;
    young_rec(out, h, 1, h.row_count(), 0);
    return out;
}

namespace {

void emit_rect_range(CoverFamily& out, int r1, int r2, int c1, int c2) {
    std::vector<int> rows, cols;
    for (int i = r1; i <= r2; ++i) rows.push_back(i);
    for (int j = c1; j <= c2; ++j) cols.push_back(j);
    out.members.push_back(CoverMember::rect(std::move(rows), std::move(cols)));
}

void stair_collight(CoverFamily& out, int m, int ro, int co);

/* Cover of the staircase H_m placed at offset (ro, co), light on the row
 * side: a slab through the top rows, a row-light copy on the leftover
 * top-right staircase and a column-light one below. collight mirrors it. */
void stair_rowlight(CoverFamily& out, int m, int ro, int co) {
    if (m <= 0) return;
    int h = std::max(1, m / 2);
    emit_rect_range(out, ro + 1, ro + h, co + 1, co + (m + 1 - h));
    stair_rowlight(out, h - 1, ro, co + (m + 1 - h));
    stair_collight(out, m - h, ro + h, co);
}

void stair_collight(CoverFamily& out, int m, int ro, int co) {
    if (m <= 0) return;
    int h = std::max(1, m / 2);
    emit_rect_range(out, ro + 1, ro + (m + 1 - h), co + 1, co + h);
    stair_collight(out, h - 1, ro + (m + 1 - h), co);
    stair_rowlight(out, m - h, ro, co + h);
}

CoverFamily transpose_rects(const CoverFamily& fam) {
    CoverFamily t;
    for (const CoverMember& m : fam.members) t.members.push_back(CoverMember::rect(m.cols, m.rows));
    return t;
}

void append_offset(CoverFamily& out, const CoverFamily& fam, int dr, int dc) {
    for (const CoverMember& m : fam.members) {
        std::vector<int> rows = m.rows, cols = m.cols;
        for (int& r : rows) r += dr;
        for (int& c : cols) c += dc;
        out.members.push_back(CoverMember::rect(std::move(rows), std::move(cols)));
    }
}

} // namespace

CoverFamily staircase_cover(int k) {
    if (k < 2) throw ParamError("staircase cover needs k >= 2");
    if (k > 16) throw SizeError("staircase cover capped at k = 16");
    CoverFamily out;
    if (k == 2) {
        stair_collight(out, 3, 0, 0);
        return out;
    }
    if (k == 3) {
        stair_rowlight(out, 7, 0, 0);
        return out;
    }
    int half = 1 << (k - 1); // n = 2 * half - 1
    CoverFamily sub = staircase_cover(k - 1);
    emit_rect_range(out, 1, half, 1, half);
    append_offset(out, sub, 0, half);            // rows shared with the square
    append_offset(out, transpose_rects(sub), half, 0); // columns shared
    return out;
}

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    cpp_int c = 1;
    for (int i = 0; i < r; ++i) {
        c *= n - i;
        c /= i + 1; // exact at every step
    }
    return c;
}

std::string rational_str(const cpp_rational& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

std::string BoundReport::render() const {
    std::ostringstream os;
    auto line = [&os](const char* key, const std::string& val) {
        os << std::left << std::setw(14) << key << val << '\n';
    };
    char buf[64];
    line("n", std::to_string(n));
    line("k", std::to_string(k));
    line("b", std::to_string(b));
    line("lhs", lhs);
    line("rhs", rhs);
    std::snprintf(buf, sizeof buf, "%.6g", implied_lower);
    line("implied_lower", buf);
    line("chain_holds", chain_holds ? "yes" : "no");
    std::snprintf(buf, sizeof buf, "%.6g", bound_value);
    line("bound_value", buf);
    return os.str();
}

BoundReport boolean_lb_report(int n) {
    if (n < 8) throw ParamError("bound report needs n >= 8");
    BoundReport rep;
    rep.n = n;
    rep.k = static_cast<int>(std::ceil(n / std::numbers::e));
    rep.b = static_cast<int>(std::ceil(2.0 * std::log(double(n))));

    cpp_rational lhs = cpp_rational(n, rep.b) * cpp_rational(binom(n - rep.b, rep.k - rep.b));
    cpp_rational rhs(binom(n, rep.k));
    rep.lhs = rational_str(lhs);
    rep.rhs = rational_str(rhs);
    rep.lhs_value = lhs.convert_to<double>();
    rep.rhs_value = rhs.convert_to<double>();
    rep.implied_lower = lhs == 0 ? std::numeric_limits<double>::infinity()
                                 : cpp_rational(rhs / lhs).convert_to<double>();

    // the per-factor inequality (n-i)/(k-i) >= n/k, multiplied out so a
    // zero binomial stays exact
    cpp_int chain_l = binom(n, rep.k) * boost::multiprecision::pow(cpp_int(rep.k), unsigned(rep.b));
    cpp_int chain_r =
        boost::multiprecision::pow(cpp_int(n), unsigned(rep.b)) * binom(n - rep.b, rep.k - rep.b);
    rep.chain_holds = chain_l >= chain_r;
    rep.bound_value = n / (2.0 * std::numbers::e * std::log(double(n)));
    return rep;
}

} // namespace locdim
