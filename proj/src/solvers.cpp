#include "locdim/solvers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <functional>
#include <utility>

namespace locdim {

namespace {

// widest poset the requirement bitsets below can hold
constexpr int kMaxN = 14;
// candidate counting cap for the fewest-candidates selection rule
constexpr int kSelectCap = 8;

struct Ticker {
    long long nodes = 0;
    long long max_nodes;
    long long max_ms;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Ticker(const SolveBudget& b) : max_nodes(b.max_nodes), max_ms(b.max_ms) {}

    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
    void tick() {
        ++nodes;
        if (max_nodes > 0 && nodes > max_nodes) throw NodeLimitError("search node limit exceeded");
        if (max_ms > 0 && (nodes & 1023) == 0 && elapsed_ms() > static_cast<double>(max_ms))
            throw NodeLimitError("search time limit exceeded");
    }
    SolveStats stats() const { return {nodes, elapsed_ms()}; }
};

// fixed-width bitset over requirement ids (enough for n*(n-1) <= 182)
struct ReqMask {
    std::array<std::uint64_t, 3> w{};

    void set(int i) { w[static_cast<size_t>(i) >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(int i) const { return (w[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u; }
    bool none() const { return !(w[0] | w[1] | w[2]); }
    ReqMask minus(const ReqMask& o) const {
        ReqMask r;
        for (int k = 0; k < 3; ++k) r.w[k] = w[k] & ~o.w[k];
        return r;
    }
    int overlap(const ReqMask& o) const {
        return std::popcount(w[0] & o.w[0]) + std::popcount(w[1] & o.w[1]) +
               std::popcount(w[2] & o.w[2]);
    }
};

template <class F>
void for_each_req(const ReqMask& m, F f) {
    for (int k = 0; k < 3; ++k) {
        std::uint64_t bits = m.w[k];
        while (bits) {
            f(k * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
}

int first_req(const ReqMask& m) {
    for (int k = 0; k < 3; ++k)
        if (m.w[k]) return k * 64 + std::countr_zero(m.w[k]);
    return -1;
}

// ground-set comparison: element masks read as ascending id sequences
bool ground_lex_less(std::uint32_t a, std::uint32_t b) {
    while (a && b) {
        int i = std::countr_zero(a), j = std::countr_zero(b);
        if (i != j) return i < j;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

} // namespace

DimResult exact_dim(const Poset& p, const SolveBudget& budget) {
    const int limit = budget.max_elements > 0 ? budget.max_elements : 8;
    const int n = p.size();
    if (n < 1) throw ParamError("empty poset");
    if (n > limit)
        throw BudgetError("poset has " + std::to_string(n) + " elements, budget allows " +
                          std::to_string(limit));
    if (n > 10) throw SizeError("exact_dim handles at most 10 elements");
    Ticker ticker(budget);
    DimResult res;

    const auto inc = p.incomparable_pairs();
    if (inc.empty()) { // a chain realizes itself
        res.value = 1;
        res.witness.push_back(Ple{p.topological_order()});
        res.stats = ticker.stats();
        return res;
    }

    const int R = static_cast<int>(inc.size());
    const auto les = p.linear_extensions(n);
    const int L = static_cast<int>(les.size());
    std::vector<ReqMask> cov(static_cast<size_t>(L));
    std::vector<std::vector<int>> postings(static_cast<size_t>(R));
    for (int i = 0; i < L; ++i) {
        std::array<int, kMaxN + 1> pos{};
        for (int k = 0; k < n; ++k) pos[static_cast<size_t>(les[static_cast<size_t>(i)][static_cast<size_t>(k)])] = k;
        for (int r = 0; r < R; ++r)
            if (pos[static_cast<size_t>(inc[static_cast<size_t>(r)].first)] <
                pos[static_cast<size_t>(inc[static_cast<size_t>(r)].second)]) {
                cov[static_cast<size_t>(i)].set(r);
                postings[static_cast<size_t>(r)].push_back(i);
            }
    }
    ReqMask full;
    for (int r = 0; r < R; ++r) full.set(r);

    // predecessor masks of the order itself, for the last-slot construction
    std::array<std::uint16_t, kMaxN + 1> ppred{};
    for (int y = 1; y <= n; ++y)
        for (int x = 1; x <= n; ++x)
            if (p.less(x, y)) ppred[static_cast<size_t>(y)] |= std::uint16_t(1) << (x - 1);

    std::vector<int> chosen;
    std::vector<int> tail;

    // Can one extension finish the job? The order plus the unmet pairs must
    // be acyclic; if so take the smallest-id-first topological order.
    auto close_with_one = [&](const ReqMask& unmet) -> bool {
        std::array<std::uint16_t, kMaxN + 1> pred = ppred;
        for_each_req(unmet, [&](int r) {
            pred[static_cast<size_t>(inc[static_cast<size_t>(r)].second)] |=
                std::uint16_t(1) << (inc[static_cast<size_t>(r)].first - 1);
        });
        std::uint16_t left = static_cast<std::uint16_t>((1u << n) - 1);
        tail.clear();
        for (int step = 0; step < n; ++step) {
            int pick = -1;
            for (int v = 1; v <= n; ++v)
                if ((left >> (v - 1)) & 1u) {
                    if ((pred[static_cast<size_t>(v)] & left) == 0) {
                        pick = v;
                        break;
                    }
                }
            if (pick < 0) return false;
            tail.push_back(pick);
            left &= static_cast<std::uint16_t>(~(1u << (pick - 1)));
        }
        return true;
    };

    std::function<bool(ReqMask, int)> dfs = [&](ReqMask unmet, int remaining) -> bool {
        ticker.tick();
        if (unmet.none()) return true;
        if (remaining <= 0) return false;
        if (remaining == 1) return close_with_one(unmet);

        int best = -1;
        size_t bestc = SIZE_MAX;
        for (int r = 0; r < R; ++r)
            if (unmet.test(r) && postings[static_cast<size_t>(r)].size() < bestc) {
                best = r;
                bestc = postings[static_cast<size_t>(r)].size();
            }
        std::vector<std::pair<int, int>> cand;
        cand.reserve(postings[static_cast<size_t>(best)].size());
        for (int i : postings[static_cast<size_t>(best)])
            cand.emplace_back(-cov[static_cast<size_t>(i)].overlap(unmet), i);
        std::sort(cand.begin(), cand.end());
        for (auto [negc, i] : cand) {
            chosen.push_back(i);
            if (dfs(unmet.minus(cov[static_cast<size_t>(i)]), remaining - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    for (int k = 2;; ++k) {
        chosen.clear();
        tail.clear();
        if (dfs(full, k)) {
            res.value = k;
            for (int i : chosen) res.witness.push_back(Ple{les[static_cast<size_t>(i)]});
            if (!tail.empty()) res.witness.push_back(Ple{tail});
            break;
        }
    }
    res.stats = ticker.stats();
    return res;
}

LdimResult exact_ldim(const Poset& p, const SolveBudget& budget) {
    const int limit = budget.max_elements > 0 ? budget.max_elements : 6;
    const int n = p.size();
    if (n < 1) throw ParamError("empty poset");
    if (n > limit)
        throw BudgetError("poset has " + std::to_string(n) + " elements, budget allows " +
                          std::to_string(limit));
    if (n > kMaxN) throw SizeError("exact_ldim handles at most 14 elements");
    Ticker ticker(budget);
    LdimResult res;

    if (n == 1) {
        res.value = 1;
        res.witness.ples.push_back(Ple{{1}});
        res.stats = ticker.stats();
        return res;
    }
    if (p.incomparable_pairs().empty()) {
        res.value = 1;
        res.witness.ples.push_back(Ple{p.topological_order()});
        res.stats = ticker.stats();
        return res;
    }

    // requirement (x, y): some chosen ple places x before y. That is needed
    // exactly when y < x fails: one direction per comparable pair (the
    // co-occurrence), both directions per incomparable pair.
    std::vector<std::pair<int, int>> reqs;
    std::vector<int> rid(static_cast<size_t>(n) * n, -1);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            if (x != y && !p.less(y, x)) {
                rid[static_cast<size_t>(x - 1) * n + (y - 1)] = static_cast<int>(reqs.size());
                reqs.emplace_back(x, y);
            }
    const int R = static_cast<int>(reqs.size());
    ReqMask full;
    for (int r = 0; r < R; ++r) full.set(r);

    // ple pool: every linear extension of every induced subposet on >= 2
    // elements, ordered lexicographically by (ground set, order)
    struct PoolPle {
        std::vector<int> order;
        std::uint32_t elems = 0;
        ReqMask cov;
    };
    std::vector<PoolPle> pool;
    std::vector<int> keep;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        if (std::popcount(mask) < 2) continue;
        keep.clear();
        for (int x = 1; x <= n; ++x)
            if ((mask >> (x - 1)) & 1u) keep.push_back(x);
        auto ind = p.induced(keep);
        for (auto& sub : ind.poset.linear_extensions(n)) {
            PoolPle q;
            q.elems = mask;
            q.order.reserve(sub.size());
            for (int s : sub) q.order.push_back(ind.to_orig[static_cast<size_t>(s)]);
            for (size_t i = 0; i < q.order.size(); ++i)
                for (size_t j = i + 1; j < q.order.size(); ++j)
                    q.cov.set(rid[static_cast<size_t>(q.order[i] - 1) * n + (q.order[j] - 1)]);
            pool.push_back(std::move(q));
            if (pool.size() > 2'000'000) throw SizeError("ple pool too large for exact search");
        }
    }
    std::sort(pool.begin(), pool.end(), [](const PoolPle& a, const PoolPle& b) {
        if (a.elems != b.elems) return ground_lex_less(a.elems, b.elems);
        return a.order < b.order;
    });
    std::vector<std::vector<int>> postings(static_cast<size_t>(R));
    for (size_t i = 0; i < pool.size(); ++i)
        for_each_req(pool[i].cov,
                     [&](int r) { postings[static_cast<size_t>(r)].push_back(static_cast<int>(i)); });

    // order masks for the forced-ple feasibility check
    std::array<std::uint32_t, kMaxN + 1> pdown{}; // pdown[y]: elements below y
    for (int y = 1; y <= n; ++y)
        for (int x = 1; x <= n; ++x)
            if (p.less(x, y)) pdown[static_cast<size_t>(y)] |= std::uint32_t(1) << (x - 1);

    std::vector<int> cap(static_cast<size_t>(n) + 1, 0);
    std::uint32_t saturated = 0;
    std::vector<int> chosen;
    std::vector<int> dsu(static_cast<size_t>(n) + 1, 0);

    auto find = [&](int x) {
        while (dsu[static_cast<size_t>(x)] != x) {
            dsu[static_cast<size_t>(x)] = dsu[static_cast<size_t>(dsu[static_cast<size_t>(x)])];
            x = dsu[static_cast<size_t>(x)];
        }
        return x;
    };

    /* An element at capacity 1 must pack all of its unmet requirements into
     * the one future ple that still may contain it; capacity-1 elements
     * linked by an unmet requirement therefore share that ple. If the
     * forced pair orders plus the poset restricted to the forced ground set
     * contain a cycle, no such ple exists and the branch is dead. */
    auto forced_ple_feasible = [&](const ReqMask& unmet) -> bool {
        bool any = false;
        for_each_req(unmet, [&](int r) {
            auto [x, y] = reqs[static_cast<size_t>(r)];
            if (cap[static_cast<size_t>(x)] == 1 || cap[static_cast<size_t>(y)] == 1) any = true;
        });
        if (!any) return true;
        for (int x = 1; x <= n; ++x) dsu[static_cast<size_t>(x)] = x;
        for_each_req(unmet, [&](int r) {
            auto [x, y] = reqs[static_cast<size_t>(r)];
            if (cap[static_cast<size_t>(x)] == 1 && cap[static_cast<size_t>(y)] == 1)
                dsu[static_cast<size_t>(find(x))] = find(y);
        });
        for (int root = 1; root <= n; ++root) {
            if (cap[static_cast<size_t>(root)] != 1 || find(root) != root) continue;
            std::uint32_t ground = 0;
            std::array<std::uint32_t, kMaxN + 1> rpred{}; // forced pair orders
            bool used = false;
            for_each_req(unmet, [&](int r) {
                auto [x, y] = reqs[static_cast<size_t>(r)];
                bool in = (cap[static_cast<size_t>(x)] == 1 && find(x) == root) ||
                          (cap[static_cast<size_t>(y)] == 1 && find(y) == root);
                if (!in) return;
                used = true;
                ground |= std::uint32_t(1) << (x - 1);
                ground |= std::uint32_t(1) << (y - 1);
                rpred[static_cast<size_t>(y)] |= std::uint32_t(1) << (x - 1);
            });
            if (!used) continue;
            std::uint32_t left = ground;
            while (left) {
                int pick = 0;
                std::uint32_t probe = left;
                while (probe) {
                    int v = std::countr_zero(probe) + 1;
                    if (((rpred[static_cast<size_t>(v)] | pdown[static_cast<size_t>(v)]) & left) ==
                        0) {
                        pick = v;
                        break;
                    }
                    probe &= probe - 1;
                }
                if (!pick) return false; // cycle: the forced ple cannot exist
                left &= ~(std::uint32_t(1) << (pick - 1));
            }
        }
        return true;
    };

    std::function<bool(ReqMask)> dfs = [&](ReqMask unmet) -> bool {
        ticker.tick();
        if (unmet.none()) return true;

        bool dead = false;
        for_each_req(unmet, [&](int r) {
            auto [x, y] = reqs[static_cast<size_t>(r)];
            if (cap[static_cast<size_t>(x)] == 0 || cap[static_cast<size_t>(y)] == 0) dead = true;
        });
        if (dead) return false;
        if (!forced_ple_feasible(unmet)) return false;

        // requirement with the fewest admissible candidates (counting
        // capped), ties to the smallest requirement id
        int best = -1;
        int bestc = kSelectCap;
        for_each_req(unmet, [&](int r) {
            if (bestc == 0) return;
            int cnt = 0;
            for (int i : postings[static_cast<size_t>(r)]) {
                if ((pool[static_cast<size_t>(i)].elems & saturated) == 0 && ++cnt >= bestc) break;
            }
            if (cnt < bestc) {
                bestc = cnt;
                best = r;
            }
        });
        if (bestc == 0) return false; // a requirement nothing admissible covers
        if (best == -1) best = first_req(unmet);

        std::vector<std::pair<int, int>> cand;
        for (int i : postings[static_cast<size_t>(best)])
            if ((pool[static_cast<size_t>(i)].elems & saturated) == 0)
                cand.emplace_back(-pool[static_cast<size_t>(i)].cov.overlap(unmet), i);
        std::sort(cand.begin(), cand.end());
        for (auto [negc, i] : cand) {
            chosen.push_back(i);
            std::uint32_t newly = 0;
            for (int x : pool[static_cast<size_t>(i)].order)
                if (--cap[static_cast<size_t>(x)] == 0) newly |= std::uint32_t(1) << (x - 1);
            saturated |= newly;
            if (dfs(unmet.minus(pool[static_cast<size_t>(i)].cov))) return true;
            saturated &= ~newly;
            for (int x : pool[static_cast<size_t>(i)].order) ++cap[static_cast<size_t>(x)];
            chosen.pop_back();
        }
        return false;
    };

    for (int target = 2; target <= n + 1; ++target) {
        for (int x = 1; x <= n; ++x) cap[static_cast<size_t>(x)] = target;
        saturated = 0;
        chosen.clear();
        if (dfs(full)) {
            res.value = target;
            for (int i : chosen) res.witness.ples.push_back(Ple{pool[static_cast<size_t>(i)].order});
            res.stats = ticker.stats();
            return res;
        }
    }
    throw Error("internal: local dimension search did not terminate");
}

CoverResult exact_cover_number(const BipartiteGraph& g, CoverObjective objective,
                               const SolveBudget& budget) {
    const int elimit = budget.max_edges > 0 ? budget.max_edges : 20;
    const int m = static_cast<int>(g.edges.size());
    if (m > elimit)
        throw BudgetError("graph has " + std::to_string(m) + " edges, budget allows " +
                          std::to_string(elimit));
    if (m > 22) throw SizeError("edge set too large for candidate enumeration");
    Ticker ticker(budget);
    CoverResult res;
    if (m == 0) {
        res.value = 0;
        res.stats = ticker.stats();
        return res;
    }

    const bool biclique = objective == CoverObjective::BicliqueLocal;
    const bool total = objective == CoverObjective::DifferenceTotal;

    // compress the vertex ids that actually carry edges
    std::vector<int> urows, ucols;
    for (auto& e : g.edges) {
        urows.push_back(e.first);
        ucols.push_back(e.second);
    }
    std::sort(urows.begin(), urows.end());
    urows.erase(std::unique(urows.begin(), urows.end()), urows.end());
    std::sort(ucols.begin(), ucols.end());
    ucols.erase(std::unique(ucols.begin(), ucols.end()), ucols.end());
    const int nr = static_cast<int>(urows.size());
    const int nc = static_cast<int>(ucols.size());
    std::vector<int> er(static_cast<size_t>(m)), ec(static_cast<size_t>(m));
    for (int e = 0; e < m; ++e) {
        er[static_cast<size_t>(e)] = static_cast<int>(
            std::lower_bound(urows.begin(), urows.end(), g.edges[static_cast<size_t>(e)].first) -
            urows.begin());
        ec[static_cast<size_t>(e)] = static_cast<int>(
            std::lower_bound(ucols.begin(), ucols.end(), g.edges[static_cast<size_t>(e)].second) -
            ucols.begin());
    }

    // eager candidate members: every edge subset forming a biclique
    // (objective lbc) or a nested-neighborhood subgraph (ldc, tdc)
    struct Cand {
        std::uint32_t mask, rmask, cmask;
        int vcount;
    };
    std::vector<Cand> cands;
    {
        std::array<std::uint32_t, 22> nb{};
        for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << m); ++mask) {
            std::uint32_t rmask = 0, cmask = 0;
            std::uint32_t bits = mask;
            while (bits) {
                int e = std::countr_zero(bits);
                bits &= bits - 1;
                nb[static_cast<size_t>(er[static_cast<size_t>(e)])] |=
                    std::uint32_t(1) << ec[static_cast<size_t>(e)];
                rmask |= std::uint32_t(1) << er[static_cast<size_t>(e)];
                cmask |= std::uint32_t(1) << ec[static_cast<size_t>(e)];
            }
            bool ok;
            if (biclique) {
                ok = std::popcount(mask) == std::popcount(rmask) * std::popcount(cmask);
            } else {
                ok = true;
                std::uint32_t rs = rmask;
                while (ok && rs) {
                    int a = std::countr_zero(rs);
                    rs &= rs - 1;
                    std::uint32_t rs2 = rs;
                    while (rs2) {
                        int b = std::countr_zero(rs2);
                        rs2 &= rs2 - 1;
                        std::uint32_t u = nb[static_cast<size_t>(a)] | nb[static_cast<size_t>(b)];
                        if (u != nb[static_cast<size_t>(a)] && u != nb[static_cast<size_t>(b)]) {
                            ok = false;
                            break;
                        }
                    }
                }
            }
            if (ok)
                cands.push_back(
                    {mask, rmask, cmask, std::popcount(rmask) + std::popcount(cmask)});
            bits = mask;
            while (bits) {
                int e = std::countr_zero(bits);
                bits &= bits - 1;
                nb[static_cast<size_t>(er[static_cast<size_t>(e)])] = 0;
            }
        }
    }
    std::vector<std::vector<int>> postings(static_cast<size_t>(m));
    for (size_t ci = 0; ci < cands.size(); ++ci) {
        std::uint32_t bits = cands[ci].mask;
        while (bits) {
            int e = std::countr_zero(bits);
            bits &= bits - 1;
            postings[static_cast<size_t>(e)].push_back(static_cast<int>(ci));
        }
    }

    std::vector<int> sdeg_r(static_cast<size_t>(nr), 0), sdeg_c(static_cast<size_t>(nc), 0);
    for (int e = 0; e < m; ++e) {
        ++sdeg_r[static_cast<size_t>(er[static_cast<size_t>(e)])];
        ++sdeg_c[static_cast<size_t>(ec[static_cast<size_t>(e)])];
    }

    // incumbent: one member per edge
    int incumbent;
    std::vector<int> best_chosen;
    {
        for (int e = 0; e < m; ++e) {
            std::uint32_t want = std::uint32_t(1) << e;
            auto it = std::lower_bound(cands.begin(), cands.end(), want,
                                       [](const Cand& c, std::uint32_t v) { return c.mask < v; });
            best_chosen.push_back(static_cast<int>(it - cands.begin()));
        }
        if (total)
            incumbent = 2 * m;
        else
            incumbent = std::max(*std::max_element(sdeg_r.begin(), sdeg_r.end()),
                                 *std::max_element(sdeg_c.begin(), sdeg_c.end()));
    }

    std::vector<int> rmult(static_cast<size_t>(nr), 0), cmult(static_cast<size_t>(nc), 0);
    std::uint32_t uncovered = (std::uint32_t(1) << m) - 1;
    int totalv = 0;
    std::vector<int> chosen;

    std::function<void()> search = [&]() {
        ticker.tick();
        if (uncovered == 0) {
            int val = 0;
            if (total) {
                val = totalv;
            } else {
                for (int v : rmult) val = std::max(val, v);
                for (int v : cmult) val = std::max(val, v);
            }
            if (val < incumbent) {
                incumbent = val;
                best_chosen = chosen;
            }
            return;
        }
        if (total) {
            if (totalv >= incumbent) return; // admissible remainder 0
        } else {
            std::uint32_t ur = 0, uc = 0;
            std::uint32_t bits = uncovered;
            while (bits) {
                int e = std::countr_zero(bits);
                bits &= bits - 1;
                ur |= std::uint32_t(1) << er[static_cast<size_t>(e)];
                uc |= std::uint32_t(1) << ec[static_cast<size_t>(e)];
            }
            for (int r = 0; r < nr; ++r)
                if (rmult[static_cast<size_t>(r)] + (((ur >> r) & 1u) ? 1 : 0) >= incumbent)
                    return;
            for (int c = 0; c < nc; ++c)
                if (cmult[static_cast<size_t>(c)] + (((uc >> c) & 1u) ? 1 : 0) >= incumbent)
                    return;
        }
        // branch edge: uncovered, largest static endpoint degree, then lex
        int ebest = -1, dbest = -1;
        std::uint32_t bits = uncovered;
        while (bits) {
            int e = std::countr_zero(bits);
            bits &= bits - 1;
            int d = std::max(sdeg_r[static_cast<size_t>(er[static_cast<size_t>(e)])],
                             sdeg_c[static_cast<size_t>(ec[static_cast<size_t>(e)])]);
            if (d > dbest) {
                dbest = d;
                ebest = e;
            }
        }
        std::vector<std::pair<int, int>> order;
        for (int ci : postings[static_cast<size_t>(ebest)])
            order.emplace_back(-std::popcount(cands[static_cast<size_t>(ci)].mask & uncovered),
                               ci);
        std::sort(order.begin(), order.end());
        for (auto [negc, ci] : order) {
            const Cand& c = cands[static_cast<size_t>(ci)];
            std::uint32_t was = uncovered;
            uncovered &= ~c.mask;
            totalv += c.vcount;
            std::uint32_t vb = c.rmask;
            while (vb) {
                int r = std::countr_zero(vb);
                vb &= vb - 1;
                ++rmult[static_cast<size_t>(r)];
            }
            vb = c.cmask;
            while (vb) {
                int cc = std::countr_zero(vb);
                vb &= vb - 1;
                ++cmult[static_cast<size_t>(cc)];
            }
            chosen.push_back(ci);
            search();
            chosen.pop_back();
            vb = c.rmask;
            while (vb) {
                int r = std::countr_zero(vb);
                vb &= vb - 1;
                --rmult[static_cast<size_t>(r)];
            }
            vb = c.cmask;
            while (vb) {
                int cc = std::countr_zero(vb);
                vb &= vb - 1;
                --cmult[static_cast<size_t>(cc)];
            }
            totalv -= c.vcount;
            uncovered = was;
        }
    };
    search();

    // materialize the winning family
    auto build_member = [&](std::uint32_t mask) -> CoverMember {
        std::vector<int> rows, cols;
        std::array<int, 22> rdeg{}, cdeg{};
        std::uint32_t bits = mask;
        while (bits) {
            int e = std::countr_zero(bits);
            bits &= bits - 1;
            ++rdeg[static_cast<size_t>(er[static_cast<size_t>(e)])];
            ++cdeg[static_cast<size_t>(ec[static_cast<size_t>(e)])];
        }
        if (biclique) {
            for (int r = 0; r < nr; ++r)
                if (rdeg[static_cast<size_t>(r)]) rows.push_back(urows[static_cast<size_t>(r)]);
            for (int c = 0; c < nc; ++c)
                if (cdeg[static_cast<size_t>(c)]) cols.push_back(ucols[static_cast<size_t>(c)]);
            return CoverMember::rect(std::move(rows), std::move(cols));
        }
        CoverMember dm;
        dm.shape = MemberShape::Diff;
        std::vector<std::pair<int, int>> ro, co; // (-degree, compressed id)
        for (int r = 0; r < nr; ++r)
            if (rdeg[static_cast<size_t>(r)]) ro.emplace_back(-rdeg[static_cast<size_t>(r)], r);
        for (int c = 0; c < nc; ++c)
            if (cdeg[static_cast<size_t>(c)]) co.emplace_back(-cdeg[static_cast<size_t>(c)], c);
        std::sort(ro.begin(), ro.end());
        std::sort(co.begin(), co.end());
        for (auto [nd, r] : ro) {
            dm.rows.push_back(urows[static_cast<size_t>(r)]);
            dm.f.push_back(-nd);
        }
        for (auto [nd, c] : co) dm.cols.push_back(ucols[static_cast<size_t>(c)]);
        return dm;
    };
    res.value = incumbent;
    for (int ci : best_chosen)
        res.witness.members.push_back(build_member(cands[static_cast<size_t>(ci)].mask));
    res.stats = ticker.stats();
    return res;
}

} // namespace locdim
