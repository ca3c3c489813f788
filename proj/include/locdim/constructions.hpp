#pragma once

#include <array>
#include <string>
#include <vector>

#include "locdim/cover.hpp"
#include "locdim/diffgraph.hpp"
#include "locdim/generators.hpp"
#include "locdim/poset.hpp"
#include "locdim/realizer.hpp"
#include "locdim/solvers.hpp"

namespace locdim {

/* Constructive upper bounds: every function here emits a witness that the
 * verifiers in realizer.hpp / cover.hpp can check after the fact. */

// Edge partition of g into bicliques. Rows are cut into consecutive blocks
// of at most b; within a block, the columns sharing a neighborhood trace
// form one member together with that trace. b = 0 picks the default
// max(1, floor(log2 a - 2 log2 log2 max(a,4))) for a = g.rows. Each column
// lands in at most ceil(a/b) members, each row in at most 2^(b-1).
CoverFamily block_trace_cover(const BipartiteGraph& g, int b = 0);

// Local realizer of a height <= 2 poset: two full extensions with block
// structure A < B (A = minimal elements, orders mutually reversed) plus
// one ple B_i < A_i per member of the block-trace cover of the critical
// pair graph. mu <= 2 + max cover multiplicity.
LocalRealizer height2_local_realizer(const Poset& p); // HeightError

struct SplitBoundReport {
    Generated split;          // the split Q of p, with labels x', x''
    LocalRealizer q_realizer; // height-2 realizer of Q
    int mu_q = 0;
    int upper = 0;            // ldim(p) <= 2 ldim(Q) - 1 <= 2 mu_q - 1
    int lower = 1;            // ldim(p) >= ldim(Q) - 2; trivial 1 unless exact
    bool lower_exact = false; // ldim(Q) was solved exactly within budget
    int ldim_q = 0;           // set when lower_exact
};

// Sandwich bounds on ldim(p) through the split poset. The achieved mu_q
// certifies only the upper direction; the lower one needs the exact
// ldim(Q), attempted when the split fits the solver budget. No realizer
// of p itself is constructed.
SplitBoundReport ldim_bound_via_split(const Poset& p, const SolveBudget& budget = {});

// Does `order` list every element of p exactly once, respecting p?
bool is_full_linear_extension(const Poset& p, const std::vector<int>& order);

// Local realizer of product(p, q) built from realizers of the factors and
// one full linear extension of each. Every ple of rp is spread over all of
// q ordered by m0 within a layer, and symmetrically; the frequency of
// (x, y) is exactly freq(x, rp) + freq(y, rq).
// Throws PreconditionError when an input fails verification.
LocalRealizer product_realizer(const Poset& p, const Poset& q, const LocalRealizer& rp,
                               const LocalRealizer& rq, const std::vector<int>& l0,
                               const std::vector<int>& m0);

// A full linear extension that places x before y for every incomparable
// (x, y) with x in ca or y in cb. ca and cb must be chains, mutually
// incomparable (either may be empty). ChainError otherwise;
// InternalCycleError would mean the augmented order acquired a cycle,
// which mutually incomparable chains cannot cause.
std::vector<int> bogart_extension(const Poset& p, const std::vector<int>& ca,
                                  const std::vector<int>& cb);

/* Removal constructions: each takes a verified local realizer of
 * p - removed, written in the reduced poset's own ids (the labeling
 * p.remove(removed) produces), and lifts it to a realizer of p.
 * Violated preconditions raise PreconditionError naming the clause. */

struct RemovalResult {
    std::vector<int> removed;
    LocalRealizer realizer; // of the full poset
    int mu = 0;             // of realizer
    int mu_reduced = 0;     // of the supplied reduced realizer

    int mu_delta() const { return mu - mu_reduced; }
};

// c1, c2 chains with every element of c1 incomparable to every element of
// c2, and at least one element outside both. Two extensions re-insert the
// chains; mu grows by exactly 2.
RemovalResult two_chain_removal(const Poset& p, const std::vector<int>& c1,
                                const std::vector<int>& c2, const LocalRealizer& reduced);

// Single-chain case of the above (c2 empty); mu grows by exactly 2.
RemovalResult one_chain_removal(const Poset& p, const std::vector<int>& c,
                                const LocalRealizer& reduced);

// x minimal, y maximal, x || y, |p| >= 3. The reduced ples containing an
// anchor element are wrapped in blocks x < L_i < y and one extension is
// added; mu grows by exactly 1.
RemovalResult minmax_pair_removal(const Poset& p, int x, int y, const LocalRealizer& reduced);

// x minimal, y maximal, x < y, no element incomparable to both, |p| >= 3.
// Wraps as above and adds the ples I_x < x and y < I_y for the sets of
// elements incomparable to x resp. y; mu grows by at most 1.
RemovalResult special_pair_removal(const Poset& p, int x, int y, const LocalRealizer& reduced);

struct PairRemovalReport {
    int x = 0, y = 0;
    RemovalResult removal;  // realizer of p lifted from p - {x, y}
    bool certified = false; // exact ldim computed for both posets
    int ldim_value = 0;     // ldim(p), when certified
    int ldim_reduced = 0;   // ldim(p - {x, y}), when certified
};

// Every height <= 2 poset with >= 3 elements has a pair whose removal
// lowers the local dimension by at most 1. Picks the pair (an incomparable
// minimal/maximal pair when one exists, else the least comparable one),
// builds the lifted realizer (recursing when the poset is too large for
// the exact solver), and certifies the inequality with exact values when
// both posets fit the element budget. A node or time limit hit while
// certifying leaves certified = false; the construction is still returned.
PairRemovalReport removable_pair_height2(const Poset& p, const SolveBudget& budget = {});

struct QuadrupleReport {
    std::array<int, 4> removed{};
    LocalRealizer realizer; // of p
    int mu = 0;
    int mu_reduced = 0; // of the realizer of p - removed it was lifted from

    int mu_delta() const { return mu - mu_reduced; }
};

// Every poset with >= 5 elements has four elements whose removal lowers
// the local dimension by at most 2: a 4-chain when the height allows it,
// two height-2 pairs when it is low, and in height exactly 3 either a
// 3-chain plus an element incomparable to both ends or two special pairs.
QuadrupleReport removable_quadruple(const Poset& p, const SolveBudget& budget = {});

// Biclique cover of a difference graph by halving the row interval: one
// rectangle through the middle row, recursion on the two remaining
// corners. Max multiplicity <= ceil(log2(m+1)) for m rows.
CoverFamily young_cover(const DifferenceGraph& h); // ParamError when empty

// Biclique cover of the staircase H_n, n = 2^k - 1, f(i) = n+1-i: central
// (n+1)/2 square, a row-light cover of the top-right staircase sharing the
// square's rows, and its transpose in the bottom left. k = 2 and 3 are the
// hand-built base covers.
CoverFamily staircase_cover(int k); // ParamError for k < 2

/* Counting lower bound for the two-layer subset poset: with k = ceil(n/e)
 * and b = ceil(2 ln n), a cover by difference graphs that uses each vertex
 * once would need (n/b) C(n-b, k-b) >= C(n, k), which fails badly; the
 * ratio is the forced number of graphs per vertex. */
struct BoundReport {
    int n = 0, k = 0, b = 0;
    std::string lhs, rhs;       // exact values of the two sides above
    double lhs_value = 0.0, rhs_value = 0.0;
    double implied_lower = 0.0; // rhs / lhs, inf when lhs is 0
    bool chain_holds = false;   // C(n,k) k^b >= n^b C(n-b,k-b), checked exactly
    double bound_value = 0.0;   // n / (2 e ln n)

    std::string render() const; // aligned key/value lines
};

BoundReport boolean_lb_report(int n); // ParamError for n < 8

} // namespace locdim
