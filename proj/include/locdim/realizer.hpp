#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locdim/poset.hpp"

namespace locdim {

/* A ple is a linear extension of some induced subposet, written least to
 * greatest. A local realizer is a nonempty family of ples; its frequency
 * mu is the largest number of ples any one element appears in. */

struct Ple {
    std::vector<int> order;

    bool contains(int x) const {
        for (int e : order)
            if (e == x) return true;
        return false;
    }
};

struct LocalRealizer {
    std::vector<Ple> ples;
};

struct MuStats {
    int mu = 0;
    std::vector<int> freq;    // index = element id
    long total_elements = 0;  // sum of ple lengths
};

MuStats mu_stats(const LocalRealizer& r, int n);

enum class ViolationKind {
    ComparabilityUnwitnessed,  // x < y never appears in order
    IncomparabilityUnreversed, // no ple places x before y for x || y
    NotAPle,                   // member is not a linear extension of its ground set
};

struct Violation {
    ViolationKind kind;
    int ple_index = -1; // populated for NotAPle
    int x = 0, y = 0;   // populated for the pair kinds
    std::string describe() const;
};

struct VerifyResult {
    bool ok = false;
    MuStats stats;
    std::optional<Violation> violation;
};

// Checks (a) each member is a ple of P, (b) each comparable pair occurs
// together in some ple (order then automatic), (c) for each ordered
// incomparable pair (x, y) some ple places x before y. First violation by
// ple index, then lexicographic pair. Throws IdRangeError for foreign ids.
VerifyResult verify_local_realizer(const Poset& p, const LocalRealizer& r);

// Realizer check: every member must be a linear extension of all of P and
// every ordered incomparable pair must appear both ways across the family.
VerifyResult verify_realizer(const Poset& p, const std::vector<Ple>& members);

} // namespace locdim
