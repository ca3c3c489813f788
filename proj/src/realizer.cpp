#include "locdim/realizer.hpp"

#include <algorithm>

namespace locdim {

std::string Violation::describe() const {
    switch (kind) {
        case ViolationKind::NotAPle:
            return "member " + std::to_string(ple_index + 1) +
                   " is not a linear extension of its ground set";
        case ViolationKind::ComparabilityUnwitnessed:
            return "comparable pair " + std::to_string(x) + " < " + std::to_string(y) +
                   " never appears in order in any ple";
        case ViolationKind::IncomparabilityUnreversed:
            return "no ple places " + std::to_string(x) + " before " + std::to_string(y) +
                   " (incomparable pair)";
    }
    return "";
}

MuStats mu_stats(const LocalRealizer& r, int n) {
    MuStats s;
    s.freq.assign(static_cast<size_t>(n) + 1, 0);
    for (const Ple& l : r.ples)
        for (int e : l.order) {
            if (e < 1 || e > n) throw IdRangeError("ple id " + std::to_string(e) + " out of range");
            ++s.freq[e];
            ++s.total_elements;
        }
    for (int x = 1; x <= n; ++x) s.mu = std::max(s.mu, s.freq[x]);
    return s;
}

namespace {

// Marks seen[x][y] when some ple places x strictly before y. Returns the
// index of the first member that is not a ple, or -1.
int scan_members(const Poset& p, const std::vector<Ple>& ples, std::vector<char>& seen) {
    int n = p.size();
    for (size_t m = 0; m < ples.size(); ++m) {
        const std::vector<int>& ord = ples[m].order;
        if (ord.empty()) return static_cast<int>(m);
        std::vector<char> present(static_cast<size_t>(n) + 1, 0);
        for (int e : ord) {
            if (e < 1 || e > n)
                throw IdRangeError("ple id " + std::to_string(e) + " out of range");
            if (present[e]) return static_cast<int>(m); // duplicate element
            present[e] = 1;
        }
        for (size_t i = 0; i < ord.size(); ++i)
            for (size_t j = i + 1; j < ord.size(); ++j) {
                if (p.less(ord[j], ord[i])) return static_cast<int>(m);
                seen[static_cast<size_t>(ord[i] - 1) * n + (ord[j] - 1)] = 1;
            }
    }
    return -1;
}

VerifyResult check_pairs(const Poset& p, const std::vector<Ple>& ples, bool full_members) {
    int n = p.size();
    VerifyResult res;
    std::vector<char> seen(static_cast<size_t>(n) * n, 0);

    if (full_members) {
        for (size_t m = 0; m < ples.size(); ++m)
            if (static_cast<int>(ples[m].order.size()) != n) {
                res.violation = Violation{ViolationKind::NotAPle, static_cast<int>(m)};
                break;
            }
    }
    if (!res.violation) {
        int bad = scan_members(p, ples, seen);
        if (bad >= 0) res.violation = Violation{ViolationKind::NotAPle, bad};
    }
    if (!res.violation) {
        for (int x = 1; x <= n && !res.violation; ++x)
            for (int y = 1; y <= n && !res.violation; ++y) {
                if (x == y) continue;
                bool in_order = seen[static_cast<size_t>(x - 1) * n + (y - 1)];
                if (p.less(x, y) && !in_order)
                    res.violation =
                        Violation{ViolationKind::ComparabilityUnwitnessed, -1, x, y};
                else if (p.incomparable(x, y) && !in_order)
                    res.violation =
                        Violation{ViolationKind::IncomparabilityUnreversed, -1, x, y};
            }
    }
    LocalRealizer wrap;
    wrap.ples = ples;
    res.stats = mu_stats(wrap, n);
    res.ok = !res.violation.has_value();
    return res;
}

} // namespace

VerifyResult verify_local_realizer(const Poset& p, const LocalRealizer& r) {
    if (r.ples.empty()) {
        VerifyResult res;
        res.violation = Violation{ViolationKind::NotAPle, 0};
        res.stats.freq.assign(static_cast<size_t>(p.size()) + 1, 0);
        return res;
    }
    return check_pairs(p, r.ples, false);
}

VerifyResult verify_realizer(const Poset& p, const std::vector<Ple>& members) {
    if (members.empty()) {
        VerifyResult res;
        res.violation = Violation{ViolationKind::NotAPle, 0};
        res.stats.freq.assign(static_cast<size_t>(p.size()) + 1, 0);
        return res;
    }
    return check_pairs(p, members, true);
}

} // namespace locdim
