#include "locdim/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace locdim {

std::uint64_t canonical_key(const Poset& p) {
    int n = p.size();
    if (n > 8) throw SizeError("canonical key limited to 8 elements");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::uint64_t best = ~std::uint64_t(0);
    do {
        // perm[i] = element placed at slot i
        std::uint64_t key = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (p.less(perm[i], perm[j])) key |= std::uint64_t(1) << (i * n + j);
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

struct DegProfile {
    int down, up;
    bool operator<(const DegProfile& o) const {
        return down != o.down ? down < o.down : up < o.up;
    }
    bool operator==(const DegProfile& o) const { return down == o.down && up == o.up; }
};

DegProfile profile(const Poset& p, int x) {
    int d = 0, u = 0;
    for (int y = 1; y <= p.size(); ++y) {
        if (p.less(y, x)) ++d;
        if (p.less(x, y)) ++u;
    }
    return {d, u};
}

bool match(const Poset& a, const Poset& b, std::vector<int>& map_ab, std::vector<char>& used,
           int x) {
    int n = a.size();
    if (x > n) return true;
    DegProfile pa = profile(a, x);
    for (int y = 1; y <= n; ++y) {
        if (used[y] || !(profile(b, y) == pa)) continue;
        bool ok = true;
        for (int z = 1; z < x && ok; ++z) {
            if (a.less(x, z) != b.less(y, map_ab[z])) ok = false;
            if (ok && a.less(z, x) != b.less(map_ab[z], y)) ok = false;
        }
        if (!ok) continue;
        map_ab[x] = y;
        used[y] = 1;
        if (match(a, b, map_ab, used, x + 1)) return true;
        used[y] = 0;
    }
    return false;
}

} // namespace

bool is_isomorphic(const Poset& a, const Poset& b) {
    if (a.size() != b.size()) return false;
    if (a.relation_pairs().size() != b.relation_pairs().size()) return false;
    std::vector<DegProfile> da, db;
    for (int x = 1; x <= a.size(); ++x) {
        da.push_back(profile(a, x));
        db.push_back(profile(b, x));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (!(da == db)) return false;
    std::vector<int> map_ab(static_cast<size_t>(a.size()) + 1, 0);
    std::vector<char> used(static_cast<size_t>(a.size()) + 1, 0);
    return match(a, b, map_ab, used, 1);
}

std::vector<Poset> all_posets(int n) {
    if (n < 1 || n > 6) throw ParamError("poset enumeration limited to 1..6 elements");
    int pairs = n * (n - 1) / 2;
    // pair index for i < j (0-based)
    std::vector<std::vector<int>> pidx(n, std::vector<int>(n, -1));
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pidx[i][j] = k++;

    // Every poset admits a labeling with its relation upper triangular, so
    // scanning closed upper-triangular relations reaches every class.
    // Canonical keys stay below 2^(n*n) <= 2^36, so (count << 40) | key is
    // collision-free and dedups + orders in one map.
    std::map<std::uint64_t, Poset> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
        auto rel = [&](int i, int j) { return (mask >> pidx[i][j]) & 1u; };
        bool closed = true;
        for (int i = 0; i < n && closed; ++i)
            for (int j = i + 1; j < n && closed; ++j)
                for (int l = j + 1; l < n && closed; ++l)
                    if (rel(i, j) && rel(j, l) && !rel(i, l)) closed = false;
        if (!closed) continue;
        std::vector<std::pair<int, int>> rels;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rel(i, j)) rels.emplace_back(i + 1, j + 1);
        Poset p = Poset::from_relations(n, rels);
        classes.emplace((std::uint64_t(rels.size()) << 40) | canonical_key(p), p);
    }
    std::vector<Poset> out;
    out.reserve(classes.size());
    for (auto& [key, p] : classes) out.push_back(p);
    return out;
}

} // namespace locdim
