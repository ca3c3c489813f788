#include "locdim/generators.hpp"

#include <string>

namespace locdim {

namespace {

std::string subset_label(unsigned mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; mask >> i; ++i) {
        if (!(mask >> i & 1u)) continue;
        if (!first) s += ",";
        s += std::to_string(i + 1);
        first = false;
    }
    return s + "}";
}

} // namespace

Generated chain(int n) {
    if (n < 1) throw ParamError("chain needs n >= 1");
    std::vector<std::pair<int, int>> rels;
    for (int i = 1; i < n; ++i) rels.emplace_back(i, i + 1);
    Generated g{Poset::from_relations(n, rels), ElementMap(n)};
    for (int i = 1; i <= n; ++i) g.map.set(i, std::to_string(i));
    return g;
}

Generated antichain(int n) {
    if (n < 1) throw ParamError("antichain needs n >= 1");
    Generated g{Poset(n), ElementMap(n)};
    for (int i = 1; i <= n; ++i) g.map.set(i, std::to_string(i));
    return g;
}

Generated standard_example(int n) {
    if (n < 1) throw ParamError("standard example needs n >= 1");
    std::vector<std::pair<int, int>> rels;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) rels.emplace_back(i, n + j);
    Generated g{Poset::from_relations(2 * n, rels), ElementMap(2 * n)};
    for (int i = 1; i <= n; ++i) {
        g.map.set(i, "a" + std::to_string(i));
        g.map.set(n + i, "b" + std::to_string(i));
    }
    return g;
}

Generated boolean_lattice(int n) {
    if (n < 1) throw ParamError("boolean lattice needs n >= 1");
    long total = 1L << n;
    if (total > kElementCap) throw ParamError("boolean lattice too large");
    std::vector<std::pair<int, int>> rels;
    for (unsigned s = 0; s < static_cast<unsigned>(total); ++s)
        for (unsigned t = 0; t < static_cast<unsigned>(total); ++t)
            if (s != t && (s & t) == s) rels.emplace_back(static_cast<int>(s) + 1,
                                                          static_cast<int>(t) + 1);
    Generated g{Poset::from_relations(static_cast<int>(total), rels),
                ElementMap(static_cast<int>(total))};
    for (unsigned s = 0; s < static_cast<unsigned>(total); ++s)
        g.map.set(static_cast<int>(s) + 1, subset_label(s));
    return g;
}

Generated layers(int s, int t, int n) {
    if (!(0 <= s && s < t && t <= n)) throw ParamError("layers needs 0 <= s < t <= n");
    std::vector<unsigned> lower, upper;
    for (unsigned m = 0; m < (1u << n); ++m) {
        int pc = __builtin_popcount(m);
        if (pc == s) lower.push_back(m);
        if (pc == t) upper.push_back(m);
    }
    long total = static_cast<long>(lower.size()) + static_cast<long>(upper.size());
    if (total > kElementCap) throw ParamError("layer poset too large");
    std::vector<std::pair<int, int>> rels;
    for (size_t i = 0; i < lower.size(); ++i)
        for (size_t j = 0; j < upper.size(); ++j)
            if ((lower[i] & upper[j]) == lower[i])
                rels.emplace_back(static_cast<int>(i) + 1,
                                  static_cast<int>(lower.size() + j) + 1);
    Generated g{Poset::from_relations(static_cast<int>(total), rels),
                ElementMap(static_cast<int>(total))};
    for (size_t i = 0; i < lower.size(); ++i)
        g.map.set(static_cast<int>(i) + 1, subset_label(lower[i]));
    for (size_t j = 0; j < upper.size(); ++j)
        g.map.set(static_cast<int>(lower.size() + j) + 1, subset_label(upper[j]));
    return g;
}

Generated split(const Poset& p) {
    int n = p.size();
    std::vector<std::pair<int, int>> rels;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            if (x == y || p.less(x, y)) rels.emplace_back(x, n + y);
    Generated g{Poset::from_relations(2 * n, rels), ElementMap(2 * n)};
    for (int x = 1; x <= n; ++x) {
        g.map.set(x, std::to_string(x) + "'");
        g.map.set(n + x, std::to_string(x) + "''");
    }
    return g;
}

Generated product(const Poset& p, const Poset& q, long cap) {
    long total = static_cast<long>(p.size()) * q.size();
    if (total > cap) throw SizeError("product exceeds element cap");
    auto id = [&](int x, int y) { return (x - 1) * q.size() + y; };
    std::vector<std::pair<int, int>> rels;
    for (int x1 = 1; x1 <= p.size(); ++x1)
        for (int y1 = 1; y1 <= q.size(); ++y1)
            for (int x2 = 1; x2 <= p.size(); ++x2)
                for (int y2 = 1; y2 <= q.size(); ++y2) {
                    if (x1 == x2 && y1 == y2) continue;
                    bool xle = x1 == x2 || p.less(x1, x2);
                    bool yle = y1 == y2 || q.less(y1, y2);
                    if (xle && yle) rels.emplace_back(id(x1, y1), id(x2, y2));
                }
    Generated g{Poset::from_relations(static_cast<int>(total), rels),
                ElementMap(static_cast<int>(total))};
    for (int x = 1; x <= p.size(); ++x)
        for (int y = 1; y <= q.size(); ++y)
            g.map.set(id(x, y), "(" + std::to_string(x) + "," + std::to_string(y) + ")");
    return g;
}

} // namespace locdim
