#include "locdim/poset.hpp"

#include <algorithm>

namespace locdim {

Poset::Poset(int n) : n_(n) {
    if (n < 1) throw ParamError("poset needs at least one element");
    words_ = (n + 63) / 64;
    lt_.assign(static_cast<size_t>(n) * words_, 0);
}

void Poset::close_transitively() {
    // boolean Floyd-Warshall, one bit row OR per reachable middle element
    for (int k = 0; k < n_; ++k) {
        const std::uint64_t* row_k = &lt_[static_cast<size_t>(k) * words_];
        for (int i = 0; i < n_; ++i) {
            if (bit(i, k)) {
                std::uint64_t* row_i = &lt_[static_cast<size_t>(i) * words_];
                for (int w = 0; w < words_; ++w) row_i[w] |= row_k[w];
            }
        }
    }
}

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& relations) {
    Poset p(n);
    for (auto [x, y] : relations) {
        p.check_id(x);
        p.check_id(y);
        if (x == y) throw CycleError("relation " + std::to_string(x) + " < " + std::to_string(x));
        p.set_bit(x - 1, y - 1);
    }
    p.close_transitively();
    for (int i = 0; i < n; ++i)
        if (p.bit(i, i))
            throw CycleError("element " + std::to_string(i + 1) + " lies on a cycle");
    return p;
}

int Poset::height() const {
    // longest chain by DP over a topological order
    std::vector<int> order = topological_order();
    std::vector<int> len(static_cast<size_t>(n_) + 1, 1);
    int best = 1;
    for (int idx = n_ - 1; idx >= 0; --idx) {
        int x = order[idx];
        for (int y = 1; y <= n_; ++y)
            if (less(x, y)) len[x] = std::max(len[x], len[y] + 1);
        best = std::max(best, len[x]);
    }
    return best;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int x = 1; x <= n_; ++x) {
        bool min = true;
        for (int y = 1; y <= n_ && min; ++y)
            if (less(y, x)) min = false;
        if (min) out.push_back(x);
    }
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int x = 1; x <= n_; ++x) {
        bool max = true;
        for (int y = 1; y <= n_ && max; ++y)
            if (less(x, y)) max = false;
        if (max) out.push_back(x);
    }
    return out;
}

std::vector<std::pair<int, int>> Poset::incomparable_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 1; x <= n_; ++x)
        for (int y = 1; y <= n_; ++y)
            if (incomparable(x, y) && x != y) out.emplace_back(x, y);
    return out;
}

std::vector<std::pair<int, int>> Poset::relation_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 1; x <= n_; ++x)
        for (int y = 1; y <= n_; ++y)
            if (less(x, y)) out.emplace_back(x, y);
    return out;
}

std::vector<std::pair<int, int>> Poset::covering_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 1; x <= n_; ++x)
        for (int y = 1; y <= n_; ++y) {
            if (!less(x, y)) continue;
            bool cover = true;
            for (int z = 1; z <= n_ && cover; ++z)
                if (less(x, z) && less(z, y)) cover = false;
            if (cover) out.emplace_back(x, y);
        }
    return out;
}

Poset::Induced Poset::induced(const std::vector<int>& keep) const {
    std::vector<int> ids = keep;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) throw ParamError("induced subposet needs at least one element");
    for (int x : ids) check_id(x);

    Induced r{Poset(static_cast<int>(ids.size())), {}, {}};
    r.to_orig.assign(ids.size() + 1, 0);
    r.to_sub.assign(static_cast<size_t>(n_) + 1, 0);
    for (size_t i = 0; i < ids.size(); ++i) {
        r.to_orig[i + 1] = ids[i];
        r.to_sub[ids[i]] = static_cast<int>(i + 1);
    }
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = 0; j < ids.size(); ++j)
            if (less(ids[i], ids[j])) r.poset.set_bit(static_cast<int>(i), static_cast<int>(j));
    return r;
}

Poset::Induced Poset::remove(const std::vector<int>& drop) const {
    std::vector<char> dropped(static_cast<size_t>(n_) + 1, 0);
    for (int x : drop) {
        check_id(x);
        dropped[x] = 1;
    }
    std::vector<int> keep;
    for (int x = 1; x <= n_; ++x)
        if (!dropped[x]) keep.push_back(x);
    return induced(keep);
}

bool Poset::same_relation(const Poset& other) const {
    return n_ == other.n_ && lt_ == other.lt_;
}

std::vector<int> Poset::topological_order() const {
    std::vector<int> indeg(static_cast<size_t>(n_) + 1, 0);
    for (int x = 1; x <= n_; ++x)
        for (int y = 1; y <= n_; ++y)
            if (less(y, x)) ++indeg[x];
    std::vector<int> out;
    std::vector<char> placed(static_cast<size_t>(n_) + 1, 0);
    // quadratic but n is small everywhere this is used with closure available
    for (int step = 0; step < n_; ++step) {
        for (int x = 1; x <= n_; ++x) {
            if (placed[x]) continue;
            bool ready = true;
            for (int y = 1; y <= n_ && ready; ++y)
                if (!placed[y] && less(y, x)) ready = false;
            if (ready) {
                out.push_back(x);
                placed[x] = 1;
                break;
            }
        }
    }
    return out;
}

namespace {

void extend_all(const Poset& p, std::vector<char>& placed, std::vector<int>& prefix,
                std::vector<std::vector<int>>& out) {
    if (static_cast<int>(prefix.size()) == p.size()) {
        out.push_back(prefix);
        return;
    }
    for (int x = 1; x <= p.size(); ++x) {
        if (placed[x]) continue;
        bool ready = true;
        for (int y = 1; y <= p.size() && ready; ++y)
            if (!placed[y] && p.less(y, x)) ready = false;
        if (!ready) continue;
        placed[x] = 1;
        prefix.push_back(x);
        extend_all(p, placed, prefix, out);
        prefix.pop_back();
        placed[x] = 0;
    }
}

} // namespace

std::vector<std::vector<int>> Poset::linear_extensions(int max_elements) const {
    if (n_ > max_elements)
        throw SizeError("linear extension enumeration limited to " +
                        std::to_string(max_elements) + " elements");
    std::vector<std::vector<int>> out;
    std::vector<char> placed(static_cast<size_t>(n_) + 1, 0);
    std::vector<int> prefix;
    extend_all(*this, placed, prefix, out);
    return out;
}

} // namespace locdim
