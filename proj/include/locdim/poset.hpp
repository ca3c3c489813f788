#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "locdim/errors.hpp"

namespace locdim {

/* Finite strict partial order on elements 1..n, stored transitively closed
 * as a bit matrix, so comparability queries are O(1). */
class Poset {
public:
    Poset() : Poset(1) {}
    explicit Poset(int n); // antichain on n elements

    // Builds from an arbitrary generating relation; closes transitively.
    // Throws IdRangeError for ids outside 1..n, CycleError if the closure
    // would force i < i (covers antisymmetry violations).
    static Poset from_relations(int n, const std::vector<std::pair<int, int>>& relations);

    int size() const { return n_; }

    bool less(int x, int y) const { // x < y
        check_id(x);
        check_id(y);
        return bit(x - 1, y - 1);
    }
    bool comparable(int x, int y) const { return less(x, y) || less(y, x); }
    bool incomparable(int x, int y) const { return x != y && !comparable(x, y); }

    int height() const; // number of elements in a longest chain
    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    // All ordered pairs (x, y) with x || y, both directions, lex order.
    std::vector<std::pair<int, int>> incomparable_pairs() const;

    // All pairs (x, y) with x < y, lex order.
    std::vector<std::pair<int, int>> relation_pairs() const;

    // Covering pairs only: x < y with no z between.
    std::vector<std::pair<int, int>> covering_pairs() const;

    struct Induced; // defined below, once Poset is complete
    // Induced subposet on `keep` (original ids, any order; relabeled 1..k
    // in ascending original-id order).
    Induced induced(const std::vector<int>& keep) const;
    // Induced subposet on the complement of `drop`.
    Induced remove(const std::vector<int>& drop) const;

    bool same_relation(const Poset& other) const;

    // All linear extensions, each a sequence of all n ids, generated in
    // lexicographic order. Guarded: throws SizeError if n > max_elements.
    std::vector<std::vector<int>> linear_extensions(int max_elements = 10) const;

    // Topological order, smallest id first among available elements.
    std::vector<int> topological_order() const;

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> lt_; // lt_[i*words_ + w] bit b: i < w*64+b (0-based)

    bool bit(int i, int j) const {
        return (lt_[static_cast<size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set_bit(int i, int j) {
        lt_[static_cast<size_t>(i) * words_ + (j >> 6)] |= std::uint64_t(1) << (j & 63);
    }
    void check_id(int x) const {
        if (x < 1 || x > n_)
            throw IdRangeError("element id " + std::to_string(x) + " out of range 1.." +
                               std::to_string(n_));
    }
    void close_transitively();

    friend class PosetBuilder;
};

struct Poset::Induced {
    Poset poset;
    std::vector<int> to_orig; // sub id (1-based index) -> original id
    std::vector<int> to_sub;  // original id -> sub id, 0 if dropped
};

// Forward/backward map between generator labels and element ids.
struct ElementMap {
    std::vector<std::string> labels; // index = id, [0] unused
    std::unordered_map<std::string, int> ids;

    ElementMap() : labels(1) {}
    explicit ElementMap(int n) : labels(static_cast<size_t>(n) + 1) {}

    void set(int id, const std::string& label) {
        labels.at(static_cast<size_t>(id)) = label;
        ids[label] = id;
    }
    const std::string& label(int id) const { return labels.at(static_cast<size_t>(id)); }
    int id(const std::string& label) const {
        auto it = ids.find(label);
        if (it == ids.end()) throw IdRangeError("unknown label: " + label);
        return it->second;
    }
};

} // namespace locdim
