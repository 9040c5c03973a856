#pragma once

#include <atomic>
#include <compare>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include "lislab/point.hpp"

namespace lislab {

/// Stable reference to an element of a DynamicSequence. Ids are issued
/// sequentially from 0 in insertion order, so operation scripts can name
/// them.
struct Handle {
    std::uint64_t id = 0;
    friend auto operator<=>(const Handle&, const Handle&) = default;
};

class StaleHandle : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class CoordinateCollision : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

struct SequenceStats {
    std::uint64_t inserts = 0;
    std::uint64_t deletes = 0;
    std::uint64_t updates = 0;
    std::uint64_t queries = 0;

    friend bool operator==(const SequenceStats&, const SequenceStats&) = default;
};

/// Points kept in x order in a treap with subtree sizes (rank addressing),
/// answering maximum-weight chain queries globally or on an x-interval.
///
/// Queries sweep the selected points left to right with a prefix-max
/// Fenwick tree over y ranks: O(k log k) for k points in range. Updates are
/// O(log n) expected.
///
/// Single writer. Const queries may run concurrently between mutations.
class DynamicSequence {
public:
    DynamicSequence();
    explicit DynamicSequence(std::uint64_t priority_seed);

    /// Throws CoordinateCollision if p.x or p.y is already present and
    /// InvalidInput for a negative weight.
    Handle insert(const WeightedPoint& p);

    /// Removes the element; the handle becomes dead. Throws StaleHandle.
    WeightedPoint erase(Handle h);

    /// Returns the previous weight. Throws StaleHandle, or InvalidInput for
    /// w < 0.
    Weight update_weight(Handle h, Weight w);

    Weight query_global() const;

    /// Max chain weight among points with xlo <= x <= xhi.
    Weight query_range(Coord xlo, Coord xhi) const;

    /// Range query answered by a global query: two heavy sentinels of weight
    /// W = (count+1) * max_weight + 1 are placed immediately left of xlo
    /// (below every y) and immediately right of xhi (above every y); the
    /// global optimum then contains both and equals range + 2W. Sentinels are
    /// removed before returning.
    Weight query_range_via_sentinels(Coord xlo, Coord xhi);

    /// The sentinel weight the previous call would use for the current
    /// contents.
    Weight sentinel_weight() const;

    bool contains(Handle h) const { return handles_.count(h.id) != 0; }
    const WeightedPoint& get(Handle h) const;

    std::size_t size() const noexcept { return handles_.size(); }
    bool empty() const noexcept { return handles_.empty(); }

    /// Number of elements with x strictly below `x`, i.e. the array index
    /// the element at `x` has (or would have).
    std::size_t rank_of_x(Coord x) const;

    /// Handle of the element at array index r (0-based). Throws
    /// std::out_of_range.
    Handle find_rank(std::size_t r) const;

    /// Elements in ascending x.
    PointSet snapshot() const;
    std::vector<Handle> handles_in_order() const;

    SequenceStats stats() const;
    void reset_stats();

private:
    // Order key: public points use slot 0; sentinels sit at slot -1 / +1 of
    // the range bounds so they need no free integer coordinate.
    struct Key {
        Coord x = 0;
        int slot = 0;
        friend auto operator<=>(const Key&, const Key&) = default;
    };

    struct Node {
        Key key;
        WeightedPoint point;
        std::uint64_t priority = 0;
        std::uint64_t handle = 0;
        std::int32_t left = -1;
        std::int32_t right = -1;
        std::uint32_t size = 1;
    };

    // Counters that survive copies and allow const queries to bump them.
    struct Counter {
        mutable std::atomic<std::uint64_t> value{0};
        Counter() = default;
        Counter(const Counter& o) : value(o.value.load()) {}
        Counter& operator=(const Counter& o) {
            value = o.value.load();
            return *this;
        }
        void bump() const { value.fetch_add(1, std::memory_order_relaxed); }
        std::uint64_t get() const { return value.load(std::memory_order_relaxed); }
    };

    std::int32_t new_node(Key key, const WeightedPoint& p, std::uint64_t handle);
    void free_node(std::int32_t idx);
    void pull(std::int32_t t);
    void split(std::int32_t t, const Key& key, std::int32_t& l, std::int32_t& r);
    std::int32_t merge(std::int32_t l, std::int32_t r);
    std::int32_t find(const Key& key) const;
    void insert_node(std::int32_t idx);
    void erase_key(const Key& key);
    void collect(std::int32_t t, const Key& lo, const Key& hi, std::vector<std::int32_t>& out) const;
    Weight chain_over(const Key& lo, const Key& hi) const;
    std::uint64_t next_priority();

    std::vector<Node> nodes_;
    std::vector<std::int32_t> free_;
    std::int32_t root_ = -1;
    std::uint64_t rng_state_;
    std::uint64_t next_handle_ = 0;
    std::unordered_map<std::uint64_t, std::int32_t> handles_;
    std::set<Coord> ys_;
    std::multiset<Weight> weights_;

    Counter inserts_;
    Counter deletes_;
    Counter updates_;
    Counter queries_;
};

}  // namespace lislab
