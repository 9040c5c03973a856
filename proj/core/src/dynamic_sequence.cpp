#include "lislab/dynamic_sequence.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace lislab {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Fenwick tree over y ranks answering prefix maxima.
class PrefixMax {
public:
    explicit PrefixMax(std::size_t n) : tree_(n + 1, 0) {}

    // max over ranks [0, r)
    Weight query(std::size_t r) const {
        Weight best = 0;
        for (; r > 0; r -= r & (~r + 1)) best = std::max(best, tree_[r]);
        return best;
    }

    void raise(std::size_t rank, Weight value) {
        for (std::size_t k = rank + 1; k < tree_.size(); k += k & (~k + 1)) tree_[k] = std::max(tree_[k], value);
    }

private:
    std::vector<Weight> tree_;
};

}  // namespace

DynamicSequence::DynamicSequence() : DynamicSequence(0x5eed) {}

DynamicSequence::DynamicSequence(std::uint64_t priority_seed) : rng_state_(priority_seed) {}

std::uint64_t DynamicSequence::next_priority() { return splitmix64(rng_state_); }

std::int32_t DynamicSequence::new_node(Key key, const WeightedPoint& p, std::uint64_t handle) {
    Node node{key, p, next_priority(), handle, -1, -1, 1};
    if (!free_.empty()) {
        const auto idx = free_.back();
        free_.pop_back();
        nodes_[static_cast<std::size_t>(idx)] = node;
        return idx;
    }
    nodes_.push_back(node);
    return static_cast<std::int32_t>(nodes_.size() - 1);
}

void DynamicSequence::free_node(std::int32_t idx) { free_.push_back(idx); }

void DynamicSequence::pull(std::int32_t t) {
    Node& node = nodes_[static_cast<std::size_t>(t)];
    node.size = 1;
    if (node.left >= 0) node.size += nodes_[static_cast<std::size_t>(node.left)].size;
    if (node.right >= 0) node.size += nodes_[static_cast<std::size_t>(node.right)].size;
}

void DynamicSequence::split(std::int32_t t, const Key& key, std::int32_t& l, std::int32_t& r) {
    if (t < 0) {
        l = r = -1;
        return;
    }
    Node& node = nodes_[static_cast<std::size_t>(t)];
    if (node.key < key) {
        split(node.right, key, node.right, r);
        l = t;
    } else {
        split(node.left, key, l, node.left);
        r = t;
    }
    pull(t);
}

std::int32_t DynamicSequence::merge(std::int32_t l, std::int32_t r) {
    if (l < 0) return r;
    if (r < 0) return l;
    Node& ln = nodes_[static_cast<std::size_t>(l)];
    Node& rn = nodes_[static_cast<std::size_t>(r)];
    if (ln.priority > rn.priority) {
        ln.right = merge(ln.right, r);
        pull(l);
        return l;
    }
    rn.left = merge(l, rn.left);
    pull(r);
    return r;
}

std::int32_t DynamicSequence::find(const Key& key) const {
    std::int32_t t = root_;
    while (t >= 0) {
        const Node& node = nodes_[static_cast<std::size_t>(t)];
        if (node.key == key) return t;
        t = key < node.key ? node.left : node.right;
    }
    return -1;
}

void DynamicSequence::insert_node(std::int32_t idx) {
    std::int32_t a = -1;
    std::int32_t b = -1;
    split(root_, nodes_[static_cast<std::size_t>(idx)].key, a, b);
    root_ = merge(merge(a, idx), b);
}

void DynamicSequence::erase_key(const Key& key) {
    std::int32_t a = -1;
    std::int32_t rest = -1;
    std::int32_t mid = -1;
    std::int32_t c = -1;
    split(root_, key, a, rest);
    split(rest, Key{key.x, key.slot + 1}, mid, c);
    if (mid >= 0) free_node(mid);
    root_ = merge(a, c);
}

Handle DynamicSequence::insert(const WeightedPoint& p) {
    if (p.w < 0) throw InvalidInput("weights must be nonnegative");
    if (find(Key{p.x, 0}) >= 0) {
        throw CoordinateCollision("x = " + std::to_string(p.x) + " is already present");
    }
    if (ys_.count(p.y)) throw CoordinateCollision("y = " + std::to_string(p.y) + " is already present");
    const Handle h{next_handle_++};
    const auto idx = new_node(Key{p.x, 0}, p, h.id);
    insert_node(idx);
    handles_.emplace(h.id, idx);
    ys_.insert(p.y);
    weights_.insert(p.w);
    inserts_.bump();
    return h;
}

WeightedPoint DynamicSequence::erase(Handle h) {
    auto it = handles_.find(h.id);
    if (it == handles_.end()) throw StaleHandle("handle " + std::to_string(h.id) + " is not live");
    const WeightedPoint p = nodes_[static_cast<std::size_t>(it->second)].point;
    handles_.erase(it);
    erase_key(Key{p.x, 0});
    ys_.erase(p.y);
    weights_.erase(weights_.find(p.w));
    deletes_.bump();
    return p;
}

Weight DynamicSequence::update_weight(Handle h, Weight w) {
    if (w < 0) throw InvalidInput("weights must be nonnegative");
    auto it = handles_.find(h.id);
    if (it == handles_.end()) throw StaleHandle("handle " + std::to_string(h.id) + " is not live");
    Weight& slot = nodes_[static_cast<std::size_t>(it->second)].point.w;
    const Weight old = slot;
    slot = w;
    weights_.erase(weights_.find(old));
    weights_.insert(w);
    updates_.bump();
    return old;
}

const WeightedPoint& DynamicSequence::get(Handle h) const {
    auto it = handles_.find(h.id);
    if (it == handles_.end()) throw StaleHandle("handle " + std::to_string(h.id) + " is not live");
    return nodes_[static_cast<std::size_t>(it->second)].point;
}

void DynamicSequence::collect(std::int32_t t, const Key& lo, const Key& hi, std::vector<std::int32_t>& out) const {
    while (t >= 0) {
        const Node& node = nodes_[static_cast<std::size_t>(t)];
        if (node.key < lo) {
            t = node.right;
        } else if (hi < node.key) {
            t = node.left;
        } else {
            collect(node.left, lo, hi, out);
            out.push_back(t);
            t = node.right;
        }
    }
}

Weight DynamicSequence::chain_over(const Key& lo, const Key& hi) const {
    std::vector<std::int32_t> in_range;
    collect(root_, lo, hi, in_range);
    std::vector<Coord> ys;
    ys.reserve(in_range.size());
    for (auto idx : in_range) ys.push_back(nodes_[static_cast<std::size_t>(idx)].point.y);
    std::sort(ys.begin(), ys.end());

    PrefixMax best_below(ys.size());
    Weight best = 0;
    for (auto idx : in_range) {
        const WeightedPoint& p = nodes_[static_cast<std::size_t>(idx)].point;
        const auto rank = static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), p.y) - ys.begin());
        const Weight here = checked_add(best_below.query(rank), p.w);
        best_below.raise(rank, here);
        best = std::max(best, here);
    }
    return best;
}

Weight DynamicSequence::query_global() const {
    queries_.bump();
    return chain_over(Key{LLONG_MIN, INT_MIN}, Key{LLONG_MAX, INT_MAX});
}

Weight DynamicSequence::query_range(Coord xlo, Coord xhi) const {
    if (xlo > xhi) throw InvalidInput("range query requires xlo <= xhi");
    queries_.bump();
    return chain_over(Key{xlo, INT_MIN}, Key{xhi, INT_MAX});
}

Weight DynamicSequence::sentinel_weight() const {
    const Weight max_w = weights_.empty() ? 0 : *weights_.rbegin();
    return checked_add(checked_mul(static_cast<Weight>(size()) + 1, max_w), 1);
}

Weight DynamicSequence::query_range_via_sentinels(Coord xlo, Coord xhi) {
    if (xlo > xhi) throw InvalidInput("range query requires xlo <= xhi");
    const Weight heavy = sentinel_weight();
    const Coord y_low = ys_.empty() ? 0 : checked_sub(*ys_.begin(), 1);
    const Coord y_high = ys_.empty() ? 1 : checked_add(*ys_.rbegin(), 1);
    const Key left_key{xlo, -1};
    const Key right_key{xhi, +1};

    // Sentinels carry no public handle; the guard removes them on every path.
    struct Guard {
        DynamicSequence& seq;
        Key left;
        Key right;
        ~Guard() {
            seq.erase_key(left);
            seq.erase_key(right);
        }
    };
    insert_node(new_node(left_key, WeightedPoint{xlo, y_low, heavy, std::nullopt}, UINT64_MAX));
    insert_node(new_node(right_key, WeightedPoint{xhi, y_high, heavy, std::nullopt}, UINT64_MAX));
    Guard guard{*this, left_key, right_key};

    queries_.bump();
    const Weight total = chain_over(Key{LLONG_MIN, INT_MIN}, Key{LLONG_MAX, INT_MAX});
    return checked_sub(total, checked_mul(2, heavy));
}

std::size_t DynamicSequence::rank_of_x(Coord x) const {
    const Key key{x, INT_MIN};
    std::size_t rank = 0;
    std::int32_t t = root_;
    while (t >= 0) {
        const Node& node = nodes_[static_cast<std::size_t>(t)];
        if (node.key < key) {
            rank += 1 + (node.left >= 0 ? nodes_[static_cast<std::size_t>(node.left)].size : 0);
            t = node.right;
        } else {
            t = node.left;
        }
    }
    return rank;
}

Handle DynamicSequence::find_rank(std::size_t r) const {
    if (r >= size()) throw std::out_of_range("rank " + std::to_string(r) + " beyond sequence size");
    std::int32_t t = root_;
    while (t >= 0) {
        const Node& node = nodes_[static_cast<std::size_t>(t)];
        const std::size_t left = node.left >= 0 ? nodes_[static_cast<std::size_t>(node.left)].size : 0;
        if (r < left) {
            t = node.left;
        } else if (r == left) {
            return Handle{node.handle};
        } else {
            r -= left + 1;
            t = node.right;
        }
    }
    throw std::out_of_range("rank lookup fell off the tree");
}

PointSet DynamicSequence::snapshot() const {
    std::vector<std::int32_t> all;
    collect(root_, Key{LLONG_MIN, INT_MIN}, Key{LLONG_MAX, INT_MAX}, all);
    PointSet out;
    out.reserve(all.size());
    for (auto idx : all) out.push_back(nodes_[static_cast<std::size_t>(idx)].point);
    return out;
}

std::vector<Handle> DynamicSequence::handles_in_order() const {
    std::vector<std::int32_t> all;
    collect(root_, Key{LLONG_MIN, INT_MIN}, Key{LLONG_MAX, INT_MAX}, all);
    std::vector<Handle> out;
    out.reserve(all.size());
    for (auto idx : all) out.push_back(Handle{nodes_[static_cast<std::size_t>(idx)].handle});
    return out;
}

SequenceStats DynamicSequence::stats() const {
    return {inserts_.get(), deletes_.get(), updates_.get(), queries_.get()};
}

void DynamicSequence::reset_stats() {
    inserts_ = Counter{};
    deletes_ = Counter{};
    updates_ = Counter{};
    queries_ = Counter{};
}

}  // namespace lislab
