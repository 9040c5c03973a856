#include <gtest/gtest.h>

#include <algorithm>

#include "lislab/chain_oracle.hpp"
#include "lislab/dynamic_sequence.hpp"
#include "lislab/embedding.hpp"
#include "lislab/random.hpp"
#include "support/brute_force.hpp"

using namespace lislab;

namespace {

WeightedPoint pt(Coord x, Coord y, Weight w) { return {x, y, w, std::nullopt}; }

}  // namespace

TEST(DynamicSequence, BasicOperations) {
    DynamicSequence seq;
    EXPECT_TRUE(seq.empty());
    EXPECT_EQ(seq.query_global(), 0);
    const Handle h0 = seq.insert(pt(1, 1, 5));
    const Handle h1 = seq.insert(pt(2, 2, 7));
    const Handle h2 = seq.insert(pt(3, 0, 9));
    EXPECT_EQ(h0.id, 0u);
    EXPECT_EQ(h2.id, 2u);
    EXPECT_EQ(seq.query_global(), 12);
    EXPECT_EQ(seq.query_range(2, 3), 9);
    EXPECT_EQ(seq.update_weight(h2, 20), 9);
    EXPECT_EQ(seq.query_global(), 20);
    EXPECT_EQ(seq.erase(h2).w, 20);
    EXPECT_EQ(seq.query_global(), 12);
    EXPECT_EQ(seq.update_weight(h1, 0), 7);
    EXPECT_EQ(seq.query_global(), 5);
    EXPECT_EQ(seq.size(), 2u);
    EXPECT_EQ(seq.get(h0).x, 1);

    const auto s = seq.stats();
    EXPECT_EQ(s.inserts, 3u);
    EXPECT_EQ(s.deletes, 1u);
    EXPECT_EQ(s.updates, 2u);
    EXPECT_EQ(s.queries, 6u);
    seq.reset_stats();
    EXPECT_EQ(seq.stats(), SequenceStats{});
}

TEST(DynamicSequence, RejectsCollisionsAndStaleHandles) {
    DynamicSequence seq;
    const Handle h = seq.insert(pt(5, 5, 1));
    EXPECT_THROW(seq.insert(pt(5, 6, 1)), CoordinateCollision);
    EXPECT_THROW(seq.insert(pt(6, 5, 1)), CoordinateCollision);
    EXPECT_THROW(seq.insert(pt(7, 7, -1)), InvalidInput);
    EXPECT_THROW(seq.update_weight(h, -2), InvalidInput);
    seq.erase(h);
    EXPECT_FALSE(seq.contains(h));
    EXPECT_THROW(seq.erase(h), StaleHandle);
    EXPECT_THROW(seq.update_weight(h, 3), StaleHandle);
    EXPECT_THROW(seq.get(h), StaleHandle);
    EXPECT_THROW(seq.update_weight(Handle{99}, 1), StaleHandle);
    EXPECT_THROW(seq.query_range(3, 1), InvalidInput);
    // freed coordinates are reusable
    EXPECT_NO_THROW(seq.insert(pt(5, 5, 1)));
}

TEST(DynamicSequence, SentinelQueryMatchesRangeQuery) {
    std::mt19937_64 rng(100);
    DynamicSequence seq;
    const auto points = reference::random_distinct_points(rng, 40, 15, 200);
    for (const auto& p : points) seq.insert(p);
    std::uniform_int_distribution<Coord> cd(-5, 205);
    for (int trial = 0; trial < 100; ++trial) {
        Coord lo = cd(rng);
        Coord hi = cd(rng);
        if (lo > hi) std::swap(lo, hi);
        const Weight direct = seq.query_range(lo, hi);
        ASSERT_EQ(direct, max_weight_chain_in_xrange(points, lo, hi));
        ASSERT_EQ(seq.query_range_via_sentinels(lo, hi), direct) << lo << " " << hi;
    }
    EXPECT_EQ(seq.size(), 40u);
    EXPECT_EQ(seq.snapshot().size(), 40u);
    EXPECT_EQ(seq.stats().queries, 200u);
}

TEST(DynamicSequence, SentinelsWorkWithoutFreeCoordinates) {
    DynamicSequence seq;
    for (Coord k = 0; k < 10; ++k) seq.insert(pt(k, k, 2));
    EXPECT_EQ(seq.sentinel_weight(), 11 * 2 + 1);
    EXPECT_EQ(seq.query_range_via_sentinels(3, 6), 8);
    EXPECT_EQ(seq.query_range_via_sentinels(0, 9), 20);
    EXPECT_EQ(seq.query_global(), 20);
}

TEST(DynamicSequence, RangeAnswerIsMonotoneInInterval) {
    std::mt19937_64 rng(8);
    DynamicSequence seq;
    for (const auto& p : reference::random_distinct_points(rng, 30, 9, 100)) seq.insert(p);
    for (Coord lo = 0; lo < 100; lo += 7) {
        Weight prev = 0;
        for (Coord hi = lo; hi < 100; hi += 3) {
            const Weight v = seq.query_range(lo, hi);
            ASSERT_GE(v, prev);
            if (lo > 0) ASSERT_LE(v, seq.query_range(lo - 1, hi));
            prev = v;
        }
    }
}

TEST(DynamicSequence, HandlesSurviveOtherMutations) {
    DynamicSequence seq(3);
    std::vector<Handle> handles;
    for (Coord k = 0; k < 50; ++k) handles.push_back(seq.insert(pt(k * 2, (k * 17) % 50, k)));
    for (std::size_t k = 0; k < 50; k += 3) seq.erase(handles[k]);
    for (std::size_t k = 0; k < 50; ++k) {
        if (k % 3 == 0) {
            EXPECT_FALSE(seq.contains(handles[k]));
        } else {
            EXPECT_EQ(seq.get(handles[k]).x, static_cast<Coord>(k * 2));
            EXPECT_EQ(seq.get(handles[k]).w, static_cast<Weight>(k));
        }
    }
}

TEST(DynamicSequence, RankHelpers) {
    DynamicSequence seq;
    const Handle a = seq.insert(pt(10, 1, 1));
    const Handle b = seq.insert(pt(30, 2, 1));
    const Handle c = seq.insert(pt(20, 3, 1));
    EXPECT_EQ(seq.rank_of_x(5), 0u);
    EXPECT_EQ(seq.rank_of_x(20), 1u);
    EXPECT_EQ(seq.rank_of_x(25), 2u);
    EXPECT_EQ(seq.rank_of_x(99), 3u);
    EXPECT_EQ(seq.find_rank(0), a);
    EXPECT_EQ(seq.find_rank(1), c);
    EXPECT_EQ(seq.find_rank(2), b);
    EXPECT_THROW(seq.find_rank(3), std::out_of_range);
    EXPECT_EQ(seq.handles_in_order(), (std::vector<Handle>{a, c, b}));
}

TEST(DynamicSequence, RandomOperationsAgreeWithOracle) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        std::mt19937_64 rng(seed);
        DynamicSequence seq(seed);
        std::vector<std::pair<Handle, WeightedPoint>> live;
        const auto pool = reference::random_distinct_points(rng, 120, 12, 120);
        std::size_t next = 0;
        for (int step = 0; step < 600; ++step) {
            const int op = static_cast<int>(rng() % 4);
            if ((op == 0 || live.empty()) && next < pool.size()) {
                live.push_back({seq.insert(pool[next]), pool[next]});
                ++next;
            } else if (op == 1 && !live.empty()) {
                const std::size_t k = rng() % live.size();
                seq.erase(live[k].first);
                live.erase(live.begin() + static_cast<std::ptrdiff_t>(k));
            } else if (op == 2 && !live.empty()) {
                const std::size_t k = rng() % live.size();
                const Weight w = static_cast<Weight>(rng() % 13);
                seq.update_weight(live[k].first, w);
                live[k].second.w = w;
            } else {
                PointSet model;
                for (const auto& [h, p] : live) model.push_back(p);
                Coord lo = static_cast<Coord>(rng() % 120);
                Coord hi = static_cast<Coord>(rng() % 120);
                if (lo > hi) std::swap(lo, hi);
                ASSERT_EQ(seq.query_global(), max_weight_chain(model));
                ASSERT_EQ(seq.query_range(lo, hi), max_weight_chain_in_xrange(model, lo, hi));
            }
        }
    }
}

TEST(DynamicSequence, CopiesAreIndependent) {
    DynamicSequence seq;
    const Handle h = seq.insert(pt(1, 1, 4));
    seq.insert(pt(2, 2, 4));
    DynamicSequence copy = seq;
    copy.update_weight(h, 10);
    EXPECT_EQ(seq.query_global(), 8);
    EXPECT_EQ(copy.query_global(), 14);
    EXPECT_EQ(copy.stats().inserts, 2u);
}

TEST(DynamicSequence, EmbeddingWithoutBPoints) {
    for (std::size_t n = 1; n <= 5; ++n) {
        Rng rng(n);
        const Embedding emb = build_embedding(random_matrix(n, 3, rng), random_weights(n, 3, rng), 3);
        DynamicSequence seq;
        std::vector<Handle> b_handles;
        for (const auto& p : emb.points()) {
            const Handle h = seq.insert(p);
            if (p.label->family == Family::B) b_handles.push_back(h);
        }
        ASSERT_EQ(seq.query_global(), max_weight_chain(emb.points()));
        for (const Handle h : b_handles) seq.erase(h);
        const PointSet rest = seq.snapshot();
        EXPECT_EQ(rest.size(), 3 * n * n + 2 * n);
        EXPECT_EQ(seq.query_global(), max_weight_chain(rest));
        for (std::size_t j = 0; j < n; ++j) {
            const Coord lo = emb.at(PointLabel::a(static_cast<int>(j))).x;
            const Coord hi = emb.at(PointLabel::a_prime(static_cast<int>(j))).x;
            EXPECT_EQ(seq.query_range(lo, hi), max_weight_chain_in_xrange(rest, lo, hi));
        }
    }
}
