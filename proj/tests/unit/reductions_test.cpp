#include <gtest/gtest.h>

#include "lislab/random.hpp"
#include "lislab/reductions.hpp"
#include "support/brute_force.hpp"

using namespace lislab;

TEST(MaxplusViaLis, SizeOne) {
    const auto run = maxplus_via_lis(Matrix(1, 3, {2}), Matrix(1, 3, {3}), 3);
    EXPECT_EQ(run.product.entries(), std::vector<Weight>{5});
    EXPECT_EQ(run.answers, std::vector<Weight>{25});
    EXPECT_EQ(run.report.agree, true);
}

TEST(MaxplusViaLis, ZeroMatrices) {
    const auto run = maxplus_via_lis(Matrix(3, 2), Matrix(3, 2), 2);
    EXPECT_EQ(run.product, Matrix(3, 4));
}

TEST(MaxplusViaLis, AgreesWithNaiveProductAndCountsOperations) {
    for (Weight m : {1, 3, 8}) {
        for (std::size_t n = 1; n <= 6; ++n) {
            Rng rng(n * 31 + static_cast<std::uint64_t>(m));
            const Matrix a = random_matrix(n, m, rng);
            const Matrix b = random_matrix(n, m, rng);
            const auto run = maxplus_via_lis(a, b, m);
            const auto ref = reference::naive_maxplus(a, b);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(run.product(i, j), ref[i][j]);
            }
            ASSERT_EQ(run.report.post_build.updates, n * n);
            ASSERT_EQ(run.report.post_build.queries, n * n);
            ASSERT_EQ(run.report.post_build.inserts, 0u);
            ASSERT_EQ(run.report.post_build.deletes, 0u);
            ASSERT_EQ(run.report.points, 3 * n * n + 3 * n);
        }
    }
}

TEST(MaxplusViaLis, SeededInstanceCounts) {
    Rng rng(7);
    const Matrix a = random_matrix(8, 5, rng);
    const Matrix b = random_matrix(8, 5, rng);
    const auto run = maxplus_via_lis(a, b, 5);
    EXPECT_EQ(run.report.post_build.updates, 64u);
    EXPECT_EQ(run.report.post_build.queries, 64u);
    EXPECT_EQ(run.report.agree, true);
    EXPECT_EQ(run.product, maxplus_product(a, b));
}

TEST(MaxplusViaLis, SentinelModeGivesSameProduct) {
    Rng rng(12);
    const Matrix a = random_matrix(5, 4, rng);
    const Matrix b = random_matrix(5, 4, rng);
    const auto direct = maxplus_via_lis(a, b, 4, RangeQueryMode::Direct, false);
    const auto sentinel = maxplus_via_lis(a, b, 4, RangeQueryMode::Sentinels, false);
    EXPECT_EQ(direct.product, sentinel.product);
    EXPECT_EQ(direct.answers, sentinel.answers);
    EXPECT_EQ(sentinel.report.post_build.queries, 25u);
    EXPECT_FALSE(sentinel.report.agree.has_value());
}

TEST(MaxplusViaLis, RejectsBadInput) {
    EXPECT_THROW(maxplus_via_lis(Matrix(2, 1), Matrix(3, 1), 1), InvalidInput);
    EXPECT_THROW(maxplus_via_lis(Matrix(2, 5, {5, 0, 0, 0}), Matrix(2, 5), 3), InvalidInput);
}

TEST(Tiling, PadsAndSplits) {
    EXPECT_EQ(ceil_sqrt(1), 1u);
    EXPECT_EQ(ceil_sqrt(4), 2u);
    EXPECT_EQ(ceil_sqrt(5), 3u);
    EXPECT_EQ(ceil_sqrt(16), 4u);
    EXPECT_EQ(ceil_sqrt(17), 5u);

    Rng rng(1);
    const Matrix a = random_matrix(5, 1, rng);
    const Tiling t = tile_matrix(a);
    EXPECT_EQ(t.side, 3u);
    EXPECT_EQ(t.padded, 9u);
    EXPECT_EQ(t.tiles_per_side(), 3u);
    EXPECT_EQ(t.tiles.size(), 9u);
    const Matrix full = t.reassemble();
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 9; ++j) EXPECT_EQ(full(i, j), i < 5 && j < 5 ? a(i, j) : 0);
    }
    EXPECT_EQ(t.tile(1, 0)(0, 2), a(3, 2));
    EXPECT_THROW(tile_matrix(a, 2), InvalidInput);
    EXPECT_THROW(tile_matrix(a, 0), InvalidInput);
}

TEST(OmvSession, SmallExamples) {
    OmvSession s(Matrix(2, 1, {0, 1, 0, 0}));
    EXPECT_EQ(s.apply(BitVector({0, 1})), BitVector({1, 0}));
    EXPECT_EQ(s.apply(BitVector({1, 0})), BitVector({0, 0}));
    EXPECT_EQ(s.vectors_processed(), 2u);

    Matrix identity(4, 1);
    for (std::size_t i = 0; i < 4; ++i) identity.set(i, i, 1);
    OmvSession id(identity);
    EXPECT_EQ(id.apply(BitVector({1, 0, 1, 1})), BitVector({1, 0, 1, 1}));
    EXPECT_EQ(id.apply(BitVector(4)), BitVector(4));
}

TEST(OmvSession, AgreesWithDirectProduct) {
    for (std::size_t m : {1u, 2u, 3u, 4u, 5u, 9u, 10u}) {
        Rng rng(m);
        const Matrix a = random_matrix(m, 1, rng);
        OmvSession s(a);
        EXPECT_EQ(s.tile_side(), ceil_sqrt(m));
        for (int k = 0; k < 6; ++k) {
            const BitVector v = random_bitvector(m, rng);
            ASSERT_EQ(s.apply(v), boolean_matvec(a, v)) << "m=" << m << " k=" << k;
        }
    }
}

TEST(OmvSession, TileGeometryAndValues) {
    Rng rng(11);
    const Matrix a = random_matrix(9, 1, rng);
    OmvSession s(a);
    const std::size_t r = s.tile_side();
    ASSERT_EQ(r, 3u);
    ASSERT_EQ(s.tile_count(), 9u);
    std::size_t total = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t l = 0; l < 3; ++l) {
            EXPECT_EQ(static_cast<Weight>(s.tile_points(i, l)), s.tile_weight_total(i, l));
            total += s.tile_points(i, l);
        }
    }
    EXPECT_EQ(s.total_points(), total);
    const OpCounts built = s.counts();
    EXPECT_EQ(built.inserts, total);

    const BitVector v = random_bitvector(9, rng);
    EXPECT_EQ(s.apply(v), boolean_matvec(a, v));
    const Tiling& t = s.tiling();
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t l = 0; l < 3; ++l) {
            const auto& values = s.tile_values(i, l);
            ASSERT_EQ(values.size(), r);
            std::size_t bits = 0;
            for (std::size_t q = 0; q < r; ++q) bits += v[l * r + q] ? 1 : 0;
            EXPECT_EQ(static_cast<Weight>(s.tile_points(i, l)), s.tile_weight_total(i, l) + static_cast<Weight>(bits));
            for (std::size_t row = 0; row < r; ++row) {
                Weight expected = 0;
                for (std::size_t q = 0; q < r; ++q) {
                    expected = std::max(expected, t.tile(i, l)(row, q) + (v[l * r + q] ? 1 : 0));
                }
                EXPECT_EQ(values[row], expected);
            }
        }
    }
    // one range query per tile row, for every tile
    EXPECT_EQ(s.counts_after_build().queries, 27u);
    EXPECT_EQ(s.counts_after_build().updates, 0u);
}

TEST(OmvSession, RejectsBadInput) {
    EXPECT_THROW(OmvSession(Matrix(2, 2)), InvalidInput);
    OmvSession s(Matrix(3, 1));
    EXPECT_THROW(s.apply(BitVector(2)), InvalidInput);
}

TEST(OmvOnline, PullsNextVectorOnlyAfterEmitting) {
    Rng rng(3);
    const Matrix a = random_matrix(4, 1, rng);
    std::vector<BitVector> vectors;
    for (int k = 0; k < 5; ++k) vectors.push_back(random_bitvector(4, rng));
    std::vector<std::string> log;
    std::size_t next = 0;
    OmvSession s(a);
    const auto report = run_omv_online(
        s,
        [&]() -> std::optional<BitVector> {
            log.push_back("pull" + std::to_string(next));
            if (next == vectors.size()) return std::nullopt;
            return vectors[next++];
        },
        [&](std::size_t k, const BitVector& u) {
            log.push_back("emit" + std::to_string(k));
            EXPECT_EQ(u, boolean_matvec(a, vectors[k]));
        },
        &a);
    const std::vector<std::string> expected{"pull0", "emit0", "pull1", "emit1", "pull2", "emit2",
                                            "pull3", "emit3", "pull4", "emit4", "pull5"};
    EXPECT_EQ(log, expected);
    EXPECT_EQ(report.agree, true);
    EXPECT_EQ(report.problem, "omv");
    EXPECT_EQ(report.size, 4u);
}
