#include <gtest/gtest.h>

#include <sstream>

#include "lislab/chain_oracle.hpp"
#include "lislab/embedding.hpp"
#include "lislab/formula_sweep.hpp"
#include "lislab/random.hpp"
#include "support/brute_force.hpp"

using namespace lislab;

namespace {

Embedding random_embedding(std::size_t n, Weight m, std::uint64_t seed) {
    auto inst = make_sweep_instance(n, m, seed);
    return build_embedding(inst.a, inst.b, m);
}

}  // namespace

TEST(BuildEmbedding, PointCountIsThreeNSquaredPlusThreeN) {
    for (std::size_t n = 1; n <= 12; ++n) {
        EXPECT_EQ(random_embedding(n, 1, n).points().size(), 3 * n * n + 3 * n);
    }
    EXPECT_EQ(random_embedding(4, 1, 0).points().size(), 60u);
}

TEST(BuildEmbedding, SpecialPointPositions) {
    const Embedding emb = build_embedding(Matrix(4, 1), {0, 1, 1, 0}, 1);
    const auto& a1 = special_point(emb, PointLabel::a(1));
    EXPECT_EQ(a1.x, 10);
    EXPECT_EQ(a1.y, 3);
    EXPECT_EQ(a1.w, 1);
    const auto& b2 = special_point(emb, PointLabel::b(2));
    EXPECT_EQ(b2.x, 38);
    EXPECT_EQ(b2.y, 39);
    EXPECT_EQ(b2.w, 1);
    const auto& a0 = special_point(emb, PointLabel::a(0));
    EXPECT_EQ(std::pair(a0.x, a0.y), std::pair(Coord{1}, Coord{4}));
    const auto& ap3 = special_point(emb, PointLabel::a_prime(3));
    EXPECT_EQ(std::pair(ap3.x, ap3.y), std::pair(Coord{45}, Coord{60}));
    const auto& l00 = special_point(emb, PointLabel::left(0, 0));
    EXPECT_EQ(std::pair(l00.x, l00.y), std::pair(Coord{2}, Coord{9}));
    EXPECT_EQ(l00.w, 12);
}

TEST(BuildEmbedding, TurnWeightsReadTransposedMatrix) {
    const Matrix a = Matrix::from_rows(5, {{0, 5, 1}, {2, 0, 0}, {0, 3, 4}});
    const Embedding emb = build_embedding(a, {1, 2, 3}, 5);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            EXPECT_EQ(emb.at(PointLabel::turn(i, j)).w, 3 * 5 * (3 - j) + a(j, i));
            EXPECT_EQ(emb.at(PointLabel::left(i, j)).w, 3 * 5 * (3 - j));
            EXPECT_EQ(emb.at(PointLabel::right(i, j)).w, 3 * 5 * (j + 1));
        }
        EXPECT_EQ(emb.at(PointLabel::b(i)).w, i + 1);
    }
}

TEST(BuildEmbedding, DegenerateSizeOne) {
    const Embedding emb = build_embedding(Matrix(1, 1, {1}), {0}, 1);
    ASSERT_EQ(emb.points().size(), 6u);
    // Coordinates worked out by hand from the six formulas at n = 1.
    const std::vector<std::tuple<PointLabel, Coord, Coord, Weight>> expected{
        {PointLabel::a(0), 1, 1, 1},       {PointLabel::left(0, 0), 2, 3, 3}, {PointLabel::turn(0, 0), 3, 2, 4},
        {PointLabel::b(0), 4, 4, 0},       {PointLabel::right(0, 0), 5, 5, 3}, {PointLabel::a_prime(0), 6, 6, 1},
    };
    for (std::size_t k = 0; k < expected.size(); ++k) {
        const auto& [label, x, y, w] = expected[k];
        const auto& p = emb.points()[k];
        EXPECT_EQ(*p.label, label);
        EXPECT_EQ(p.x, x);
        EXPECT_EQ(p.y, y);
        EXPECT_EQ(p.w, w);
    }
    EXPECT_TRUE(validate_structure(emb).ok());
}

TEST(BuildEmbedding, RejectsInvalidInput) {
    EXPECT_THROW(build_embedding(Matrix(2, 3, {0, 3, 1, 1}), {0, 0}, 2), InvalidInput);
    EXPECT_THROW(build_embedding(Matrix(2, 1), {0, 2}, 1), InvalidInput);
    EXPECT_THROW(build_embedding(Matrix(2, 1), {0}, 1), InvalidInput);
    EXPECT_THROW(build_embedding(Matrix(2, 1), {0, 0}, 0), InvalidInput);
    const Embedding emb = build_embedding(Matrix(2, 1), {0, 0}, 1);
    EXPECT_THROW(special_point(emb, PointLabel::a(2)), InvalidInput);
    EXPECT_THROW(special_point(emb, PointLabel::left(0, 5)), InvalidInput);
}

TEST(ValidateStructure, PassesForAllBuiltEmbeddings) {
    for (Weight m : {1, 5}) {
        for (std::size_t n = 1; n <= 8; ++n) {
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                const auto report = validate_structure(random_embedding(n, m, seed));
                ASSERT_TRUE(report.ok()) << "n=" << n << " M=" << m << " seed=" << seed << ": "
                                         << report.failures().front().name << " " << report.failures().front().detail;
                ASSERT_GE(report.checks.size(), 20u);
            }
        }
    }
}

TEST(ValidateStructure, DetectsCollidingX) {
    Embedding emb = random_embedding(4, 1, 0);
    emb.mutable_point(PointLabel::left(0, 0)).x = emb.at(PointLabel::left(1, 0)).x;
    const auto report = validate_structure(emb);
    EXPECT_FALSE(report.ok());
    bool distinct_failed = false;
    for (const auto& f : report.failures()) distinct_failed = distinct_failed || f.name == "distinct-x";
    EXPECT_TRUE(distinct_failed);
}

TEST(ValidateStructure, DetectsBrokenChainAndMisplacedSpecialPoint) {
    Embedding emb = random_embedding(3, 1, 1);
    emb.mutable_point(PointLabel::a(1)).y = 1000;
    auto names = [](const ValidationReport& r) {
        std::vector<std::string> out;
        for (const auto& f : r.failures()) out.push_back(f.name);
        return out;
    };
    auto failed = names(validate_structure(emb));
    EXPECT_NE(std::find(failed.begin(), failed.end(), "A-below-left-grid"), failed.end());

    Embedding emb2 = random_embedding(3, 1, 1);
    emb2.mutable_point(PointLabel::right(1, 1)).y = 0;
    failed = names(validate_structure(emb2));
    EXPECT_NE(std::find(failed.begin(), failed.end(), "R-column-chains"), failed.end());
}

TEST(ValidateStructure, XOrderLayout) {
    const Embedding emb = random_embedding(3, 1, 2);
    std::vector<std::string> labels;
    for (const auto& p : emb.points()) labels.push_back(to_string(*p.label));
    const std::vector<std::string> expected{
        "A(0)",   "L(0,0)", "L(1,0)", "L(2,0)", "Lp(2,0)", "Lp(1,0)", "Lp(0,0)", "A(1)",   "L(0,1)",
        "L(1,1)", "L(2,1)", "Lp(2,1)", "Lp(1,1)", "Lp(0,1)", "A(2)",  "L(0,2)",  "L(1,2)", "L(2,2)",
        "Lp(2,2)", "Lp(1,2)", "Lp(0,2)", "B(2)", "B(1)",   "B(0)",   "R(0,0)", "R(1,0)",  "R(2,0)",
        "Ap(2)",  "R(0,1)", "R(1,1)", "R(2,1)", "Ap(1)",   "R(0,2)",  "R(1,2)", "R(2,2)",  "Ap(0)",
    };
    EXPECT_EQ(labels, expected);
}

TEST(SwapBColumn, IdentityAndForcedDeltas) {
    Embedding emb = build_embedding(Matrix(4, 1), {0, 0, 0, 0}, 1);
    auto same = swap_b_column(emb, {0, 0, 0, 0});
    ASSERT_EQ(same.size(), 4u);
    for (const auto& d : same) EXPECT_EQ(d.old_weight, d.new_weight);

    auto up = swap_b_column(emb, {1, 1, 1, 1});
    ASSERT_EQ(up.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(up[i].label, PointLabel::b(static_cast<int>(i)));
        EXPECT_EQ(up[i].old_weight, 0);
        EXPECT_EQ(up[i].new_weight, 1);
    }
}

TEST(SwapBColumn, MatchesRebuildAndIsReversible) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        const std::size_t n = 1 + seed % 6;
        const Matrix a = random_matrix(n, 4, rng);
        const auto b0 = random_weights(n, 4, rng);
        const auto b1 = random_weights(n, 4, rng);
        Embedding emb = build_embedding(a, b0, 4);
        const PointSet original = emb.points();
        swap_b_column(emb, b1);
        EXPECT_EQ(emb.points(), build_embedding(a, b1, 4).points());
        EXPECT_EQ(emb.b(), b1);
        swap_b_column(emb, b0);
        EXPECT_EQ(emb.points(), original);
    }
}

TEST(SwapBColumn, RejectsBadVectors) {
    Embedding emb = build_embedding(Matrix(3, 2), {0, 0, 0}, 2);
    EXPECT_THROW(swap_b_column(emb, {0, 0}), InvalidInput);
    EXPECT_THROW(swap_b_column(emb, {0, 0, 3}), InvalidInput);
}

TEST(ExpandUnweighted, ReplicaLayout) {
    const PointSet one{{2, 9, 3, std::nullopt}};
    EXPECT_EQ(expansion_scale(one), 4);
    const PointSet out = expand_unweighted(one);
    ASSERT_EQ(out.size(), 3u);
    EXPECT_EQ(std::tuple(out[0].x, out[0].y, out[0].w), std::tuple(Coord{8}, Coord{36}, Weight{1}));
    EXPECT_EQ(std::tuple(out[1].x, out[1].y), std::tuple(Coord{9}, Coord{37}));
    EXPECT_EQ(std::tuple(out[2].x, out[2].y), std::tuple(Coord{10}, Coord{38}));

    EXPECT_TRUE(expand_unweighted(PointSet{{5, 5, 0, std::nullopt}}).empty());
}

TEST(ExpandUnweighted, RejectsRepeatedCoordinates) {
    EXPECT_THROW(expand_unweighted(PointSet{{1, 1, 1, std::nullopt}, {1, 2, 1, std::nullopt}}), InvalidInput);
    EXPECT_THROW(expand_unweighted(PointSet{{1, 1, 1, std::nullopt}, {2, 1, 1, std::nullopt}}), InvalidInput);
    EXPECT_THROW(expand_unweighted(PointSet{{1, 1, 5, std::nullopt}}, 5), InvalidInput);
}

TEST(ExpandUnweighted, LongestChainEqualsWeightedOptimum) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const auto points = reference::random_distinct_points(rng, 1 + trial % 12, 6);
        const PointSet expanded = expand_unweighted(points);
        Weight total = 0;
        for (const auto& p : points) total += p.w;
        ASSERT_EQ(static_cast<Weight>(expanded.size()), total);
        ASSERT_TRUE(has_distinct_coordinates(expanded));
        ASSERT_EQ(max_weight_chain(expanded), reference::exhaustive_max_chain(points)) << "trial " << trial;
    }
}

TEST(ExpandUnweighted, PreservesPairwiseDominance) {
    std::mt19937_64 rng(7);
    const auto points = reference::random_distinct_points(rng, 10, 4);
    const Coord s = expansion_scale(points);
    for (const auto& p : points) {
        for (const auto& q : points) {
            for (Weight t = 0; t < p.w; ++t) {
                for (Weight u = 0; u < q.w; ++u) {
                    const WeightedPoint rp{p.x * s + t, p.y * s + t, 1, std::nullopt};
                    const WeightedPoint rq{q.x * s + u, q.y * s + u, 1, std::nullopt};
                    if (p.x == q.x) {
                        ASSERT_EQ(dominates(rp, rq), t < u);
                    } else {
                        ASSERT_EQ(dominates(rp, rq), dominates(p, q));
                    }
                }
            }
        }
    }
}

TEST(EmbeddingDump, FormatAndParse) {
    const Embedding emb = build_embedding(Matrix(4, 1), {0, 0, 0, 0}, 1);
    const std::string dump = format_embedding_dump(emb);
    EXPECT_EQ(dump.substr(0, dump.find('\n')), "A -1 0 1 4 1");
    EXPECT_NE(dump.find("\nL 0 0 2 9 12\n"), std::string::npos);
    std::istringstream in(dump);
    EXPECT_EQ(parse_embedding_dump(in), emb.points());

    std::istringstream bad("Q 0 0 1 1 1\n");
    EXPECT_THROW(parse_embedding_dump(bad), InvalidInput);
}
