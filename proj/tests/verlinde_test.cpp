#include <gtest/gtest.h>

#include <random>

#include "alcove/verlinde.hpp"
#include "oracles.hpp"

using namespace alcove;

TEST(DominantWeights, Examples) {
    auto a1 = dominant_weights(build_root_system("A1"), 2);
    EXPECT_EQ(a1.weights.size(), 3u);
    auto g2 = dominant_weights(build_root_system("G2"), 1);
    // (Lambda_i|theta) = a_i^vee = (1, 2): only 0 and Lambda_1 at level 1
    EXPECT_EQ(g2.weights, (std::vector<Weight>{Weight(IntVector{0, 0}), Weight(IntVector{1, 0})}));
}

TEST(Extraction, UnitAndRoundTrip) {
    for (const char* n : {"A1", "A2", "B2", "G2"}) {
        WeylGroup W(build_root_system(n));
        for (Integer k : {1, 2, 3}) {
            VerlindeContext ctx(W, k);
            std::vector<Integer> unit(ctx.weights().size(), 0);
            unit[0] = 1;
            EXPECT_EQ(ctx.extract(ctx.synthesize(unit)).multiplicities, unit);
            std::mt19937_64 rng(static_cast<std::uint64_t>(k));
            std::uniform_int_distribution<Integer> d(0, 9);
            for (int t = 0; t < 10; ++t) {
                std::vector<Integer> m(unit.size());
                for (auto& v : m) v = d(rng);
                Extraction e = ctx.extract(ctx.synthesize(m));
                EXPECT_EQ(e.multiplicities, m);
                EXPECT_LT(e.max_residual, 1e-9);
                EXPECT_EQ(ctx.extract(ctx.synthesize_labeled(m)).multiplicities, m);
            }
        }
    }
}

TEST(Extraction, FullGridAgrees) {
    WeylGroup W(build_root_system("B2"));
    VerlindeContext shifted(W, 2), full(W, 2, convention_for(GridMode::Full));
    std::vector<Integer> m{3, 0, 1, 4, 2, 7};
    ASSERT_EQ(m.size(), shifted.weights().size());
    EXPECT_EQ(full.extract(full.synthesize(m)).multiplicities, m);
    EXPECT_EQ(shifted.extract(shifted.synthesize(m)).multiplicities, m);
}

TEST(Extraction, InconsistentInput) {
    WeylGroup W(build_root_system("A2"));
    VerlindeContext ctx(W, 1);
    auto f = ctx.synthesize({1, 0, 0});
    for (auto& v : f) v *= 0.5;
    EXPECT_THROW(ctx.extract(f), InconsistentInputError);
    auto labeled = ctx.synthesize_labeled({1, 0, 0});
    labeled.erase(labeled.begin());
    EXPECT_THROW(ctx.extract(labeled), InconsistentInputError);
    auto extra = ctx.synthesize_labeled({1, 0, 0});
    extra["lambda=(9,9)"] = 1.0;
    EXPECT_THROW(ctx.extract(extra), InconsistentInputError);
    EXPECT_THROW(ctx.synthesize({1, 0}), DomainError);
}

TEST(Fusion, A1MatchesTruncatedClebschGordan) {
    WeylGroup W(build_root_system("A1"));
    for (Integer k = 1; k <= 8; ++k) {
        VerlindeContext ctx(W, k);
        FusionTable t = fusion_table(ctx);
        EXPECT_TRUE(fusion_invariant_violations(t).empty());
        for (Integer a = 0; a <= k; ++a)
            for (Integer b = 0; b <= k; ++b)
                for (Integer c = 0; c <= k; ++c)
                    EXPECT_EQ(t(a, b, c), oracle::su2_fusion(a, b, c, k)) << k << ":" << a << b << c;
    }
}

TEST(Fusion, A1LevelOne) {
    WeylGroup W(build_root_system("A1"));
    FusionTable t = fusion_table(VerlindeContext(W, 1));
    Integer nonzero = 0;
    for (auto v : t.entries) nonzero += v != 0;
    EXPECT_EQ(nonzero, 4);
    EXPECT_EQ(t(1, 1, 0), 1);
    EXPECT_EQ(t(1, 1, 1), 0);
}

TEST(Fusion, A2LevelOneIsZ3) {
    WeylGroup W(build_root_system("A2"));
    VerlindeContext ctx(W, 1);
    // weights: 0, Lambda_2, Lambda_1
    auto c = fusion_coefficients(ctx, Weight(IntVector{1, 0}), Weight(IntVector{1, 0}));
    EXPECT_EQ(c[Weight(IntVector{0, 1})], 1);
    EXPECT_EQ(c[Weight(IntVector{0, 0})], 0);
    auto d = fusion_coefficients(ctx, Weight(IntVector{1, 0}), Weight(IntVector{0, 1}));
    EXPECT_EQ(d[Weight(IntVector{0, 0})], 1);
}

TEST(Fusion, InvariantsAcrossTypes) {
    for (const char* n : {"A2", "B2", "G2", "C3"}) {
        WeylGroup W(build_root_system(n));
        for (Integer k : {1, 2}) {
            FusionTable t = fusion_table(VerlindeContext(W, k));
            EXPECT_TRUE(fusion_invariant_violations(t).empty()) << n << " k=" << k;
            EXPECT_LT(t.max_residual, kIntegralityResidual);
        }
    }
}

TEST(Fusion, CapIsResourceError) {
    WeylGroup W(build_root_system("A2"));
    VerlindeContext ctx(W, 3);
    EXPECT_THROW(fusion_table(ctx, 10), ResourceError);
}

TEST(Fusion, DetectsBrokenTable) {
    WeylGroup W(build_root_system("A1"));
    FusionTable t = fusion_table(VerlindeContext(W, 2));
    t.entries[(1 * 3 + 2) * 3 + 1] = 2;
    auto bad = fusion_invariant_violations(t);
    EXPECT_NE(std::find(bad.begin(), bad.end(), "symmetry"), bad.end());
}
