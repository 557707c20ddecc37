#include "support.hpp"

namespace preproj {
namespace {

using test::iso;

TEST(NGamma, ExtendedExamples) {
    const auto rs = build_root_system("A2");
    NGammaCache<Fp> cache(rs, rs->default_orientation());
    const auto n = cache.nhat(-rs->fundamental_weight(0));
    EXPECT_EQ(n.total_dim(), 1);
    EXPECT_EQ(n.dim(2), 1);  // vertex 1'
    const auto m = cache.nhat(rs->reflect(0, -rs->fundamental_weight(0)));
    EXPECT_EQ(m.dims(), (Dims{1, 0, 1, 0}));
    EXPECT_TRUE(is_stable(m));
}

TEST(NGamma, SmallExamples) {
    const auto rs = build_root_system("A3");
    NGammaCache<Fp> cache(rs, rs->default_orientation());
    const DoubledQuiver& dq = cache.base_quiver();
    for (int i = 0; i < 3; ++i) {
        const auto w = -rs->fundamental_weight(i);
        EXPECT_TRUE(cache.n_of(w).is_zero());
        EXPECT_TRUE(iso(cache.n_of(rs->reflect(i, w)), simple_module<Fp>(dq, i)));
    }
    // -s_1 s_2 omega_2: two-dimensional, 1 on top of 2.
    const auto t = cache.n_of(rs->reflect(0, rs->reflect(1, -rs->fundamental_weight(1))));
    EXPECT_EQ(t.dimvec(), RootVec({1, 1, 0}));
    EXPECT_EQ(socle_head(t, 1).socle_dim, 1u);
    EXPECT_EQ(socle_head(t, 0).head_dim, 1u);
    const auto g = cache.n_of(WeightVec({-1, 1, 0}));
    EXPECT_EQ(g.dimvec(), RootVec({0, 1, 1}));
}

// N(omega_i) is the projective cover of S_i; for A3 these are the
// indecomposable projectives of dimension vectors (1,1,1), (1,2,1), (1,1,1).
TEST(NGamma, ProjectivesInA3) {
    const auto rs = build_root_system("A3");
    NGammaCache<Fp> cache(rs, rs->default_orientation());
    EXPECT_EQ(cache.n_of(rs->fundamental_weight(0)).dimvec(), RootVec({1, 1, 1}));
    EXPECT_EQ(cache.n_of(rs->fundamental_weight(1)).dimvec(), RootVec({1, 2, 1}));
    EXPECT_EQ(cache.n_of(rs->fundamental_weight(2)).dimvec(), RootVec({1, 1, 1}));
}

TEST(NGamma, NonChamberWeightsAreDirectSums) {
    const auto rs = build_root_system("A2");
    NGammaCache<Fp> cache(rs, rs->default_orientation());
    const WeightVec g({-2, 2});
    const auto n = cache.n_of(g);
    const auto one = cache.n_of(WeightVec({-1, 1}));
    EXPECT_TRUE(iso(n, direct_sum(one, one)));
    EXPECT_TRUE(cache.n_of(WeightVec({-2, -1})).is_zero());
}

TEST(NGamma, WorksForOtherOrientations) {
    const auto rs = build_root_system("A3");
    for (const char* o : {"2-1,2-3", "2-1,3-2", "1-2,3-2"}) {
        NGammaCache<Fp> cache(rs, parse_orientation(*rs, o));
        for (const auto& g : rs->chamber_weights()) {
            const auto n = cache.n_of(g);
            EXPECT_TRUE(validate(n).ok) << o;
            const auto [w, l] = rs->antidominant_factorization(g);
            if (!w.is_identity()) {
                EXPECT_EQ(rs->root_to_weight(n.dimvec()), g - l) << o;
            }
        }
    }
}

TEST(NGamma, DGammaExamples) {
    const auto rs = build_root_system("A2");
    NGammaCache<Fp> cache(rs, rs->default_orientation());
    const auto t = test::build(cache.base_quiver(), {1, 1}, {{"a1", {{1}}}});
    EXPECT_EQ(cache.d_gamma(WeightVec({1, 0}), t), 1u);
    EXPECT_EQ(cache.d_gamma(WeightVec({0, 1}), t), 1u);
    EXPECT_EQ(cache.d_gamma(WeightVec({-1, 1}), t), 1u);
    EXPECT_EQ(cache.d_gamma(WeightVec({1, -1}), t), 0u);
    EXPECT_EQ(cache.d_gamma(WeightVec({-1, 0}), t), 0u);
    EXPECT_EQ(cache.d_gamma(WeightVec({0, -1}), t), 0u);
}

// Changing the prime invalidates cached modules.
TEST(NGamma, CacheFollowsThePrime) {
    const auto rs = build_root_system("A2");
    NGammaCache<Fp> cache(rs, rs->default_orientation());
    const auto before = cache.n_of(rs->fundamental_weight(0));
    Fp::set_modulus(101);
    const auto after = cache.n_of(rs->fundamental_weight(0));
    EXPECT_EQ(after.dimvec(), before.dimvec());
    EXPECT_TRUE(validate(after).ok);
    Fp::set_modulus(kDefaultPrime);
}

TEST(Indecomposable, BricksOfEveryPositiveRoot) {
    for (const char* tag : {"A3", "D4"}) {
        const auto rs = build_root_system(tag);
        const Quiver q = rs->default_orientation();
        for (const auto& b : rs->positive_roots()) {
            const auto m = indecomposable<Fp>(*rs, b, q);
            EXPECT_EQ(m.dimvec(), b) << tag;
            EXPECT_EQ(hom_dim(m, m), 1u) << tag;
        }
        EXPECT_THROW(indecomposable<Fp>(*rs, RootVec(rs->n()), q), std::invalid_argument);
    }
    const auto a2 = build_root_system("A2");
    const auto m = indecomposable<Fp>(*a2, RootVec({1, 1}), a2->default_orientation());
    EXPECT_EQ(rank(m.map(0)), 1u);
}

}  // namespace
}  // namespace preproj
