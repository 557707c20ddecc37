#include "support.hpp"

namespace preproj {
namespace {

using test::build;
using test::SmallPrime;

class QuiverRepTest : public ::testing::Test {
protected:
    std::shared_ptr<const RootSystem> a2 = build_root_system("A2");
    std::shared_ptr<const RootSystem> a3 = build_root_system("A3");
    DoubledQuiver dq2{a2->default_orientation()};
    DoubledQuiver dq3{a3->default_orientation()};
};

TEST_F(QuiverRepTest, ZeroModuleIsValid) {
    EXPECT_TRUE(validate(PiModule<Fp>(dq3, {2, 1, 3})).ok);
}

// 1 <-a- 2 -b-> 3, with the vertex-3 basis vector sent to minus the bottom
// vector of M_2.
TEST_F(QuiverRepTest, WorkedExampleModule) {
    const DoubledQuiver dq(parse_orientation(*a3, "2-1,2-3"));
    ASSERT_EQ(dq.arrow_name(0), "a1");
    const auto m = build(dq, {1, 2, 1}, {{"a1", {{1, 0}}}, {"a2", {{1, 0}}}, {"a1*", {{0}, {1}}}, {"a2*", {{0}, {-1}}}});
    EXPECT_TRUE(validate(m).ok);
    const auto bad = build(dq, {1, 2, 1}, {{"a1", {{1, 0}}}, {"a2", {{1, 0}}}, {"a1*", {{0}, {1}}}, {"a2*", {{0}, {1}}}});
    const auto rep = validate(bad);
    EXPECT_FALSE(rep.ok);
    EXPECT_EQ(rep.vertex, 1);
}

TEST_F(QuiverRepTest, Duality) {
    const auto s1 = simple_module<Fp>(dq2, 0);
    EXPECT_TRUE(test::iso(dual(s1), s1));
    const auto m = build(dq2, {1, 1}, {{"a1", {{1}}}});
    const auto d = dual(m);
    EXPECT_TRUE(d.map(dq2.arrow_by_name("a1")).is_zero());
    EXPECT_EQ(d.map(dq2.arrow_by_name("a1*")), Matrix<Fp>::from_rows({{1}}));
    EXPECT_TRUE(dual(PiModule<Fp>(dq2, {0, 0})).is_zero());
}

TEST_F(QuiverRepTest, SocleAndHead) {
    const auto m = build(dq2, {1, 1}, {{"a1", {{1}}}});
    EXPECT_EQ(socle_head(m, 1).socle_dim, 1u);
    EXPECT_EQ(socle_head(m, 0).socle_dim, 0u);
    EXPECT_EQ(socle_head(m, 0).head_dim, 1u);
    EXPECT_EQ(socle_head(simple_module<Fp>(dq3, 2), 2).head_dim, 1u);
    EXPECT_EQ(socle_head(simple_module<Fp>(dq3, 2), 1).socle_dim, 0u);
}

TEST_F(QuiverRepTest, IsomorphismExamples) {
    const auto m = build(dq2, {1, 1}, {{"a1", {{1}}}});
    EXPECT_EQ(is_isomorphic(m, m), IsoVerdict::yes);
    EXPECT_EQ(is_isomorphic(simple_module<Fp>(dq2, 0), simple_module<Fp>(dq2, 1)), IsoVerdict::no);
    const auto split = direct_sum(simple_module<Fp>(dq2, 0), simple_module<Fp>(dq2, 1));
    EXPECT_EQ(is_isomorphic(split, m), IsoVerdict::no);
    EXPECT_EQ(is_isomorphic(m, dual(m)), IsoVerdict::no);
}

// A random base change of a module is isomorphic to it.
TEST_F(QuiverRepTest, BaseChangeIsIsomorphic) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 40; ++t) {
        const auto m = test::random_module(dq3.quiver(), mix_seed(5, static_cast<std::uint64_t>(t)));
        std::vector<Matrix<Fp>> g, ginv;
        for (int v = 0; v < 3; ++v) {
            Matrix<Fp> x;
            do x = random_matrix<Fp>(static_cast<std::size_t>(m.dim(v)), static_cast<std::size_t>(m.dim(v)), rng);
            while (!is_invertible(x));
            g.push_back(x);
            ginv.push_back(*solve_matrix(x, Matrix<Fp>::identity(x.rows())));
        }
        PiModule<Fp> n(dq3, m.dims());
        for (int a = 0; a < static_cast<int>(dq3.arrow_count()); ++a)
            n.set_map(a, g[static_cast<std::size_t>(dq3.arrow(a).dst)] * m.map(a) * ginv[static_cast<std::size_t>(dq3.arrow(a).src)]);
        EXPECT_TRUE(validate(n).ok);
        EXPECT_EQ(is_isomorphic(m, n), IsoVerdict::yes);
    }
}

// Over F_3 the number of morphisms is 3^hom_dim; counted by enumeration.
TEST_F(SmallPrime, HomDimensionMatchesEnumeration) {
    Fp::set_modulus(3);
    const auto a3 = build_root_system("A3");
    const Quiver q = a3->default_orientation();
    int compared = 0;
    for (std::uint64_t t = 0; compared < 30; ++t) {
        const auto m = test::random_module(q, mix_seed(21, t), 2);
        const auto n = test::random_module(q, mix_seed(22, t), 2);
        std::size_t entries = 0;
        for (int v = 0; v < 3; ++v) entries += static_cast<std::size_t>(m.dim(v) * n.dim(v));
        if (entries > 9) continue;
        ++compared;
        EXPECT_EQ(test::count_morphisms(m, n), test::ipow(3, hom_dim(m, n)));
    }
}

// Crawley-Boevey: dim Ext1(M,N) = hom(M,N) + hom(N,M) - (dimvec M, dimvec N),
// so Ext1 is symmetric and Ext1(M,M) is even.
TEST_F(QuiverRepTest, ExtSymmetry) {
    for (std::uint64_t t = 0; t < 60; ++t) {
        const auto m = test::random_module(dq3.quiver(), mix_seed(31, t));
        const auto n = test::random_module(dq3.quiver(), mix_seed(32, t));
        EXPECT_EQ(ext1_dim(m, n), ext1_dim(n, m));
        EXPECT_EQ(ext1_dim(m, m) % 2, 0);
        EXPECT_GE(ext1_dim(m, n), 0);
    }
}

TEST_F(QuiverRepTest, SymmetricForm) {
    EXPECT_EQ(symmetric_form(dq2, {1, 0}, {0, 1}), -1);
    EXPECT_EQ(symmetric_form(dq2, {1, 0}, {1, 0}), 2);
    EXPECT_EQ(euler_form(dq2.quiver(), {1, 0}, {0, 1}), -1);
    EXPECT_EQ(euler_form(dq2.quiver(), {0, 1}, {1, 0}), 0);
}

TEST_F(QuiverRepTest, RestrictAndEmbed) {
    const auto x = test::build_kq(dq2.quiver(), {1, 1}, {{{1}}});
    const auto m = embed_KQ(x, {Matrix<Fp>(1, 1)});
    EXPECT_TRUE(validate(m).ok);
    EXPECT_EQ(is_isomorphic(restrict_to_Q(m), x), IsoVerdict::yes);
    EXPECT_THROW(embed_KQ(x, {Matrix<Fp>::from_rows({{1}})}), std::invalid_argument);
}

TEST_F(QuiverRepTest, Stability) {
    const auto ext = extended_doubled(a2->default_orientation());
    const auto primed = simple_module<Fp>(ext, 2);
    EXPECT_TRUE(is_stable(primed));
    EXPECT_FALSE(is_stable(simple_module<Fp>(ext, 0)));
}

TEST_F(QuiverRepTest, RandomModulesAreValid) {
    for (std::uint64_t t = 0; t < 100; ++t) {
        const auto m = test::random_module(dq3.quiver(), t, 4);
        EXPECT_TRUE(validate(m).ok);
        EXPECT_TRUE(validate(dual(m)).ok);
        EXPECT_EQ(is_isomorphic(dual(dual(m)), m), IsoVerdict::yes);
    }
}

}  // namespace
}  // namespace preproj
