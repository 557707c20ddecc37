#include "support.hpp"

#include <set>

namespace preproj {
namespace {

HyperplaneDatum from_lusztig(const RootSystem& rs, Word word, std::vector<std::int64_t> n) {
    return polytope_from_lusztig(rs, LusztigDatum{std::move(word), std::move(n)});
}

TEST(Crystal, A2Examples) {
    const auto rs = build_root_system("A2");
    const auto zero = zero_datum(*rs);
    for (int i = 0; i < 2; ++i) EXPECT_EQ(phi(*rs, zero, i), 0);
    const auto running = from_lusztig(*rs, {0, 1, 0}, {1, 0, 1});
    EXPECT_EQ(phi(*rs, running, 0), 1);

    const auto e1 = e_tilde(*rs, zero, 0);
    EXPECT_EQ(e1, from_lusztig(*rs, {0, 1, 0}, {1, 0, 0}));
    EXPECT_EQ(*f_tilde(*rs, e1, 0), zero);
    EXPECT_FALSE(f_tilde(*rs, zero, 0).has_value());

    EXPECT_EQ(f_tilde_max(*rs, running, 0), from_lusztig(*rs, {0, 1, 0}, {0, 0, 1}));
    EXPECT_EQ(star(*rs, zero), zero);
}

// (0,1,0) on (1,2,1) is the element of weight alpha_1 + alpha_2 with
// phi_1 = 0; the reflection sends it to weight alpha_2.
TEST(Crystal, SaitoExample) {
    const auto rs = build_root_system("A2");
    const auto b = from_lusztig(*rs, {0, 1, 0}, {0, 1, 0});
    ASSERT_EQ(phi(*rs, b, 0), 0);
    const auto s = saito(*rs, b, 0);
    EXPECT_EQ(s, from_lusztig(*rs, {1, 0, 1}, {1, 0, 0}));
    EXPECT_EQ(wt(*rs, s), rs->simple_root(1));
    EXPECT_EQ(s, saito_via_star(*rs, b, 0));
    EXPECT_THROW(saito(*rs, from_lusztig(*rs, {0, 1, 0}, {1, 0, 0}), 0), std::invalid_argument);
}

TEST(Crystal, GenerateSmallCases) {
    const auto a1 = build_root_system("A1");
    const auto g = generate(*a1, 3);
    EXPECT_EQ(g.nodes.size(), 4u);
    EXPECT_EQ(g.edges.size(), 3u);
    EXPECT_EQ(generate(*build_root_system("A2"), 0).nodes.size(), 1u);
    const auto a2 = build_root_system("A2");
    const auto m = generate(*a2, 2).weight_multiplicities();
    const std::map<RootVec, std::size_t> want = {{RootVec({0, 0}), 1}, {RootVec({1, 0}), 1}, {RootVec({0, 1}), 1},
                                                 {RootVec({2, 0}), 1}, {RootVec({0, 2}), 1}, {RootVec({1, 1}), 2}};
    EXPECT_EQ(m, want);
    EXPECT_THROW(generate(*a2, -1), std::invalid_argument);
}

TEST(Crystal, KostantOracle) {
    for (const auto& [tag, h] : std::vector<std::pair<const char*, int>>{{"A2", 6}, {"A3", 5}, {"D4", 4}}) {
        const auto rs = build_root_system(tag);
        const auto m = generate(*rs, h).weight_multiplicities();
        std::size_t total = 0;
        for (const auto& [nu, count] : m) {
            EXPECT_EQ(count, test::kostant_bruteforce(rs->positive_roots(), 0, nu)) << tag;
            EXPECT_EQ(kostant_partition_count(*rs, nu), count) << tag;
            total += count;
        }
        EXPECT_EQ(total, generate(*rs, h).nodes.size());
    }
}

TEST(Crystal, GraphEdgesAreCrystalOperators) {
    const auto rs = build_root_system("A3");
    const auto g = generate(*rs, 4);
    for (const auto& e : g.edges) {
        EXPECT_EQ(*f_tilde(*rs, g.nodes[e.from], e.i), g.nodes[e.to]);
        EXPECT_EQ(g.weights[e.from], g.weights[e.to] + rs->simple_root(e.i));
    }
    std::set<HyperplaneDatum> distinct(g.nodes.begin(), g.nodes.end());
    EXPECT_EQ(distinct.size(), g.nodes.size());
}

// Crystal axioms on random elements reached by random e-tilde walks.
TEST(Crystal, RandomWalkAxioms) {
    std::mt19937_64 rng(23);
    for (const char* tag : {"A3", "A4", "D4"}) {
        const auto rs = build_root_system(tag);
        HyperplaneDatum p = zero_datum(*rs);
        for (int step = 0; step < 40; ++step) {
            const int i = static_cast<int>(uniform_below(rng, rs->n()));
            p = e_tilde(*rs, p, i);
            ASSERT_TRUE(validate_bz(*rs, p).ok()) << tag;
            for (int j = 0; j < rs->rank(); ++j) {
                const auto ph = phi(*rs, p, j);
                EXPECT_GE(ph, 0);
                EXPECT_EQ(phi(*rs, f_tilde_max(*rs, p, j), j), 0);
                EXPECT_EQ(wt(*rs, f_tilde_max(*rs, p, j)), wt(*rs, p) - ph * rs->simple_root(j));
                EXPECT_TRUE(validate_bz(*rs, star(*rs, p)).ok());
            }
        }
    }
}

TEST(Crystal, DotOutput) {
    const auto rs = build_root_system("A2");
    const auto g = generate(*rs, 2);
    const auto dot = to_dot(*rs, g, {0, 1, 0});
    EXPECT_EQ(dot.rfind("digraph", 0), 0u);
    std::size_t arrows = 0;
    for (std::size_t k = dot.find("->"); k != std::string::npos; k = dot.find("->", k + 2)) ++arrows;
    EXPECT_EQ(arrows, g.edges.size());
}

}  // namespace
}  // namespace preproj
