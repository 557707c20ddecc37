#include "support.hpp"

#include <set>

namespace preproj {
namespace {

struct Shape {
    const char* tag;
    std::size_t positive;
    std::size_t order;
    std::size_t chambers;  // sum of the fundamental orbit sizes
};

TEST(RootSystem, Sizes) {
    // |W| and root counts from the classical formulas; orbit sizes are
    // |W| / |Stab(omega_i)|.
    for (const Shape& s : {Shape{"A1", 1, 2, 2}, Shape{"A2", 3, 6, 6}, Shape{"A3", 6, 24, 14}, Shape{"A4", 10, 120, 30},
                           Shape{"D4", 12, 192, 48}, Shape{"D5", 20, 1920, 162}, Shape{"E6", 36, 51840, 0}}) {
        const auto rs = build_root_system(s.tag);
        EXPECT_EQ(rs->num_positive_roots(), s.positive) << s.tag;
        EXPECT_EQ(rs->weyl_order(), s.order) << s.tag;
        EXPECT_EQ(rs->w0().length(), static_cast<int>(s.positive)) << s.tag;
        if (s.chambers) {
            EXPECT_EQ(rs->chamber_weights().size(), s.chambers) << s.tag;
        }
        if (rs->enumerable()) {
            EXPECT_EQ(rs->elements().size(), s.order) << s.tag;
        }
    }
}

TEST(RootSystem, RejectsBadTags) {
    EXPECT_THROW(build_root_system("B3"), std::invalid_argument);
    EXPECT_THROW(build_root_system("D3"), std::invalid_argument);
    EXPECT_THROW(build_root_system("E9"), std::invalid_argument);
    EXPECT_THROW(build_root_system("A"), std::invalid_argument);
    EXPECT_NO_THROW(build_root_system("a2"));
}

TEST(RootSystem, PairingAndForm) {
    const auto rs = build_root_system("A2");
    EXPECT_EQ(rs->pair(rs->fundamental_weight(0), rs->simple_root(0)), 1);
    EXPECT_EQ(rs->form(rs->simple_root(0), rs->simple_root(1)), -1);
    EXPECT_EQ(rs->form(rs->simple_root(0), rs->simple_root(0)), 2);
}

TEST(RootSystem, ActionExamples) {
    const auto rs = build_root_system("A2");
    EXPECT_EQ(rs->act(rs->simple_reflection(0), rs->simple_root(0)), -rs->simple_root(0));
    EXPECT_EQ(rs->act(rs->simple_reflection(0), rs->fundamental_weight(0)), WeightVec({-1, 1}));
    EXPECT_EQ(rs->act(rs->w0(), rs->fundamental_weight(0)), -rs->fundamental_weight(1));
    EXPECT_EQ(rs->star_vertex(0), 1);
}

TEST(RootSystem, StarVertexInD4AndE6) {
    const auto d4 = build_root_system("D4");
    for (int i = 0; i < 4; ++i) EXPECT_EQ(d4->star_vertex(i), i);
    const auto e6 = build_root_system("E6");
    EXPECT_EQ(e6->star_vertex(0), 5);
    EXPECT_EQ(e6->star_vertex(1), 1);
    EXPECT_EQ(e6->star_vertex(2), 4);
}

TEST(ReducedWords, Counts) {
    EXPECT_EQ(build_root_system("A2")->w0_tables().graph.words.size(), 2u);
    EXPECT_EQ(build_root_system("A2")->w0_tables().graph.edge_count(), 1u);
    EXPECT_EQ(build_root_system("A3")->w0_tables().graph.words.size(), 16u);
    EXPECT_EQ(build_root_system("A4")->w0_tables().graph.words.size(), 768u);
    EXPECT_EQ(build_root_system("D4")->w0_tables().graph.words.size(), 2316u);
    const auto a3 = build_root_system("A3");
    const auto g = a3->reduced_words(a3->simple_reflection(1));
    EXPECT_EQ(g.words.size(), 1u);
    EXPECT_EQ(g.edge_count(), 0u);
    EXPECT_THROW(build_root_system("A5")->w0_tables(), std::runtime_error);
}

TEST(ReducedWords, EveryWordIsReducedAndDistinct) {
    const auto rs = build_root_system("A3");
    const auto& words = rs->w0_tables().graph.words;
    std::set<Word> seen(words.begin(), words.end());
    EXPECT_EQ(seen.size(), words.size());
    for (const auto& w : words) {
        EXPECT_TRUE(rs->is_reduced(w));
        EXPECT_EQ(rs->from_word(w), rs->w0());
    }
}

TEST(AdaptedWords, Examples) {
    const auto a2 = build_root_system("A2");
    const Quiver q = a2->default_orientation();  // 1 -> 2
    EXPECT_EQ(a2->adapted_word(q, RootSystem::Adaptation::sink), (Word{1, 0, 1}));
    EXPECT_EQ(a2->adapted_word(q, RootSystem::Adaptation::source), (Word{0, 1, 0}));
    const auto a1 = build_root_system("A1");
    EXPECT_EQ(a1->adapted_word(a1->default_orientation(), RootSystem::Adaptation::sink), (Word{0}));
}

TEST(AdaptedWords, LettersAreSuccessiveSinks) {
    for (const char* tag : {"A3", "A4", "D4", "D5"}) {
        const auto rs = build_root_system(tag);
        Quiver q = rs->default_orientation();
        const Word w = rs->adapted_word(q, RootSystem::Adaptation::sink);
        EXPECT_EQ(rs->from_word(w), rs->w0()) << tag;
        for (int i : w) {
            EXPECT_TRUE(q.is_sink(i)) << tag;
            q = q.reflected_at(i);
        }
    }
}

TEST(AntidominantFactorization, Examples) {
    const auto rs = build_root_system("A2");
    auto [w, l] = rs->antidominant_factorization(-rs->fundamental_weight(0));
    EXPECT_TRUE(w.is_identity());
    EXPECT_EQ(l, -rs->fundamental_weight(0));
    std::tie(w, l) = rs->antidominant_factorization(WeightVec({-1, 1}));
    EXPECT_EQ(w.word(), (Word{1}));
    EXPECT_EQ(l, -rs->fundamental_weight(1));
    std::tie(w, l) = rs->antidominant_factorization(WeightVec({0, 0}));
    EXPECT_TRUE(w.is_identity());
}

// Property: gamma = w lambda with lambda antidominant and w minimal, i.e. no
// right descent of w fixes lambda.
TEST(AntidominantFactorization, RandomWeights) {
    std::mt19937_64 rng(3);
    for (const char* tag : {"A3", "D4", "E6"}) {
        const auto rs = build_root_system(tag);
        for (int t = 0; t < 200; ++t) {
            WeightVec g(rs->n());
            for (std::size_t i = 0; i < rs->n(); ++i) g[i] = static_cast<std::int64_t>(uniform_below(rng, 7)) - 3;
            const auto [w, l] = rs->antidominant_factorization(g);
            EXPECT_TRUE(rs->is_antidominant(l));
            EXPECT_EQ(rs->act(w, l), g);
            for (int i = 0; i < rs->rank(); ++i)
                if (l[static_cast<std::size_t>(i)] == 0) {
                    EXPECT_TRUE(rs->lengthens_right(w, i)) << tag;
                }
        }
    }
}

// Length = number of positive roots sent negative, checked against the word.
TEST(WeylGroup, LengthMatchesInversions) {
    const auto rs = build_root_system("D4");
    for (const auto& w : rs->elements()) {
        int inv = 0;
        for (const auto& b : rs->positive_roots()) inv += rs->is_positive(rs->act(w, b)) ? 0 : 1;
        EXPECT_EQ(inv, w.length());
        for (int i = 0; i < rs->rank(); ++i) {
            EXPECT_EQ(rs->lengthens_right(w, i), rs->multiply(w, rs->simple_reflection(i)).length() > w.length());
            EXPECT_EQ(rs->lengthens_left(w, i), rs->multiply(rs->simple_reflection(i), w).length() > w.length());
        }
    }
}

TEST(WeylGroup, InverseAndRightMultiple) {
    const auto rs = build_root_system("A3");
    for (std::size_t k = 0; k < rs->elements().size(); ++k) {
        const auto& w = rs->elements()[k];
        EXPECT_TRUE(rs->multiply(w, rs->inverse(w)).is_identity());
        for (int i = 0; i < rs->rank(); ++i)
            EXPECT_EQ(rs->elements()[rs->right_multiple(k, i)], rs->multiply(w, rs->simple_reflection(i)));
    }
}

TEST(ChamberWeights, OrbitsOfFundamentalWeights) {
    const auto rs = build_root_system("A3");
    for (const auto& g : rs->chamber_weights()) {
        const auto c = rs->chamber(g);
        EXPECT_EQ(rs->act(c.w, rs->fundamental_weight(c.fundamental)), g);
        EXPECT_EQ(rs->require_chamber_index(g), *rs->chamber_index(g));
        EXPECT_TRUE(rs->chamber_index(-g).has_value());
    }
    EXPECT_FALSE(rs->chamber_index(WeightVec({2, 0, 0})).has_value());
    EXPECT_THROW(rs->chamber(WeightVec({0, 0, 0})), std::invalid_argument);
}

TEST(W0Tables, BetasEnumeratePositiveRootsOnce) {
    const auto rs = build_root_system("A3");
    const auto& t = rs->w0_tables();
    for (std::size_t k = 0; k < t.graph.words.size(); ++k) {
        std::set<RootVec> seen(t.betas[k].begin(), t.betas[k].end());
        EXPECT_EQ(seen.size(), rs->num_positive_roots());
        for (const auto& b : t.betas[k]) EXPECT_TRUE(rs->is_positive_root(b));
    }
}

}  // namespace
}  // namespace preproj
