#include "support.hpp"

namespace preproj {
namespace {

class SamplerA2 : public ::testing::Test {
protected:
    std::shared_ptr<const RootSystem> rs = build_root_system("A2");
    Quiver q = rs->default_orientation();
    NGammaCache<Fp> cache{rs, q};
    const Word sink{1, 0, 1};

    PiModule<Fp> point(int x, int y) const {
        return test::build(cache.base_quiver(), {1, 1}, {{"a1", {{x}}}, {"a1*", {{y}}}});
    }
};

TEST_F(SamplerA2, GenericPoint) {
    EXPECT_TRUE(is_sink_adapted(q, sink));
    EXPECT_FALSE(is_sink_adapted(q, {0, 1, 0}));
    const auto x = generic_kq_point<Fp>(*rs, q, {sink, {0, 1, 0}});
    EXPECT_EQ(is_isomorphic(x, test::build_kq(q, {1, 1}, {{{1}}})), IsoVerdict::yes);
    EXPECT_EQ(generic_kq_point<Fp>(*rs, q, {sink, {0, 0, 0}}).total_dim(), 0);
    EXPECT_THROW(generic_kq_point<Fp>(*rs, q, {{0, 1, 0}, {0, 1, 0}}), std::invalid_argument);
}

TEST_F(SamplerA2, ConormalSamples) {
    const auto forced = conormal_sample(test::build_kq(q, {1, 1}, {{{1}}}), 3);
    EXPECT_TRUE(test::iso(forced, point(1, 0)));
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto free = conormal_sample(KQModule<Fp>(q, {1, 1}), s);
        EXPECT_TRUE(validate(free).ok);
        EXPECT_TRUE(restrict_to_Q(free).map(0).is_zero());
    }
    EXPECT_EQ(conormal_sample(KQModule<Fp>(q, {1, 1}), 5).maps(), conormal_sample(KQModule<Fp>(q, {1, 1}), 5).maps());
}

TEST_F(SamplerA2, ComponentData) {
    const auto running = polytope_of_module(cache, point(1, 0));
    const auto a = component_bz(cache, running);
    EXPECT_TRUE(a.ok());
    EXPECT_EQ(a.datum, running);
    const auto other = star(*rs, running);
    EXPECT_EQ(component_bz(cache, other).datum, other);
    EXPECT_EQ(component_bz(cache, zero_datum(*rs)).datum, zero_datum(*rs));
    EXPECT_THROW(component_bz(cache, running, 0), std::invalid_argument);
}

TEST_F(SamplerA2, Strata) {
    const auto rep = stratify(cache, std::vector<PiModule<Fp>>{point(1, 0), point(0, 1), point(0, 0)});
    ASSERT_EQ(rep.counts.size(), 3u);
    EXPECT_EQ(rep.total(), 3u);
    const auto origin = polytope_of_module(cache, point(0, 0));
    for (const auto& m : {point(1, 0), point(0, 1)}) {
        const auto a = polytope_of_module(cache, m);
        for (std::size_t k = 0; k < a.size(); ++k) EXPECT_GE(origin[k], a[k]);
    }
    EXPECT_EQ(stratify(cache, std::vector<PiModule<Fp>>{point(1, 0), point(1, 0)}).counts.size(), 1u);
    EXPECT_EQ(stratify(cache, std::vector<PiModule<Fp>>{}).total(), 0u);
}

TEST_F(SamplerA2, DimensionAudit) {
    const auto a = dimension_audit(*rs, test::build_kq(q, {1, 1}, {{{1}}}));
    EXPECT_TRUE(a.ok) << a.message;
    EXPECT_EQ(a.orbit_dim, 1);
    EXPECT_EQ(a.fiber_dim, 0);
    EXPECT_EQ(a.rep_dim, 1);
    EXPECT_EQ(a.group_dim, 2);
    const auto b = dimension_audit(*rs, KQModule<Fp>(q, {1, 1}));
    EXPECT_TRUE(b.ok);
    EXPECT_EQ(b.orbit_dim, 0);
    EXPECT_EQ(b.fiber_dim, 1);
    const auto c = dimension_audit(*rs, KQModule<Fp>(q, {0, 0}));
    EXPECT_TRUE(c.ok);
    EXPECT_EQ(c.group_dim, 0);
}

// Generic points of every component up to height 4 in A3: the dimension
// count holds and the sampled polytope is the crystal element.
TEST(Sampler, ComponentsOfA3) {
    const auto rs = build_root_system("A3");
    const Quiver q = rs->default_orientation();
    NGammaCache<Fp> cache(rs, q);
    const Word sink = rs->adapted_word(q, RootSystem::Adaptation::sink);
    const auto g = generate(*rs, 4);
    for (std::size_t b = 0; b < g.nodes.size(); ++b) {
        const auto n = lusztig_datum(*rs, g.nodes[b], sink);
        const auto x = generic_kq_point<Fp>(*rs, q, n);
        EXPECT_TRUE(dimension_audit(*rs, x).ok);
        const auto cb = component_bz_escalating(cache, g.nodes[b], 3, b);
        EXPECT_EQ(cb.sink_datum, n);
        EXPECT_EQ(cb.datum, g.nodes[b]);
    }
}

}  // namespace
}  // namespace preproj
