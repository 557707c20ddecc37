#include "support.hpp"

#include "preproj/verify.hpp"

namespace preproj {
namespace {

SuiteConfig small(const char* type) {
    SuiteConfig c;
    c.type = type;
    c.cases = 15;
    c.height = 3;
    return c;
}

TEST(Suites, EverySuitePassesOnSmallInputs) {
    for (const auto& name : suite_names()) {
        for (const char* type : {"A2", "A3"}) {
            const auto rep = run_suite(name, small(type));
            EXPECT_TRUE(rep.ok()) << name << " " << type << ": " << rep.to_json().dump();
            EXPECT_GT(rep.checks, 0u) << name;
        }
    }
}

TEST(Suites, UnknownName) { EXPECT_THROW(run_suite("nope", small("A2")), std::invalid_argument); }

TEST(Suites, DeterministicAndFieldIndependent) {
    auto cfg = small("A3");
    const auto a = run_suite("ngamma", cfg);
    EXPECT_EQ(run_suite("ngamma", cfg).to_json(), a.to_json());
    cfg.field = FieldMode::rational;
    const auto r = run_suite("ngamma", cfg);
    EXPECT_EQ(r.checksum, a.checksum);
    EXPECT_EQ(r.field, "rational");
}

TEST(Suites, OtherOrientation) {
    auto cfg = small("A3");
    cfg.orientation = "2-1,2-3";
    for (const char* name : {"adjunction", "dgamma", "induction", "crystal-iso"}) {
        const auto rep = run_suite(name, cfg);
        EXPECT_TRUE(rep.ok()) << name << ": " << rep.to_json().dump();
    }
}

}  // namespace
}  // namespace preproj
