// Property suites over randomized and exhaustive inputs.  The CLI `verify`
// verb and the acceptance runner both drive these.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "preproj/field.hpp"
#include "preproj/io.hpp"

namespace preproj {

struct SuiteConfig {
    std::string type = "A2";
    std::string orientation;  // empty for the default orientation
    FieldMode field = FieldMode::prime;
    int cases = 100;          // random modules per suite
    std::uint64_t seed = 1;
    int height = 4;           // crystal height bound
    int entry_bound = 2;      // Lusztig tuples for the transition suite
    int k = 5;                // conormal samples per component
    int max_dim = 3;          // per vertex, for random modules
};

struct SuiteReport {
    std::string suite;
    std::string type;
    std::string field;
    std::size_t cases = 0;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::size_t inconclusive = 0;
    Json first_counterexample;  // null when every check passed
    // Order-sensitive hash of the integers the suite computed; equal across
    // fields when the underlying dimensions agree.
    std::uint64_t checksum = 0x811c9dc5;

    bool ok() const { return failures == 0; }
    Json to_json() const;
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace preproj
