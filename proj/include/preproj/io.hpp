// JSON formats for modules, polytopes, Lusztig data and crystal graphs.
// Vertex and arrow labels are 1-based in every file.
#pragma once

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "preproj/crystal.hpp"
#include "preproj/lambda_sampler.hpp"
#include "preproj/pi_module.hpp"
#include "preproj/polytope.hpp"

namespace preproj {

using Json = nlohmann::ordered_json;

// Thrown for malformed input files; the CLI maps it to exit code 2.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
Json parse_json(const std::string& text);

// "A3" or {"type": "A", "rank": 3}.
std::shared_ptr<const RootSystem> root_system_from_json(const Json& quiver);
Quiver orientation_from_json(const RootSystem& rs, const Json& orientation);  // null -> default
Json orientation_to_json(const Quiver& q);
// "1-2,2-3" or "[[1,2],[2,3]]".
Quiver parse_orientation(const RootSystem& rs, const std::string& text);

struct LoadedModuleHeader {
    std::shared_ptr<const RootSystem> rs;
    Quiver orientation;
    bool extended = false;
    std::uint64_t field_prime = 0;  // 0 for rational files
};
LoadedModuleHeader module_header(const Json& j);

template <ExactField F>
Json module_to_json(const RootSystem& rs, const PiModule<F>& m);
template <ExactField F>
PiModule<F> module_from_json(const Json& j);
template <ExactField F>
Json kq_module_to_json(const RootSystem& rs, const KQModule<F>& m);

Json polytope_to_json(const RootSystem& rs, const HyperplaneDatum& a);
HyperplaneDatum polytope_from_json(const RootSystem& rs, const Json& j);

Json lusztig_to_json(const RootSystem& rs, const LusztigDatum& n);
LusztigDatum lusztig_from_json(const Json& j);
// "word:2,1,3,2,1,3;n:1,0,2,0,1,0"
LusztigDatum parse_lusztig_spec(const std::string& text);
Word parse_word(const std::string& text);  // "1,2,1" -> 0-based letters
std::vector<std::int64_t> parse_int_list(const std::string& text);  // "[-1,1,0]" or "-1,1,0"

Json crystal_to_json(const RootSystem& rs, const CrystalGraph& g, const Word& label_word = {});

}  // namespace preproj
