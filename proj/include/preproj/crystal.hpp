// The crystal B(-infinity) realized on MV polytopes (BZ data).
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "preproj/polytope.hpp"

namespace preproj {

std::int64_t phi(const RootSystem& rs, const HyperplaneDatum& p, int i);
std::int64_t epsilon(const RootSystem& rs, const HyperplaneDatum& p, int i);
inline RootVec wt(const RootSystem& rs, const HyperplaneDatum& p) { return weight(rs, p); }

HyperplaneDatum e_tilde(const RootSystem& rs, const HyperplaneDatum& p, int i);
std::optional<HyperplaneDatum> f_tilde(const RootSystem& rs, const HyperplaneDatum& p, int i);
HyperplaneDatum f_tilde_max(const RootSystem& rs, const HyperplaneDatum& p, int i);
// The starred operators, conjugated by the star involution.
HyperplaneDatum f_tilde_star_max(const RootSystem& rs, const HyperplaneDatum& p, int i);

// Saito reflection by rotating the Lusztig datum; requires phi_i = 0.
HyperplaneDatum saito(const RootSystem& rs, const HyperplaneDatum& p, int i);
// The same map from e-tilde, f-tilde-star and epsilon of the star image.
HyperplaneDatum saito_via_star(const RootSystem& rs, const HyperplaneDatum& p, int i);

struct CrystalGraph {
    struct Edge {
        std::size_t from = 0;  // f-tilde_i maps `from` to `to`
        std::size_t to = 0;
        int i = 0;
    };
    std::vector<HyperplaneDatum> nodes;  // node 0 is the point polytope
    std::vector<RootVec> weights;
    std::vector<Edge> edges;
    std::map<HyperplaneDatum, std::size_t> index;

    // Multiplicity of each weight among the nodes.
    std::map<RootVec, std::size_t> weight_multiplicities() const;
};

// All elements of height at most `height_bound`, from the point polytope by e-tilde.
CrystalGraph generate(const RootSystem& rs, int height_bound);

// Node labels use the Lusztig datum on `label_word` (lex-least word of w0 if empty).
std::string to_dot(const RootSystem& rs, const CrystalGraph& g, const Word& label_word = {});

// Number of multisets of positive roots summing to nu.
std::uint64_t kostant_partition_count(const RootSystem& rs, const RootVec& nu);

}  // namespace preproj
