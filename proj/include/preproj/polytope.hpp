// Pseudo-Weyl polytopes given by hyperplane data A_gamma (gamma a chamber
// weight) or vertex data mu_w, the BZ conditions, Lusztig data and the
// piecewise-linear maps between them.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "preproj/cartan_weyl.hpp"
#include "preproj/n_gamma.hpp"

namespace preproj {

// Indexed like RootSystem::chamber_weights().
using HyperplaneDatum = std::vector<std::int64_t>;
// Indexed like RootSystem::elements().
using VertexDatum = std::vector<RootVec>;

struct LusztigDatum {
    Word word;
    std::vector<std::int64_t> n;
    friend bool operator==(const LusztigDatum&, const LusztigDatum&) = default;
};

struct Hexagon {
    std::size_t w = 0;  // element index
    int i = 0;
    int j = 0;
};

struct EdgeViolation {
    std::size_t w = 0;
    int i = 0;
    std::int64_t length = 0;
};

struct BZReport {
    bool bz1 = true;
    std::vector<EdgeViolation> edges;
    std::vector<Hexagon> hexagons;
    bool bz2() const { return edges.empty(); }
    bool ok() const { return bz1 && edges.empty() && hexagons.empty(); }
    std::string summary(const RootSystem& rs) const;
};

HyperplaneDatum zero_datum(const RootSystem& rs);
std::int64_t value(const RootSystem& rs, const HyperplaneDatum& a, const WeightVec& gamma);

template <ExactField F>
HyperplaneDatum polytope_of_module(const NGammaCache<F>& cache, const PiModule<F>& t);

// mu_w, the solution of <-w omega_i, mu_w> = A_{-w omega_i}.
RootVec vertex(const RootSystem& rs, const HyperplaneDatum& a, const WeylElt& w);
RootVec vertex(const RootSystem& rs, const HyperplaneDatum& a, std::size_t w);
// A_{-w omega_i} + A_{-w s_i omega_i} + sum_{j != i} a_ij A_{-w omega_j}
std::int64_t edge_length(const RootSystem& rs, const HyperplaneDatum& a, std::size_t w, int i);
// Throws std::invalid_argument when an edge inequality fails.
VertexDatum vertices_from_hyperplanes(const RootSystem& rs, const HyperplaneDatum& a);
RootVec weight(const RootSystem& rs, const HyperplaneDatum& a);

std::vector<Hexagon> hexagons(const RootSystem& rs);
bool pluecker_holds(const RootSystem& rs, const HyperplaneDatum& a, const Hexagon& h);
BZReport validate_bz(const RootSystem& rs, const HyperplaneDatum& a);

// A*_gamma = A_{-gamma} + <gamma, weight>
HyperplaneDatum star(const RootSystem& rs, const HyperplaneDatum& a);

bool is_w0_word(const RootSystem& rs, const Word& word);
// Throws std::invalid_argument if a vertex difference is not a nonnegative
// multiple of the expected root.
LusztigDatum lusztig_datum(const RootSystem& rs, const HyperplaneDatum& a, const Word& word);
RootVec weight(const RootSystem& rs, const LusztigDatum& n);

// Braid move on the word and on the tuple, at letters position, position + 1
// (and position + 2 for a three-term move).
LusztigDatum apply_braid_move(const LusztigDatum& n, int position, bool three);
// Along a shortest path in the reduced-word graph.
LusztigDatum transition(const RootSystem& rs, const LusztigDatum& n, const Word& target);
// Along the BFS tree of the word graph, through its root.
LusztigDatum transition_via_root(const RootSystem& rs, const LusztigDatum& n, const Word& target);
// The datum on every reduced word of w0, indexed like w0_tables().graph.words.
std::vector<std::vector<std::int64_t>> data_on_all_words(const RootSystem& rs, const LusztigDatum& n);

HyperplaneDatum polytope_from_lusztig(const RootSystem& rs, const LusztigDatum& n);

}  // namespace preproj
