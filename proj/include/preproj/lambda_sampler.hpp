// Generic points of the irreducible components of Lusztig's nilpotent
// varieties, through conormal fibers over KQ-orbits, and the BZ data they carry.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "preproj/crystal.hpp"
#include "preproj/n_gamma.hpp"
#include "preproj/pi_module.hpp"
#include "preproj/polytope.hpp"

namespace preproj {

// i_1 a sink of q, i_2 a sink of sigma_{i_1} q, and so on.
bool is_sink_adapted(const Quiver& q, const Word& word);

// The direct sum of M(beta_r)^{n_r}; n must sit on a sink-adapted word of q.
template <ExactField F>
KQModule<F> generic_kq_point(const RootSystem& rs, const Quiver& q, const LusztigDatum& n);

// A random point of the fiber of the conormal bundle over x.
template <ExactField F>
PiModule<F> conormal_sample(const KQModule<F>& x, std::uint64_t seed);

struct ComponentBZ {
    HyperplaneDatum datum;
    BZReport report;
    LusztigDatum sink_datum;
    int samples = 0;
    bool ok() const { return report.ok(); }
};

// Entrywise minimum of the polytopes of k fiber samples over the orbit
// attached to the crystal element b.  A BZ failure leaves ok() false so the
// caller can rerun with more samples.
template <ExactField F>
ComponentBZ component_bz(const NGammaCache<F>& cache, const HyperplaneDatum& b, int k = 5, std::uint64_t seed = 0);

// Same, retrying once with twice the samples and a fresh seed on failure.
template <ExactField F>
ComponentBZ component_bz_escalating(const NGammaCache<F>& cache, const HyperplaneDatum& b, int k = 5,
                                    std::uint64_t seed = 0);

struct StrataReport {
    std::map<HyperplaneDatum, std::size_t> counts;
    std::size_t total() const;
};

// Throws std::invalid_argument on mixed dimension vectors.
template <ExactField F>
StrataReport stratify(const NGammaCache<F>& cache, const std::vector<PiModule<F>>& samples);

struct DimensionAudit {
    bool ok = true;
    std::int64_t group_dim = 0;  // dim G(nu)
    std::int64_t rep_dim = 0;    // dim Rep(KQ, nu)
    std::int64_t orbit_dim = 0;
    std::int64_t fiber_dim = 0;
    std::int64_t expected = 0;  // dim G(nu) - (nu, nu)/2
    std::string message;
};

template <ExactField F>
DimensionAudit dimension_audit(const RootSystem& rs, const KQModule<F>& x);

}  // namespace preproj
