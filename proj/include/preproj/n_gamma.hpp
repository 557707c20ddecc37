// The modules N-hat(gamma) over the extended quiver, N(gamma) over Pi(Q),
// the functions D_gamma(T) = dim Hom(N(gamma), T), and Gabriel
// indecomposables M(beta) over KQ.
#pragma once

#include <memory>
#include <shared_mutex>
#include <unordered_map>

#include "preproj/cartan_weyl.hpp"
#include "preproj/pi_module.hpp"

namespace preproj {

template <ExactField F>
class NGammaCache {
public:
    NGammaCache(std::shared_ptr<const RootSystem> rs, Quiver orientation);

    const RootSystem& root_system() const { return *rs_; }
    std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
    const Quiver& orientation() const { return q_; }
    const DoubledQuiver& base_quiver() const { return base_; }
    const DoubledQuiver& extended_quiver() const { return ext_; }

    // gamma = w lambda with the minimal w; Sigma along its word, right to left.
    PiModule<F> nhat(const WeightVec& gamma) const;
    // Same construction along an arbitrary word; each step must satisfy
    // <current weight, alpha_j> <= 0, which holds for reduced words of any w
    // with w lambda = gamma.
    PiModule<F> nhat_along(const WeightVec& lambda, const Word& word) const;

    // Cached for chamber weights; other weights are direct sums of chamber pieces.
    PiModule<F> n_of(const WeightVec& gamma) const;
    std::shared_ptr<const PiModule<F>> n_of_chamber(const WeightVec& gamma) const;

    std::size_t d_gamma(const WeightVec& gamma, const PiModule<F>& t) const;

private:
    std::shared_ptr<const RootSystem> rs_;
    Quiver q_;
    DoubledQuiver base_;
    DoubledQuiver ext_;
    mutable std::shared_mutex mu_;
    mutable std::uint64_t epoch_;
    mutable std::unordered_map<WeightVec, std::shared_ptr<const PiModule<F>>, LatticeHash> cache_;
};

// Unique indecomposable KQ-module of dimension vector beta (a positive root),
// built from simples by BGP reflections along a source-adapted word.
template <ExactField F>
KQModule<F> indecomposable(const RootSystem& rs, const RootVec& beta, const Quiver& q);

}  // namespace preproj
