// Reflection functors Sigma_i, Sigma_i^* on preprojective modules, the BGP
// functors Phi_i^{+/-} on KQ-modules, and the sign twist Upsilon_i.
#pragma once

#include <utility>

#include "preproj/pi_module.hpp"

namespace preproj {

// Replace M_i by ker M_in(i); works for extended-quiver modules at unprimed i.
template <ExactField F>
PiModule<F> sigma(const PiModule<F>& m, int i);

// Replace M_i by coker M_out(i).
template <ExactField F>
PiModule<F> sigma_star(const PiModule<F>& m, int i);

// The canonical maps Sigma_i^* M -> M and M -> Sigma_i M, as computed by
// sigma_star(m, i) and sigma(m, i) (same bases).
template <ExactField F>
struct CanonicalMorphisms {
    PiModule<F> sigma_star_module;
    PiModule<F> sigma_module;
    Morphism<F> from_sigma_star;  // Sigma_i^* M -> M
    Morphism<F> to_sigma;         // M -> Sigma_i M
};

template <ExactField F>
CanonicalMorphisms<F> canonical_morphisms(const PiModule<F>& m, int i);

enum class BgpDirection { plus, minus };

// minus: i a source, M_i -> coker of the outgoing maps.
// plus:  i a sink,   M_i -> ker of the incoming maps.
// The result lives over the quiver re-oriented at i.
template <ExactField F>
KQModule<F> bgp(const KQModule<F>& m, int i, BgpDirection dir);

// Pullback along Upsilon_i : Pi(sigma_i Q) -> Pi(Q) for i a source of Q.
template <ExactField F>
PiModule<F> upsilon_pullback(const PiModule<F>& m, int i);

// The inverse transport, for i a sink of the module's quiver.
template <ExactField F>
PiModule<F> upsilon_pullback_inverse(const PiModule<F>& m, int i);

}  // namespace preproj
