// Finite-dimensional modules over preprojective algebras Pi(Q), Pi(Q-hat),
// and over the path algebra KQ.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "preproj/cartan_weyl.hpp"
#include "preproj/matrix.hpp"
#include "preproj/quiver.hpp"

namespace preproj {

using Dims = std::vector<int>;

template <ExactField F>
class PiModule {
public:
    PiModule() = default;
    PiModule(DoubledQuiver q, Dims dims);  // all maps zero
    PiModule(DoubledQuiver q, Dims dims, std::vector<Matrix<F>> maps);

    const DoubledQuiver& quiver() const { return q_; }
    const Dims& dims() const { return dims_; }
    int dim(int v) const { return dims_[static_cast<std::size_t>(v)]; }
    int total_dim() const;
    const Matrix<F>& map(int a) const { return maps_[static_cast<std::size_t>(a)]; }
    const std::vector<Matrix<F>>& maps() const { return maps_; }
    void set_map(int a, Matrix<F> m);

    // Dimension vector on the unprimed vertices, as an element of the root lattice.
    RootVec dimvec() const;
    bool is_zero() const { return total_dim() == 0; }

private:
    DoubledQuiver q_;
    Dims dims_;
    std::vector<Matrix<F>> maps_;
};

template <ExactField F>
class KQModule {
public:
    KQModule() = default;
    KQModule(Quiver q, Dims dims);
    KQModule(Quiver q, Dims dims, std::vector<Matrix<F>> maps);

    const Quiver& quiver() const { return q_; }
    const Dims& dims() const { return dims_; }
    int dim(int v) const { return dims_[static_cast<std::size_t>(v)]; }
    int total_dim() const;
    const Matrix<F>& map(int a) const { return maps_[static_cast<std::size_t>(a)]; }
    const std::vector<Matrix<F>>& maps() const { return maps_; }
    void set_map(int a, Matrix<F> m);
    RootVec dimvec() const;

private:
    Quiver q_;
    Dims dims_;
    std::vector<Matrix<F>> maps_;
};

// One matrix per vertex, f_v : M_v -> N_v.
template <ExactField F>
using Morphism = std::vector<Matrix<F>>;

struct ValidationReport {
    bool ok = true;
    int vertex = -1;  // first vertex whose relation fails
    std::string message;
};

enum class IsoVerdict { yes, no, inconclusive };
std::string to_string(IsoVerdict v);

// <mu, nu> = 2 sum mu_i nu_i - sum_{a in H} nu_{s(a)} mu_{t(a)} on full dimension vectors.
std::int64_t symmetric_form(const DoubledQuiver& q, const Dims& mu, const Dims& nu);
// <mu, nu>_Q = sum mu_i nu_i - sum_{a in E} mu_{s(a)} nu_{t(a)}
std::int64_t euler_form(const Quiver& q, const Dims& mu, const Dims& nu);

template <ExactField F>
PiModule<F> simple_module(const DoubledQuiver& q, int v);
template <ExactField F>
KQModule<F> simple_kq_module(const Quiver& q, int v);

template <ExactField F>
ValidationReport validate(const PiModule<F>& m);

template <ExactField F>
PiModule<F> dual(const PiModule<F>& m);

template <ExactField F>
PiModule<F> direct_sum(const PiModule<F>& m, const PiModule<F>& n);
template <ExactField F>
KQModule<F> direct_sum(const KQModule<F>& m, const KQModule<F>& n);

// Basis of the intertwiner space, each element given vertex by vertex.
template <ExactField F>
std::vector<Morphism<F>> hom_basis(const PiModule<F>& m, const PiModule<F>& n);
template <ExactField F>
std::vector<Morphism<F>> hom_basis(const KQModule<F>& m, const KQModule<F>& n);

template <ExactField F>
std::size_t hom_dim(const PiModule<F>& m, const PiModule<F>& n);
template <ExactField F>
std::size_t hom_dim(const KQModule<F>& m, const KQModule<F>& n);

// Crawley-Boevey: hom(M,N) + hom(N,M) - <dim M, dim N>; throws if negative.
template <ExactField F>
std::int64_t ext1_dim(const PiModule<F>& m, const PiModule<F>& n);

template <ExactField F>
bool is_morphism(const Morphism<F>& f, const PiModule<F>& m, const PiModule<F>& n);

// Aggregated maps at vertex i.  The arrows with target i are listed in
// `arrows`; M-tilde_i is the direct sum of their source spaces in that order.
//   in  : M-tilde_i -> M_i, block a is eps(a) M_a
//   out : M_i -> M-tilde_i, block a is M_{a*}
template <ExactField F>
struct LocalData {
    std::vector<int> arrows;
    std::vector<std::size_t> offsets;
    std::size_t tilde_dim = 0;
    Matrix<F> in;
    Matrix<F> out;
};

template <ExactField F>
LocalData<F> local_data(const PiModule<F>& m, int i);

template <ExactField F>
struct SocleHead {
    Matrix<F> socle_embedding;  // dim M_i x soc, columns span ker out
    Matrix<F> head_projection;  // hd x dim M_i, kernel = im in
    std::size_t socle_dim = 0;
    std::size_t head_dim = 0;
};

template <ExactField F>
SocleHead<F> socle_head(const PiModule<F>& m, int i);

struct IsoOptions {
    int attempts = 8;
    std::uint64_t seed = 0x5eed;
};

template <ExactField F>
IsoVerdict is_isomorphic(const PiModule<F>& m, const PiModule<F>& n, IsoOptions opt = {});
template <ExactField F>
IsoVerdict is_isomorphic(const KQModule<F>& m, const KQModule<F>& n, IsoOptions opt = {});

template <ExactField F>
KQModule<F> restrict_to_Q(const PiModule<F>& m);

// Attach starred maps (one per arrow of E) to x; throws if a relation fails.
template <ExactField F>
PiModule<F> embed_KQ(const KQModule<F>& x, const std::vector<Matrix<F>>& starred);

// The preprojective relations with the E-maps frozen at x, as a linear system
// in the entries of the starred maps.  Unknowns are laid out arrow by arrow,
// each block row-major of shape dim s(a) x dim t(a).
template <ExactField F>
Matrix<F> starred_relation_system(const KQModule<F>& x);
template <ExactField F>
std::vector<Matrix<F>> starred_maps_from_vector(const KQModule<F>& x, const std::vector<F>& v);

template <ExactField F>
bool is_stable(const PiModule<F>& m);

// Restriction of an extended-quiver module to the unprimed vertices.
template <ExactField F>
PiModule<F> drop_primed(const PiModule<F>& m, const DoubledQuiver& base);

}  // namespace preproj
