#include "preproj/random_module.hpp"

#include <algorithm>

namespace preproj {

template <ExactField F>
Matrix<F> random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix<F> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = F::random(rng);
    return m;
}

template <ExactField F>
Matrix<F> random_matrix_of_random_rank(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    const std::size_t r = uniform_below(rng, std::min(rows, cols) + 1);
    return random_matrix<F>(rows, r, rng) * random_matrix<F>(r, cols, rng);
}

template <ExactField F>
KQModule<F> random_kq_module(const Quiver& q, const Dims& dims, std::mt19937_64& rng) {
    std::vector<Matrix<F>> maps;
    for (const auto& a : q.arrows())
        maps.push_back(random_matrix_of_random_rank<F>(static_cast<std::size_t>(dims[static_cast<std::size_t>(a.dst)]),
                                                       static_cast<std::size_t>(dims[static_cast<std::size_t>(a.src)]), rng));
    return KQModule<F>(q, dims, std::move(maps));
}

template <ExactField F>
PiModule<F> random_pi_module(const Quiver& q, const Dims& dims, std::mt19937_64& rng, const RandomModuleOptions& opt) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const KQModule<F> x = random_kq_module<F>(q, dims, rng);
    const Matrix<F> basis = kernel_basis(starred_relation_system(x));
    std::vector<F> coeff(basis.cols(), F::zero());
    const bool sparse = coin(rng) < opt.sparse_probability;
    for (auto& c : coeff)
        if (!sparse || coin(rng) < 0.5) c = F::random(rng);
    PiModule<F> m = embed_KQ(x, starred_maps_from_vector(x, basis.apply(coeff)));
    if (coin(rng) < opt.dual_probability) m = dual(m);
    return m;
}

template <ExactField F>
PiModule<F> random_pi_module(const Quiver& q, std::mt19937_64& rng, const RandomModuleOptions& opt) {
    Dims d(static_cast<std::size_t>(q.vertex_count()));
    for (auto& x : d) x = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(opt.max_dim) + 1));
    return random_pi_module<F>(q, d, rng, opt);
}

#define PREPROJ_INSTANTIATE(F)                                                                                       \
    template Matrix<F> random_matrix<F>(std::size_t, std::size_t, std::mt19937_64&);                                 \
    template Matrix<F> random_matrix_of_random_rank<F>(std::size_t, std::size_t, std::mt19937_64&);                  \
    template KQModule<F> random_kq_module<F>(const Quiver&, const Dims&, std::mt19937_64&);                          \
    template PiModule<F> random_pi_module<F>(const Quiver&, const Dims&, std::mt19937_64&, const RandomModuleOptions&); \
    template PiModule<F> random_pi_module<F>(const Quiver&, std::mt19937_64&, const RandomModuleOptions&);

PREPROJ_INSTANTIATE(Fp)
PREPROJ_INSTANTIATE(Rational)

}  // namespace preproj
