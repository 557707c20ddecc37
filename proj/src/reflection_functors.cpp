#include "preproj/reflection_functors.hpp"

#include <stdexcept>

namespace preproj {

namespace {

void require_unprimed(const DoubledQuiver& q, int i, const char* what) {
    if (i < 0 || i >= q.base_vertex_count())
        throw std::invalid_argument(std::string(what) + ": vertex out of range or primed");
}

template <ExactField F>
Matrix<F> signed_block(int sign, const Matrix<F>& m) {
    return sign > 0 ? m : -m;
}

}  // namespace

template <ExactField F>
PiModule<F> sigma(const PiModule<F>& m, int i) {
    require_unprimed(m.quiver(), i, "sigma");
    const auto& q = m.quiver();
    const auto ld = local_data(m, i);
    const Matrix<F> incl = kernel_basis(ld.in);
    const auto coords = solve_matrix(incl, ld.out * ld.in);  // lands in ker in since in*out = 0
    if (!coords) throw std::invalid_argument("sigma: input violates the relation at vertex " + std::to_string(i + 1));
    const std::size_t k = incl.cols();

    Dims d = m.dims();
    d[static_cast<std::size_t>(i)] = static_cast<int>(k);
    std::vector<Matrix<F>> maps = m.maps();
    for (std::size_t p = 0; p < ld.arrows.size(); ++p) {
        const int a = ld.arrows[p];
        const auto& h = q.arrow(a);
        const auto ds = static_cast<std::size_t>(m.dim(h.src));
        maps[static_cast<std::size_t>(a)] = signed_block(h.sign, coords->block(0, ld.offsets[p], k, ds));
        maps[static_cast<std::size_t>(h.star)] = incl.block(ld.offsets[p], 0, ds, k);
    }
    return PiModule<F>(q, d, std::move(maps));
}

template <ExactField F>
PiModule<F> sigma_star(const PiModule<F>& m, int i) {
    require_unprimed(m.quiver(), i, "sigma_star");
    const auto& q = m.quiver();
    const auto ld = local_data(m, i);
    const Matrix<F> proj = cokernel_projection(ld.out);
    const std::size_t c = proj.rows();
    // out * in vanishes on im out, so it factors through the projection.
    const Matrix<F> induced = ld.out * ld.in * right_inverse(proj);

    Dims d = m.dims();
    d[static_cast<std::size_t>(i)] = static_cast<int>(c);
    std::vector<Matrix<F>> maps = m.maps();
    for (std::size_t p = 0; p < ld.arrows.size(); ++p) {
        const int a = ld.arrows[p];
        const auto& h = q.arrow(a);
        const auto ds = static_cast<std::size_t>(m.dim(h.src));
        maps[static_cast<std::size_t>(a)] = signed_block(h.sign, proj.block(0, ld.offsets[p], c, ds));
        maps[static_cast<std::size_t>(h.star)] = induced.block(ld.offsets[p], 0, ds, c);
    }
    return PiModule<F>(q, d, std::move(maps));
}

template <ExactField F>
CanonicalMorphisms<F> canonical_morphisms(const PiModule<F>& m, int i) {
    CanonicalMorphisms<F> cm{sigma_star(m, i), sigma(m, i), {}, {}};
    const auto ld = local_data(m, i);
    const auto nv = static_cast<std::size_t>(m.quiver().vertex_count());
    for (std::size_t v = 0; v < nv; ++v) {
        const auto dv = static_cast<std::size_t>(m.dims()[v]);
        if (static_cast<int>(v) != i) {
            cm.from_sigma_star.push_back(Matrix<F>::identity(dv));
            cm.to_sigma.push_back(Matrix<F>::identity(dv));
            continue;
        }
        // Same bases as sigma / sigma_star: they are deterministic in the input.
        const Matrix<F> incl = kernel_basis(ld.in);
        const auto z = solve_matrix(incl, ld.out);
        if (!z) throw std::logic_error("canonical_morphisms: out-map does not land in ker in");
        cm.to_sigma.push_back(*z);
        cm.from_sigma_star.push_back(ld.in * right_inverse(cokernel_projection(ld.out)));
    }
    return cm;
}

template <ExactField F>
KQModule<F> bgp(const KQModule<F>& m, int i, BgpDirection dir) {
    const auto& q = m.quiver();
    std::vector<std::size_t> arrows;
    for (std::size_t k = 0; k < q.arrow_count(); ++k)
        if (q.arrows()[k].src == i || q.arrows()[k].dst == i) arrows.push_back(k);
    Dims d = m.dims();
    std::vector<Matrix<F>> maps = m.maps();
    const auto di = static_cast<std::size_t>(m.dim(i));
    if (dir == BgpDirection::minus) {
        if (!q.is_source(i)) throw std::invalid_argument("bgp minus: vertex " + std::to_string(i + 1) + " is not a source");
        std::vector<Matrix<F>> outs;
        for (auto k : arrows) outs.push_back(m.map(static_cast<int>(k)));
        const Matrix<F> proj = cokernel_projection(vstack(di, outs));
        std::size_t off = 0;
        for (auto k : arrows) {
            const auto dt = static_cast<std::size_t>(m.dim(q.arrows()[k].dst));
            maps[k] = proj.block(0, off, proj.rows(), dt);
            off += dt;
        }
        d[static_cast<std::size_t>(i)] = static_cast<int>(proj.rows());
    } else {
        if (!q.is_sink(i)) throw std::invalid_argument("bgp plus: vertex " + std::to_string(i + 1) + " is not a sink");
        std::vector<Matrix<F>> ins;
        for (auto k : arrows) ins.push_back(m.map(static_cast<int>(k)));
        const Matrix<F> incl = kernel_basis(hstack(di, ins));
        std::size_t off = 0;
        for (auto k : arrows) {
            const auto ds = static_cast<std::size_t>(m.dim(q.arrows()[k].src));
            maps[k] = incl.block(off, 0, ds, incl.cols());
            off += ds;
        }
        d[static_cast<std::size_t>(i)] = static_cast<int>(incl.cols());
    }
    return KQModule<F>(q.reflected_at(i), d, std::move(maps));
}

template <ExactField F>
PiModule<F> upsilon_pullback(const PiModule<F>& m, int i) {
    const auto& q = m.quiver();
    if (q.is_extended()) throw std::invalid_argument("upsilon_pullback: expects a Pi(Q)-module");
    if (!q.quiver().is_source(i)) throw std::invalid_argument("upsilon_pullback: vertex is not a source");
    std::vector<Matrix<F>> maps = m.maps();
    for (std::size_t k = 0; k < q.quiver().arrow_count(); ++k) {
        const auto& e = q.quiver().arrows()[k];
        if (e.src != i) continue;
        // the reversed arrow j -> i is the old a*, and terminates at i
        maps[2 * k] = -m.maps()[2 * k + 1];
        maps[2 * k + 1] = m.maps()[2 * k];
    }
    return PiModule<F>(DoubledQuiver(q.quiver().reflected_at(i)), m.dims(), std::move(maps));
}

template <ExactField F>
PiModule<F> upsilon_pullback_inverse(const PiModule<F>& m, int i) {
    const auto& q = m.quiver();
    if (q.is_extended()) throw std::invalid_argument("upsilon_pullback_inverse: expects a Pi(Q)-module");
    if (!q.quiver().is_sink(i)) throw std::invalid_argument("upsilon_pullback_inverse: vertex is not a sink");
    std::vector<Matrix<F>> maps = m.maps();
    for (std::size_t k = 0; k < q.quiver().arrow_count(); ++k) {
        const auto& e = q.quiver().arrows()[k];
        if (e.dst != i) continue;
        maps[2 * k] = m.maps()[2 * k + 1];
        maps[2 * k + 1] = -m.maps()[2 * k];
    }
    return PiModule<F>(DoubledQuiver(q.quiver().reflected_at(i)), m.dims(), std::move(maps));
}

#define PREPROJ_INSTANTIATE(F)                                                           \
    template PiModule<F> sigma<F>(const PiModule<F>&, int);                              \
    template PiModule<F> sigma_star<F>(const PiModule<F>&, int);                         \
    template CanonicalMorphisms<F> canonical_morphisms<F>(const PiModule<F>&, int);      \
    template KQModule<F> bgp<F>(const KQModule<F>&, int, BgpDirection);                  \
    template PiModule<F> upsilon_pullback<F>(const PiModule<F>&, int);                   \
    template PiModule<F> upsilon_pullback_inverse<F>(const PiModule<F>&, int);

PREPROJ_INSTANTIATE(Fp)
PREPROJ_INSTANTIATE(Rational)

}  // namespace preproj
