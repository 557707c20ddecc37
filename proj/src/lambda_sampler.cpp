#include "preproj/lambda_sampler.hpp"

#include <algorithm>
#include <stdexcept>

namespace preproj {

bool is_sink_adapted(const Quiver& q, const Word& word) {
    Quiver cur = q;
    for (int i : word) {
        if (i < 0 || i >= cur.vertex_count() || !cur.is_sink(i)) return false;
        cur = cur.reflected_at(i);
    }
    return true;
}

template <ExactField F>
KQModule<F> generic_kq_point(const RootSystem& rs, const Quiver& q, const LusztigDatum& n) {
    if (!is_sink_adapted(q, n.word) || !is_w0_word(rs, n.word))
        throw std::invalid_argument("generic_kq_point: " + word_to_string(n.word) + " is not a sink-adapted reduced word of w0");
    const auto betas = rs.betas(n.word);
    KQModule<F> m(q, Dims(rs.n(), 0));
    for (std::size_t r = 0; r < betas.size(); ++r) {
        if (n.n[r] < 0) throw std::invalid_argument("generic_kq_point: negative multiplicity");
        if (n.n[r] == 0) continue;
        const KQModule<F> ind = indecomposable<F>(rs, betas[r], q);
        for (std::int64_t c = 0; c < n.n[r]; ++c) m = direct_sum(m, ind);
    }
    return m;
}

template <ExactField F>
PiModule<F> conormal_sample(const KQModule<F>& x, std::uint64_t seed) {
    const auto v = random_kernel_element(starred_relation_system(x), seed);
    return embed_KQ(x, starred_maps_from_vector(x, v));
}

template <ExactField F>
ComponentBZ component_bz(const NGammaCache<F>& cache, const HyperplaneDatum& b, int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("component_bz: need at least one sample");
    const auto& rs = cache.root_system();
    ComponentBZ out;
    out.sink_datum = lusztig_datum(rs, b, rs.adapted_word(cache.orientation(), RootSystem::Adaptation::sink));
    const KQModule<F> x = generic_kq_point<F>(rs, cache.orientation(), out.sink_datum);
    for (int s = 0; s < k; ++s) {
        const auto a = polytope_of_module(cache, conormal_sample(x, mix_seed(seed, static_cast<std::uint64_t>(s))));
        if (out.datum.empty())
            out.datum = a;
        else
            for (std::size_t g = 0; g < a.size(); ++g) out.datum[g] = std::min(out.datum[g], a[g]);
    }
    out.samples = k;
    out.report = validate_bz(rs, out.datum);
    return out;
}

template <ExactField F>
ComponentBZ component_bz_escalating(const NGammaCache<F>& cache, const HyperplaneDatum& b, int k, std::uint64_t seed) {
    ComponentBZ r = component_bz(cache, b, k, seed);
    if (!r.ok()) r = component_bz(cache, b, 2 * k, mix_seed(seed, 0xe5ca1a7e));
    return r;
}

std::size_t StrataReport::total() const {
    std::size_t t = 0;
    for (const auto& [k, c] : counts) t += c;
    return t;
}

template <ExactField F>
StrataReport stratify(const NGammaCache<F>& cache, const std::vector<PiModule<F>>& samples) {
    StrataReport r;
    if (samples.empty()) return r;
    const auto& rs = cache.root_system();
    const RootVec nu = samples.front().dimvec();
    for (const auto& s : samples) {
        if (!(s.dimvec() == nu)) throw std::invalid_argument("stratify: mixed dimension vectors");
        ++r.counts[polytope_of_module(cache, s)];
    }
    for (const auto& [a, c] : r.counts) {
        if (!vertex(rs, a, rs.identity()).is_zero() || !(weight(rs, a) == nu))
            throw std::logic_error("stratify: polytope does not run from 0 to the dimension vector");
    }
    return r;
}

template <ExactField F>
DimensionAudit dimension_audit(const RootSystem& rs, const KQModule<F>& x) {
    DimensionAudit d;
    const auto& q = x.quiver();
    for (int v = 0; v < q.vertex_count(); ++v) d.group_dim += static_cast<std::int64_t>(x.dim(v)) * x.dim(v);
    for (const auto& a : q.arrows()) d.rep_dim += static_cast<std::int64_t>(x.dim(a.src)) * x.dim(a.dst);
    d.orbit_dim = d.group_dim - static_cast<std::int64_t>(hom_dim(x, x));
    const Matrix<F> sys = starred_relation_system(x);
    d.fiber_dim = static_cast<std::int64_t>(sys.cols()) - static_cast<std::int64_t>(rank(sys));
    d.expected = d.group_dim - rs.form(x.dimvec(), x.dimvec()) / 2;
    if (d.orbit_dim + d.fiber_dim != d.rep_dim) {
        d.ok = false;
        d.message = "orbit + fiber = " + std::to_string(d.orbit_dim + d.fiber_dim) + " but dim Rep = " + std::to_string(d.rep_dim);
    } else if (d.orbit_dim + d.fiber_dim != d.expected) {
        d.ok = false;
        d.message = "orbit + fiber = " + std::to_string(d.orbit_dim + d.fiber_dim) +
                    " but dim G - (nu,nu)/2 = " + std::to_string(d.expected);
    }
    return d;
}

#define PREPROJ_INSTANTIATE(F)                                                                                  \
    template KQModule<F> generic_kq_point<F>(const RootSystem&, const Quiver&, const LusztigDatum&);            \
    template PiModule<F> conormal_sample<F>(const KQModule<F>&, std::uint64_t);                                 \
    template ComponentBZ component_bz<F>(const NGammaCache<F>&, const HyperplaneDatum&, int, std::uint64_t);    \
    template ComponentBZ component_bz_escalating<F>(const NGammaCache<F>&, const HyperplaneDatum&, int,         \
                                                    std::uint64_t);                                             \
    template StrataReport stratify<F>(const NGammaCache<F>&, const std::vector<PiModule<F>>&);                  \
    template DimensionAudit dimension_audit<F>(const RootSystem&, const KQModule<F>&);

PREPROJ_INSTANTIATE(Fp)
PREPROJ_INSTANTIATE(Rational)

}  // namespace preproj
