#include "preproj/pi_module.hpp"

#include <stdexcept>

namespace preproj {

namespace {

int sum_dims(const Dims& d) {
    int s = 0;
    for (int x : d) s += x;
    return s;
}

RootVec first_coords(const Dims& d, int n) {
    RootVec v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i)];
    return v;
}

template <ExactField F>
struct ArrowPair {
    int src;
    int dst;
    const Matrix<F>* m;
    const Matrix<F>* n;
};

// Unknowns: f_v (dim N_v x dim M_v, row-major) for each vertex in order.
// Equations: f_{t(a)} M_a - N_a f_{s(a)} = 0 for each arrow.
template <ExactField F>
std::vector<Morphism<F>> intertwiners(const Dims& dm, const Dims& dn, const std::vector<ArrowPair<F>>& arrows) {
    const std::size_t nv = dm.size();
    std::vector<std::size_t> off(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v)
        off[v + 1] = off[v] + static_cast<std::size_t>(dn[v]) * static_cast<std::size_t>(dm[v]);
    std::size_t eqs = 0;
    for (const auto& a : arrows)
        eqs += static_cast<std::size_t>(dn[static_cast<std::size_t>(a.dst)]) * static_cast<std::size_t>(dm[static_cast<std::size_t>(a.src)]);
    Matrix<F> sys(eqs, off[nv]);
    std::size_t row = 0;
    for (const auto& a : arrows) {
        const auto s = static_cast<std::size_t>(a.src), t = static_cast<std::size_t>(a.dst);
        const auto ms = static_cast<std::size_t>(dm[s]), mt = static_cast<std::size_t>(dm[t]);
        const auto ns = static_cast<std::size_t>(dn[s]), nt = static_cast<std::size_t>(dn[t]);
        for (std::size_t r = 0; r < nt; ++r)
            for (std::size_t c = 0; c < ms; ++c, ++row) {
                for (std::size_t k = 0; k < mt; ++k) sys(row, off[t] + r * mt + k) += (*a.m)(k, c);
                for (std::size_t k = 0; k < ns; ++k) sys(row, off[s] + k * ms + c) -= (*a.n)(r, k);
            }
    }
    const Matrix<F> ker = kernel_basis(sys);
    std::vector<Morphism<F>> out;
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        Morphism<F> f;
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix<F> fv(static_cast<std::size_t>(dn[v]), static_cast<std::size_t>(dm[v]));
            for (std::size_t r = 0; r < fv.rows(); ++r)
                for (std::size_t c = 0; c < fv.cols(); ++c) fv(r, c) = ker(off[v] + r * fv.cols() + c, j);
            f.push_back(std::move(fv));
        }
        out.push_back(std::move(f));
    }
    return out;
}

template <ExactField F>
std::vector<ArrowPair<F>> pair_arrows(const PiModule<F>& m, const PiModule<F>& n) {
    if (!(m.quiver() == n.quiver())) throw std::invalid_argument("modules over different quivers");
    std::vector<ArrowPair<F>> arrows;
    for (std::size_t a = 0; a < m.quiver().arrow_count(); ++a) {
        const auto& h = m.quiver().arrow(static_cast<int>(a));
        arrows.push_back({h.src, h.dst, &m.map(static_cast<int>(a)), &n.map(static_cast<int>(a))});
    }
    return arrows;
}

template <ExactField F>
std::vector<ArrowPair<F>> pair_arrows(const KQModule<F>& m, const KQModule<F>& n) {
    if (!(m.quiver() == n.quiver())) throw std::invalid_argument("modules over different quivers");
    std::vector<ArrowPair<F>> arrows;
    for (std::size_t a = 0; a < m.quiver().arrow_count(); ++a) {
        const auto& e = m.quiver().arrows()[a];
        arrows.push_back({e.src, e.dst, &m.map(static_cast<int>(a)), &n.map(static_cast<int>(a))});
    }
    return arrows;
}

template <ExactField F>
Morphism<F> random_morphism(const std::vector<Morphism<F>>& basis, const Dims& dm, const Dims& dn, std::mt19937_64& rng) {
    Morphism<F> f;
    for (std::size_t v = 0; v < dm.size(); ++v) f.emplace_back(static_cast<std::size_t>(dn[v]), static_cast<std::size_t>(dm[v]));
    for (const auto& b : basis) {
        const F c = F::random(rng);
        for (std::size_t v = 0; v < f.size(); ++v) f[v] = f[v] + c * b[v];
    }
    return f;
}

template <ExactField F>
bool invertible_everywhere(const Morphism<F>& f) {
    for (const auto& fv : f)
        if (!is_invertible(fv)) return false;
    return true;
}

template <class Module>
IsoVerdict sample_isomorphism(const Module& m, const Module& n, IsoOptions opt) {
    const auto basis = hom_basis(m, n);
    std::mt19937_64 rng(opt.seed);
    for (int t = 0; t < opt.attempts; ++t)
        if (invertible_everywhere(random_morphism(basis, m.dims(), n.dims(), rng))) return IsoVerdict::yes;
    return IsoVerdict::inconclusive;
}

template <ExactField F>
void check_shapes(const Dims& dims, int src, int dst, const Matrix<F>& m, const std::string& what) {
    if (m.rows() != static_cast<std::size_t>(dims[static_cast<std::size_t>(dst)]) ||
        m.cols() != static_cast<std::size_t>(dims[static_cast<std::size_t>(src)]))
        throw std::invalid_argument(what + ": map has shape " + m.shape() + ", expected " +
                                    std::to_string(dims[static_cast<std::size_t>(dst)]) + "x" +
                                    std::to_string(dims[static_cast<std::size_t>(src)]));
}

}  // namespace

std::string to_string(IsoVerdict v) {
    switch (v) {
        case IsoVerdict::yes: return "yes";
        case IsoVerdict::no: return "no";
        case IsoVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

std::int64_t symmetric_form(const DoubledQuiver& q, const Dims& mu, const Dims& nu) {
    std::int64_t s = 0;
    for (std::size_t v = 0; v < mu.size(); ++v) s += 2LL * mu[v] * nu[v];
    for (const auto& a : q.arrows())
        s -= static_cast<std::int64_t>(nu[static_cast<std::size_t>(a.src)]) * mu[static_cast<std::size_t>(a.dst)];
    return s;
}

std::int64_t euler_form(const Quiver& q, const Dims& mu, const Dims& nu) {
    std::int64_t s = 0;
    for (std::size_t v = 0; v < mu.size(); ++v) s += static_cast<std::int64_t>(mu[v]) * nu[v];
    for (const auto& a : q.arrows())
        s -= static_cast<std::int64_t>(mu[static_cast<std::size_t>(a.src)]) * nu[static_cast<std::size_t>(a.dst)];
    return s;
}

template <ExactField F>
PiModule<F>::PiModule(DoubledQuiver q, Dims dims) : q_(std::move(q)), dims_(std::move(dims)) {
    if (dims_.size() != static_cast<std::size_t>(q_.vertex_count())) throw std::invalid_argument("PiModule: dims size");
    for (const auto& a : q_.arrows())
        maps_.emplace_back(static_cast<std::size_t>(dim(a.dst)), static_cast<std::size_t>(dim(a.src)));
}

template <ExactField F>
PiModule<F>::PiModule(DoubledQuiver q, Dims dims, std::vector<Matrix<F>> maps)
    : q_(std::move(q)), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (dims_.size() != static_cast<std::size_t>(q_.vertex_count())) throw std::invalid_argument("PiModule: dims size");
    if (maps_.size() != q_.arrow_count()) throw std::invalid_argument("PiModule: one map per doubled arrow expected");
    for (std::size_t a = 0; a < maps_.size(); ++a)
        check_shapes(dims_, q_.arrow(static_cast<int>(a)).src, q_.arrow(static_cast<int>(a)).dst, maps_[a],
                     "PiModule arrow " + q_.arrow_name(static_cast<int>(a)));
}

template <ExactField F>
int PiModule<F>::total_dim() const {
    return sum_dims(dims_);
}

template <ExactField F>
void PiModule<F>::set_map(int a, Matrix<F> m) {
    check_shapes(dims_, q_.arrow(a).src, q_.arrow(a).dst, m, "PiModule::set_map " + q_.arrow_name(a));
    maps_[static_cast<std::size_t>(a)] = std::move(m);
}

template <ExactField F>
RootVec PiModule<F>::dimvec() const {
    return first_coords(dims_, q_.base_vertex_count());
}

template <ExactField F>
KQModule<F>::KQModule(Quiver q, Dims dims) : q_(std::move(q)), dims_(std::move(dims)) {
    if (dims_.size() != static_cast<std::size_t>(q_.vertex_count())) throw std::invalid_argument("KQModule: dims size");
    for (const auto& a : q_.arrows())
        maps_.emplace_back(static_cast<std::size_t>(dim(a.dst)), static_cast<std::size_t>(dim(a.src)));
}

template <ExactField F>
KQModule<F>::KQModule(Quiver q, Dims dims, std::vector<Matrix<F>> maps)
    : q_(std::move(q)), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (dims_.size() != static_cast<std::size_t>(q_.vertex_count())) throw std::invalid_argument("KQModule: dims size");
    if (maps_.size() != q_.arrow_count()) throw std::invalid_argument("KQModule: one map per arrow expected");
    for (std::size_t a = 0; a < maps_.size(); ++a)
        check_shapes(dims_, q_.arrows()[a].src, q_.arrows()[a].dst, maps_[a], "KQModule arrow " + std::to_string(a + 1));
}

template <ExactField F>
int KQModule<F>::total_dim() const {
    return sum_dims(dims_);
}

template <ExactField F>
void KQModule<F>::set_map(int a, Matrix<F> m) {
    const auto& e = q_.arrows()[static_cast<std::size_t>(a)];
    check_shapes(dims_, e.src, e.dst, m, "KQModule::set_map");
    maps_[static_cast<std::size_t>(a)] = std::move(m);
}

template <ExactField F>
RootVec KQModule<F>::dimvec() const {
    return first_coords(dims_, q_.vertex_count());
}

template <ExactField F>
PiModule<F> simple_module(const DoubledQuiver& q, int v) {
    Dims d(static_cast<std::size_t>(q.vertex_count()), 0);
    d[static_cast<std::size_t>(v)] = 1;
    return PiModule<F>(q, d);
}

template <ExactField F>
KQModule<F> simple_kq_module(const Quiver& q, int v) {
    Dims d(static_cast<std::size_t>(q.vertex_count()), 0);
    d[static_cast<std::size_t>(v)] = 1;
    return KQModule<F>(q, d);
}

template <ExactField F>
ValidationReport validate(const PiModule<F>& m) {
    const auto& q = m.quiver();
    for (int v = 0; v < q.vertex_count(); ++v) {
        const auto n = static_cast<std::size_t>(m.dim(v));
        Matrix<F> rel(n, n);
        for (int a : q.arrows_into(v)) {
            const auto& h = q.arrow(a);
            Matrix<F> term = m.map(a) * m.map(h.star);
            rel = h.sign > 0 ? rel + term : rel - term;
        }
        if (!rel.is_zero()) {
            std::string label = q.is_primed(v) ? std::to_string(v - q.base_vertex_count() + 1) + "'" : std::to_string(v + 1);
            return {false, v, "preprojective relation fails at vertex " + label};
        }
    }
    return {};
}

template <ExactField F>
PiModule<F> dual(const PiModule<F>& m) {
    std::vector<Matrix<F>> maps;
    for (const auto& h : m.quiver().arrows()) maps.push_back(m.map(h.star).transpose());
    return PiModule<F>(m.quiver(), m.dims(), std::move(maps));
}

template <ExactField F>
PiModule<F> direct_sum(const PiModule<F>& m, const PiModule<F>& n) {
    if (!(m.quiver() == n.quiver())) throw std::invalid_argument("direct_sum: different quivers");
    Dims d = m.dims();
    for (std::size_t v = 0; v < d.size(); ++v) d[v] += n.dims()[v];
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < m.maps().size(); ++a) maps.push_back(block_diag(m.maps()[a], n.maps()[a]));
    return PiModule<F>(m.quiver(), d, std::move(maps));
}

template <ExactField F>
KQModule<F> direct_sum(const KQModule<F>& m, const KQModule<F>& n) {
    if (!(m.quiver() == n.quiver())) throw std::invalid_argument("direct_sum: different quivers");
    Dims d = m.dims();
    for (std::size_t v = 0; v < d.size(); ++v) d[v] += n.dims()[v];
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < m.maps().size(); ++a) maps.push_back(block_diag(m.maps()[a], n.maps()[a]));
    return KQModule<F>(m.quiver(), d, std::move(maps));
}

template <ExactField F>
std::vector<Morphism<F>> hom_basis(const PiModule<F>& m, const PiModule<F>& n) {
    return intertwiners(m.dims(), n.dims(), pair_arrows(m, n));
}

template <ExactField F>
std::vector<Morphism<F>> hom_basis(const KQModule<F>& m, const KQModule<F>& n) {
    return intertwiners(m.dims(), n.dims(), pair_arrows(m, n));
}

template <ExactField F>
std::size_t hom_dim(const PiModule<F>& m, const PiModule<F>& n) {
    return hom_basis(m, n).size();
}

template <ExactField F>
std::size_t hom_dim(const KQModule<F>& m, const KQModule<F>& n) {
    return hom_basis(m, n).size();
}

template <ExactField F>
std::int64_t ext1_dim(const PiModule<F>& m, const PiModule<F>& n) {
    const auto e = static_cast<std::int64_t>(hom_dim(m, n) + hom_dim(n, m)) - symmetric_form(m.quiver(), m.dims(), n.dims());
    if (e < 0)
        throw std::logic_error("ext1_dim: negative value " + std::to_string(e) + " (invalid module or unlucky prime)");
    return e;
}

template <ExactField F>
bool is_morphism(const Morphism<F>& f, const PiModule<F>& m, const PiModule<F>& n) {
    if (f.size() != m.dims().size()) return false;
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v].rows() != static_cast<std::size_t>(n.dims()[v]) || f[v].cols() != static_cast<std::size_t>(m.dims()[v]))
            return false;
    for (std::size_t a = 0; a < m.quiver().arrow_count(); ++a) {
        const auto& h = m.quiver().arrow(static_cast<int>(a));
        if (!(f[static_cast<std::size_t>(h.dst)] * m.map(static_cast<int>(a)) ==
              n.map(static_cast<int>(a)) * f[static_cast<std::size_t>(h.src)]))
            return false;
    }
    return true;
}

template <ExactField F>
LocalData<F> local_data(const PiModule<F>& m, int i) {
    const auto& q = m.quiver();
    LocalData<F> ld;
    ld.arrows = q.arrows_into(i);
    std::vector<Matrix<F>> ins, outs;
    for (int a : ld.arrows) {
        const auto& h = q.arrow(a);
        ld.offsets.push_back(ld.tilde_dim);
        ld.tilde_dim += static_cast<std::size_t>(m.dim(h.src));
        ins.push_back(h.sign > 0 ? m.map(a) : -m.map(a));
        outs.push_back(m.map(h.star));
    }
    const auto di = static_cast<std::size_t>(m.dim(i));
    ld.in = hstack(di, ins);
    ld.out = vstack(di, outs);
    return ld;
}

template <ExactField F>
SocleHead<F> socle_head(const PiModule<F>& m, int i) {
    const auto ld = local_data(m, i);
    SocleHead<F> sh;
    sh.socle_embedding = kernel_basis(ld.out);
    sh.head_projection = cokernel_projection(ld.in);
    sh.socle_dim = sh.socle_embedding.cols();
    sh.head_dim = sh.head_projection.rows();
    return sh;
}

template <ExactField F>
IsoVerdict is_isomorphic(const PiModule<F>& m, const PiModule<F>& n, IsoOptions opt) {
    if (!(m.quiver() == n.quiver()) || m.dims() != n.dims()) return IsoVerdict::no;
    if (m.total_dim() == 0) return IsoVerdict::yes;
    // Exact invariants first; any mismatch certifies non-isomorphism.
    const auto mn = hom_dim(m, n), nm = hom_dim(n, m);
    if (mn != nm || mn != hom_dim(m, m) || nm != hom_dim(n, n)) return IsoVerdict::no;
    for (int v = 0; v < m.quiver().vertex_count(); ++v) {
        const auto a = socle_head(m, v), b = socle_head(n, v);
        if (a.socle_dim != b.socle_dim || a.head_dim != b.head_dim) return IsoVerdict::no;
    }
    return sample_isomorphism(m, n, opt);
}

template <ExactField F>
IsoVerdict is_isomorphic(const KQModule<F>& m, const KQModule<F>& n, IsoOptions opt) {
    if (!(m.quiver() == n.quiver()) || m.dims() != n.dims()) return IsoVerdict::no;
    if (m.total_dim() == 0) return IsoVerdict::yes;
    const auto mn = hom_dim(m, n), nm = hom_dim(n, m);
    if (mn != nm || mn != hom_dim(m, m) || nm != hom_dim(n, n)) return IsoVerdict::no;
    return sample_isomorphism(m, n, opt);
}

template <ExactField F>
KQModule<F> restrict_to_Q(const PiModule<F>& m) {
    if (m.quiver().is_extended()) throw std::invalid_argument("restrict_to_Q: extended-quiver module");
    std::vector<Matrix<F>> maps;
    for (std::size_t k = 0; k < m.quiver().quiver().arrow_count(); ++k) maps.push_back(m.map(static_cast<int>(2 * k)));
    return KQModule<F>(m.quiver().quiver(), m.dims(), std::move(maps));
}

template <ExactField F>
PiModule<F> embed_KQ(const KQModule<F>& x, const std::vector<Matrix<F>>& starred) {
    if (starred.size() != x.quiver().arrow_count()) throw std::invalid_argument("embed_KQ: one starred map per arrow");
    std::vector<Matrix<F>> maps;
    for (std::size_t k = 0; k < starred.size(); ++k) {
        maps.push_back(x.map(static_cast<int>(k)));
        maps.push_back(starred[k]);
    }
    PiModule<F> m(DoubledQuiver(x.quiver()), x.dims(), std::move(maps));
    const auto rep = validate(m);
    if (!rep.ok) throw std::invalid_argument("embed_KQ: " + rep.message);
    return m;
}

template <ExactField F>
Matrix<F> starred_relation_system(const KQModule<F>& x) {
    const auto& q = x.quiver();
    std::vector<std::size_t> off(q.arrow_count() + 1, 0);
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const auto& e = q.arrows()[a];
        off[a + 1] = off[a] + static_cast<std::size_t>(x.dim(e.src)) * static_cast<std::size_t>(x.dim(e.dst));
    }
    std::size_t eqs = 0;
    for (int v = 0; v < q.vertex_count(); ++v) eqs += static_cast<std::size_t>(x.dim(v)) * static_cast<std::size_t>(x.dim(v));
    Matrix<F> sys(eqs, off.back());
    std::size_t base = 0;
    for (int v = 0; v < q.vertex_count(); ++v) {
        const auto dv = static_cast<std::size_t>(x.dim(v));
        for (std::size_t a = 0; a < q.arrow_count(); ++a) {
            const auto& e = q.arrows()[a];
            const Matrix<F>& xa = x.map(static_cast<int>(a));          // dim t x dim s
            const auto ds = static_cast<std::size_t>(x.dim(e.src)), dt = static_cast<std::size_t>(x.dim(e.dst));
            // y_a is ds x dt, entry (k, c) at off[a] + k * dt + c
            if (e.dst == v) {  // + x_a y_a
                for (std::size_t r = 0; r < dv; ++r)
                    for (std::size_t c = 0; c < dv; ++c)
                        for (std::size_t k = 0; k < ds; ++k) sys(base + r * dv + c, off[a] + k * dt + c) += xa(r, k);
            }
            if (e.src == v) {  // - y_a x_a
                for (std::size_t r = 0; r < dv; ++r)
                    for (std::size_t c = 0; c < dv; ++c)
                        for (std::size_t k = 0; k < dt; ++k) sys(base + r * dv + c, off[a] + r * dt + k) -= xa(k, c);
            }
        }
        base += dv * dv;
    }
    return sys;
}

template <ExactField F>
std::vector<Matrix<F>> starred_maps_from_vector(const KQModule<F>& x, const std::vector<F>& v) {
    std::vector<Matrix<F>> ys;
    std::size_t pos = 0;
    for (const auto& e : x.quiver().arrows()) {
        Matrix<F> y(static_cast<std::size_t>(x.dim(e.src)), static_cast<std::size_t>(x.dim(e.dst)));
        for (std::size_t r = 0; r < y.rows(); ++r)
            for (std::size_t c = 0; c < y.cols(); ++c) y(r, c) = v.at(pos++);
        ys.push_back(std::move(y));
    }
    if (pos != v.size()) throw std::invalid_argument("starred_maps_from_vector: length mismatch");
    return ys;
}

template <ExactField F>
bool is_stable(const PiModule<F>& m) {
    if (!m.quiver().is_extended()) throw std::invalid_argument("is_stable: expects an extended-quiver module");
    for (int v = 0; v < m.quiver().base_vertex_count(); ++v) {
        const auto ld = local_data(m, v);
        if (rank(ld.out) != static_cast<std::size_t>(m.dim(v))) return false;
    }
    return true;
}

template <ExactField F>
PiModule<F> drop_primed(const PiModule<F>& m, const DoubledQuiver& base) {
    Dims d(m.dims().begin(), m.dims().begin() + base.vertex_count());
    std::vector<Matrix<F>> maps(m.maps().begin(), m.maps().begin() + static_cast<std::ptrdiff_t>(base.arrow_count()));
    return PiModule<F>(base, d, std::move(maps));
}

#define PREPROJ_INSTANTIATE(F)                                                                               \
    template class PiModule<F>;                                                                              \
    template class KQModule<F>;                                                                              \
    template PiModule<F> simple_module<F>(const DoubledQuiver&, int);                                        \
    template KQModule<F> simple_kq_module<F>(const Quiver&, int);                                            \
    template ValidationReport validate<F>(const PiModule<F>&);                                               \
    template PiModule<F> dual<F>(const PiModule<F>&);                                                        \
    template PiModule<F> direct_sum<F>(const PiModule<F>&, const PiModule<F>&);                              \
    template KQModule<F> direct_sum<F>(const KQModule<F>&, const KQModule<F>&);                              \
    template std::vector<Morphism<F>> hom_basis<F>(const PiModule<F>&, const PiModule<F>&);                  \
    template std::vector<Morphism<F>> hom_basis<F>(const KQModule<F>&, const KQModule<F>&);                  \
    template std::size_t hom_dim<F>(const PiModule<F>&, const PiModule<F>&);                                 \
    template std::size_t hom_dim<F>(const KQModule<F>&, const KQModule<F>&);                                 \
    template std::int64_t ext1_dim<F>(const PiModule<F>&, const PiModule<F>&);                               \
    template bool is_morphism<F>(const Morphism<F>&, const PiModule<F>&, const PiModule<F>&);                \
    template LocalData<F> local_data<F>(const PiModule<F>&, int);                                            \
    template SocleHead<F> socle_head<F>(const PiModule<F>&, int);                                            \
    template IsoVerdict is_isomorphic<F>(const PiModule<F>&, const PiModule<F>&, IsoOptions);                \
    template IsoVerdict is_isomorphic<F>(const KQModule<F>&, const KQModule<F>&, IsoOptions);                \
    template KQModule<F> restrict_to_Q<F>(const PiModule<F>&);                                               \
    template PiModule<F> embed_KQ<F>(const KQModule<F>&, const std::vector<Matrix<F>>&);                     \
    template Matrix<F> starred_relation_system<F>(const KQModule<F>&);                                       \
    template std::vector<Matrix<F>> starred_maps_from_vector<F>(const KQModule<F>&, const std::vector<F>&);  \
    template bool is_stable<F>(const PiModule<F>&);                                                          \
    template PiModule<F> drop_primed<F>(const PiModule<F>&, const DoubledQuiver&);

PREPROJ_INSTANTIATE(Fp)
PREPROJ_INSTANTIATE(Rational)

}  // namespace preproj
