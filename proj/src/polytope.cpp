#include "preproj/polytope.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace preproj {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

void require_size(const RootSystem& rs, const HyperplaneDatum& a, const char* what) {
    if (a.size() != rs.chamber_weights().size())
        throw std::invalid_argument(std::string(what) + ": hyperplane datum has the wrong number of entries");
}

// A_{-w omega_i} for the enumerated element w.
std::int64_t minus_orbit_value(const RootSystem& rs, const HyperplaneDatum& a, std::size_t w, int i) {
    return a[rs.minus_orbit_index(w, i)];
}

void require_w0_word(const RootSystem& rs, const Word& word, const char* what) {
    if (!is_w0_word(rs, word))
        throw std::invalid_argument(std::string(what) + ": " + word_to_string(word) + " is not a reduced word of w0");
}

}  // namespace

std::string BZReport::summary(const RootSystem& rs) const {
    std::ostringstream os;
    os << "bz1=" << (bz1 ? "ok" : "fail") << " edges=" << edges.size() << " hexagons=" << hexagons.size();
    if (!edges.empty()) {
        const auto& e = edges.front();
        os << " first edge (w=" << word_to_string(rs.elements()[e.w].word()) << ", i=" << e.i + 1 << ", length " << e.length
           << ")";
    }
    if (!hexagons.empty()) {
        const auto& h = hexagons.front();
        os << " first hexagon (w=" << word_to_string(rs.elements()[h.w].word()) << ", " << h.i + 1 << ", " << h.j + 1 << ")";
    }
    return os.str();
}

HyperplaneDatum zero_datum(const RootSystem& rs) { return HyperplaneDatum(rs.chamber_weights().size(), 0); }

std::int64_t value(const RootSystem& rs, const HyperplaneDatum& a, const WeightVec& gamma) {
    return a[rs.require_chamber_index(gamma)];
}

template <ExactField F>
HyperplaneDatum polytope_of_module(const NGammaCache<F>& cache, const PiModule<F>& t) {
    const auto& rs = cache.root_system();
    HyperplaneDatum a;
    a.reserve(rs.chamber_weights().size());
    for (const auto& g : rs.chamber_weights()) a.push_back(static_cast<std::int64_t>(cache.d_gamma(g, t)));
    return a;
}

RootVec vertex(const RootSystem& rs, const HyperplaneDatum& a, const WeylElt& w) {
    require_size(rs, a, "vertex");
    RootVec nu(rs.n());
    for (int i = 0; i < rs.rank(); ++i) nu[at(i)] = -value(rs, a, -rs.act(w, rs.fundamental_weight(i)));
    return rs.act(w, nu);
}

RootVec vertex(const RootSystem& rs, const HyperplaneDatum& a, std::size_t w) {
    require_size(rs, a, "vertex");
    RootVec nu(rs.n());
    for (int i = 0; i < rs.rank(); ++i) nu[at(i)] = -minus_orbit_value(rs, a, w, i);
    return rs.act(rs.elements()[w], nu);
}

std::int64_t edge_length(const RootSystem& rs, const HyperplaneDatum& a, std::size_t w, int i) {
    std::int64_t c = minus_orbit_value(rs, a, w, i) + minus_orbit_value(rs, a, rs.right_multiple(w, i), i);
    for (int j = 0; j < rs.rank(); ++j)
        if (j != i) c += rs.cartan(i, j) * minus_orbit_value(rs, a, w, j);
    return c;
}

VertexDatum vertices_from_hyperplanes(const RootSystem& rs, const HyperplaneDatum& a) {
    require_size(rs, a, "vertices_from_hyperplanes");
    const auto& el = rs.elements();
    for (std::size_t w = 0; w < el.size(); ++w)
        for (int i = 0; i < rs.rank(); ++i)
            if (edge_length(rs, a, w, i) < 0)
                throw std::invalid_argument("not a pseudo-Weyl polytope: edge inequality fails at w=" +
                                            word_to_string(el[w].word()) + ", i=" + std::to_string(i + 1));
    VertexDatum mu;
    mu.reserve(el.size());
    for (std::size_t w = 0; w < el.size(); ++w) mu.push_back(vertex(rs, a, w));
    return mu;
}

RootVec weight(const RootSystem& rs, const HyperplaneDatum& a) { return vertex(rs, a, rs.w0()); }

std::vector<Hexagon> hexagons(const RootSystem& rs) {
    std::vector<Hexagon> out;
    const auto& el = rs.elements();
    for (std::size_t w = 0; w < el.size(); ++w)
        for (auto [i, j] : rs.dynkin_edges())
            if (rs.lengthens_right(el[w], i) && rs.lengthens_right(el[w], j)) out.push_back({w, i, j});
    return out;
}

bool pluecker_holds(const RootSystem& rs, const HyperplaneDatum& a, const Hexagon& h) {
    const std::size_t wi = rs.right_multiple(h.w, h.i);
    const std::size_t wj = rs.right_multiple(h.w, h.j);
    const std::size_t wij = rs.right_multiple(wi, h.j);
    const std::size_t wji = rs.right_multiple(wj, h.i);
    const auto v = [&](std::size_t w, int k) { return minus_orbit_value(rs, a, w, k); };
    const std::int64_t lhs = v(wi, h.i) + v(wj, h.j);
    const std::int64_t rhs = std::max(v(h.w, h.i) + v(wij, h.j), v(wji, h.i) + v(h.w, h.j));
    return lhs == rhs;
}

BZReport validate_bz(const RootSystem& rs, const HyperplaneDatum& a) {
    require_size(rs, a, "validate_bz");
    BZReport r;
    for (int i = 0; i < rs.rank(); ++i)
        if (value(rs, a, -rs.fundamental_weight(i)) != 0) r.bz1 = false;
    const auto& el = rs.elements();
    for (std::size_t w = 0; w < el.size(); ++w)
        for (int i = 0; i < rs.rank(); ++i)
            if (const auto c = edge_length(rs, a, w, i); c < 0) r.edges.push_back({w, i, c});
    for (const auto& h : hexagons(rs))
        if (!pluecker_holds(rs, a, h)) r.hexagons.push_back(h);
    return r;
}

HyperplaneDatum star(const RootSystem& rs, const HyperplaneDatum& a) {
    require_size(rs, a, "star");
    const RootVec nu = weight(rs, a);
    const auto& gs = rs.chamber_weights();
    HyperplaneDatum out(gs.size());
    for (std::size_t k = 0; k < gs.size(); ++k) out[k] = value(rs, a, -gs[k]) + rs.pair(gs[k], nu);
    return out;
}

bool is_w0_word(const RootSystem& rs, const Word& word) {
    if (word.size() != rs.num_positive_roots()) return false;
    for (int i : word)
        if (i < 0 || i >= rs.rank()) return false;
    return rs.is_reduced(word);
}

LusztigDatum lusztig_datum(const RootSystem& rs, const HyperplaneDatum& a, const Word& word) {
    require_size(rs, a, "lusztig_datum");
    require_w0_word(rs, word, "lusztig_datum");
    const auto betas = rs.betas(word);
    LusztigDatum out{word, {}};
    // w_k = s_{i_1} ... s_{i_k} w0, walking from w_0 = w0 down to w_N = e.
    Word prefix;
    RootVec prev = vertex(rs, a, rs.w0());
    for (std::size_t k = 0; k < word.size(); ++k) {
        prefix.push_back(word[k]);
        const RootVec cur = vertex(rs, a, rs.multiply(rs.from_word(prefix), rs.w0()));
        const RootVec d = prev - cur;
        const RootVec& b = betas[k];
        std::size_t j = 0;
        while (b[j] == 0) ++j;
        const std::int64_t nk = d[j] / b[j];
        if (!(nk * b == d) || nk < 0)
            throw std::invalid_argument("lusztig_datum: vertex difference " + to_string(d) + " is not a nonnegative multiple of " +
                                        to_string(b));
        out.n.push_back(nk);
        prev = cur;
    }
    return out;
}

RootVec weight(const RootSystem& rs, const LusztigDatum& n) {
    const auto betas = rs.betas(n.word);
    RootVec nu(rs.n());
    for (std::size_t r = 0; r < betas.size(); ++r) nu += n.n[r] * betas[r];
    return nu;
}

LusztigDatum apply_braid_move(const LusztigDatum& d, int position, bool three) {
    LusztigDatum out = d;
    const auto p = at(position);
    if (!three) {
        std::swap(out.word[p], out.word[p + 1]);
        std::swap(out.n[p], out.n[p + 1]);
        return out;
    }
    const std::int64_t x = d.n[p], y = d.n[p + 1], z = d.n[p + 2];
    const std::int64_t y2 = std::min(x, z);
    out.n[p] = z + y - y2;
    out.n[p + 1] = y2;
    out.n[p + 2] = x + y - y2;
    const int i = d.word[p], j = d.word[p + 1];
    out.word[p] = out.word[p + 2] = j;
    out.word[p + 1] = i;
    return out;
}

namespace {

int require_word_index(const RootSystem& rs, const Word& w, const char* what) {
    require_w0_word(rs, w, what);
    const int idx = rs.w0_tables().graph.find(w);
    if (idx < 0) throw std::logic_error(std::string(what) + ": reduced word missing from the word graph");
    return idx;
}

// Steps from u to the tree root, as (position, three) moves.
LusztigDatum climb_to_root(const W0Tables& t, LusztigDatum d, int u) {
    while (t.parent[at(u)] >= 0) {
        d = apply_braid_move(d, t.parent_position[at(u)], t.parent_three[at(u)]);
        u = t.parent[at(u)];
    }
    return d;
}

}  // namespace

LusztigDatum transition(const RootSystem& rs, const LusztigDatum& n, const Word& target) {
    const auto& t = rs.w0_tables();
    const int from = require_word_index(rs, n.word, "transition");
    const int to = require_word_index(rs, target, "transition");
    if (n.n.size() != n.word.size()) throw std::invalid_argument("transition: tuple length differs from word length");
    const auto& g = t.graph;
    std::vector<int> prev(g.words.size(), -1);
    std::vector<WordGraph::Edge> via(g.words.size());
    std::deque<int> q{from};
    prev[at(from)] = from;
    while (!q.empty() && prev[at(to)] < 0) {
        const int u = q.front();
        q.pop_front();
        for (const auto& e : g.adjacency[at(u)]) {
            if (prev[at(e.to)] >= 0) continue;
            prev[at(e.to)] = u;
            via[at(e.to)] = e;
            q.push_back(e.to);
        }
    }
    if (prev[at(to)] < 0) throw std::logic_error("transition: target word unreachable in the word graph");
    std::vector<WordGraph::Edge> path;
    for (int v = to; v != from; v = prev[at(v)]) path.push_back(via[at(v)]);
    LusztigDatum d = n;
    for (auto it = path.rbegin(); it != path.rend(); ++it) d = apply_braid_move(d, it->position, it->three);
    if (d.word != target) throw std::logic_error("transition: braid path ended on the wrong word");
    return d;
}

LusztigDatum transition_via_root(const RootSystem& rs, const LusztigDatum& n, const Word& target) {
    const auto& t = rs.w0_tables();
    const int from = require_word_index(rs, n.word, "transition_via_root");
    const int to = require_word_index(rs, target, "transition_via_root");
    LusztigDatum d = climb_to_root(t, n, from);
    std::vector<int> down;
    for (int u = to; t.parent[at(u)] >= 0; u = t.parent[at(u)]) down.push_back(u);
    for (auto it = down.rbegin(); it != down.rend(); ++it)
        d = apply_braid_move(d, t.parent_position[at(*it)], t.parent_three[at(*it)]);
    if (d.word != target) throw std::logic_error("transition_via_root: braid path ended on the wrong word");
    return d;
}

std::vector<std::vector<std::int64_t>> data_on_all_words(const RootSystem& rs, const LusztigDatum& n) {
    const auto& t = rs.w0_tables();
    const int from = require_word_index(rs, n.word, "data_on_all_words");
    if (n.n.size() != n.word.size()) throw std::invalid_argument("data_on_all_words: tuple length differs from word length");
    std::vector<LusztigDatum> all(t.graph.words.size());
    all[0] = climb_to_root(t, n, from);
    for (std::size_t h = 1; h < t.bfs_order.size(); ++h) {
        const int u = t.bfs_order[h];
        all[at(u)] = apply_braid_move(all[at(t.parent[at(u)])], t.parent_position[at(u)], t.parent_three[at(u)]);
    }
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(all.size());
    for (auto& d : all) out.push_back(std::move(d.n));
    return out;
}

HyperplaneDatum polytope_from_lusztig(const RootSystem& rs, const LusztigDatum& n) {
    for (auto x : n.n)
        if (x < 0) throw std::invalid_argument("polytope_from_lusztig: negative entry");
    const auto& t = rs.w0_tables();
    const auto data = data_on_all_words(rs, n);
    const auto& el = rs.elements();
    HyperplaneDatum a(rs.chamber_weights().size(), 0);
    std::vector<bool> set(a.size(), false);
    for (std::size_t w = 0; w < el.size(); ++w) {
        const auto word = at(t.word_for_element[w]);
        const auto& betas = t.betas[word];
        RootVec mu(rs.n());
        for (std::size_t r = at(t.prefix_for_element[w]); r < betas.size(); ++r) mu += data[word][r] * betas[r];
        for (int i = 0; i < rs.rank(); ++i) {
            const std::size_t g = rs.minus_orbit_index(w, i);
            const std::int64_t v = -rs.pair(rs.act(el[w], rs.fundamental_weight(i)), mu);
            if (set[g] && a[g] != v) throw std::logic_error("polytope_from_lusztig: inconsistent hyperplane value");
            a[g] = v;
            set[g] = true;
        }
    }
    if (const auto rep = validate_bz(rs, a); !rep.ok())
        throw std::logic_error("polytope_from_lusztig: output fails the BZ conditions: " + rep.summary(rs));
    return a;
}

template HyperplaneDatum polytope_of_module<Fp>(const NGammaCache<Fp>&, const PiModule<Fp>&);
template HyperplaneDatum polytope_of_module<Rational>(const NGammaCache<Rational>&, const PiModule<Rational>&);

}  // namespace preproj
