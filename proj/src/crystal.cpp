#include "preproj/crystal.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace preproj {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// <alpha_i, weight> for a weight given in root coordinates.
std::int64_t pair_alpha(const RootSystem& rs, int i, const RootVec& nu) {
    std::int64_t s = 0;
    for (int j = 0; j < rs.rank(); ++j) s += rs.cartan(i, j) * nu[at(j)];
    return s;
}

void require_vertex(const RootSystem& rs, int i, const char* what) {
    if (i < 0 || i >= rs.rank()) throw std::invalid_argument(std::string(what) + ": vertex out of range");
}

}  // namespace

std::int64_t phi(const RootSystem& rs, const HyperplaneDatum& p, int i) {
    require_vertex(rs, i, "phi");
    const WeightVec om = rs.fundamental_weight(i);
    std::int64_t c = value(rs, p, om) + value(rs, p, rs.reflect(i, om));
    for (int j = 0; j < rs.rank(); ++j)
        if (j != i) c += rs.cartan(i, j) * value(rs, p, rs.fundamental_weight(j));
    return c;
}

std::int64_t epsilon(const RootSystem& rs, const HyperplaneDatum& p, int i) {
    return phi(rs, p, i) - pair_alpha(rs, i, wt(rs, p));
}

HyperplaneDatum e_tilde(const RootSystem& rs, const HyperplaneDatum& p, int i) {
    require_vertex(rs, i, "e_tilde");
    LusztigDatum n = lusztig_datum(rs, p, rs.lex_least_word_starting_with(i));
    ++n.n[0];
    HyperplaneDatum out = polytope_from_lusztig(rs, n);
    const auto& gs = rs.chamber_weights();
    for (std::size_t k = 0; k < gs.size(); ++k)
        if (gs[k][at(i)] <= 0 && out[k] != p[k])
            throw std::logic_error("e_tilde: changed A_gamma at gamma = " + to_string(gs[k]) + " with <gamma, alpha_i> <= 0");
    if (!(wt(rs, out) == wt(rs, p) + rs.simple_root(i))) throw std::logic_error("e_tilde: weight did not rise by alpha_i");
    return out;
}

std::optional<HyperplaneDatum> f_tilde(const RootSystem& rs, const HyperplaneDatum& p, int i) {
    require_vertex(rs, i, "f_tilde");
    LusztigDatum n = lusztig_datum(rs, p, rs.lex_least_word_starting_with(i));
    if (n.n[0] == 0) return std::nullopt;
    --n.n[0];
    return polytope_from_lusztig(rs, n);
}

HyperplaneDatum f_tilde_max(const RootSystem& rs, const HyperplaneDatum& p, int i) {
    require_vertex(rs, i, "f_tilde_max");
    LusztigDatum n = lusztig_datum(rs, p, rs.lex_least_word_starting_with(i));
    if (n.n[0] == 0) return p;
    n.n[0] = 0;
    return polytope_from_lusztig(rs, n);
}

HyperplaneDatum f_tilde_star_max(const RootSystem& rs, const HyperplaneDatum& p, int i) {
    return star(rs, f_tilde_max(rs, star(rs, p), i));
}

HyperplaneDatum saito(const RootSystem& rs, const HyperplaneDatum& p, int i) {
    require_vertex(rs, i, "saito");
    if (phi(rs, p, i) != 0) throw std::invalid_argument("saito: phi_" + std::to_string(i + 1) + " is nonzero");
    const LusztigDatum n = lusztig_datum(rs, p, rs.lex_least_word_starting_with(i));
    LusztigDatum rotated;
    rotated.word.assign(n.word.begin() + 1, n.word.end());
    rotated.word.push_back(rs.star_vertex(i));
    rotated.n.assign(n.n.begin() + 1, n.n.end());
    rotated.n.push_back(0);
    return polytope_from_lusztig(rs, rotated);
}

HyperplaneDatum saito_via_star(const RootSystem& rs, const HyperplaneDatum& p, int i) {
    require_vertex(rs, i, "saito_via_star");
    if (phi(rs, p, i) != 0) throw std::invalid_argument("saito_via_star: phi_" + std::to_string(i + 1) + " is nonzero");
    const std::int64_t k = epsilon(rs, star(rs, p), i);
    if (k < 0) throw std::logic_error("saito_via_star: epsilon of the star image is negative");
    HyperplaneDatum out = f_tilde_star_max(rs, p, i);
    for (std::int64_t r = 0; r < k; ++r) out = e_tilde(rs, out, i);
    return out;
}

std::map<RootVec, std::size_t> CrystalGraph::weight_multiplicities() const {
    std::map<RootVec, std::size_t> m;
    for (const auto& w : weights) ++m[w];
    return m;
}

CrystalGraph generate(const RootSystem& rs, int height_bound) {
    if (height_bound < 0) throw std::invalid_argument("generate: negative height bound");
    CrystalGraph g;
    g.nodes.push_back(zero_datum(rs));
    g.weights.emplace_back(rs.n());
    g.index.emplace(g.nodes.front(), 0);
    std::vector<std::size_t> level{0};
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    for (int h = 0; h < height_bound; ++h) {
        // Every (node, i) pair of the level is independent; results are merged in order.
        const std::size_t jobs = level.size() * rs.n();
        std::vector<HyperplaneDatum> raised(jobs);
        const auto work = [&](std::size_t begin, std::size_t end) {
            for (std::size_t j = begin; j < end; ++j)
                raised[j] = e_tilde(rs, g.nodes[level[j / rs.n()]], static_cast<int>(j % rs.n()));
        };
        const std::size_t chunk = (jobs + workers - 1) / workers;
        std::vector<std::future<void>> fs;
        for (std::size_t b = 0; b < jobs; b += chunk) fs.push_back(std::async(std::launch::async, work, b, std::min(jobs, b + chunk)));
        for (auto& f : fs) f.get();

        std::vector<std::size_t> next;
        for (std::size_t j = 0; j < jobs; ++j) {
            const std::size_t src = level[j / rs.n()];
            const int i = static_cast<int>(j % rs.n());
            auto [it, inserted] = g.index.emplace(raised[j], g.nodes.size());
            if (inserted) {
                g.weights.push_back(g.weights[src] + rs.simple_root(i));
                g.nodes.push_back(std::move(raised[j]));
                next.push_back(it->second);
            }
            g.edges.push_back({it->second, src, i});
        }
        level = std::move(next);
    }
    return g;
}

std::string to_dot(const RootSystem& rs, const CrystalGraph& g, const Word& label_word) {
    const Word word = label_word.empty() ? rs.w0_tables().graph.words.front() : label_word;
    std::ostringstream os;
    os << "digraph crystal {\n  // " << rs.name() << ", Lusztig data on " << word_to_string(word) << "\n";
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        const auto n = lusztig_datum(rs, g.nodes[k], word);
        os << "  n" << k << " [label=\"" << to_string(g.weights[k]) << "\\n(";
        for (std::size_t r = 0; r < n.n.size(); ++r) os << (r ? "," : "") << n.n[r];
        os << ")\"];\n";
    }
    for (const auto& e : g.edges) os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.i + 1 << "\"];\n";
    os << "}\n";
    return os.str();
}

std::uint64_t kostant_partition_count(const RootSystem& rs, const RootVec& nu) {
    const auto& roots = rs.positive_roots();
    std::function<std::uint64_t(std::size_t, const RootVec&)> count = [&](std::size_t k, const RootVec& rest) -> std::uint64_t {
        if (rest.is_zero()) return 1;
        if (k == roots.size()) return 0;
        std::uint64_t total = 0;
        for (RootVec r = rest;; r = r - roots[k]) {
            bool nonneg = true;
            for (std::size_t j = 0; j < r.size(); ++j) nonneg = nonneg && r[j] >= 0;
            if (!nonneg) break;
            total += count(k + 1, r);
        }
        return total;
    };
    for (std::size_t j = 0; j < nu.size(); ++j)
        if (nu[j] < 0) return 0;
    return count(0, nu);
}

}  // namespace preproj
