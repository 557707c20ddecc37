#include "preproj/cartan_weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "preproj/matrix.hpp"

namespace preproj {

namespace {

template <class Tag>
std::string vec_string(const LatticeVec<Tag>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

std::size_t weyl_group_order(DynkinType t, int n) {
    auto fact = [](int k) {
        std::size_t f = 1;
        for (int i = 2; i <= k; ++i) f *= static_cast<std::size_t>(i);
        return f;
    };
    switch (t) {
        case DynkinType::A: return fact(n + 1);
        case DynkinType::D: return (std::size_t{1} << (n - 1)) * fact(n);
        case DynkinType::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    }
    return 0;
}

}  // namespace

std::string to_string(const WeightVec& v) { return vec_string(v); }
std::string to_string(const RootVec& v) { return vec_string(v); }

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i] + 1;
    os << ')';
    return os.str();
}

std::size_t WordGraph::edge_count() const {
    std::size_t e = 0;
    for (const auto& a : adjacency) e += a.size();
    return e / 2;
}

int WordGraph::find(const Word& w) const {
    auto it = index.find(w);
    return it == index.end() ? -1 : it->second;
}

RootSystem::RootSystem(DynkinType type, int rank) : type_(type), n_(rank) {
    switch (type) {
        case DynkinType::A:
            if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
            for (int i = 0; i + 1 < rank; ++i) edges_.emplace_back(i, i + 1);
            break;
        case DynkinType::D:
            if (rank < 4) throw std::invalid_argument("type D needs rank >= 4");
            for (int i = 0; i + 2 < rank; ++i) edges_.emplace_back(i, i + 1);
            edges_.emplace_back(rank - 3, rank - 1);
            break;
        case DynkinType::E:
            if (rank < 6 || rank > 8) throw std::invalid_argument("type E needs rank 6, 7 or 8");
            edges_.emplace_back(0, 2);
            edges_.emplace_back(1, 3);
            for (int i = 2; i + 1 < rank; ++i) edges_.emplace_back(i, i + 1);
            std::sort(edges_.begin(), edges_.end());
            break;
    }
    cartan_.assign(n() * n(), 0);
    for (int i = 0; i < n_; ++i) cartan_[static_cast<std::size_t>(i * n_ + i)] = 2;
    for (auto [i, j] : edges_) {
        cartan_[static_cast<std::size_t>(i * n_ + j)] = -1;
        cartan_[static_cast<std::size_t>(j * n_ + i)] = -1;
    }

    // Positive roots: close the simple roots under reflections.
    std::deque<RootVec> queue;
    for (int i = 0; i < n_; ++i) {
        positive_index_.emplace(simple_root(i), positive_.size());
        positive_.push_back(simple_root(i));
        queue.push_back(simple_root(i));
    }
    while (!queue.empty()) {
        RootVec b = queue.front();
        queue.pop_front();
        for (int i = 0; i < n_; ++i) {
            RootVec c = reflect(i, b);
            if (is_positive(c) && !positive_index_.count(c)) {
                positive_index_.emplace(c, positive_.size());
                positive_.push_back(c);
                queue.push_back(c);
            }
        }
    }
    std::stable_sort(positive_.begin(), positive_.end(), [](const RootVec& x, const RootVec& y) {
        return x.height() != y.height() ? x.height() < y.height() : x > y;
    });
    positive_index_.clear();
    for (std::size_t k = 0; k < positive_.size(); ++k) positive_index_.emplace(positive_[k], k);

    // w0 by greedy right multiplication while some w alpha_i stays positive.
    Word word;
    WeylElt w = identity();
    for (bool grew = true; grew;) {
        grew = false;
        for (int i = 0; i < n_; ++i)
            if (lengthens_right(w, i)) {
                word.push_back(i);
                w = from_word(word);
                grew = true;
                break;
            }
    }
    w0_ = w;
    if (static_cast<std::size_t>(w0_.length()) != positive_.size())
        throw std::logic_error("root system: l(w0) differs from the number of positive roots");
    star_.resize(n());
    for (int i = 0; i < n_; ++i) {
        RootVec img = -act(w0_, simple_root(i));
        for (int j = 0; j < n_; ++j)
            if (img == simple_root(j)) star_[static_cast<std::size_t>(i)] = j;
    }

    // Chamber weights: the orbits W . omega_i, each in BFS order from omega_i.
    for (int i = 0; i < n_; ++i) {
        std::deque<WeightVec> q{fundamental_weight(i)};
        chamber_index_.emplace(fundamental_weight(i), chambers_.size());
        chambers_.push_back(fundamental_weight(i));
        while (!q.empty()) {
            WeightVec g = q.front();
            q.pop_front();
            for (int j = 0; j < n_; ++j) {
                WeightVec h = reflect(j, g);
                if (!chamber_index_.count(h)) {
                    chamber_index_.emplace(h, chambers_.size());
                    chambers_.push_back(h);
                    q.push_back(h);
                }
            }
        }
    }

    order_ = weyl_group_order(type, rank);
    enumerable_ = rank <= kMaxEnumeratedRank && order_ <= kMaxEnumeratedOrder;
    if (enumerable_) {
        elements_.push_back(identity());
        element_index_.emplace(elements_.back(), 0);
        for (std::size_t k = 0; k < elements_.size(); ++k) {
            for (int i = 0; i < n_; ++i) {
                Word wd = elements_[k].word();
                wd.push_back(i);
                WeylElt x = from_word(wd);
                auto [it, inserted] = element_index_.emplace(x, elements_.size());
                if (inserted) elements_.push_back(std::move(x));
            }
        }
        if (elements_.size() != order_) throw std::logic_error("Weyl group enumeration: unexpected order");
        right_mul_.assign(order_ * n(), 0);
        for (std::size_t k = 0; k < order_; ++k)
            for (int i = 0; i < n_; ++i) {
                Word wd = elements_[k].word();
                wd.push_back(i);
                right_mul_[k * n() + static_cast<std::size_t>(i)] = element_index_.at(from_word(wd));
            }
        minus_orbit_.assign(order_ * n(), 0);
        for (std::size_t k = 0; k < order_; ++k)
            for (int i = 0; i < n_; ++i)
                minus_orbit_[k * n() + static_cast<std::size_t>(i)] =
                    chamber_index_.at(-act(elements_[k], fundamental_weight(i)));
    }
}

std::string RootSystem::name() const {
    const char* t = type_ == DynkinType::A ? "A" : type_ == DynkinType::D ? "D" : "E";
    return t + std::to_string(n_);
}

Quiver RootSystem::default_orientation() const {
    std::vector<Arrow> arrows;
    for (auto [i, j] : edges_) arrows.push_back({i, j});
    return Quiver(n_, std::move(arrows));
}

bool RootSystem::is_orientation(const Quiver& q) const {
    if (q.vertex_count() != n_ || q.arrow_count() != edges_.size()) return false;
    std::set<std::pair<int, int>> seen;
    for (const auto& a : q.arrows()) {
        auto e = std::minmax(a.src, a.dst);
        if (!adjacent(a.src, a.dst) || !seen.insert(e).second) return false;
    }
    return true;
}

WeightVec RootSystem::root_to_weight(const RootVec& v) const {
    WeightVec w(n());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) w[static_cast<std::size_t>(i)] += cartan(i, j) * v[static_cast<std::size_t>(j)];
    return w;
}

std::optional<RootVec> RootSystem::weight_to_root(const WeightVec& v) const {
    Matrix<Rational> c(n(), n());
    std::vector<Rational> b(n());
    for (int i = 0; i < n_; ++i) {
        b[static_cast<std::size_t>(i)] = Rational::from_int(v[static_cast<std::size_t>(i)]);
        for (int j = 0; j < n_; ++j)
            c(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational::from_int(cartan(i, j));
    }
    auto x = solve(c, b);
    RootVec r(n());
    for (std::size_t i = 0; i < n(); ++i) {
        if (!(*x)[i].is_integer()) return std::nullopt;
        r[i] = (*x)[i].value().get_num().get_si();
    }
    return r;
}

std::int64_t RootSystem::pair(const WeightVec& gamma, const RootVec& nu) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n(); ++i) s += gamma[i] * nu[i];
    return s;
}

std::int64_t RootSystem::form(const RootVec& mu, const RootVec& nu) const { return pair(root_to_weight(mu), nu); }

WeightVec RootSystem::reflect(int i, const WeightVec& v) const {
    WeightVec r = v;
    const std::int64_t c = v[static_cast<std::size_t>(i)];
    for (int j = 0; j < n_; ++j) r[static_cast<std::size_t>(j)] -= c * cartan(j, i);
    return r;
}

RootVec RootSystem::reflect(int i, const RootVec& v) const {
    RootVec r = v;
    std::int64_t c = 0;
    for (int j = 0; j < n_; ++j) c += cartan(i, j) * v[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] -= c;
    return r;
}

WeightVec RootSystem::act(const WeylElt& w, const WeightVec& v) const {
    WeightVec r(n());
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t j = 0; j < n(); ++j) r[i] += w.weight_m_[i * n() + j] * v[j];
    return r;
}

RootVec RootSystem::act(const WeylElt& w, const RootVec& v) const {
    RootVec r(n());
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t j = 0; j < n(); ++j) r[i] += w.root_m_[i * n() + j] * v[j];
    return r;
}

bool RootSystem::is_positive(const RootVec& v) const {
    bool nonzero = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) return false;
        if (v[i] > 0) nonzero = true;
    }
    return nonzero;
}

std::vector<int> RootSystem::weight_rho(const WeylElt& w) const {
    std::vector<int> r(n(), 0);
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t j = 0; j < n(); ++j) r[i] += w.weight_m_[i * n() + j];
    return r;
}

WeylElt RootSystem::from_word(const Word& word) const {
    WeylElt w;
    w.n_ = n();
    w.weight_m_.assign(n() * n(), 0);
    w.root_m_.assign(n() * n(), 0);
    for (std::size_t i = 0; i < n(); ++i) w.weight_m_[i * n() + i] = w.root_m_[i * n() + i] = 1;
    for (int i : word) {
        if (i < 0 || i >= n_) throw std::invalid_argument("word letter out of range");
        const auto ui = static_cast<std::size_t>(i);
        // weight matrix: M s_i changes column i only, by -M a_{.i}
        std::vector<int> col(n(), 0);
        for (std::size_t r = 0; r < n(); ++r)
            for (std::size_t k = 0; k < n(); ++k) col[r] += w.weight_m_[r * n() + k] * cartan(static_cast<int>(k), i);
        for (std::size_t r = 0; r < n(); ++r) w.weight_m_[r * n() + ui] -= col[r];
        // root matrix: R s_i = R - R[:,i] a_{i.}
        for (std::size_t r = 0; r < n(); ++r) {
            const int ri = w.root_m_[r * n() + ui];
            if (ri == 0) continue;
            for (std::size_t c = 0; c < n(); ++c) w.root_m_[r * n() + c] -= ri * cartan(i, static_cast<int>(c));
        }
    }
    // Canonical word: peel off the smallest left descent, read off w rho.
    std::vector<int> v = weight_rho(w);
    for (;;) {
        int d = -1;
        for (int i = 0; i < n_; ++i)
            if (v[static_cast<std::size_t>(i)] < 0) {
                d = i;
                break;
            }
        if (d < 0) break;
        w.word_.push_back(d);
        const int c = v[static_cast<std::size_t>(d)];
        for (int j = 0; j < n_; ++j) v[static_cast<std::size_t>(j)] -= c * cartan(j, d);
    }
    return w;
}

WeylElt RootSystem::multiply(const WeylElt& a, const WeylElt& b) const {
    Word w = a.word();
    w.insert(w.end(), b.word().begin(), b.word().end());
    return from_word(w);
}

WeylElt RootSystem::inverse(const WeylElt& w) const {
    Word r(w.word().rbegin(), w.word().rend());
    return from_word(r);
}

bool RootSystem::is_reduced(const Word& word) const { return static_cast<std::size_t>(from_word(word).length()) == word.size(); }

bool RootSystem::lengthens_right(const WeylElt& w, int i) const { return is_positive(act(w, simple_root(i))); }

bool RootSystem::lengthens_left(const WeylElt& w, int i) const { return weight_rho(w)[static_cast<std::size_t>(i)] > 0; }

bool RootSystem::is_antidominant(const WeightVec& v) const {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] > 0) return false;
    return true;
}

bool RootSystem::is_dominant(const WeightVec& v) const {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < 0) return false;
    return true;
}

std::pair<WeylElt, WeightVec> RootSystem::antidominant_factorization(const WeightVec& gamma) const {
    // Left descents of the minimal w are exactly the i with <gamma, alpha_i> > 0,
    // so taking the smallest one each time yields the lex-least reduced word.
    WeightVec g = gamma;
    Word word;
    for (;;) {
        int d = -1;
        for (int i = 0; i < n_; ++i)
            if (g[static_cast<std::size_t>(i)] > 0) {
                d = i;
                break;
            }
        if (d < 0) break;
        word.push_back(d);
        g = reflect(d, g);
    }
    return {from_word(word), g};
}

std::optional<std::size_t> RootSystem::chamber_index(const WeightVec& v) const {
    auto it = chamber_index_.find(v);
    if (it == chamber_index_.end()) return std::nullopt;
    return it->second;
}

std::size_t RootSystem::require_chamber_index(const WeightVec& v) const {
    auto k = chamber_index(v);
    if (!k) throw std::invalid_argument("not a chamber weight: " + to_string(v));
    return *k;
}

ChamberWeight RootSystem::chamber(const WeightVec& v) const {
    WeightVec g = v;
    Word word;
    for (;;) {
        int d = -1;
        for (int i = 0; i < n_; ++i)
            if (g[static_cast<std::size_t>(i)] < 0) {
                d = i;
                break;
            }
        if (d < 0) break;
        word.push_back(d);
        g = reflect(d, g);
    }
    for (int i = 0; i < n_; ++i)
        if (g == fundamental_weight(i)) return ChamberWeight{v, i, from_word(word)};
    throw std::invalid_argument("not a chamber weight: " + to_string(v));
}

void RootSystem::require_enumerable(const char* what) const {
    if (!enumerable_)
        throw std::runtime_error(std::string(what) + ": Weyl group of " + name() +
                                 " is too large to enumerate (limit rank 6, order 51840)");
}

const std::vector<WeylElt>& RootSystem::elements() const {
    require_enumerable("elements");
    return elements_;
}

std::size_t RootSystem::element_index(const WeylElt& w) const {
    require_enumerable("element_index");
    return element_index_.at(w);
}

std::size_t RootSystem::right_multiple(std::size_t w, int i) const {
    return right_mul_[w * n() + static_cast<std::size_t>(i)];
}

WordGraph RootSystem::reduced_words(const WeylElt& w) const {
    WordGraph g;
    g.words.push_back(w.word());
    g.index.emplace(w.word(), 0);
    for (std::size_t k = 0; k < g.words.size(); ++k) {
        std::vector<WordGraph::Edge> edges;
        const Word cur = g.words[k];
        auto visit = [&](Word next, int pos, bool three) {
            auto [it, inserted] = g.index.emplace(next, static_cast<int>(g.words.size()));
            if (inserted) g.words.push_back(std::move(next));
            edges.push_back({it->second, pos, three});
        };
        for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
            const int a = cur[p], b = cur[p + 1];
            if (a != b && cartan(a, b) == 0) {
                Word next = cur;
                std::swap(next[p], next[p + 1]);
                visit(std::move(next), static_cast<int>(p), false);
            } else if (p + 2 < cur.size() && cur[p + 2] == a && adjacent(a, b)) {
                Word next = cur;
                next[p] = next[p + 2] = b;
                next[p + 1] = a;
                visit(std::move(next), static_cast<int>(p), true);
            }
        }
        g.adjacency.push_back(std::move(edges));
    }
    return g;
}

const W0Tables& RootSystem::w0_tables() const {
    std::call_once(w0_once_, [this] {
        require_enumerable("w0_tables");
        // Count reduced words of w0 first: c(w) = sum over right descents i of c(w s_i).
        std::vector<std::size_t> order(order_);
        for (std::size_t k = 0; k < order_; ++k) order[k] = k;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return elements_[a].length() < elements_[b].length(); });
        std::vector<double> count(order_, 0.0);
        for (auto k : order) {
            if (elements_[k].length() == 0) {
                count[k] = 1;
                continue;
            }
            for (int i = 0; i < n_; ++i)
                if (!lengthens_right(elements_[k], i)) count[k] += count[right_multiple(k, i)];
        }
        if (count[element_index_.at(w0_)] > static_cast<double>(kMaxW0Words))
            throw std::runtime_error("w0 of " + name() + " has too many reduced words to tabulate");

        auto t = std::make_unique<W0Tables>();
        t->graph = reduced_words(w0_);
        const std::size_t nw = t->graph.words.size();
        t->parent.assign(nw, -1);
        t->parent_position.assign(nw, -1);
        t->parent_three.assign(nw, false);
        std::vector<bool> seen(nw, false);
        seen[0] = true;
        t->bfs_order.push_back(0);
        for (std::size_t h = 0; h < t->bfs_order.size(); ++h) {
            const int u = t->bfs_order[h];
            for (const auto& e : t->graph.adjacency[static_cast<std::size_t>(u)]) {
                if (seen[static_cast<std::size_t>(e.to)]) continue;
                seen[static_cast<std::size_t>(e.to)] = true;
                t->parent[static_cast<std::size_t>(e.to)] = u;
                t->parent_position[static_cast<std::size_t>(e.to)] = e.position;
                t->parent_three[static_cast<std::size_t>(e.to)] = e.three;
                t->bfs_order.push_back(e.to);
            }
        }
        t->word_for_element.resize(order_);
        t->prefix_for_element.resize(order_);
        for (std::size_t k = 0; k < order_; ++k) {
            WeylElt u = multiply(elements_[k], w0_);
            Word word = u.word();
            t->prefix_for_element[k] = u.length();
            while (static_cast<std::size_t>(u.length()) < positive_.size()) {
                int i = 0;
                while (!lengthens_right(u, i)) ++i;
                word.push_back(i);
                u = from_word(word);
            }
            const int idx = t->graph.find(word);
            if (idx < 0) throw std::logic_error("w0_tables: extended word missing from graph");
            t->word_for_element[k] = idx;
        }
        for (const auto& word : t->graph.words) t->betas.push_back(betas(word));
        w0_tables_ = std::move(t);
    });
    return *w0_tables_;
}

Word RootSystem::adapted_word(const Quiver& q, Adaptation mode) const {
    if (!is_orientation(q)) throw std::invalid_argument("adapted_word: quiver is not an orientation of " + name());
    const std::size_t target = positive_.size();
    Word word;
    std::function<bool(const Quiver&, const WeylElt&)> dfs = [&](const Quiver& cur, const WeylElt& w) {
        if (word.size() == target) return true;
        for (int i = 0; i < n_; ++i) {
            const bool ok = mode == Adaptation::sink ? cur.is_sink(i) : cur.is_source(i);
            if (!ok || !lengthens_right(w, i)) continue;
            word.push_back(i);
            if (dfs(cur.reflected_at(i), from_word(word))) return true;
            word.pop_back();
        }
        return false;
    };
    if (!dfs(q, identity())) throw std::logic_error("adapted_word: no adapted reduced word found");
    return word;
}

std::vector<RootVec> RootSystem::betas(const Word& word) const {
    std::vector<RootVec> out;
    for (std::size_t r = 0; r < word.size(); ++r) {
        RootVec b = simple_root(word[r]);
        for (std::size_t k = r; k-- > 0;) b = reflect(word[k], b);
        out.push_back(std::move(b));
    }
    return out;
}

Word RootSystem::lex_least_word_starting_with(int i) const {
    Word w{i};
    const WeylElt rest = multiply(simple_reflection(i), w0_);
    w.insert(w.end(), rest.word().begin(), rest.word().end());
    return w;
}

std::shared_ptr<const RootSystem> build_root_system(DynkinType type, int rank) {
    return std::make_shared<const RootSystem>(type, rank);
}

std::shared_ptr<const RootSystem> build_root_system(const std::string& tag) {
    if (tag.size() < 2) throw std::invalid_argument("root system tag must look like A3, D4 or E6: '" + tag + "'");
    const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(tag[0])));
    int rank = 0;
    try {
        std::size_t used = 0;
        rank = std::stoi(tag.substr(1), &used);
        if (used != tag.size() - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rank in root system tag '" + tag + "'");
    }
    switch (t) {
        case 'A': return build_root_system(DynkinType::A, rank);
        case 'D': return build_root_system(DynkinType::D, rank);
        case 'E': return build_root_system(DynkinType::E, rank);
        default: throw std::invalid_argument("unsupported root system type '" + tag + "' (A, D, E only)");
    }
}

}  // namespace preproj
