// Simply-laced root systems, weight/root lattices and Weyl group combinatorics.
//
// Conventions: weights are stored in the fundamental-weight basis, roots in the
// simple-root basis, and <omega_i, alpha_j> = delta_ij.  Vertex labels follow
// Bourbaki and are 0-based in code.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "preproj/quiver.hpp"

namespace preproj {

using Word = std::vector<int>;

template <class Range>
std::size_t hash_range(const Range& r) {
    std::size_t h = 0x345678;
    for (const auto& x : r) h = (h ^ std::hash<std::int64_t>{}(static_cast<std::int64_t>(x))) * 1000003u + 0x9e37;
    return h;
}

template <class Tag>
class LatticeVec {
public:
    LatticeVec() = default;
    explicit LatticeVec(std::size_t n) : c_(n, 0) {}
    LatticeVec(std::initializer_list<std::int64_t> xs) : c_(xs) {}
    explicit LatticeVec(std::vector<std::int64_t> xs) : c_(std::move(xs)) {}

    std::size_t size() const { return c_.size(); }
    std::int64_t& operator[](std::size_t i) { return c_[i]; }
    std::int64_t operator[](std::size_t i) const { return c_[i]; }
    const std::vector<std::int64_t>& coords() const { return c_; }

    static LatticeVec unit(std::size_t n, std::size_t i) {
        LatticeVec v(n);
        v[i] = 1;
        return v;
    }

    bool is_zero() const {
        for (auto x : c_)
            if (x != 0) return false;
        return true;
    }
    std::int64_t height() const {
        std::int64_t h = 0;
        for (auto x : c_) h += x;
        return h;
    }

    friend LatticeVec operator+(LatticeVec a, const LatticeVec& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
    }
    friend LatticeVec operator-(LatticeVec a, const LatticeVec& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
        return a;
    }
    LatticeVec operator-() const {
        LatticeVec r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend LatticeVec operator*(std::int64_t s, LatticeVec a) {
        for (auto& x : a.c_) x *= s;
        return a;
    }
    LatticeVec& operator+=(const LatticeVec& b) { return *this = *this + b; }
    friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
    friend auto operator<=>(const LatticeVec&, const LatticeVec&) = default;

private:
    std::vector<std::int64_t> c_;
};

struct WeightTag {};
struct RootTag {};
using WeightVec = LatticeVec<WeightTag>;
using RootVec = LatticeVec<RootTag>;

struct LatticeHash {
    template <class Tag>
    std::size_t operator()(const LatticeVec<Tag>& v) const { return hash_range(v.coords()); }
    std::size_t operator()(const Word& w) const { return hash_range(w); }
};

std::string to_string(const WeightVec& v);
std::string to_string(const RootVec& v);
std::string word_to_string(const Word& w);  // 1-based letters

class RootSystem;

// A Weyl group element: its action on weight coordinates (row-major n x n),
// the action on root coordinates, and its lexicographically least reduced word.
class WeylElt {
public:
    const Word& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }
    int weight_matrix(std::size_t r, std::size_t c) const { return weight_m_[r * n_ + c]; }
    const std::vector<int>& weight_matrix() const { return weight_m_; }
    bool is_identity() const { return word_.empty(); }

    friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.weight_m_ == b.weight_m_; }
    struct Hash {
        std::size_t operator()(const WeylElt& w) const { return hash_range(w.weight_m_); }
    };

private:
    friend class RootSystem;
    std::size_t n_ = 0;
    std::vector<int> weight_m_;
    std::vector<int> root_m_;
    Word word_;
};

struct ChamberWeight {
    WeightVec gamma;
    int fundamental = 0;  // gamma lies in W . omega_fundamental
    WeylElt w;            // minimal length, gamma = w omega_fundamental
};

// Reduced words of one element, joined by braid moves.
struct WordGraph {
    struct Edge {
        int to = 0;
        int position = 0;  // first letter touched by the move
        bool three = false;  // iji <-> jij; otherwise a commutation ij <-> ji
    };
    std::vector<Word> words;
    std::vector<std::vector<Edge>> adjacency;
    std::unordered_map<Word, int, LatticeHash> index;

    std::size_t edge_count() const;
    int find(const Word& w) const;
};

// The reduced-word graph of w0 plus the tables used to move Lusztig data
// around: a BFS tree rooted at words[0] (the lex-least word) and, for each
// enumerated Weyl group element w, the reduced word of w0 that begins with
// the lex-least word of w w0.
struct W0Tables {
    WordGraph graph;
    std::vector<int> bfs_order;
    std::vector<int> parent;           // -1 at the root
    std::vector<int> parent_position;  // move position on the edge to the parent
    std::vector<bool> parent_three;
    std::vector<int> word_for_element;   // indexed like RootSystem::elements()
    std::vector<int> prefix_for_element;  // length of w w0
    std::vector<std::vector<RootVec>> betas;  // per word: beta_r = s_{i_1}..s_{i_{r-1}} alpha_{i_r}
};

enum class DynkinType { A, D, E };

class RootSystem {
public:
    static constexpr std::size_t kMaxEnumeratedOrder = 51840;
    static constexpr int kMaxEnumeratedRank = 6;
    static constexpr std::size_t kMaxW0Words = 100000;

    RootSystem(DynkinType type, int rank);
    RootSystem(const RootSystem&) = delete;
    RootSystem& operator=(const RootSystem&) = delete;

    DynkinType type() const { return type_; }
    int rank() const { return n_; }
    std::size_t n() const { return static_cast<std::size_t>(n_); }
    std::string name() const;
    int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * n_ + j)]; }
    const std::vector<std::pair<int, int>>& dynkin_edges() const { return edges_; }
    bool adjacent(int i, int j) const { return i != j && cartan(i, j) == -1; }

    // Bourbaki default orientation: every Dynkin edge {i < j} oriented i -> j.
    Quiver default_orientation() const;
    bool is_orientation(const Quiver& q) const;

    WeightVec fundamental_weight(int i) const { return WeightVec::unit(n(), static_cast<std::size_t>(i)); }
    RootVec simple_root(int i) const { return RootVec::unit(n(), static_cast<std::size_t>(i)); }
    WeightVec root_to_weight(const RootVec& v) const;
    std::optional<RootVec> weight_to_root(const WeightVec& v) const;  // nullopt if not in Q
    std::int64_t pair(const WeightVec& gamma, const RootVec& nu) const;
    std::int64_t form(const RootVec& mu, const RootVec& nu) const;

    WeightVec reflect(int i, const WeightVec& v) const;
    RootVec reflect(int i, const RootVec& v) const;
    WeightVec act(const WeylElt& w, const WeightVec& v) const;
    RootVec act(const WeylElt& w, const RootVec& v) const;

    const std::vector<RootVec>& positive_roots() const { return positive_; }
    std::size_t num_positive_roots() const { return positive_.size(); }
    bool is_positive_root(const RootVec& v) const { return positive_index_.count(v) != 0; }
    bool is_positive(const RootVec& v) const;  // nonzero with nonnegative coordinates

    WeylElt identity() const { return from_word({}); }
    WeylElt simple_reflection(int i) const { return from_word({i}); }
    WeylElt from_word(const Word& word) const;
    WeylElt multiply(const WeylElt& a, const WeylElt& b) const;
    WeylElt inverse(const WeylElt& w) const;
    const WeylElt& w0() const { return w0_; }
    bool is_reduced(const Word& word) const;
    // l(w s_i) > l(w)  <=>  w alpha_i > 0
    bool lengthens_right(const WeylElt& w, int i) const;
    // l(s_i w) > l(w)
    bool lengthens_left(const WeylElt& w, int i) const;
    // i* with w0 alpha_i = -alpha_{i*}
    int star_vertex(int i) const { return star_[static_cast<std::size_t>(i)]; }

    // gamma = w lambda, lambda antidominant, w minimal with lex-least word.
    std::pair<WeylElt, WeightVec> antidominant_factorization(const WeightVec& gamma) const;
    bool is_antidominant(const WeightVec& v) const;
    bool is_dominant(const WeightVec& v) const;

    const std::vector<WeightVec>& chamber_weights() const { return chambers_; }
    std::optional<std::size_t> chamber_index(const WeightVec& v) const;
    std::size_t require_chamber_index(const WeightVec& v) const;
    ChamberWeight chamber(const WeightVec& v) const;  // throws if v is not a chamber weight

    bool enumerable() const { return enumerable_; }
    std::size_t weyl_order() const { return order_; }
    const std::vector<WeylElt>& elements() const;
    std::size_t element_index(const WeylElt& w) const;
    std::size_t right_multiple(std::size_t w, int i) const;  // index of w s_i
    // Chamber index of -w omega_i for the enumerated element w.
    std::size_t minus_orbit_index(std::size_t w, int i) const {
        return minus_orbit_[w * n() + static_cast<std::size_t>(i)];
    }
    std::vector<RootVec> betas(const Word& word) const;

    WordGraph reduced_words(const WeylElt& w) const;
    const W0Tables& w0_tables() const;

    // Reduced word of w0 adapted to q: letters are successive sinks (or
    // sources) of q re-oriented at each letter.
    enum class Adaptation { sink, source };
    Word adapted_word(const Quiver& q, Adaptation mode) const;

    Word lex_least_word_starting_with(int i) const;

private:
    void require_enumerable(const char* what) const;
    std::vector<int> weight_rho(const WeylElt& w) const;

    DynkinType type_;
    int n_;
    std::vector<int> cartan_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<RootVec> positive_;
    std::unordered_map<RootVec, std::size_t, LatticeHash> positive_index_;
    WeylElt w0_;
    std::vector<int> star_;
    std::vector<WeightVec> chambers_;
    std::unordered_map<WeightVec, std::size_t, LatticeHash> chamber_index_;

    bool enumerable_ = false;
    std::size_t order_ = 0;
    std::vector<WeylElt> elements_;
    std::unordered_map<WeylElt, std::size_t, WeylElt::Hash> element_index_;
    std::vector<std::size_t> right_mul_;
    std::vector<std::size_t> minus_orbit_;

    mutable std::once_flag w0_once_;
    mutable std::unique_ptr<W0Tables> w0_tables_;
};

std::shared_ptr<const RootSystem> build_root_system(DynkinType type, int rank);
// Accepts "A3", "D4", "E6" (case-insensitive letter).
std::shared_ptr<const RootSystem> build_root_system(const std::string& tag);

}  // namespace preproj
