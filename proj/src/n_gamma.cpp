#include "preproj/n_gamma.hpp"

#include <mutex>
#include <stdexcept>

#include "preproj/reflection_functors.hpp"

namespace preproj {

namespace {

template <ExactField F>
std::uint64_t field_epoch() {
    if constexpr (std::is_same_v<F, Fp>) return Fp::modulus_epoch();
    return 0;
}

}  // namespace

template <ExactField F>
NGammaCache<F>::NGammaCache(std::shared_ptr<const RootSystem> rs, Quiver orientation)
    : rs_(std::move(rs)), q_(std::move(orientation)), base_(q_), ext_(extended_doubled(q_)), epoch_(field_epoch<F>()) {
    if (!rs_->is_orientation(q_)) throw std::invalid_argument("NGammaCache: quiver is not an orientation of " + rs_->name());
}

template <ExactField F>
PiModule<F> NGammaCache<F>::nhat_along(const WeightVec& lambda, const Word& word) const {
    const auto& rs = *rs_;
    if (!rs.is_antidominant(lambda)) throw std::invalid_argument("nhat_along: weight is not antidominant");
    const int n = rs.rank();
    Dims d(static_cast<std::size_t>(2 * n), 0);
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(n + i)] = static_cast<int>(-lambda[static_cast<std::size_t>(i)]);
    PiModule<F> m(ext_, d);
    WeightVec cur = lambda;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (cur[static_cast<std::size_t>(*it)] > 0)
            throw std::invalid_argument("nhat_along: word does not raise the weight at letter " + std::to_string(*it + 1));
        m = sigma(m, *it);
        cur = rs.reflect(*it, cur);
    }
    return m;
}

template <ExactField F>
PiModule<F> NGammaCache<F>::nhat(const WeightVec& gamma) const {
    const auto [w, lambda] = rs_->antidominant_factorization(gamma);
    return nhat_along(lambda, w.word());
}

template <ExactField F>
std::shared_ptr<const PiModule<F>> NGammaCache<F>::n_of_chamber(const WeightVec& gamma) const {
    {
        std::shared_lock lock(mu_);
        if (epoch_ == field_epoch<F>()) {
            auto it = cache_.find(gamma);
            if (it != cache_.end()) return it->second;
        }
    }
    rs_->require_chamber_index(gamma);
    auto built = std::make_shared<const PiModule<F>>(drop_primed(nhat(gamma), base_));
    std::unique_lock lock(mu_);
    if (epoch_ != field_epoch<F>()) {
        cache_.clear();
        epoch_ = field_epoch<F>();
    }
    return cache_.emplace(gamma, std::move(built)).first->second;
}

template <ExactField F>
PiModule<F> NGammaCache<F>::n_of(const WeightVec& gamma) const {
    const auto [w, lambda] = rs_->antidominant_factorization(gamma);
    PiModule<F> m(base_, Dims(static_cast<std::size_t>(rs_->rank()), 0));
    for (int i = 0; i < rs_->rank(); ++i) {
        const auto c = -lambda[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const auto piece = n_of_chamber(-rs_->act(w, rs_->fundamental_weight(i)));
        for (std::int64_t k = 0; k < c; ++k) m = direct_sum(m, *piece);
    }
    return m;
}

template <ExactField F>
std::size_t NGammaCache<F>::d_gamma(const WeightVec& gamma, const PiModule<F>& t) const {
    // Hom is additive over the chamber decomposition of N(gamma).
    const auto [w, lambda] = rs_->antidominant_factorization(gamma);
    std::size_t total = 0;
    for (int i = 0; i < rs_->rank(); ++i) {
        const auto c = -lambda[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        total += static_cast<std::size_t>(c) * hom_dim(*n_of_chamber(-rs_->act(w, rs_->fundamental_weight(i))), t);
    }
    return total;
}

template <ExactField F>
KQModule<F> indecomposable(const RootSystem& rs, const RootVec& beta, const Quiver& q) {
    if (!rs.is_positive_root(beta)) throw std::invalid_argument("indecomposable: not a positive root " + to_string(beta));
    const Word word = rs.adapted_word(q, RootSystem::Adaptation::source);
    // beta_r = s_{i_1} ... s_{i_{r-1}} alpha_{i_r}
    std::vector<Quiver> quivers{q};
    std::size_t r = 0;
    for (; r < word.size(); ++r) {
        Word prefix(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(r));
        if (rs.act(rs.from_word(prefix), rs.simple_root(word[r])) == beta) break;
        quivers.push_back(quivers.back().reflected_at(word[r]));
    }
    if (r == word.size()) throw std::logic_error("indecomposable: root not reached by the adapted word");
    KQModule<F> m = simple_kq_module<F>(quivers[r], word[r]);
    for (std::size_t k = r; k-- > 0;) m = bgp(m, word[k], BgpDirection::plus);
    if (!(m.quiver() == q)) throw std::logic_error("indecomposable: orientation bookkeeping failed");
    return m;
}

template class NGammaCache<Fp>;
template class NGammaCache<Rational>;
template KQModule<Fp> indecomposable<Fp>(const RootSystem&, const RootVec&, const Quiver&);
template KQModule<Rational> indecomposable<Rational>(const RootSystem&, const RootVec&, const Quiver&);

}  // namespace preproj
