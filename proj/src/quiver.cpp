#include "preproj/quiver.hpp"

#include <stdexcept>

namespace preproj {

Quiver::Quiver(int vertices, std::vector<Arrow> arrows) : n_(vertices), arrows_(std::move(arrows)) {
    if (n_ < 0) throw std::invalid_argument("Quiver: negative vertex count");
    for (const auto& a : arrows_) {
        if (a.src < 0 || a.src >= n_ || a.dst < 0 || a.dst >= n_)
            throw std::invalid_argument("Quiver: arrow endpoint out of range");
        if (a.src == a.dst) throw std::invalid_argument("Quiver: loops are not supported");
    }
}

bool Quiver::is_source(int i) const {
    for (const auto& a : arrows_)
        if (a.dst == i) return false;
    return true;
}

bool Quiver::is_sink(int i) const {
    for (const auto& a : arrows_)
        if (a.src == i) return false;
    return true;
}

Quiver Quiver::reflected_at(int i) const {
    auto arrows = arrows_;
    for (auto& a : arrows)
        if (a.src == i || a.dst == i) std::swap(a.src, a.dst);
    return Quiver(n_, std::move(arrows));
}

Quiver Quiver::extended() const {
    auto arrows = arrows_;
    for (int i = 0; i < n_; ++i) arrows.push_back({i, n_ + i});
    return Quiver(2 * n_, std::move(arrows));
}

DoubledQuiver::DoubledQuiver(Quiver q, int base_vertices)
    : q_(std::move(q)), base_(base_vertices < 0 ? q_.vertex_count() : base_vertices) {
    into_.assign(static_cast<std::size_t>(q_.vertex_count()), {});
    for (std::size_t k = 0; k < q_.arrow_count(); ++k) {
        const auto& e = q_.arrows()[k];
        const int a = static_cast<int>(2 * k);
        h_.push_back({e.src, e.dst, a + 1, +1});
        h_.push_back({e.dst, e.src, a, -1});
    }
    for (std::size_t a = 0; a < h_.size(); ++a) into_[static_cast<std::size_t>(h_[a].dst)].push_back(static_cast<int>(a));
}

DoubledQuiver extended_doubled(const Quiver& q) { return DoubledQuiver(q.extended(), q.vertex_count()); }

std::string DoubledQuiver::arrow_name(int a) const {
    const int k = a / 2;
    const bool starred = (a % 2) == 1;
    const int m_base = is_extended() ? static_cast<int>(q_.arrow_count()) - base_ : static_cast<int>(q_.arrow_count());
    std::string name = k < m_base ? "a" + std::to_string(k + 1) : "d" + std::to_string(k - m_base + 1);
    return starred ? name + "*" : name;
}

int DoubledQuiver::arrow_by_name(const std::string& name) const {
    for (std::size_t a = 0; a < h_.size(); ++a)
        if (arrow_name(static_cast<int>(a)) == name) return static_cast<int>(a);
    return -1;
}

}  // namespace preproj
