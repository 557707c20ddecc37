// Oriented quivers, their doubles H = E + E*, and the Nakajima extension.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace preproj {

struct Arrow {
    int src = 0;
    int dst = 0;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Vertices are 0-based internally; file formats and the CLI use 1-based labels.
class Quiver {
public:
    Quiver() = default;
    Quiver(int vertices, std::vector<Arrow> arrows);

    int vertex_count() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t arrow_count() const { return arrows_.size(); }

    bool is_source(int i) const;
    bool is_sink(int i) const;
    // Reverse every arrow incident to i (sigma_i, or its inverse; they agree).
    Quiver reflected_at(int i) const;
    // Q-hat: vertices i and i' = n + i, arrows E followed by d_i : i -> i'.
    Quiver extended() const;

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    int n_ = 0;
    std::vector<Arrow> arrows_;
};

struct DoubledArrow {
    int src = 0;
    int dst = 0;
    int star = 0;   // index of the paired arrow
    int sign = 1;   // +1 on E, -1 on E*
};

// Arrow 2k is the k-th arrow of E, arrow 2k+1 its reverse in E*.
class DoubledQuiver {
public:
    DoubledQuiver() = default;
    // `base_vertices` < vertex count marks an extended quiver: vertices at or
    // beyond it are the primed copies.
    explicit DoubledQuiver(Quiver q, int base_vertices = -1);

    const Quiver& quiver() const { return q_; }
    int vertex_count() const { return q_.vertex_count(); }
    int base_vertex_count() const { return base_; }
    bool is_extended() const { return base_ != q_.vertex_count(); }
    bool is_primed(int v) const { return v >= base_; }

    const std::vector<DoubledArrow>& arrows() const { return h_; }
    std::size_t arrow_count() const { return h_.size(); }
    const DoubledArrow& arrow(int a) const { return h_[static_cast<std::size_t>(a)]; }
    // Doubled arrows with target v, in increasing arrow order.
    const std::vector<int>& arrows_into(int v) const { return into_[static_cast<std::size_t>(v)]; }

    // File-format arrow name: a{k}, a{k}*, d{i}, d{i}* (1-based k, i).
    std::string arrow_name(int a) const;
    int arrow_by_name(const std::string& name) const;  // -1 if unknown

    friend bool operator==(const DoubledQuiver& x, const DoubledQuiver& y) {
        return x.q_ == y.q_ && x.base_ == y.base_;
    }

private:
    Quiver q_;
    int base_ = 0;
    std::vector<DoubledArrow> h_;
    std::vector<std::vector<int>> into_;
};

// Extended quiver of an ADE orientation.
DoubledQuiver extended_doubled(const Quiver& q);

}  // namespace preproj
