// Shared helpers for the unit tests: tiny module builders, hand-rolled
// generators and brute-force oracles that do not go through the solver.
#pragma once

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "preproj/io.hpp"
#include "preproj/n_gamma.hpp"
#include "preproj/random_module.hpp"
#include "preproj/reflection_functors.hpp"

namespace preproj::test {

using Rows = std::vector<std::vector<std::int64_t>>;
using NamedMaps = std::vector<std::pair<std::string, Rows>>;

template <ExactField F = Fp>
PiModule<F> build(const DoubledQuiver& dq, Dims d, const NamedMaps& maps) {
    PiModule<F> m(dq, std::move(d));
    for (const auto& [name, rows] : maps) {
        const int a = dq.arrow_by_name(name);
        if (a < 0) throw std::invalid_argument("no arrow " + name);
        m.set_map(a, Matrix<F>::from_rows(rows));
    }
    return m;
}

template <ExactField F = Fp>
KQModule<F> build_kq(const Quiver& q, Dims d, const std::vector<Rows>& maps) {
    std::vector<Matrix<F>> ms;
    for (const auto& r : maps) ms.push_back(Matrix<F>::from_rows(r));
    return KQModule<F>(q, std::move(d), std::move(ms));
}

// Restores the default prime after tests that shrink it for enumeration.
class SmallPrime : public ::testing::Test {
protected:
    void TearDown() override { Fp::set_modulus(kDefaultPrime); }
};

// Counts module morphisms M -> N by enumerating every family of matrices over
// the active (small) prime.  The solver-free oracle for hom_dim.
inline std::uint64_t count_morphisms(const PiModule<Fp>& m, const PiModule<Fp>& n) {
    const auto& q = m.quiver();
    std::size_t entries = 0;
    for (int v = 0; v < q.vertex_count(); ++v) entries += static_cast<std::size_t>(m.dim(v) * n.dim(v));
    const std::uint64_t p = Fp::modulus();
    std::vector<std::uint64_t> digits(entries, 0);
    std::uint64_t count = 0;
    for (;;) {
        Morphism<Fp> f;
        std::size_t k = 0;
        for (int v = 0; v < q.vertex_count(); ++v) {
            Matrix<Fp> fv(static_cast<std::size_t>(n.dim(v)), static_cast<std::size_t>(m.dim(v)));
            for (std::size_t r = 0; r < fv.rows(); ++r)
                for (std::size_t c = 0; c < fv.cols(); ++c) fv(r, c) = Fp::from_int(static_cast<std::int64_t>(digits[k++]));
            f.push_back(fv);
        }
        bool ok = true;
        for (int a = 0; a < static_cast<int>(q.arrow_count()) && ok; ++a) {
            const auto& ar = q.arrow(a);
            ok = f[static_cast<std::size_t>(ar.dst)] * m.map(a) == n.map(a) * f[static_cast<std::size_t>(ar.src)];
        }
        count += ok ? 1 : 0;
        std::size_t i = 0;
        while (i < entries && ++digits[i] == p) digits[i++] = 0;
        if (i == entries) break;
    }
    return count;
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Partitions of nu into positive roots, counted by recursion over the root
// list.  Independent of the crystal and of the library's own counter.
inline std::uint64_t kostant_bruteforce(const std::vector<RootVec>& roots, std::size_t from, const RootVec& nu) {
    if (nu.is_zero()) return 1;
    std::uint64_t total = 0;
    for (std::size_t r = from; r < roots.size(); ++r) {
        const RootVec rest = nu - roots[r];
        bool nonneg = true;
        for (std::size_t i = 0; i < rest.size(); ++i) nonneg = nonneg && rest[i] >= 0;
        if (nonneg) total += kostant_bruteforce(roots, r, rest);
    }
    return total;
}

template <ExactField F = Fp>
PiModule<F> random_module(const Quiver& q, std::uint64_t seed, int max_dim = 3) {
    std::mt19937_64 rng(seed);
    RandomModuleOptions opt;
    opt.max_dim = max_dim;
    return random_pi_module<F>(q, rng, opt);
}

template <ExactField F>
bool iso(const PiModule<F>& a, const PiModule<F>& b) {
    return is_isomorphic(a, b) == IsoVerdict::yes;
}

}  // namespace preproj::test
