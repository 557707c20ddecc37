#include "support.hpp"

namespace preproj {
namespace {

using test::SmallPrime;

TEST(Fp, ArithmeticAndInverse) {
    const Fp a = Fp::from_int(-3);
    EXPECT_EQ(a.to_signed(), -3);
    EXPECT_EQ((a + Fp::from_int(3)), Fp::zero());
    for (std::int64_t x = 1; x < 200; ++x) EXPECT_TRUE((Fp::from_int(x) * Fp::from_int(x).inverse()).is_one());
    EXPECT_THROW(Fp::zero().inverse(), std::domain_error);
}

TEST(Fp, RejectsBadPrimes) {
    EXPECT_THROW(Fp::set_modulus(1000004), std::invalid_argument);
    EXPECT_THROW(Fp::set_modulus(4294967311ULL), std::invalid_argument);
    EXPECT_EQ(Fp::modulus(), kDefaultPrime);
}

TEST_F(SmallPrime, EpochMovesOnlyWhenThePrimeChanges) {
    const auto e = Fp::modulus_epoch();
    Fp::set_modulus(kDefaultPrime);
    EXPECT_EQ(Fp::modulus_epoch(), e);
    Fp::set_modulus(7);
    EXPECT_GT(Fp::modulus_epoch(), e);
    EXPECT_EQ((Fp::from_int(3) * Fp::from_int(5)).residue(), 1u);
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(Matrix<Rational>::identity(3)), 3u);
    EXPECT_EQ(rank(Matrix<Fp>(2, 5)), 0u);
    EXPECT_EQ(rank(Matrix<Rational>::from_rows({{1, 2}, {2, 4}})), 1u);
    EXPECT_EQ(rank(Matrix<Fp>::from_rows({{1, 2}, {2, 4}})), 1u);
}

TEST(Kernel, Examples) {
    EXPECT_EQ(kernel_basis(Matrix<Rational>::identity(4)).cols(), 0u);
    EXPECT_EQ(kernel_basis(Matrix<Rational>(1, 3)).cols(), 3u);
    const auto k = kernel_basis(Matrix<Rational>::from_rows({{1, 1}}));
    ASSERT_EQ(k.cols(), 1u);
    EXPECT_EQ(k(0, 0), -k(1, 0));
    EXPECT_FALSE(k(0, 0).is_zero());
}

TEST(Solve, Examples) {
    const std::vector<Rational> b = {Rational::from_int(3), Rational::from_int(1)};
    EXPECT_EQ(*solve(Matrix<Rational>::identity(2), b), b);
    EXPECT_FALSE(solve(Matrix<Rational>(2, 2), b).has_value());
    const auto x = solve(Matrix<Rational>::from_rows({{1, 1}, {0, 1}}), b);
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], Rational::from_int(2));
    EXPECT_EQ((*x)[1], Rational::from_int(1));
}

TEST(RandomKernelElement, DeterministicAndInKernel) {
    EXPECT_EQ(random_kernel_element(Matrix<Fp>::identity(3), 9), std::vector<Fp>(3, Fp::zero()));
    const Matrix<Fp> z(1, 2);
    EXPECT_EQ(random_kernel_element(z, 5), random_kernel_element(z, 5));
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const auto a = random_matrix_of_random_rank<Fp>(1 + uniform_below(rng, 4), 1 + uniform_below(rng, 5), rng);
        const auto v = random_kernel_element(a, static_cast<std::uint64_t>(t));
        for (const auto& x : a.apply(v)) EXPECT_TRUE(x.is_zero());
    }
}

// rank + nullity = columns, and the kernel basis is independent, on random
// low-rank products in both fields.
template <ExactField F>
void rank_nullity(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 200; ++t) {
        const std::size_t r = uniform_below(rng, 6), c = uniform_below(rng, 6), k = uniform_below(rng, 4);
        const Matrix<F> a = random_matrix<F>(r, k, rng) * random_matrix<F>(k, c, rng);
        const Matrix<F> ker = kernel_basis(a);
        EXPECT_EQ(rank(a) + ker.cols(), c);
        EXPECT_LE(rank(a), k);
        EXPECT_EQ(rank(ker), ker.cols());
        EXPECT_TRUE((a * ker).is_zero());
        const auto pi = cokernel_projection(a);
        EXPECT_TRUE((pi * a).is_zero());
        EXPECT_EQ(pi.rows(), r - rank(a));
        EXPECT_EQ(pi * right_inverse(pi), Matrix<F>::identity(pi.rows()));
    }
}

TEST(Properties, RankNullityFp) { rank_nullity<Fp>(1); }
TEST(Properties, RankNullityRational) { rank_nullity<Rational>(2); }

// Over F_3, count solutions of a x = 0 by enumeration: 3^nullity.
TEST_F(SmallPrime, KernelSizeMatchesEnumeration) {
    Fp::set_modulus(3);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 40; ++t) {
        const std::size_t r = 1 + uniform_below(rng, 3), c = 1 + uniform_below(rng, 5);
        const auto a = random_matrix<Fp>(r, c, rng);
        std::uint64_t zeros = 0;
        for (std::uint64_t code = 0; code < test::ipow(3, c); ++code) {
            std::vector<Fp> x(c);
            std::uint64_t y = code;
            for (auto& e : x) {
                e = Fp::from_int(static_cast<std::int64_t>(y % 3));
                y /= 3;
            }
            bool z = true;
            for (const auto& e : a.apply(x)) z = z && e.is_zero();
            zeros += z;
        }
        EXPECT_EQ(zeros, test::ipow(3, kernel_basis(a).cols()));
    }
}

TEST(MixSeed, SpreadsCounters) {
    EXPECT_EQ(mix_seed(1, 2), mix_seed(1, 2));
    EXPECT_NE(mix_seed(1, 2), mix_seed(1, 3));
    EXPECT_NE(mix_seed(1, 2), mix_seed(2, 2));
}

}  // namespace
}  // namespace preproj
