// Scalar types for exact linear algebra: residues modulo a process-wide prime,
// and GMP rationals.  Every matrix routine is a template over one of these.
#pragma once

#include <atomic>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace preproj {

inline constexpr std::uint64_t kDefaultPrime = 1000003;

// Uniform draw from [0, bound) using rejection on raw mt19937_64 output, so
// the stream is identical on every standard library.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

// splitmix64 finaliser; used to derive child seeds from (master, counter).
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t counter) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

bool is_prime(std::uint64_t n);

class Fp {
public:
    Fp() = default;
    static Fp from_int(std::int64_t x) {
        const auto p = static_cast<std::int64_t>(modulus());
        std::int64_t r = x % p;
        if (r < 0) r += p;
        return Fp(static_cast<std::uint64_t>(r));
    }
    static Fp zero() { return Fp(0); }
    static Fp one() { return Fp(1); }
    static Fp random(std::mt19937_64& rng) { return Fp(uniform_below(rng, modulus())); }

    // The prime is global state: change it only while no computation is live.
    // Caches keyed on the field must consult modulus_epoch().
    static std::uint64_t modulus() { return prime_.load(std::memory_order_relaxed); }
    static void set_modulus(std::uint64_t p);
    static std::uint64_t modulus_epoch() { return epoch_.load(std::memory_order_relaxed); }
    static std::string field_name();

    std::uint64_t residue() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    // Symmetric representative in (-p/2, p/2], for printing small signed values.
    std::int64_t to_signed() const {
        const auto p = modulus();
        return v_ > p / 2 ? static_cast<std::int64_t>(v_) - static_cast<std::int64_t>(p)
                          : static_cast<std::int64_t>(v_);
    }

    friend Fp operator+(Fp a, Fp b) {
        std::uint64_t s = a.v_ + b.v_;
        return Fp(s >= modulus() ? s - modulus() : s);
    }
    friend Fp operator-(Fp a, Fp b) { return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + modulus() - b.v_); }
    friend Fp operator*(Fp a, Fp b) { return Fp((a.v_ * b.v_) % modulus()); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return Fp(v_ == 0 ? 0 : modulus() - v_); }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

    Fp inverse() const;

private:
    explicit Fp(std::uint64_t v) : v_(v) {}
    std::uint64_t v_ = 0;
    static inline std::atomic<std::uint64_t> prime_{kDefaultPrime};
    static inline std::atomic<std::uint64_t> epoch_{0};
};

class Rational {
public:
    Rational() = default;
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    static Rational from_int(std::int64_t x) { return Rational(mpq_class(static_cast<long>(x))); }
    static Rational zero() { return Rational(); }
    static Rational one() { return from_int(1); }
    // Random entries are integers in [0, p) for the active prime, mirroring Fp.
    static Rational random(std::mt19937_64& rng) {
        return from_int(static_cast<std::int64_t>(uniform_below(rng, Fp::modulus())));
    }
    static std::string field_name() { return "rational"; }

    const mpq_class& value() const { return q_; }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    std::string to_string() const { return q_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.q_ / b.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
    Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
    Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

    Rational inverse() const { return one() / *this; }

private:
    mpq_class q_{0};
};

template <class F>
concept ExactField = requires(F a, F b, std::mt19937_64& rng) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { F::zero() } -> std::convertible_to<F>;
    { F::one() } -> std::convertible_to<F>;
    { F::from_int(std::int64_t{}) } -> std::convertible_to<F>;
    { F::random(rng) } -> std::convertible_to<F>;
};

enum class FieldMode { prime, rational };

}  // namespace preproj
