#include "preproj/field.hpp"

namespace preproj {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void Fp::set_modulus(std::uint64_t p) {
    // Products of two residues must fit in 64 bits.
    if (p >= (1ULL << 32) || !is_prime(p))
        throw std::invalid_argument("field prime must be a prime below 2^32, got " + std::to_string(p));
    if (p != prime_.load()) {
        prime_.store(p);
        epoch_.fetch_add(1);
    }
}

std::string Fp::field_name() { return "F_" + std::to_string(modulus()); }

Fp Fp::inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    // extended Euclid on (v, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(modulus()), new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
        std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
    }
    return from_int(t);
}

}  // namespace preproj
