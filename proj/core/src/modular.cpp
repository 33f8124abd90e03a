#include "makekex/modular.hpp"

namespace makekex {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        e >>= 1;
    }
    return result;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality for all n < 3.3 * 10^24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p), barrett_(0), small_(p < (1ULL << 32)) {
    if (!is_prime_u64(p)) {
        throw InvalidInputError("modulus must be a prime >= 2");
    }
    if (small_) {
        barrett_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p_);
    }
}

std::uint64_t PrimeModulus::pow(std::uint64_t base, std::uint64_t e) const noexcept {
    std::uint64_t result = 1 % p_;
    std::uint64_t b = base;
    while (e > 0) {
        if (e & 1) result = mul(result, b);
        b = mul(b, b);
        e >>= 1;
    }
    return result;
}

std::uint64_t PrimeModulus::inv(std::uint64_t a) const {
    if (a == 0) {
        throw DivisionByZeroError("inverse of zero");
    }
    return pow(a, p_ - 2);
}

} // namespace makekex
