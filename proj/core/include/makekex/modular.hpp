#pragma once

#include <cstdint>

#include "makekex/errors.hpp"

namespace makekex {

// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

// A validated prime modulus p together with residue arithmetic on canonical
// representatives in [0, p). For p < 2^32 a Barrett constant makes the
// multiply-reduce path branch-free enough for the elimination inner loops.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t s = a + b;
        if (s < a || s >= p_) s -= p_;
        return s;
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
        return a >= b ? a - b : a + (p_ - b);
    }

    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        if (small_) return reduce_small(a * b);
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }

    // acc + a*b mod p; acc, a, b canonical. The workhorse of every inner loop.
    std::uint64_t mul_add(std::uint64_t acc, std::uint64_t a, std::uint64_t b) const noexcept {
        if (small_) return reduce_small(acc + a * b);  // < p + (p-1)^2 < 2^64 for p < 2^32
        return add(acc, mul(a, b));
    }

    // Any 64-bit value to its canonical residue.
    std::uint64_t reduce(std::uint64_t x) const noexcept {
        if (small_) return reduce_small(x);
        return x % p_;
    }

    std::uint64_t pow(std::uint64_t base, std::uint64_t e) const noexcept;

    // Multiplicative inverse via Fermat; throws on zero.
    std::uint64_t inv(std::uint64_t a) const;

    bool operator==(const PrimeModulus& other) const noexcept { return p_ == other.p_; }
    bool operator!=(const PrimeModulus& other) const noexcept { return p_ != other.p_; }

private:
    // Barrett: with b = floor(2^64/p), q = hi64(x*b) satisfies
    // floor(x/p) - 1 <= q <= floor(x/p), so one conditional subtract fixes r.
    std::uint64_t reduce_small(std::uint64_t x) const noexcept {
        std::uint64_t q = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(x) * barrett_) >> 64);
        std::uint64_t r = x - q * p_;
        if (r >= p_) r -= p_;
        return r;
    }

    std::uint64_t p_;
    std::uint64_t barrett_;
    bool small_;
};

// An element of Z_p, kept canonical in [0, p) at all times.
class FieldElement {
public:
    FieldElement(std::uint64_t value, PrimeModulus modulus)
        : value_(modulus.reduce(value)), mod_(modulus) {}

    std::uint64_t value() const noexcept { return value_; }
    const PrimeModulus& modulus() const noexcept { return mod_; }

    FieldElement operator+(const FieldElement& o) const {
        require_same(o);
        return raw(mod_.add(value_, o.value_), mod_);
    }
    FieldElement operator-(const FieldElement& o) const {
        require_same(o);
        return raw(mod_.sub(value_, o.value_), mod_);
    }
    FieldElement operator*(const FieldElement& o) const {
        require_same(o);
        return raw(mod_.mul(value_, o.value_), mod_);
    }
    FieldElement operator-() const { return raw(mod_.neg(value_), mod_); }

    FieldElement inverse() const { return raw(mod_.inv(value_), mod_); }

    bool operator==(const FieldElement& o) const {
        return mod_ == o.mod_ && value_ == o.value_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    static FieldElement raw(std::uint64_t v, PrimeModulus m) {
        FieldElement e(0, m);
        e.value_ = v;
        return e;
    }
    void require_same(const FieldElement& o) const {
        if (mod_ != o.mod_) {
            throw IncompatibleError("field elements live over different moduli");
        }
    }

    std::uint64_t value_;
    PrimeModulus mod_;
};

} // namespace makekex
