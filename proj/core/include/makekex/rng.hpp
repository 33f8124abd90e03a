#pragma once

#include <cstdint>
#include <random>

#include "makekex/errors.hpp"

namespace makekex {

// Seeded deterministic RNG. mt19937_64 output is pinned by the standard, and
// bounded draws use explicit rejection sampling, so a seed produces the same
// stream on every platform (std::uniform_int_distribution does not promise
// that).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform draw from [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) {
            throw InvalidInputError("SeededRng::below: bound must be positive");
        }
        // Reject raw values under 2^64 mod bound; the survivors split evenly.
        const std::uint64_t cut = (0 - bound) % bound;
        std::uint64_t r = gen_();
        while (r < cut) {
            r = gen_();
        }
        return r % bound;
    }

    // Uniform draw from [lo, hi).
    std::uint64_t in_range(std::uint64_t lo, std::uint64_t hi) {
        if (lo >= hi) {
            throw InvalidInputError("SeededRng::in_range: empty range");
        }
        return lo + below(hi - lo);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace makekex
