#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "makekex/embedding.hpp"
#include "makekex/rng.hpp"

namespace makekex {

// How a group was specified: a builtin name, or explicit generator
// permutations in zero-based one-line notation.
struct GroupSpec {
    std::string name;
    std::size_t degree = 0;
    std::vector<Permutation> generators;

    bool is_builtin() const { return !name.empty(); }
};

GroupPtr resolve_group(const GroupSpec& spec);

// The public data of one key-exchange instance. An absent group_spec is the
// commutative baseline over Z_p; internally that still carries the trivial
// group so both cases share one code path.
struct PublicParams {
    PrimeModulus mod;
    std::optional<GroupSpec> group_spec;
    GroupPtr group;
    std::size_t n;
    GroupRingMatrix M;
    GroupRingMatrix H1;
    GroupRingMatrix H2;

    bool commutative() const { return !group_spec.has_value(); }
    EmbeddingContext context() const { return {group, mod, n}; }
};

// accumulated = sum_{i=0}^{e-1} H1^i M H2^i for e = power_index.
struct SemidirectPair {
    GroupRingMatrix accumulated;
    std::uint64_t power_index;
};

struct Transcript {
    PublicParams params;
    GroupRingMatrix A;
    GroupRingMatrix B;
    // Private side, kept only for demo and test transcripts; 0 means unknown.
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::optional<GroupRingMatrix> K;
};

GroupRingElement random_element(SeededRng& rng, const GroupPtr& group, PrimeModulus mod);
GroupRingMatrix random_matrix(SeededRng& rng, const GroupPtr& group, PrimeModulus mod,
                              std::size_t n);

// True when the embedded image of h has no inverse, i.e. rank below full.
bool is_singular_embedding(const GroupRingMatrix& h, const EmbeddingContext& ctx);

// M uniformly random; H1, H2 resampled until their embedded images are
// singular. Fully determined by the seed.
// Throws GenerationFailureError if the rejection cap is exhausted.
PublicParams generate_params(std::uint64_t p, std::optional<GroupSpec> group_spec,
                             std::size_t n, std::uint64_t seed);

// Uniform exponent in [2, 2^bits), 2 <= bits <= 63.
std::uint64_t sample_exponent(SeededRng& rng, unsigned bits);

// Semidirect exponentiation in O(log e) ring-matrix products, using the
// splitting sum_{i=0}^{a+b-1} = H1^b (sum_{i=0}^{a-1}) H2^b + sum_{i=0}^{b-1}.
// Requires e >= 1.
SemidirectPair semidirect_power(const GroupRingMatrix& m, const GroupRingMatrix& h1,
                                const GroupRingMatrix& h2, std::uint64_t e);

// One party's final step: H1^own_exponent * received * H2^own_exponent + own_accumulated.
GroupRingMatrix derive_key(const GroupRingMatrix& received, std::uint64_t own_exponent,
                           const GroupRingMatrix& own_accumulated,
                           const GroupRingMatrix& h1, const GroupRingMatrix& h2);

// Runs both sides with the given exponents (each >= 1) and checks that they
// agree on the key before returning the transcript.
Transcript run_exchange(const PublicParams& params, std::uint64_t x, std::uint64_t y);

} // namespace makekex
