#include "makekex/protocol.hpp"

#include "makekex/linalg.hpp"

namespace makekex {

namespace {
constexpr int kRejectionCap = 10000;
}

GroupPtr resolve_group(const GroupSpec& spec) {
    if (spec.is_builtin()) return FiniteGroupTable::builtin(spec.name);
    return FiniteGroupTable::from_generators(spec.degree, spec.generators);
}

GroupRingElement random_element(SeededRng& rng, const GroupPtr& group, PrimeModulus mod) {
    GroupRingElement e(group, mod);
    for (std::size_t i = 0; i < e.size(); ++i) e.set(i, rng.below(mod.value()));
    return e;
}

GroupRingMatrix random_matrix(SeededRng& rng, const GroupPtr& group, PrimeModulus mod,
                              std::size_t n) {
    GroupRingMatrix a(group, mod, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a.set(i, j, random_element(rng, group, mod));
        }
    }
    return a;
}

bool is_singular_embedding(const GroupRingMatrix& h, const EmbeddingContext& ctx) {
    return rank(ctx.embed(h)) < ctx.k();
}

PublicParams generate_params(std::uint64_t p, std::optional<GroupSpec> group_spec,
                             std::size_t n, std::uint64_t seed) {
    if (n == 0) throw InvalidInputError("matrix size must be at least 1");
    PrimeModulus mod(p);
    GroupPtr group = group_spec ? resolve_group(*group_spec)
                                : FiniteGroupTable::builtin("trivial");
    EmbeddingContext ctx(group, mod, n);

    SeededRng rng(seed);
    GroupRingMatrix m = random_matrix(rng, group, mod, n);
    auto sample_singular = [&] {
        for (int trial = 0; trial < kRejectionCap; ++trial) {
            GroupRingMatrix h = random_matrix(rng, group, mod, n);
            if (is_singular_embedding(h, ctx)) return h;
        }
        throw GenerationFailureError(
            "could not sample a matrix with singular embedding within the rejection cap");
    };
    GroupRingMatrix h1 = sample_singular();
    GroupRingMatrix h2 = sample_singular();
    return PublicParams{mod, std::move(group_spec), std::move(group), n,
                        std::move(m), std::move(h1), std::move(h2)};
}

std::uint64_t sample_exponent(SeededRng& rng, unsigned bits) {
    if (bits < 2 || bits > 63) {
        throw InvalidInputError("exponent bit size must be in [2, 63]");
    }
    return rng.in_range(2, std::uint64_t{1} << bits);
}

SemidirectPair semidirect_power(const GroupRingMatrix& m, const GroupRingMatrix& h1,
                                const GroupRingMatrix& h2, std::uint64_t e) {
    if (e == 0) throw InvalidInputError("semidirect exponent must be at least 1");
    int top = 63;
    while (top > 0 && !(e >> top & 1)) --top;
    // State for exponent c: acc = sum_{i<c} H1^i M H2^i, p1 = H1^c, p2 = H2^c.
    GroupRingMatrix acc = m;
    GroupRingMatrix p1 = h1;
    GroupRingMatrix p2 = h2;
    for (int bit = top - 1; bit >= 0; --bit) {
        acc = p1 * acc * p2 + acc;
        p1 = p1 * p1;
        p2 = p2 * p2;
        if (e >> bit & 1) {
            acc = h1 * acc * h2 + m;
            p1 = p1 * h1;
            p2 = p2 * h2;
        }
    }
    return SemidirectPair{std::move(acc), e};
}

GroupRingMatrix derive_key(const GroupRingMatrix& received, std::uint64_t own_exponent,
                           const GroupRingMatrix& own_accumulated,
                           const GroupRingMatrix& h1, const GroupRingMatrix& h2) {
    return pow(h1, own_exponent) * received * pow(h2, own_exponent) + own_accumulated;
}

Transcript run_exchange(const PublicParams& params, std::uint64_t x, std::uint64_t y) {
    GroupRingMatrix a = semidirect_power(params.M, params.H1, params.H2, x).accumulated;
    GroupRingMatrix b = semidirect_power(params.M, params.H1, params.H2, y).accumulated;
    GroupRingMatrix key_a = derive_key(b, x, a, params.H1, params.H2);
    GroupRingMatrix key_b = derive_key(a, y, b, params.H1, params.H2);
    if (key_a != key_b) {
        throw VerificationError("the two sides disagree on the shared key");
    }
    return Transcript{params, std::move(a), std::move(b), x, y, std::move(key_a)};
}

} // namespace makekex
