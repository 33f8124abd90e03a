#include "doctest.h"
#include "makekex/protocol.hpp"
#include "makekex/linalg.hpp"

using namespace makekex;

namespace {

// Literal sum H1^i M H2^i for i in [0, e), one product at a time. Quadratic
// in e, fine for small exponents, and shares nothing with the doubling
// ladder.
GroupRingMatrix naive_accumulate(const GroupRingMatrix& m, const GroupRingMatrix& h1,
                                 const GroupRingMatrix& h2, std::uint64_t e) {
    GroupRingMatrix acc(m.group(), m.modulus(), m.dim());
    for (std::uint64_t i = 0; i < e; ++i)
        acc = acc + pow(h1, i) * m * pow(h2, i);
    return acc;
}

PublicParams make_params(std::uint64_t p, const char* group_name, std::size_t n,
                         std::uint64_t seed) {
    std::optional<GroupSpec> spec;
    if (group_name) spec = GroupSpec{group_name, 0, {}};
    return generate_params(p, spec, n, seed);
}

} // namespace

TEST_CASE("resolve_group handles builtins, generators, and absence") {
    CHECK(resolve_group(GroupSpec{"s3", 0, {}})->order() == 6);
    CHECK(resolve_group(GroupSpec{"", 3, {{1, 2, 0}}})->order() == 3);
    CHECK_THROWS_AS(resolve_group(GroupSpec{"unknown", 0, {}}), InvalidInputError);
}

TEST_CASE("random elements and matrices are deterministic in the seed") {
    const GroupPtr s3 = FiniteGroupTable::builtin("s3");
    const PrimeModulus m7(7);
    SeededRng r1(5), r2(5), r3(6);
    CHECK(random_matrix(r1, s3, m7, 2) == random_matrix(r2, s3, m7, 2));
    CHECK(random_matrix(r1, s3, m7, 2) != random_matrix(r3, s3, m7, 2));
}

TEST_CASE("generated parameters satisfy their contract") {
    const struct {
        std::uint64_t p;
        const char* group;
        std::size_t n;
    } configs[] = {{101, nullptr, 3}, {7, "s3", 2}, {2, "c2", 2}};
    for (const auto& cfg : configs) {
        const PublicParams params = make_params(cfg.p, cfg.group, cfg.n, 42);
        CAPTURE(cfg.p);
        CHECK(params.mod.value() == cfg.p);
        CHECK(params.n == cfg.n);
        CHECK(params.commutative() == (cfg.group == nullptr));
        REQUIRE(params.group != nullptr);
        if (cfg.group == nullptr) CHECK(params.group->order() == 1);

        // Both platform elements must embed to singular matrices; otherwise
        // telescoping at the attacker side loses its guarantee.
        const EmbeddingContext ctx = params.context();
        CHECK(is_singular_embedding(params.H1, ctx));
        CHECK(is_singular_embedding(params.H2, ctx));
        CHECK(rank(ctx.embed(params.H1)) < ctx.k());
        CHECK(rank(ctx.embed(params.H2)) < ctx.k());
    }
}

TEST_CASE("parameter generation is reproducible and seed-sensitive") {
    const PublicParams a = make_params(101, nullptr, 3, 7);
    const PublicParams b = make_params(101, nullptr, 3, 7);
    const PublicParams c = make_params(101, nullptr, 3, 8);
    CHECK(a.M == b.M);
    CHECK(a.H1 == b.H1);
    CHECK(a.H2 == b.H2);
    CHECK((a.M != c.M || a.H1 != c.H1 || a.H2 != c.H2));
}

TEST_CASE("generate_params validates its inputs") {
    CHECK_THROWS_AS(generate_params(6, std::nullopt, 3, 1), InvalidInputError);
    CHECK_THROWS_AS(generate_params(101, std::nullopt, 0, 1), InvalidInputError);
}

TEST_CASE("exponent sampling stays in range") {
    SeededRng rng(11);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t e = sample_exponent(rng, 4);
        REQUIRE(e >= 2);
        REQUIRE(e < 16);
    }
    for (int i = 0; i < 50; ++i) {
        const std::uint64_t e = sample_exponent(rng, 2);
        REQUIRE((e == 2 || e == 3));
    }
    CHECK_THROWS_AS(sample_exponent(rng, 1), InvalidInputError);
    CHECK_THROWS_AS(sample_exponent(rng, 64), InvalidInputError);
    CHECK(sample_exponent(rng, 63) >= 2);
}

TEST_CASE("semidirect power matches the naive sum") {
    SeededRng rng(13);
    for (const char* name : {(const char*)nullptr, "s3"}) {
        const PublicParams params = make_params(name ? 7 : 101, name, 2, 99);
        for (std::uint64_t e = 1; e <= 24; ++e) {
            const SemidirectPair got = semidirect_power(params.M, params.H1, params.H2, e);
            CAPTURE(e);
            REQUIRE(got.power_index == e);
            REQUIRE(got.accumulated == naive_accumulate(params.M, params.H1, params.H2, e));
        }
    }
}

TEST_CASE("semidirect power base cases and errors") {
    const PublicParams params = make_params(101, nullptr, 2, 3);
    CHECK(semidirect_power(params.M, params.H1, params.H2, 1).accumulated == params.M);
    const auto two = semidirect_power(params.M, params.H1, params.H2, 2);
    CHECK(two.accumulated == params.H1 * params.M * params.H2 + params.M);
    CHECK_THROWS_AS(semidirect_power(params.M, params.H1, params.H2, 0), InvalidInputError);
}

TEST_CASE("semidirect split identity holds for mixed exponents") {
    // a+b decomposition: S_{a+b} = H1^b S_a H2^b + S_b, exercised across the
    // doubling ladder's own outputs.
    const PublicParams params = make_params(7, "s3", 1, 21);
    const std::uint64_t pairs[][2] = {{1, 1}, {3, 2}, {5, 8}, {17, 14}};
    for (const auto& pr : pairs) {
        const auto sa = semidirect_power(params.M, params.H1, params.H2, pr[0]);
        const auto sb = semidirect_power(params.M, params.H1, params.H2, pr[1]);
        const auto sab = semidirect_power(params.M, params.H1, params.H2, pr[0] + pr[1]);
        CHECK(sab.accumulated ==
              pow(params.H1, pr[1]) * sa.accumulated * pow(params.H2, pr[1]) + sb.accumulated);
    }
}

TEST_CASE("exchange agrees and equals the combined power") {
    const struct {
        std::uint64_t p;
        const char* group;
        std::size_t n;
        std::uint64_t x, y;
    } cases[] = {
        {101, nullptr, 3, 5, 9},
        {7, "s3", 2, 12, 7},
        {2, "c2", 2, 3, 4},
        {5, nullptr, 1, 1, 1},  // minimum legal exponents
        {11, "d4", 1, 1000003, 65537},
    };
    for (const auto& c : cases) {
        const PublicParams params = make_params(c.p, c.group, c.n, 17);
        const Transcript t = run_exchange(params, c.x, c.y);
        CAPTURE(c.p);
        CAPTURE(c.x);
        REQUIRE(t.K.has_value());
        CHECK(t.x == c.x);
        CHECK(t.y == c.y);

        // Public shares are the two one-sided sums.
        CHECK(t.A == semidirect_power(params.M, params.H1, params.H2, c.x).accumulated);
        CHECK(t.B == semidirect_power(params.M, params.H1, params.H2, c.y).accumulated);

        // Both derivations produce the key, which is the (x+y)-fold sum.
        const GroupRingMatrix ka = derive_key(t.B, c.x, t.A, params.H1, params.H2);
        const GroupRingMatrix kb = derive_key(t.A, c.y, t.B, params.H1, params.H2);
        CHECK(ka == *t.K);
        CHECK(kb == *t.K);
        CHECK(*t.K ==
              semidirect_power(params.M, params.H1, params.H2, c.x + c.y).accumulated);
    }
}

TEST_CASE("exchange rejects zero exponents") {
    const PublicParams params = make_params(101, nullptr, 2, 4);
    CHECK_THROWS_AS(run_exchange(params, 0, 5), InvalidInputError);
    CHECK_THROWS_AS(run_exchange(params, 5, 0), InvalidInputError);
}

TEST_CASE("telescoping identity for the attacker") {
    // H1 A H2 + M - A telescopes to H1^x M H2^x; this is the only quantity
    // the attack needs from the protocol side.
    for (const char* name : {(const char*)nullptr, "s3"}) {
        const PublicParams params = make_params(name ? 7 : 101, name, 2, 31);
        for (const std::uint64_t x : {1ULL, 2ULL, 9ULL, 40ULL}) {
            const GroupRingMatrix a =
                semidirect_power(params.M, params.H1, params.H2, x).accumulated;
            const GroupRingMatrix lhs = params.H1 * a * params.H2 + params.M - a;
            const GroupRingMatrix rhs =
                pow(params.H1, x) * params.M * pow(params.H2, x);
            CAPTURE(x);
            REQUIRE(lhs == rhs);
        }
    }
}
