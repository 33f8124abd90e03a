#include "makekex/attack.hpp"

#include <chrono>

#include "makekex/linalg.hpp"

namespace makekex {

namespace {
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}
}

FieldMatrix telescope(const AttackInput& input, const EmbeddingContext& ctx) {
    const PublicParams& p = input.params;
    return ctx.embed(p.H1 * input.A * p.H2 + p.M - input.A);
}

AttackResult recover_key(const AttackInput& input) {
    StageTimings timings;
    const auto start = Clock::now();

    const EmbeddingContext ctx = input.params.context();
    const std::size_t k = ctx.k();

    auto stage = Clock::now();
    const FieldVector rhs = vec(telescope(input, ctx));
    timings.telescope_s = seconds_since(stage);

    const FieldMatrix e1 = ctx.embed(input.params.H1);
    const FieldMatrix e2 = ctx.embed(input.params.H2);

    FieldVector t = [&] {
        stage = Clock::now();
        // The dominant allocation: k^2 x k^2. Scoped so it is gone before
        // the recovery stage.
        const FieldMatrix system = sandwich_matrix(e1, e2, ctx.embed(input.params.M));
        timings.build_s = seconds_since(stage);
        stage = Clock::now();
        FieldVector solved = solve_linear(system, rhs);
        timings.solve_s = seconds_since(stage);
        return solved;
    }();

    stage = Clock::now();
    const FieldMatrix key_embedded =
        apply_sandwich(e1, e2, ctx.embed(input.B), t) + ctx.embed(input.A);
    GroupRingMatrix key = ctx.extract(key_embedded);
    timings.recover_s = seconds_since(stage);

    timings.total_s = seconds_since(start);
    return AttackResult{std::move(key), std::move(t), k * k, timings};
}

FieldVector known_exponent_solution(const GroupRingMatrix& h1, const GroupRingMatrix& h2,
                                    std::uint64_t x, const EmbeddingContext& ctx) {
    const std::size_t k = ctx.k();
    const FieldPolynomial p = poly_pow_mod(char_poly(ctx.embed(h1)), x);
    const FieldPolynomial q = poly_pow_mod(char_poly(ctx.embed(h2)), x);
    FieldVector s(ctx.modulus(), k * k);
    for (std::size_t h = 0; h < k; ++h) {
        for (std::size_t g = 0; g < k; ++g) {
            s.set(h * k + g, ctx.modulus().mul(p.coeff(g), q.coeff(h)));
        }
    }
    return s;
}

bool kernel_is_preserved(const GroupRingMatrix& y, const GroupRingMatrix& h1,
                         const GroupRingMatrix& h2, const FieldVector& u,
                         std::uint64_t l, const EmbeddingContext& ctx) {
    const GroupRingMatrix conjugated = pow(h1, l) * y * pow(h2, l);
    const FieldMatrix image =
        apply_sandwich(ctx.embed(h1), ctx.embed(h2), ctx.embed(conjugated), u);
    return image.is_zero();
}

} // namespace makekex
