#pragma once

#include "makekex/protocol.hpp"

namespace makekex {

// Everything the eavesdropper sees: the public parameters and the two
// exchanged matrices. Deliberately excludes exponents and the shared key.
struct AttackInput {
    PublicParams params;
    GroupRingMatrix A;
    GroupRingMatrix B;

    static AttackInput from_transcript(const Transcript& t) {
        return AttackInput{t.params, t.A, t.B};
    }
};

struct StageTimings {
    double telescope_s = 0;
    double build_s = 0;
    double solve_s = 0;
    double recover_s = 0;
    double total_s = 0;
};

struct AttackResult {
    GroupRingMatrix recovered_key;
    FieldVector solution;
    std::size_t system_size = 0;
    StageTimings timings;
};

// Embedded image of H1*A*H2 + M - A. On an honest transcript this equals the
// image of H1^x M H2^x, with x nowhere in sight.
FieldMatrix telescope(const AttackInput& input, const EmbeddingContext& ctx);

// Full key-recovery pipeline: build the sandwich system for M, solve against
// the telescoped right-hand side, replay the solution on B, add A, pull the
// result back out of the embedding.
// Throws NoSolutionError or NotInImageError on corrupted transcripts; honest
// ones always succeed.
AttackResult recover_key(const AttackInput& input);

// Test oracle. With the private exponent in hand, the coefficient vector
// t[h*k+g] = p_g * q_h (p, q from X^x mod the characteristic polynomials of
// the embedded H1, H2) solves the sandwich system for every Y.
FieldVector known_exponent_solution(const GroupRingMatrix& h1, const GroupRingMatrix& h2,
                                    std::uint64_t x, const EmbeddingContext& ctx);

// Test oracle: a kernel vector of the sandwich system for Y stays in the
// kernel after Y is conjugated to H1^l Y H2^l.
bool kernel_is_preserved(const GroupRingMatrix& y, const GroupRingMatrix& h1,
                         const GroupRingMatrix& h2, const FieldVector& u,
                         std::uint64_t l, const EmbeddingContext& ctx);

} // namespace makekex
