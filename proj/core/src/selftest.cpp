#include "makekex/selftest.hpp"

#include <functional>
#include <iomanip>
#include <string>
#include <vector>

#include "makekex/attack.hpp"
#include "makekex/linalg.hpp"
#include "makekex/serialize.hpp"

namespace makekex {

namespace {

struct Check {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void operator()(bool ok, const std::string& label) {
        ++checks;
        if (!ok && failures++ == 0) first_failure = label;
    }
};

FieldMatrix random_field_matrix(SeededRng& rng, PrimeModulus mod, std::size_t r,
                                std::size_t c) {
    FieldMatrix a(mod, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) a.set(i, j, rng.below(mod.value()));
    }
    return a;
}

FieldVector random_field_vector(SeededRng& rng, PrimeModulus mod, std::size_t size) {
    FieldVector v(mod, size);
    for (std::size_t i = 0; i < size; ++i) v.set(i, rng.below(mod.value()));
    return v;
}

// O(m^3) scan, independent of the convolution loop in the library.
GroupRingElement schoolbook_product(const GroupRingElement& a, const GroupRingElement& b) {
    const auto& g = *a.group();
    const PrimeModulus& mod = a.modulus();
    GroupRingElement out(a.group(), mod);
    for (std::size_t k = 0; k < g.order(); ++k) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < g.order(); ++i) {
            for (std::size_t j = 0; j < g.order(); ++j) {
                if (g.mul(i, j) == k) acc = mod.mul_add(acc, a.at(i), b.at(j));
            }
        }
        out.set(k, acc);
    }
    return out;
}

GroupRingMatrix naive_semidirect_sum(const GroupRingMatrix& m, const GroupRingMatrix& h1,
                                     const GroupRingMatrix& h2, std::uint64_t e) {
    GroupRingMatrix acc(m.group(), m.modulus(), m.dim());
    for (std::uint64_t i = 0; i < e; ++i) {
        acc = acc + pow(h1, i) * m * pow(h2, i);
    }
    return acc;
}

void suite_field_ops(Check& check, SeededRng& rng, bool quick) {
    const std::size_t trials = quick ? 100 : 500;
    check(is_prime_u64(2) && is_prime_u64(101) && is_prime_u64(2305843009213693951ULL),
          "primality of known primes");
    check(!is_prime_u64(1) && !is_prime_u64(561) && !is_prime_u64(3215031751ULL),
          "rejection of composites and pseudoprimes");
    const std::uint64_t primes[] = {2, 7, 101, 4294967311ULL, 2305843009213693951ULL};
    for (const std::uint64_t p : primes) {
        const PrimeModulus mod(p);
        for (std::size_t i = 0; i < trials / 5; ++i) {
            const std::uint64_t a = rng.below(p), b = rng.below(p), c = rng.below(p);
            check(mod.sub(mod.add(a, b), b) == a, "add/sub round trip");
            check(mod.add(a, mod.neg(a)) == 0, "negation");
            check(mod.mul(a, b) == mod.mul(b, a), "commutativity");
            check(mod.mul(mod.mul(a, b), c) == mod.mul(a, mod.mul(b, c)), "associativity");
            check(mod.mul_add(c, a, b) == mod.add(c, mod.mul(a, b)), "fused multiply-add");
            if (a != 0) check(mod.mul(a, mod.inv(a)) == 1, "inverse");
            check(mod.pow(a, 5) == mod.mul(a, mod.mul(a, mod.mul(a, mod.mul(a, a)))),
                  "small power");
        }
    }
}

void suite_cayley_hamilton(Check& check, SeededRng& rng, bool quick) {
    const std::size_t trials = quick ? 4 : 17;
    for (const std::uint64_t p : {2, 3, 5, 7, 101}) {
        const PrimeModulus mod(p);
        for (std::size_t k = 1; k <= 6; ++k) {
            for (std::size_t i = 0; i < trials; ++i) {
                const FieldMatrix a = random_field_matrix(rng, mod, k, k);
                const FieldPolynomial chi = char_poly(a);
                check(chi.degree() == static_cast<int>(k) && chi.is_monic(),
                      "characteristic polynomial is monic of full degree");
                check(poly_eval_matrix(chi, a).is_zero(), "matrix annihilates its own polynomial");
            }
        }
    }
}

void suite_power_vs_charpoly(Check& check, SeededRng& rng, bool quick) {
    const std::size_t trials = quick ? 20 : 100;
    for (std::size_t i = 0; i < trials; ++i) {
        const std::uint64_t p = (i % 2) ? 101 : 7;
        const PrimeModulus mod(p);
        const std::size_t k = 1 + rng.below(5);
        const FieldMatrix a = random_field_matrix(rng, mod, k, k);
        const std::uint64_t x = 1 + rng.below(1u << 16);
        const FieldPolynomial reduced = poly_pow_mod(char_poly(a), x);
        check(poly_eval_matrix(reduced, a) == pow(a, x),
              "high power equals reduced-polynomial evaluation");
    }
}

void suite_linear_solver(Check& check, SeededRng& rng, bool quick) {
    const std::size_t trials = quick ? 40 : 200;
    for (std::size_t i = 0; i < trials; ++i) {
        const std::uint64_t p = (i % 3 == 0) ? 2 : 101;
        const PrimeModulus mod(p);
        const std::size_t r = 1 + rng.below(8), c = 1 + rng.below(8);
        const FieldMatrix a = random_field_matrix(rng, mod, r, c);
        const FieldVector t0 = random_field_vector(rng, mod, c);
        const FieldVector b = mul(a, t0);
        const FieldVector t = solve_linear(a, b);
        check(mul(a, t) == b, "solution satisfies the system");
    }
    // Forced inconsistency: a zero row against a nonzero right-hand side.
    const PrimeModulus mod(7);
    FieldMatrix zero(mod, 2, 2);
    FieldVector b(mod, 2);
    b.set(0, 1);
    bool threw = false;
    try {
        (void)solve_linear(zero, b);
    } catch (const NoSolutionError&) {
        threw = true;
    }
    check(threw, "inconsistent system is rejected");
}

void suite_kernel(Check& check, SeededRng& rng, bool quick) {
    const std::size_t trials = quick ? 20 : 100;
    for (std::size_t i = 0; i < trials; ++i) {
        const PrimeModulus mod((i % 2) ? 7 : 101);
        const std::size_t size = 2 + rng.below(5);
        const std::size_t inner = 1 + rng.below(size);
        // Product of size x inner and inner x size has rank at most inner.
        const FieldMatrix a = random_field_matrix(rng, mod, size, inner) *
                              random_field_matrix(rng, mod, inner, size);
        const auto basis = kernel_basis(a);
        check(basis.size() == size - rank(a), "kernel dimension matches the rank");
        for (const auto& u : basis) {
            check(mul(a, u).is_zero(), "kernel vector is annihilated");
        }
        if (!basis.empty()) {
            FieldMatrix stacked(mod, size, basis.size());
            for (std::size_t c = 0; c < basis.size(); ++c) {
                for (std::size_t rr = 0; rr < size; ++rr) stacked.set(rr, c, basis[c].at(rr));
            }
            check(rank(stacked) == basis.size(), "kernel basis is independent");
        }
    }
}

void suite_group_tables(Check& check, SeededRng&, bool) {
    for (const auto& name : FiniteGroupTable::builtin_names()) {
        // Construction validates Latin-square, identity, inverse and
        // associativity; reaching this line is the main assertion.
        const GroupPtr g = FiniteGroupTable::builtin(name);
        check(g->mul(0, 0) == 0, name + ": identity is idempotent");
        for (std::size_t i = 0; i < g->order(); ++i) {
            check(g->mul(g->inverse(i), i) == 0, name + ": left inverse");
        }
    }
    check(FiniteGroupTable::builtin("trivial")->order() == 1, "trivial order");
    check(FiniteGroupTable::builtin("c2")->order() == 2, "c2 order");
    check(FiniteGroupTable::builtin("s3")->order() == 6, "s3 order");
    check(FiniteGroupTable::builtin("d4")->order() == 8, "d4 order");
    check(FiniteGroupTable::builtin("q8")->order() == 8, "q8 order");
    check(FiniteGroupTable::builtin("a5")->order() == 60, "a5 order");
    // Closure from generators: two transpositions-and-cycle presentations.
    const GroupPtr s3 = FiniteGroupTable::from_generators(3, {{1, 0, 2}, {1, 2, 0}});
    check(s3->order() == 6, "s3 closure size");
    bool capped = false;
    try {
        (void)FiniteGroupTable::from_generators(5, {{1, 2, 0, 3, 4}, {0, 1, 3, 4, 2}}, 30);
    } catch (const GroupTooLargeError&) {
        capped = true;
    }
    check(capped, "order cap triggers");
}

void suite_group_ring_product(Check& check, SeededRng& rng, bool quick) {
    const std::size_t trials = quick ? 40 : 200;
    const PrimeModulus mod(7);
    const GroupPtr g = FiniteGroupTable::builtin("s3");
    const GroupRingElement one = GroupRingElement::one(g, mod);
    for (std::size_t i = 0; i < trials; ++i) {
        const GroupRingElement a = random_element(rng, g, mod);
        const GroupRingElement b = random_element(rng, g, mod);
        check(a * b == schoolbook_product(a, b), "product matches schoolbook convolution");
        check(a * one == a && one * a == a, "identity element");
        check(a - a == GroupRingElement::zero(g, mod), "additive inverse");
    }
}

void suite_translation_matrices(Check& check, SeededRng& rng, bool) {
    for (const auto& name : FiniteGroupTable::builtin_names()) {
        const GroupPtr g = FiniteGroupTable::builtin(name);
        const PrimeModulus mod(7);
        const std::size_t m = g->order();
        // Multiplicativity, exhaustive at small order, sampled for a5.
        auto pair_ok = [&](std::size_t i, std::size_t j) {
            return translation_matrix(g, mod, i) * translation_matrix(g, mod, j) ==
                   translation_matrix(g, mod, g->mul(i, j));
        };
        if (m <= 12) {
            bool all = true;
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = 0; j < m; ++j) all = all && pair_ok(i, j);
            }
            check(all, name + ": translation is multiplicative");
        } else {
            for (int t = 0; t < 200; ++t) {
                check(pair_ok(rng.below(m), rng.below(m)),
                      name + ": translation is multiplicative (sampled)");
            }
        }
        check(translation_matrix(g, mod, 0) == FieldMatrix::identity(mod, m),
              name + ": identity maps to the identity matrix");
        // Linear independence: columns vec(T_i) of an m^2 x m matrix.
        FieldMatrix stacked(mod, m * m, m);
        for (std::size_t i = 0; i < m; ++i) {
            const FieldMatrix t = translation_matrix(g, mod, i);
            const FieldVector v = vec(t);
            for (std::size_t r = 0; r < m * m; ++r) stacked.set(r, i, v.at(r));
        }
        check(rank(stacked) == m, name + ": translation matrices are independent");
    }
}

void suite_element_embedding(Check& check, SeededRng& rng, bool quick) {
    const std::size_t trials = quick ? 50 : 200;
    for (const char* name : {"c2", "s3", "d4", "q8"}) {
        const GroupPtr g = FiniteGroupTable::builtin(name);
        const PrimeModulus mod(7);
        check(embed_element(GroupRingElement::one(g, mod)) ==
                  FieldMatrix::identity(mod, g->order()),
              std::string(name) + ": unit maps to identity");
        for (std::size_t i = 0; i < trials; ++i) {
            const GroupRingElement a = random_element(rng, g, mod);
            const GroupRingElement b = random_element(rng, g, mod);
            check(embed_element(a + b) == embed_element(a) + embed_element(b),
                  std::string(name) + ": embedding is additive");
            check(embed_element(a * b) == embed_element(a) * embed_element(b),
                  std::string(name) + ": embedding is multiplicative");
            check(extract_element(embed_element(a), g) == a,
                  std::string(name) + ": embed/extract round trip");
        }
        FieldMatrix corrupted = embed_element(random_element(rng, g, mod));
        const std::size_t r = rng.below(g->order()), c = rng.below(g->order());
        corrupted.set(r, c, mod.add(corrupted.at(r, c), 1));
        bool rejected = false;
        try {
            (void)extract_element(corrupted, g);
        } catch (const NotInImageError&) {
            rejected = true;
        }
        check(rejected, std::string(name) + ": corrupted image is rejected");
    }
}

void suite_matrix_embedding(Check& check, SeededRng& rng, bool quick) {
    const std::size_t trials = quick ? 30 : 150;
    const PrimeModulus mod(7);
    const GroupPtr g = FiniteGroupTable::builtin("s3");
    const std::size_t n = 2;
    const EmbeddingContext ctx(g, mod, n);
    check(ctx.embed(GroupRingMatrix::identity(g, mod, n)) ==
              FieldMatrix::identity(mod, ctx.k()),
          "unit matrix maps to the identity");
    for (std::size_t i = 0; i < trials; ++i) {
        const GroupRingMatrix a = random_matrix(rng, g, mod, n);
        const GroupRingMatrix b = random_matrix(rng, g, mod, n);
        check(ctx.embed(a + b) == ctx.embed(a) + ctx.embed(b), "embedding is additive");
        check(ctx.embed(a * b) == ctx.embed(a) * ctx.embed(b), "embedding is multiplicative");
        check(ctx.extract(ctx.embed(a)) == a, "embed/extract round trip");
    }
}

void suite_sandwich_operator(Check& check, SeededRng& rng, bool quick) {
    const std::size_t trials = quick ? 5 : 20;
    struct Config {
        std::uint64_t p;
        const char* group;
        std::size_t n;
    };
    for (const Config cfg : {Config{7, "s3", 1}, Config{11, "trivial", 3}}) {
        const PrimeModulus mod(cfg.p);
        const GroupPtr g = FiniteGroupTable::builtin(cfg.group);
        const EmbeddingContext ctx(g, mod, cfg.n);
        const std::size_t k = ctx.k();
        for (std::size_t i = 0; i < trials; ++i) {
            const GroupRingMatrix h1 = random_matrix(rng, g, mod, cfg.n);
            const GroupRingMatrix h2 = random_matrix(rng, g, mod, cfg.n);
            const GroupRingMatrix y = random_matrix(rng, g, mod, cfg.n);
            const GroupRingMatrix y2 = random_matrix(rng, g, mod, cfg.n);

            const FieldMatrix ey = ctx.embed(y);
            check(unvec(vec(ey), k, k) == ey, "vec/unvec round trip");

            const FieldMatrix l = sandwich_matrix(h1, h2, y, ctx);
            const FieldMatrix l2 = sandwich_matrix(h1, h2, y2, ctx);
            check(sandwich_matrix(h1, h2, y + y2, ctx) == l + l2,
                  "sandwich matrix is linear in its argument");

            // Column identity against ring-level computation.
            const std::size_t cg = rng.below(k), ch = rng.below(k);
            const FieldVector col_expected =
                vec(ctx.embed(pow(h1, cg) * y * pow(h2, ch)));
            bool col_ok = true;
            for (std::size_t r = 0; r < k * k; ++r) {
                col_ok = col_ok && l.at(r, ch * k + cg) == col_expected.at(r);
            }
            check(col_ok, "column equals embedded two-sided power product");

            const FieldVector t = random_field_vector(rng, mod, k * k);
            check(apply_sandwich(ctx.embed(h1), ctx.embed(h2), ey, t) ==
                      unvec(mul(l, t), k, k),
                  "direct application equals matrix action");
        }
    }
}

void suite_exchange(Check& check, SeededRng& rng, bool quick) {
    const std::size_t trials = quick ? 10 : 50;
    struct Config {
        std::uint64_t p;
        std::optional<GroupSpec> spec;
        std::size_t n;
    };
    const auto named = [](const char* n) {
        GroupSpec s;
        s.name = n;
        return s;
    };
    const std::vector<Config> configs = {
        {101, std::nullopt, 2},
        {7, named("s3"), 2},
        {2, named("c2"), 1},
    };
    for (const Config& cfg : configs) {
        const PublicParams params = generate_params(cfg.p, cfg.spec, cfg.n, rng.next());
        const EmbeddingContext ctx = params.context();
        check(is_singular_embedding(params.H1, ctx) && is_singular_embedding(params.H2, ctx),
              "generated pair matrices have singular images");
        for (std::size_t i = 0; i < trials; ++i) {
            const std::uint64_t small_e = 1 + rng.below(24);
            check(semidirect_power(params.M, params.H1, params.H2, small_e).accumulated ==
                      naive_semidirect_sum(params.M, params.H1, params.H2, small_e),
                  "fast power equals the naive sum");

            const std::uint64_t x = sample_exponent(rng, 20);
            const std::uint64_t y = sample_exponent(rng, 20);
            const Transcript t = run_exchange(params, x, y);
            check(t.K.has_value(), "exchange records the agreed key");
            check(*t.K == semidirect_power(params.M, params.H1, params.H2, x + y).accumulated,
                  "key equals the combined-exponent sum");
            check(params.H1 * t.A * params.H2 + params.M - t.A ==
                      pow(params.H1, x) * params.M * pow(params.H2, x),
                  "telescoping identity");
        }
    }
}

void suite_key_recovery(Check& check, SeededRng& rng, bool quick) {
    const std::size_t trials = quick ? 3 : 10;
    struct Config {
        std::uint64_t p;
        std::optional<GroupSpec> spec;
        std::size_t n;
    };
    GroupSpec s3;
    s3.name = "s3";
    const std::vector<Config> configs = {{101, std::nullopt, 3}, {7, s3, 2}};
    for (const Config& cfg : configs) {
        for (std::size_t i = 0; i < trials; ++i) {
            const PublicParams params = generate_params(cfg.p, cfg.spec, cfg.n, rng.next());
            SeededRng erng(rng.next());
            const Transcript t =
                run_exchange(params, sample_exponent(erng, 20), sample_exponent(erng, 20));
            const AttackResult result = recover_key(AttackInput::from_transcript(t));
            check(result.recovered_key == *t.K, "recovered key equals the shared key");
            check(result.system_size == params.context().k() * params.context().k(),
                  "system size bookkeeping");

            // A tampered transcript must never recover the honest key
            // silently.
            Transcript bad = t;
            GroupRingElement e = bad.B.at(0, 0);
            e.set(0, bad.params.mod.add(e.at(0), 1));
            bad.B.set(0, 0, std::move(e));
            bool detectable = false;
            try {
                detectable =
                    recover_key(AttackInput::from_transcript(bad)).recovered_key != *t.K;
            } catch (const Error&) {
                detectable = true;
            }
            check(detectable, "tampering is always detectable");
        }
    }
}

void suite_known_exponent_oracles(Check& check, SeededRng& rng, bool quick) {
    const std::size_t trials = quick ? 4 : 10;
    const PrimeModulus mod(7);
    const GroupPtr g = FiniteGroupTable::builtin("s3");
    const EmbeddingContext ctx(g, mod, 1);
    const std::size_t k = ctx.k();
    for (std::size_t i = 0; i < trials; ++i) {
        const PublicParams params = generate_params(7, GroupSpec{"s3", 0, {}}, 1, rng.next());
        const FieldMatrix e1 = ctx.embed(params.H1);
        const FieldMatrix e2 = ctx.embed(params.H2);
        const std::uint64_t x = 2 + rng.below(1u << 16);
        const FieldVector s = known_exponent_solution(params.H1, params.H2, x, ctx);
        for (std::size_t j = 0; j < 5; ++j) {
            const GroupRingMatrix y = random_matrix(rng, g, mod, 1);
            check(apply_sandwich(e1, e2, ctx.embed(y), s) ==
                      ctx.embed(pow(params.H1, x) * y * pow(params.H2, x)),
                  "known-exponent vector solves the sandwich system for every argument");
        }
        const FieldMatrix l = sandwich_matrix(params.H1, params.H2, params.M, ctx);
        const auto basis = kernel_basis(l);
        check(!basis.empty(), "group-ring sandwich system has a nontrivial kernel");
        for (std::size_t b = 0; b < basis.size() && b < 3; ++b) {
            for (std::uint64_t l_exp = 0; l_exp <= 5; ++l_exp) {
                check(kernel_is_preserved(params.M, params.H1, params.H2, basis[b], l_exp, ctx),
                      "kernel survives two-sided conjugation");
            }
        }
        // Vacuous case: the zero vector.
        check(kernel_is_preserved(params.M, params.H1, params.H2, FieldVector(mod, k * k), 3,
                                  ctx),
              "zero vector stays in every kernel");
    }
}

} // namespace

bool run_selftest(const SelftestOptions& options, std::ostream& out) {
    struct Suite {
        const char* name;
        std::function<void(Check&, SeededRng&, bool)> fn;
    };
    std::vector<Suite> suites = {
        {"field-ops", suite_field_ops},
        {"cayley-hamilton", suite_cayley_hamilton},
        {"power-vs-charpoly", suite_power_vs_charpoly},
        {"linear-solver", suite_linear_solver},
        {"kernel", suite_kernel},
        {"group-tables", suite_group_tables},
        {"group-ring-product", suite_group_ring_product},
        {"translation-matrices", suite_translation_matrices},
        {"element-embedding", suite_element_embedding},
        {"matrix-embedding", suite_matrix_embedding},
        {"sandwich-operator", suite_sandwich_operator},
        {"exchange", suite_exchange},
        {"key-recovery", suite_key_recovery},
        {"known-exponent-oracles", suite_known_exponent_oracles},
    };
    if (options.inject_fault) {
        suites.push_back({"injected-fault", [](Check& check, SeededRng&, bool) {
                              check(false, "deliberate failure");
                          }});
    }

    bool all_ok = true;
    std::uint64_t salt = 0;
    for (const Suite& suite : suites) {
        Check check;
        SeededRng rng(options.seed + 0x9e3779b97f4a7c15ULL * ++salt);
        std::string error;
        try {
            suite.fn(check, rng, options.quick);
        } catch (const std::exception& e) {
            check(false, std::string("unexpected exception: ") + e.what());
        }
        if (check.failures == 0) {
            out << "[ ok ] " << suite.name << " (" << check.checks << " checks)\n";
        } else {
            all_ok = false;
            out << "[FAIL] " << suite.name << ": " << check.failures << " of " << check.checks
                << " checks failed; first: " << check.first_failure << "\n";
        }
    }
    out << (all_ok ? "selftest passed" : "selftest FAILED") << "\n";
    return all_ok;
}

} // namespace makekex
