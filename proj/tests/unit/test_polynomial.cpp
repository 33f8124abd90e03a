#include "doctest.h"
#include "makekex/polynomial.hpp"
#include "makekex/rng.hpp"

using namespace makekex;

namespace {

FieldPolynomial random_poly(const PrimeModulus& mod, int max_degree, SeededRng& rng) {
    std::vector<std::uint64_t> c(rng.below(static_cast<std::uint64_t>(max_degree) + 2));
    for (auto& v : c) v = rng.below(mod.value());
    return {mod, std::move(c)};
}

// Classical long division remainder, independent of poly_mod.
FieldPolynomial naive_remainder(const FieldPolynomial& a, const FieldPolynomial& chi) {
    const PrimeModulus& mod = a.modulus();
    std::vector<std::uint64_t> r(a.coeffs());
    const int d = chi.degree();
    while (static_cast<int>(r.size()) - 1 >= d) {
        const std::uint64_t lead = r.back();
        const std::size_t shift = r.size() - 1 - static_cast<std::size_t>(d);
        // chi is monic, so the quotient coefficient is the leading term itself.
        for (int i = 0; i <= d; ++i)
            r[shift + static_cast<std::size_t>(i)] = mod.sub(
                r[shift + static_cast<std::size_t>(i)],
                mod.mul(lead, chi.coeff(static_cast<std::size_t>(i))));
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return {mod, std::move(r)};
}

} // namespace

TEST_CASE("construction normalizes") {
    const PrimeModulus m5(5);
    const FieldPolynomial z(m5);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.coeff(0) == 0);
    CHECK(z.coeff(17) == 0);

    // Leading zeros are stripped, coefficients reduced.
    const FieldPolynomial p(m5, {7, 3, 5, 0, 0});
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == 2);
    CHECK(p.coeff(1) == 3);
    CHECK(p.coeff(2) == 0);
    CHECK_FALSE(p.is_monic());
    CHECK(FieldPolynomial(m5, {0, 0, 1}).is_monic());
    CHECK(FieldPolynomial::one(m5) == FieldPolynomial(m5, {1}));
}

TEST_CASE("arithmetic on fixed examples") {
    const PrimeModulus m5(5);
    const FieldPolynomial a(m5, {1, 2, 3});   // 3X^2 + 2X + 1
    const FieldPolynomial b(m5, {4, 3});      // 3X + 4

    CHECK(a + b == FieldPolynomial(m5, {0, 0, 3}));
    CHECK(a - b == FieldPolynomial(m5, {2, 4, 3}));
    // (3X^2+2X+1)(3X+4) = 9X^3 + 18X^2 + 11X + 4 = 4X^3 + 3X^2 + X + 4 mod 5
    CHECK(a * b == FieldPolynomial(m5, {4, 1, 3, 4}));

    // Cancellation down to zero.
    CHECK((a - a).is_zero());
    CHECK((a * FieldPolynomial(m5)).is_zero());
    CHECK(a * FieldPolynomial::one(m5) == a);
}

TEST_CASE("ring axioms on random polynomials") {
    const PrimeModulus mod(101);
    SeededRng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const FieldPolynomial a = random_poly(mod, 6, rng);
        const FieldPolynomial b = random_poly(mod, 6, rng);
        const FieldPolynomial c = random_poly(mod, 6, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero() && !b.is_zero())
            CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("poly_mod matches long division") {
    const PrimeModulus m7(7);
    // X^3 mod (X^2 + 1) = -X = 6X
    CHECK(poly_mod(FieldPolynomial(m7, {0, 0, 0, 1}), FieldPolynomial(m7, {1, 0, 1})) ==
          FieldPolynomial(m7, {0, 6}));
    // Degree already below the divisor: unchanged.
    CHECK(poly_mod(FieldPolynomial(m7, {3, 4}), FieldPolynomial(m7, {1, 0, 1})) ==
          FieldPolynomial(m7, {3, 4}));

    SeededRng rng(13);
    const std::uint64_t primes[] = {2, 5, 101};
    for (const std::uint64_t p : primes) {
        const PrimeModulus mod(p);
        for (int trial = 0; trial < 30; ++trial) {
            FieldPolynomial a = random_poly(mod, 9, rng);
            std::vector<std::uint64_t> cc(2 + rng.below(4), 0);
            for (std::size_t i = 0; i + 1 < cc.size(); ++i) cc[i] = rng.below(p);
            cc.back() = 1;  // monic divisor
            const FieldPolynomial chi(mod, std::move(cc));
            const FieldPolynomial r = poly_mod(a, chi);
            REQUIRE(r == naive_remainder(a, chi));
            REQUIRE(r.degree() < chi.degree());
        }
    }
}

TEST_CASE("poly_mod rejects bad divisors") {
    const PrimeModulus m5(5);
    const FieldPolynomial a(m5, {1, 2});
    CHECK_THROWS_AS(poly_mod(a, FieldPolynomial(m5)), InvalidInputError);
    CHECK_THROWS_AS(poly_mod(a, FieldPolynomial(m5, {1, 0, 2})), InvalidInputError);
}

TEST_CASE("modular powers of X") {
    const PrimeModulus m5(5);
    const FieldPolynomial chi(m5, {1, 0, 1});  // X^2 + 1
    CHECK(poly_pow_mod(chi, 0) == FieldPolynomial::one(m5));
    CHECK(poly_pow_mod(chi, 1) == FieldPolynomial(m5, {0, 1}));
    CHECK(poly_pow_mod(chi, 2) == FieldPolynomial(m5, {4}));       // X^2 = -1
    CHECK(poly_pow_mod(chi, 3) == FieldPolynomial(m5, {0, 4}));    // -X
    CHECK(poly_pow_mod(chi, 4) == FieldPolynomial::one(m5));       // order 4

    // Against repeated naive reduction for larger exponents.
    SeededRng rng(29);
    const PrimeModulus mod(101);
    std::vector<std::uint64_t> cc = {rng.below(101), rng.below(101), rng.below(101), 1};
    const FieldPolynomial m(mod, std::move(cc));
    FieldPolynomial running = FieldPolynomial::one(mod);
    const FieldPolynomial x(mod, {0, 1});
    for (std::uint64_t e = 0; e <= 40; ++e) {
        REQUIRE(poly_pow_mod(m, e) == running);
        running = poly_mod(running * x, m);
    }
}

TEST_CASE("degree-one modulus collapses X to a scalar") {
    // mod (X - 3) over Z_7: X^e reduces to 3^e.
    const PrimeModulus m7(7);
    const FieldPolynomial chi(m7, {4, 1});  // X + 4 = X - 3
    for (std::uint64_t e = 1; e <= 10; ++e)
        CHECK(poly_pow_mod(chi, e) == FieldPolynomial(m7, {m7.pow(3, e)}));
}
