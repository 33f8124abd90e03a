#include "doctest.h"
#include "makekex/matrix.hpp"
#include "makekex/rng.hpp"

using namespace makekex;

namespace {

FieldMatrix random_matrix(const PrimeModulus& mod, std::size_t r, std::size_t c,
                          SeededRng& rng) {
    FieldMatrix m(mod, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng.below(mod.value()));
    return m;
}

// Cubic-time reference product, written independently of operator*.
FieldMatrix schoolbook(const FieldMatrix& a, const FieldMatrix& b) {
    const PrimeModulus& mod = a.modulus();
    FieldMatrix out(mod, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::uint64_t acc = 0;
            for (std::size_t l = 0; l < a.cols(); ++l)
                acc = mod.add(acc, mod.mul(a.at(i, l), b.at(l, j)));
            out.set(i, j, acc);
        }
    return out;
}

} // namespace

TEST_CASE("vector construction and arithmetic") {
    const PrimeModulus m5(5);
    FieldVector v(m5, {7, 2, 0});
    CHECK(v.size() == 3);
    CHECK(v.at(0) == 2);  // reduced on construction
    CHECK(v.element(1) == FieldElement(2, m5));
    CHECK_FALSE(v.is_zero());
    CHECK(FieldVector(m5, 4).is_zero());

    const FieldVector w(m5, {1, 4, 4});
    CHECK((v + w) == FieldVector(m5, {3, 1, 4}));
    CHECK((v - w) == FieldVector(m5, {1, 3, 1}));
    CHECK(v != w);

    CHECK_THROWS_AS((void)(v + FieldVector(m5, 2)), ShapeError);
    CHECK_THROWS_AS((void)(v + FieldVector(PrimeModulus(7), 3)), IncompatibleError);
}

TEST_CASE("matrix entries reduce and shapes are enforced") {
    const PrimeModulus m7(7);
    FieldMatrix a(m7, 2, 3, {8, 1, 2, 3, 4, 5});
    CHECK(a.at(0, 0) == 1);
    CHECK(a.at(1, 2) == 5);
    a.set(0, 1, 20);
    CHECK(a.at(0, 1) == 6);
    CHECK_FALSE(a.is_square());

    CHECK_THROWS_AS(FieldMatrix(m7, 2, 2, {1, 2, 3}), ShapeError);
    const FieldMatrix b(m7, 3, 2);
    CHECK_THROWS_AS((void)(a + b), ShapeError);
    CHECK_NOTHROW((void)(a * b));
    CHECK_THROWS_AS((void)(b + FieldMatrix(PrimeModulus(5), 3, 2)), IncompatibleError);
}

TEST_CASE("documented small products") {
    const PrimeModulus m5(5);
    const FieldMatrix a(m5, 2, 2, {1, 2, 3, 4});
    const FieldMatrix swap(m5, 2, 2, {0, 1, 1, 0});
    CHECK(a * swap == FieldMatrix(m5, 2, 2, {2, 1, 4, 3}));
    CHECK(swap * a == FieldMatrix(m5, 2, 2, {3, 4, 1, 2}));

    const FieldMatrix id = FieldMatrix::identity(m5, 2);
    CHECK(a * id == a);
    CHECK(id * a == a);
    CHECK(a.scaled(3) == FieldMatrix(m5, 2, 2, {3, 1, 4, 2}));
    CHECK((a - a).is_zero());
}

TEST_CASE("product matches schoolbook reference") {
    SeededRng rng(17);
    const std::uint64_t primes[] = {2, 5, 101, 2305843009213693951ULL};
    for (const std::uint64_t p : primes) {
        const PrimeModulus mod(p);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t r = 1 + rng.below(5), m = 1 + rng.below(5),
                              c = 1 + rng.below(5);
            const FieldMatrix a = random_matrix(mod, r, m, rng);
            const FieldMatrix b = random_matrix(mod, m, c, rng);
            REQUIRE(a * b == schoolbook(a, b));
        }
    }
}

TEST_CASE("product is associative and distributes") {
    SeededRng rng(23);
    const PrimeModulus mod(101);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        const FieldMatrix a = random_matrix(mod, n, n, rng);
        const FieldMatrix b = random_matrix(mod, n, n, rng);
        const FieldMatrix c = random_matrix(mod, n, n, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("powers") {
    const PrimeModulus m5(5);
    const FieldMatrix two(m5, 1, 1, {2});
    CHECK(pow(two, 0) == FieldMatrix::identity(m5, 1));
    CHECK(pow(two, 3) == FieldMatrix(m5, 1, 1, {3}));

    SeededRng rng(31);
    const PrimeModulus mod(101);
    const FieldMatrix a = random_matrix(mod, 3, 3, rng);
    FieldMatrix expected = FieldMatrix::identity(mod, 3);
    for (std::uint64_t e = 0; e <= 16; ++e) {
        REQUIRE(pow(a, e) == expected);
        expected = expected * a;
    }
    CHECK(pow(a, 7) * pow(a, 9) == pow(a, 16));

    CHECK_THROWS_AS(pow(FieldMatrix(mod, 2, 3), 2), ShapeError);
}

TEST_CASE("matrix-vector product") {
    const PrimeModulus m7(7);
    const FieldMatrix a(m7, 2, 3, {1, 2, 3, 4, 5, 6});
    const FieldVector v(m7, {1, 0, 2});
    CHECK(mul(a, v) == FieldVector(m7, {0, 2}));
    CHECK_THROWS_AS(mul(a, FieldVector(m7, 2)), ShapeError);

    SeededRng rng(41);
    const PrimeModulus mod(4294967311ULL);
    for (int trial = 0; trial < 10; ++trial) {
        const FieldMatrix m = random_matrix(mod, 4, 4, rng);
        FieldVector w(mod, 4);
        for (std::size_t i = 0; i < 4; ++i) w.set(i, rng.below(mod.value()));
        FieldMatrix col(mod, 4, 1);
        for (std::size_t i = 0; i < 4; ++i) col.set(i, 0, w.at(i));
        const FieldMatrix prod = m * col;
        const FieldVector got = mul(m, w);
        for (std::size_t i = 0; i < 4; ++i) REQUIRE(got.at(i) == prod.at(i, 0));
    }
}
