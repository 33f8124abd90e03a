#pragma once

#include <cstdint>
#include <vector>

#include "makekex/modular.hpp"

namespace makekex {

// Polynomial over Z_p, coefficients ascending by degree. The zero polynomial
// is the empty coefficient list; otherwise the leading coefficient is nonzero.
class FieldPolynomial {
public:
    explicit FieldPolynomial(PrimeModulus mod) : mod_(mod) {}
    FieldPolynomial(PrimeModulus mod, std::vector<std::uint64_t> coeffs);

    static FieldPolynomial one(PrimeModulus mod) { return {mod, {1}}; }

    const PrimeModulus& modulus() const noexcept { return mod_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_monic() const noexcept {
        return !coeffs_.empty() && coeffs_.back() == 1 % mod_.value();
    }

    // Coefficient of X^i (0 beyond the stored degree).
    std::uint64_t coeff(std::size_t i) const noexcept {
        return i < coeffs_.size() ? coeffs_[i] : 0;
    }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }

    FieldPolynomial operator+(const FieldPolynomial& o) const;
    FieldPolynomial operator-(const FieldPolynomial& o) const;
    FieldPolynomial operator*(const FieldPolynomial& o) const;

    bool operator==(const FieldPolynomial& o) const {
        return mod_ == o.mod_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const FieldPolynomial& o) const { return !(*this == o); }

private:
    void normalize();

    PrimeModulus mod_;
    std::vector<std::uint64_t> coeffs_;
};

// Remainder of a modulo the monic polynomial chi.
FieldPolynomial poly_mod(const FieldPolynomial& a, const FieldPolynomial& chi);

// X^x reduced modulo the monic polynomial chi, by square-and-multiply in
// Z_p[X]/(chi). Result has degree < deg(chi).
FieldPolynomial poly_pow_mod(const FieldPolynomial& chi, std::uint64_t x);

} // namespace makekex
