#include "makekex/polynomial.hpp"

#include <algorithm>

#include "makekex/matrix.hpp"

namespace makekex {

FieldPolynomial::FieldPolynomial(PrimeModulus mod, std::vector<std::uint64_t> coeffs)
    : mod_(mod), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = mod_.reduce(c);
    normalize();
}

void FieldPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FieldPolynomial FieldPolynomial::operator+(const FieldPolynomial& o) const {
    detail::require_same_modulus(mod_, o.mod_);
    std::vector<std::uint64_t> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod_.add(coeff(i), o.coeff(i));
    FieldPolynomial p(mod_);
    p.coeffs_ = std::move(out);
    p.normalize();
    return p;
}

FieldPolynomial FieldPolynomial::operator-(const FieldPolynomial& o) const {
    detail::require_same_modulus(mod_, o.mod_);
    std::vector<std::uint64_t> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod_.sub(coeff(i), o.coeff(i));
    FieldPolynomial p(mod_);
    p.coeffs_ = std::move(out);
    p.normalize();
    return p;
}

FieldPolynomial FieldPolynomial::operator*(const FieldPolynomial& o) const {
    detail::require_same_modulus(mod_, o.mod_);
    if (is_zero() || o.is_zero()) return FieldPolynomial(mod_);
    std::vector<std::uint64_t> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] = mod_.mul_add(out[i + j], coeffs_[i], o.coeffs_[j]);
        }
    }
    FieldPolynomial p(mod_);
    p.coeffs_ = std::move(out);
    p.normalize();
    return p;
}

FieldPolynomial poly_mod(const FieldPolynomial& a, const FieldPolynomial& chi) {
    detail::require_same_modulus(a.modulus(), chi.modulus());
    if (!chi.is_monic() || chi.degree() < 1) {
        throw InvalidInputError("reduction modulus must be monic of degree >= 1");
    }
    const PrimeModulus& mod = a.modulus();
    const std::size_t k = static_cast<std::size_t>(chi.degree());
    std::vector<std::uint64_t> rem(a.coeffs());
    for (std::size_t d = rem.size(); d-- > k;) {
        const std::uint64_t c = rem[d];
        if (c == 0) continue;
        rem[d] = 0;
        // rem -= c * X^(d-k) * chi  (leading term cancels by construction)
        for (std::size_t i = 0; i < k; ++i) {
            rem[d - k + i] = mod.sub(rem[d - k + i], mod.mul(c, chi.coeff(i)));
        }
    }
    rem.resize(std::min<std::size_t>(rem.size(), k));
    return FieldPolynomial(mod, std::move(rem));
}

FieldPolynomial poly_pow_mod(const FieldPolynomial& chi, std::uint64_t x) {
    if (!chi.is_monic() || chi.degree() < 1) {
        throw InvalidInputError("poly_pow_mod needs a monic modulus of degree >= 1");
    }
    const PrimeModulus& mod = chi.modulus();
    FieldPolynomial result = poly_mod(FieldPolynomial::one(mod), chi);
    FieldPolynomial base = poly_mod(FieldPolynomial(mod, {0, 1}), chi);
    while (x > 0) {
        if (x & 1) result = poly_mod(result * base, chi);
        if (x >>= 1) base = poly_mod(base * base, chi);
    }
    return result;
}

} // namespace makekex
