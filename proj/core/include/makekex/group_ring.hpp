#pragma once

#include <cstdint>
#include <vector>

#include "makekex/group.hpp"
#include "makekex/matrix.hpp"
#include "makekex/modular.hpp"

namespace makekex {

// Element of the group ring Z_p[G]: a coefficient in Z_p for every group
// element, indexed in the group table's enumeration order.
class GroupRingElement {
public:
    GroupRingElement(GroupPtr group, PrimeModulus mod);

    static GroupRingElement zero(GroupPtr group, PrimeModulus mod);
    static GroupRingElement one(GroupPtr group, PrimeModulus mod);
    // c * identity
    static GroupRingElement scalar(GroupPtr group, PrimeModulus mod, std::uint64_t c);

    const GroupPtr& group() const { return group_; }
    const PrimeModulus& modulus() const { return mod_; }
    std::size_t size() const { return coeffs_.size(); }

    std::uint64_t at(std::size_t i) const { return coeffs_[i]; }
    void set(std::size_t i, std::uint64_t v) { coeffs_[i] = mod_.reduce(v); }
    const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }

    bool is_zero() const;

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    // Convolution: (a*b)_{gh} += a_g b_h. Non-commutative when the group is.
    GroupRingElement operator*(const GroupRingElement& o) const;
    bool operator==(const GroupRingElement& o) const;
    bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

private:
    void require_compatible(const GroupRingElement& o) const;

    GroupPtr group_;
    PrimeModulus mod_;
    std::vector<std::uint64_t> coeffs_;
};

// Permutation matrix of left translation by the group element at index i:
// entry (k, j) is 1 exactly when g_i g_j = g_k.
FieldMatrix translation_matrix(const GroupPtr& group, PrimeModulus mod, std::size_t i);

// Left regular representation of Z_p[G] inside m x m matrices over Z_p,
// the coefficient-weighted sum of the translation matrices. Ring
// homomorphism: row k, column j of the image of a holds the coefficient
// of a at the group index of g_k g_j^{-1}.
FieldMatrix embed_element(const GroupRingElement& a);

// Inverse of embed_element on its image. Reads the candidate coefficients off
// column 0 (where g_k g_0^{-1} = g_k), then re-embeds and compares every
// entry. Throws NotInImageError if the matrix is not an embedded element.
GroupRingElement extract_element(const FieldMatrix& m, const GroupPtr& group);

} // namespace makekex
