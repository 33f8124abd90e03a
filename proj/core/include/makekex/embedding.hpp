#pragma once

#include <cstdint>
#include <vector>

#include "makekex/group_ring.hpp"

namespace makekex {

// Square matrix with entries in the group ring Z_p[G]. The protocol runs its
// arithmetic at this level; the attack works on the embedded Z_p image.
class GroupRingMatrix {
public:
    GroupRingMatrix(GroupPtr group, PrimeModulus mod, std::size_t n);

    static GroupRingMatrix identity(GroupPtr group, PrimeModulus mod, std::size_t n);

    std::size_t dim() const noexcept { return n_; }
    const GroupPtr& group() const noexcept { return group_; }
    const PrimeModulus& modulus() const noexcept { return mod_; }

    const GroupRingElement& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, GroupRingElement v);

    bool is_zero() const;

    GroupRingMatrix operator+(const GroupRingMatrix& o) const;
    GroupRingMatrix operator-(const GroupRingMatrix& o) const;
    GroupRingMatrix operator*(const GroupRingMatrix& o) const;
    bool operator==(const GroupRingMatrix& o) const;
    bool operator!=(const GroupRingMatrix& o) const { return !(*this == o); }

private:
    void require_compatible(const GroupRingMatrix& o) const;

    GroupPtr group_;
    PrimeModulus mod_;
    std::size_t n_;
    std::vector<GroupRingElement> data_;
};

GroupRingMatrix pow(const GroupRingMatrix& a, std::uint64_t e);

// Blockwise regular representation: an n x n matrix over Z_p[G] with |G| = m
// becomes an nm x nm matrix over Z_p, block (i,j) being the embedded entry
// (i,j). Ring homomorphism, so powers and sums commute with it.
class EmbeddingContext {
public:
    EmbeddingContext(GroupPtr group, PrimeModulus mod, std::size_t n);

    std::size_t n() const noexcept { return n_; }
    std::size_t block() const noexcept { return group_->order(); }
    // Side length of the embedded matrix.
    std::size_t k() const noexcept { return n_ * group_->order(); }
    const GroupPtr& group() const noexcept { return group_; }
    const PrimeModulus& modulus() const noexcept { return mod_; }

    FieldMatrix embed(const GroupRingMatrix& a) const;
    // Blockwise inverse; throws NotInImageError if any block is not an
    // embedded group ring element.
    GroupRingMatrix extract(const FieldMatrix& m) const;

private:
    GroupPtr group_;
    PrimeModulus mod_;
    std::size_t n_;
};

// Column-major stacking: entry (i,j) of an r x c matrix lands at j*r + i.
FieldVector vec(const FieldMatrix& a);
FieldMatrix unvec(const FieldVector& v, std::size_t rows, std::size_t cols);

// The k^2 x k^2 matrix whose column h*k+g is vec(e1^g * y * e2^h), for
// g, h in [0, k). Applied to a coefficient vector it evaluates the
// corresponding two-sided polynomial sandwich of y.
FieldMatrix sandwich_matrix(const FieldMatrix& e1, const FieldMatrix& e2,
                            const FieldMatrix& y);

// Same matrix built from ring-level inputs through the embedding.
FieldMatrix sandwich_matrix(const GroupRingMatrix& h1, const GroupRingMatrix& h2,
                            const GroupRingMatrix& y, const EmbeddingContext& ctx);

// sum over g,h of t[h*k+g] * e1^g * y * e2^h, without materializing the
// k^2 x k^2 matrix. Equals unvec(sandwich_matrix(e1,e2,y) * t).
FieldMatrix apply_sandwich(const FieldMatrix& e1, const FieldMatrix& e2,
                           const FieldMatrix& y, const FieldVector& t);

} // namespace makekex
