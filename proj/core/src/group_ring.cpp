#include "makekex/group_ring.hpp"

#include "makekex/errors.hpp"

namespace makekex {

GroupRingElement::GroupRingElement(GroupPtr group, PrimeModulus mod)
    : group_(std::move(group)), mod_(mod) {
    if (!group_) throw InvalidInputError("group ring element needs a group");
    coeffs_.assign(group_->order(), 0);
}

GroupRingElement GroupRingElement::zero(GroupPtr group, PrimeModulus mod) {
    return GroupRingElement(std::move(group), mod);
}

GroupRingElement GroupRingElement::one(GroupPtr group, PrimeModulus mod) {
    return scalar(std::move(group), mod, 1);
}

GroupRingElement GroupRingElement::scalar(GroupPtr group, PrimeModulus mod, std::uint64_t c) {
    GroupRingElement e(std::move(group), mod);
    e.coeffs_[e.group_->identity()] = mod.reduce(c);
    return e;
}

bool GroupRingElement::is_zero() const {
    for (std::uint64_t c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

void GroupRingElement::require_compatible(const GroupRingElement& o) const {
    if (mod_ != o.mod_) throw IncompatibleError("group ring elements over different moduli");
    if (!group_->same_table(*o.group_)) {
        throw IncompatibleError("group ring elements over different groups");
    }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    require_compatible(o);
    GroupRingElement out(group_, mod_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out.coeffs_[i] = mod_.add(coeffs_[i], o.coeffs_[i]);
    }
    return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    require_compatible(o);
    GroupRingElement out(group_, mod_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out.coeffs_[i] = mod_.sub(coeffs_[i], o.coeffs_[i]);
    }
    return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    require_compatible(o);
    GroupRingElement out(group_, mod_);
    const std::size_t m = coeffs_.size();
    for (std::size_t i = 0; i < m; ++i) {
        const std::uint64_t a = coeffs_[i];
        if (a == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t k = group_->mul(i, j);
            out.coeffs_[k] = mod_.mul_add(out.coeffs_[k], a, o.coeffs_[j]);
        }
    }
    return out;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
    return mod_ == o.mod_ && group_->same_table(*o.group_) && coeffs_ == o.coeffs_;
}

FieldMatrix translation_matrix(const GroupPtr& group, PrimeModulus mod, std::size_t i) {
    const std::size_t m = group->order();
    if (i >= m) throw InvalidInputError("group element index out of range");
    FieldMatrix t(mod, m, m);
    for (std::size_t j = 0; j < m; ++j) t.set(group->mul(i, j), j, 1);
    return t;
}

FieldMatrix embed_element(const GroupRingElement& a) {
    const auto& g = *a.group();
    const std::size_t m = g.order();
    FieldMatrix out(a.modulus(), m, m);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t j = 0; j < m; ++j) {
            out.set(k, j, a.at(g.mul(k, g.inverse(j))));
        }
    }
    return out;
}

GroupRingElement extract_element(const FieldMatrix& m, const GroupPtr& group) {
    const std::size_t order = group->order();
    if (m.rows() != order || m.cols() != order) {
        throw ShapeError("matrix size does not match the group order");
    }
    GroupRingElement a(group, m.modulus());
    for (std::size_t k = 0; k < order; ++k) a.set(k, m.at(k, 0));
    if (embed_element(a) != m) {
        throw NotInImageError("matrix is not in the image of the group ring embedding");
    }
    return a;
}

} // namespace makekex
