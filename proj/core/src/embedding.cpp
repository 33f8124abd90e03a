#include "makekex/embedding.hpp"

#include "makekex/errors.hpp"

namespace makekex {

GroupRingMatrix::GroupRingMatrix(GroupPtr group, PrimeModulus mod, std::size_t n)
    : group_(std::move(group)), mod_(mod), n_(n) {
    if (!group_) throw InvalidInputError("group ring matrix needs a group");
    if (n_ == 0) throw ShapeError("matrix dimension must be positive");
    data_.assign(n_ * n_, GroupRingElement::zero(group_, mod_));
}

GroupRingMatrix GroupRingMatrix::identity(GroupPtr group, PrimeModulus mod, std::size_t n) {
    GroupRingMatrix out(std::move(group), mod, n);
    for (std::size_t i = 0; i < n; ++i) {
        out.data_[i * n + i] = GroupRingElement::one(out.group_, mod);
    }
    return out;
}

void GroupRingMatrix::set(std::size_t i, std::size_t j, GroupRingElement v) {
    if (v.modulus() != mod_ || !v.group()->same_table(*group_)) {
        throw IncompatibleError("entry does not match the matrix ring");
    }
    data_[i * n_ + j] = std::move(v);
}

bool GroupRingMatrix::is_zero() const {
    for (const auto& e : data_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

void GroupRingMatrix::require_compatible(const GroupRingMatrix& o) const {
    if (mod_ != o.mod_ || n_ != o.n_ || !group_->same_table(*o.group_)) {
        throw IncompatibleError("group ring matrices are not compatible");
    }
}

GroupRingMatrix GroupRingMatrix::operator+(const GroupRingMatrix& o) const {
    require_compatible(o);
    GroupRingMatrix out(group_, mod_, n_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

GroupRingMatrix GroupRingMatrix::operator-(const GroupRingMatrix& o) const {
    require_compatible(o);
    GroupRingMatrix out(group_, mod_, n_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

GroupRingMatrix GroupRingMatrix::operator*(const GroupRingMatrix& o) const {
    require_compatible(o);
    GroupRingMatrix out(group_, mod_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t l = 0; l < n_; ++l) {
            const GroupRingElement& a = at(i, l);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                out.data_[i * n_ + j] = out.data_[i * n_ + j] + a * o.at(l, j);
            }
        }
    }
    return out;
}

bool GroupRingMatrix::operator==(const GroupRingMatrix& o) const {
    if (mod_ != o.mod_ || n_ != o.n_ || !group_->same_table(*o.group_)) return false;
    return data_ == o.data_;
}

GroupRingMatrix pow(const GroupRingMatrix& a, std::uint64_t e) {
    GroupRingMatrix result = GroupRingMatrix::identity(a.group(), a.modulus(), a.dim());
    GroupRingMatrix base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        if (e >>= 1) base = base * base;
    }
    return result;
}

EmbeddingContext::EmbeddingContext(GroupPtr group, PrimeModulus mod, std::size_t n)
    : group_(std::move(group)), mod_(mod), n_(n) {
    if (!group_) throw InvalidInputError("embedding context needs a group");
    if (n_ == 0) throw ShapeError("matrix dimension must be positive");
}

FieldMatrix EmbeddingContext::embed(const GroupRingMatrix& a) const {
    if (a.dim() != n_ || a.modulus() != mod_ || !a.group()->same_table(*group_)) {
        throw IncompatibleError("matrix does not match the embedding context");
    }
    const std::size_t m = group_->order();
    FieldMatrix out(mod_, k(), k());
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const FieldMatrix blk = embed_element(a.at(i, j));
            for (std::size_t g = 0; g < m; ++g) {
                for (std::size_t h = 0; h < m; ++h) {
                    out.set(i * m + g, j * m + h, blk.at(g, h));
                }
            }
        }
    }
    return out;
}

GroupRingMatrix EmbeddingContext::extract(const FieldMatrix& mat) const {
    if (mat.rows() != k() || mat.cols() != k()) {
        throw ShapeError("matrix size does not match the embedding context");
    }
    detail::require_same_modulus(mat.modulus(), mod_);
    const std::size_t m = group_->order();
    GroupRingMatrix out(group_, mod_, n_);
    FieldMatrix blk(mod_, m, m);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            for (std::size_t g = 0; g < m; ++g) {
                for (std::size_t h = 0; h < m; ++h) {
                    blk.set(g, h, mat.at(i * m + g, j * m + h));
                }
            }
            out.set(i, j, extract_element(blk, group_));
        }
    }
    return out;
}

FieldVector vec(const FieldMatrix& a) {
    FieldVector out(a.modulus(), a.rows() * a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            out.set(j * a.rows() + i, a.at(i, j));
        }
    }
    return out;
}

FieldMatrix unvec(const FieldVector& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw ShapeError("vector length does not match the shape");
    FieldMatrix out(v.modulus(), rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < rows; ++i) {
            out.set(i, j, v.at(j * rows + i));
        }
    }
    return out;
}

FieldMatrix sandwich_matrix(const FieldMatrix& e1, const FieldMatrix& e2,
                            const FieldMatrix& y) {
    if (!e1.is_square() || !e2.is_square() || !y.is_square() ||
        e1.rows() != y.rows() || e2.rows() != y.rows()) {
        throw ShapeError("sandwich factors must be square matrices of one size");
    }
    detail::require_same_modulus(e1.modulus(), y.modulus());
    detail::require_same_modulus(e2.modulus(), y.modulus());

    const std::size_t k = y.rows();
    FieldMatrix out(y.modulus(), k * k, k * k);
    FieldMatrix left = y;
    for (std::size_t g = 0; g < k; ++g) {
        if (g) left = e1 * left;  // e1^g * y
        FieldMatrix cur = left;
        for (std::size_t h = 0; h < k; ++h) {
            if (h) cur = cur * e2;  // e1^g * y * e2^h
            const std::size_t col = h * k + g;
            for (std::size_t j = 0; j < k; ++j) {
                for (std::size_t i = 0; i < k; ++i) {
                    out.set(j * k + i, col, cur.at(i, j));
                }
            }
        }
    }
    return out;
}

FieldMatrix sandwich_matrix(const GroupRingMatrix& h1, const GroupRingMatrix& h2,
                            const GroupRingMatrix& y, const EmbeddingContext& ctx) {
    return sandwich_matrix(ctx.embed(h1), ctx.embed(h2), ctx.embed(y));
}

FieldMatrix apply_sandwich(const FieldMatrix& e1, const FieldMatrix& e2,
                           const FieldMatrix& y, const FieldVector& t) {
    if (!e1.is_square() || !e2.is_square() || !y.is_square() ||
        e1.rows() != y.rows() || e2.rows() != y.rows()) {
        throw ShapeError("sandwich factors must be square matrices of one size");
    }
    const PrimeModulus& mod = y.modulus();
    detail::require_same_modulus(e1.modulus(), mod);
    detail::require_same_modulus(e2.modulus(), mod);
    detail::require_same_modulus(t.modulus(), mod);
    const std::size_t k = y.rows();
    if (t.size() != k * k) throw ShapeError("coefficient vector length must be k^2");

    // Group by the left exponent: r_g = sum_h t[h*k+g] * (y * e2^h), then
    // fold with Horner in e1. One pass over the right powers keeps this at
    // O(k^4) instead of the O(k^5) full matrix build.
    std::vector<FieldMatrix> grouped(k, FieldMatrix(mod, k, k));
    FieldMatrix cur = y;
    for (std::size_t h = 0; h < k; ++h) {
        if (h) cur = cur * e2;
        for (std::size_t g = 0; g < k; ++g) {
            const std::uint64_t c = t.at(h * k + g);
            if (c == 0) continue;
            FieldMatrix& acc = grouped[g];
            for (std::size_t i = 0; i < k; ++i) {
                const std::uint64_t* crow = cur.row(i);
                std::uint64_t* arow = acc.row(i);
                for (std::size_t j = 0; j < k; ++j) {
                    arow[j] = mod.mul_add(arow[j], c, crow[j]);
                }
            }
        }
    }
    FieldMatrix result = grouped[k - 1];
    for (std::size_t g = k - 1; g-- > 0;) {
        result = e1 * result + grouped[g];
    }
    return result;
}

} // namespace makekex
