#include "makekex/matrix.hpp"

#include <algorithm>

namespace makekex {

namespace detail {

void require_same_modulus(const PrimeModulus& a, const PrimeModulus& b) {
    if (a != b) {
        throw IncompatibleError("operands live over different moduli");
    }
}

} // namespace detail

FieldVector::FieldVector(PrimeModulus mod, std::vector<std::uint64_t> values)
    : mod_(mod), data_(std::move(values)) {
    for (auto& v : data_) v = mod_.reduce(v);
}

bool FieldVector::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t v) { return v == 0; });
}

FieldVector FieldVector::operator+(const FieldVector& o) const {
    detail::require_same_modulus(mod_, o.mod_);
    if (size() != o.size()) throw ShapeError("vector sizes differ");
    FieldVector out(mod_, size());
    for (std::size_t i = 0; i < size(); ++i) out.data_[i] = mod_.add(data_[i], o.data_[i]);
    return out;
}

FieldVector FieldVector::operator-(const FieldVector& o) const {
    detail::require_same_modulus(mod_, o.mod_);
    if (size() != o.size()) throw ShapeError("vector sizes differ");
    FieldVector out(mod_, size());
    for (std::size_t i = 0; i < size(); ++i) out.data_[i] = mod_.sub(data_[i], o.data_[i]);
    return out;
}

bool FieldVector::operator==(const FieldVector& o) const {
    return mod_ == o.mod_ && data_ == o.data_;
}

FieldMatrix::FieldMatrix(PrimeModulus mod, std::size_t rows, std::size_t cols,
                         std::vector<std::uint64_t> values)
    : mod_(mod), rows_(rows), cols_(cols), data_(std::move(values)) {
    if (data_.size() != rows * cols) {
        throw ShapeError("entry count does not match rows * cols");
    }
    for (auto& v : data_) v = mod_.reduce(v);
}

FieldMatrix FieldMatrix::identity(PrimeModulus mod, std::size_t n) {
    FieldMatrix m(mod, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % mod.value();
    return m;
}

bool FieldMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t v) { return v == 0; });
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
    detail::require_same_modulus(mod_, o.mod_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shapes differ");
    FieldMatrix out(mod_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = mod_.add(data_[i], o.data_[i]);
    return out;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
    detail::require_same_modulus(mod_, o.mod_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shapes differ");
    FieldMatrix out(mod_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = mod_.sub(data_[i], o.data_[i]);
    return out;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    detail::require_same_modulus(mod_, o.mod_);
    if (cols_ != o.rows_) throw ShapeError("inner dimensions differ");
    FieldMatrix out(mod_, rows_, o.cols_);
    // i-k-j order keeps both operands row-major in the inner loop.
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t* orow = out.row(i);
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint64_t f = at(i, k);
            if (f == 0) continue;
            const std::uint64_t* brow = o.row(k);
            for (std::size_t j = 0; j < o.cols_; ++j) {
                orow[j] = mod_.mul_add(orow[j], f, brow[j]);
            }
        }
    }
    return out;
}

FieldMatrix FieldMatrix::scaled(std::uint64_t c) const {
    FieldMatrix out(mod_, rows_, cols_);
    const std::uint64_t cc = mod_.reduce(c);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = mod_.mul(data_[i], cc);
    return out;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
    return mod_ == o.mod_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

FieldMatrix pow(const FieldMatrix& a, std::uint64_t e) {
    if (!a.is_square()) throw ShapeError("matrix power needs a square matrix");
    FieldMatrix result = FieldMatrix::identity(a.modulus(), a.rows());
    FieldMatrix base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        if (e >>= 1) base = base * base;
    }
    return result;
}

FieldVector mul(const FieldMatrix& a, const FieldVector& v) {
    detail::require_same_modulus(a.modulus(), v.modulus());
    if (a.cols() != v.size()) throw ShapeError("matrix-vector dimensions differ");
    const PrimeModulus& mod = a.modulus();
    FieldVector out(mod, a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const std::uint64_t* arow = a.row(i);
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            acc = mod.mul_add(acc, arow[j], v.at(j));
        }
        out.set(i, acc);
    }
    return out;
}

} // namespace makekex
