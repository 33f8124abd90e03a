#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "makekex/modular.hpp"

namespace makekex {

class FieldVector {
public:
    FieldVector(PrimeModulus mod, std::size_t size)
        : mod_(mod), data_(size, 0) {}
    FieldVector(PrimeModulus mod, std::vector<std::uint64_t> values);

    std::size_t size() const noexcept { return data_.size(); }
    const PrimeModulus& modulus() const noexcept { return mod_; }

    std::uint64_t at(std::size_t i) const { return data_[i]; }
    void set(std::size_t i, std::uint64_t v) { data_[i] = mod_.reduce(v); }
    FieldElement element(std::size_t i) const { return {data_[i], mod_}; }

    const std::uint64_t* data() const noexcept { return data_.data(); }
    std::uint64_t* data() noexcept { return data_.data(); }

    bool is_zero() const noexcept;

    FieldVector operator+(const FieldVector& o) const;
    FieldVector operator-(const FieldVector& o) const;
    bool operator==(const FieldVector& o) const;
    bool operator!=(const FieldVector& o) const { return !(*this == o); }

private:
    PrimeModulus mod_;
    std::vector<std::uint64_t> data_;
};

// Dense row-major matrix over Z_p; every entry is a canonical residue.
class FieldMatrix {
public:
    FieldMatrix(PrimeModulus mod, std::size_t rows, std::size_t cols)
        : mod_(mod), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    FieldMatrix(PrimeModulus mod, std::size_t rows, std::size_t cols,
                std::vector<std::uint64_t> values);

    static FieldMatrix identity(PrimeModulus mod, std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const PrimeModulus& modulus() const noexcept { return mod_; }

    std::uint64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint64_t v) {
        data_[i * cols_ + j] = mod_.reduce(v);
    }
    FieldElement element(std::size_t i, std::size_t j) const { return {at(i, j), mod_}; }

    const std::uint64_t* row(std::size_t i) const noexcept { return data_.data() + i * cols_; }
    std::uint64_t* row(std::size_t i) noexcept { return data_.data() + i * cols_; }

    bool is_zero() const noexcept;

    FieldMatrix operator+(const FieldMatrix& o) const;
    FieldMatrix operator-(const FieldMatrix& o) const;
    FieldMatrix operator*(const FieldMatrix& o) const;
    FieldMatrix scaled(std::uint64_t c) const;

    bool operator==(const FieldMatrix& o) const;
    bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

private:
    PrimeModulus mod_;
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> data_;
};

// A^e by square-and-multiply; A^0 = I.
FieldMatrix pow(const FieldMatrix& a, std::uint64_t e);

FieldVector mul(const FieldMatrix& a, const FieldVector& v);

namespace detail {
void require_same_modulus(const PrimeModulus& a, const PrimeModulus& b);
}

} // namespace makekex
