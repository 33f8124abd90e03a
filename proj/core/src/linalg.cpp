#include "makekex/linalg.hpp"

#include <algorithm>

namespace makekex {

namespace {

// row[j] = row[j] + f * src[j]  for j in [from, cols)
void row_axpy(const PrimeModulus& mod, std::uint64_t* row, const std::uint64_t* src,
              std::size_t from, std::size_t cols, std::uint64_t f) {
    for (std::size_t j = from; j < cols; ++j) {
        row[j] = mod.mul_add(row[j], f, src[j]);
    }
}

// Forward elimination, in place. Pivots are chosen as the first nonzero entry
// in column order (exact arithmetic needs no magnitude pivoting; this keeps
// the result deterministic). Pivot rows are scaled to 1. Only columns
// [0, lead_cols) are eligible as pivots; row operations span the full width,
// so an augmented column can ride along. Returns the pivot columns.
std::vector<std::size_t> forward_eliminate(FieldMatrix& m, std::size_t lead_cols) {
    const PrimeModulus& mod = m.modulus();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < lead_cols && pr < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t r = pr; r < rows; ++r) {
            if (m.at(r, col) != 0) {
                sel = r;
                break;
            }
        }
        if (sel == rows) continue;
        if (sel != pr) {
            std::uint64_t* a = m.row(pr);
            std::uint64_t* b = m.row(sel);
            std::swap_ranges(a, a + cols, b);
        }
        std::uint64_t* prow = m.row(pr);
        const std::uint64_t pv = prow[col];
        if (pv != 1) {
            const std::uint64_t s = mod.inv(pv);
            for (std::size_t j = col; j < cols; ++j) prow[j] = mod.mul(prow[j], s);
        }
        for (std::size_t r = pr + 1; r < rows; ++r) {
            std::uint64_t* rr = m.row(r);
            const std::uint64_t f = rr[col];
            if (f == 0) continue;
            rr[col] = 0;
            row_axpy(mod, rr, prow, col + 1, cols, mod.neg(f));
        }
        pivot_cols.push_back(col);
        ++pr;
    }
    return pivot_cols;
}

// Clear entries above each pivot (full reduced echelon form).
void back_eliminate(FieldMatrix& m, const std::vector<std::size_t>& pivot_cols) {
    const PrimeModulus& mod = m.modulus();
    const std::size_t cols = m.cols();
    for (std::size_t i = pivot_cols.size(); i-- > 0;) {
        const std::size_t col = pivot_cols[i];
        const std::uint64_t* prow = m.row(i);
        for (std::size_t r = 0; r < i; ++r) {
            std::uint64_t* rr = m.row(r);
            const std::uint64_t f = rr[col];
            if (f == 0) continue;
            rr[col] = 0;
            row_axpy(mod, rr, prow, col + 1, cols, mod.neg(f));
        }
    }
}

} // namespace

FieldPolynomial char_poly(const FieldMatrix& a) {
    if (!a.is_square()) throw ShapeError("characteristic polynomial needs a square matrix");
    const PrimeModulus& mod = a.modulus();
    const std::size_t k = a.rows();

    // Berkowitz: grow the leading principal submatrix one row/column at a
    // time. p holds the characteristic coefficients of the current r x r
    // block, descending by degree; each step multiplies by a Toeplitz matrix
    // whose first column is (1, -a_rr, -R S, -R A S, -R A^2 S, ...).
    std::vector<std::uint64_t> p{1 % mod.value()};
    std::vector<std::uint64_t> v, w;
    for (std::size_t r = 0; r < k; ++r) {
        std::vector<std::uint64_t> c(r + 2, 0);
        c[0] = 1 % mod.value();
        c[1] = mod.neg(a.at(r, r));
        if (r > 0) {
            v.assign(r, 0);
            for (std::size_t i = 0; i < r; ++i) v[i] = a.at(i, r);  // column S
            for (std::size_t step = 2; step <= r + 1; ++step) {
                std::uint64_t acc = 0;
                for (std::size_t i = 0; i < r; ++i) acc = mod.mul_add(acc, a.at(r, i), v[i]);
                c[step] = mod.neg(acc);
                if (step <= r) {
                    w.assign(r, 0);
                    for (std::size_t i = 0; i < r; ++i) {
                        const std::uint64_t* arow = a.row(i);
                        std::uint64_t s = 0;
                        for (std::size_t j = 0; j < r; ++j) s = mod.mul_add(s, arow[j], v[j]);
                        w[i] = s;
                    }
                    v.swap(w);
                }
            }
        }
        std::vector<std::uint64_t> pn(r + 2, 0);
        for (std::size_t i = 0; i < r + 2; ++i) {
            std::uint64_t acc = 0;
            const std::size_t jmax = std::min(i, p.size() - 1);
            for (std::size_t j = 0; j <= jmax; ++j) acc = mod.mul_add(acc, c[i - j], p[j]);
            pn[i] = acc;
        }
        p = std::move(pn);
    }

    std::reverse(p.begin(), p.end());  // to ascending degree
    return FieldPolynomial(mod, std::move(p));
}

FieldVector solve_linear(const FieldMatrix& a, const FieldVector& b) {
    detail::require_same_modulus(a.modulus(), b.modulus());
    if (a.rows() != b.size()) throw ShapeError("system row count does not match rhs length");
    const PrimeModulus& mod = a.modulus();
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();

    FieldMatrix aug(mod, rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        std::uint64_t* dst = aug.row(i);
        const std::uint64_t* src = a.row(i);
        std::copy(src, src + cols, dst);
        dst[cols] = b.at(i);
    }

    const std::vector<std::size_t> pivots = forward_eliminate(aug, cols);
    // Rows past the last pivot are all-zero on the coefficient side; a
    // nonzero augmented entry there reads 0 = nonzero.
    for (std::size_t r = pivots.size(); r < rows; ++r) {
        if (aug.at(r, cols) != 0) {
            throw NoSolutionError("linear system is inconsistent");
        }
    }

    FieldVector t(mod, cols);
    for (std::size_t i = pivots.size(); i-- > 0;) {
        const std::size_t col = pivots[i];
        const std::uint64_t* row = aug.row(i);
        std::uint64_t val = row[cols];
        for (std::size_t j = col + 1; j < cols; ++j) {
            if (row[j] != 0 && t.at(j) != 0) {
                val = mod.sub(val, mod.mul(row[j], t.at(j)));
            }
        }
        t.set(col, val);  // pivot entry is 1
    }
    return t;
}

std::vector<FieldVector> kernel_basis(const FieldMatrix& a) {
    const PrimeModulus& mod = a.modulus();
    FieldMatrix m = a;
    const std::vector<std::size_t> pivots = forward_eliminate(m, m.cols());
    back_eliminate(m, pivots);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<FieldVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        FieldVector u(mod, m.cols());
        u.set(f, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            u.set(pivots[i], mod.neg(m.at(i, f)));
        }
        basis.push_back(std::move(u));
    }
    return basis;
}

std::size_t rank(const FieldMatrix& a) {
    FieldMatrix m = a;
    return forward_eliminate(m, m.cols()).size();
}

FieldMatrix poly_eval_matrix(const FieldPolynomial& poly, const FieldMatrix& a) {
    if (!a.is_square()) throw ShapeError("polynomial evaluation needs a square matrix");
    detail::require_same_modulus(poly.modulus(), a.modulus());
    const PrimeModulus& mod = a.modulus();
    const std::size_t n = a.rows();
    FieldMatrix result(mod, n, n);
    if (poly.is_zero()) return result;
    for (std::size_t i = poly.coeffs().size(); i-- > 0;) {
        result = result * a;
        const std::uint64_t c = poly.coeff(i);
        if (c != 0) {
            for (std::size_t d = 0; d < n; ++d) result.set(d, d, mod.add(result.at(d, d), c));
        }
    }
    return result;
}

} // namespace makekex
