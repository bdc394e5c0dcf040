/**
 * @file matrix.hpp
 * @brief Dense matrices over the rationals with deterministic leftmost-pivot
 *        row reduction. Carrier for every kernel/cokernel computation.
 */
#pragma once

#include "rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace afb {

class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}

    ExactMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
    {
    }

    static ExactMatrix identity(size_t n)
    {
        ExactMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows)
    {
        const size_t r = rows.size();
        const size_t c = r == 0 ? 0 : rows.front().size();
        ExactMatrix m(r, c);
        for (size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw std::invalid_argument("ExactMatrix::from_rows: ragged rows");
            for (size_t j = 0; j < c; ++j)
                m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static ExactMatrix from_columns(const std::vector<std::vector<Rational>>& cols)
    {
        const size_t c = cols.size();
        const size_t r = c == 0 ? 0 : cols.front().size();
        ExactMatrix m(r, c);
        for (size_t j = 0; j < c; ++j) {
            if (cols[j].size() != r)
                throw std::invalid_argument("ExactMatrix::from_columns: ragged columns");
            for (size_t i = 0; i < r; ++i)
                m.at(i, j) = cols[j][i];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rational> apply(const std::vector<Rational>& v) const
    {
        if (v.size() != cols_)
            throw std::invalid_argument("ExactMatrix::apply: size mismatch");
        std::vector<Rational> out(rows_, Rational(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                out[i] += at(i, j) * v[j];
        return out;
    }

    // Reduced row echelon form with the leftmost-pivot rule: columns are
    // scanned left to right and the first row with a nonzero entry becomes
    // the pivot. No magnitude heuristics, so bases are reproducible.
    ExactMatrix rref(std::vector<size_t>* pivot_cols = nullptr) const
    {
        ExactMatrix m = *this;
        size_t pivot_row = 0;
        for (size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
            size_t sel = pivot_row;
            while (sel < rows_ && is_zero(m.at(sel, col)))
                ++sel;
            if (sel == rows_)
                continue;
            if (sel != pivot_row)
                for (size_t j = 0; j < cols_; ++j)
                    std::swap(m.at(sel, j), m.at(pivot_row, j));
            const Rational inv = Rational(1) / m.at(pivot_row, col);
            for (size_t j = col; j < cols_; ++j)
                m.at(pivot_row, j) *= inv;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == pivot_row || is_zero(m.at(i, col)))
                    continue;
                const Rational factor = m.at(i, col);
                for (size_t j = col; j < cols_; ++j)
                    m.at(i, j) -= factor * m.at(pivot_row, j);
            }
            if (pivot_cols)
                pivot_cols->push_back(col);
            ++pivot_row;
        }
        return m;
    }

    size_t rank() const
    {
        std::vector<size_t> pivots;
        rref(&pivots);
        return pivots.size();
    }

    // Exact basis of the null space, one vector per free column, read off the
    // reduced echelon form. rank() + kernel().size() == cols() always.
    std::vector<std::vector<Rational>> kernel() const
    {
        std::vector<size_t> pivots;
        const ExactMatrix r = rref(&pivots);
        std::vector<bool> is_pivot(cols_, false);
        for (size_t p : pivots)
            is_pivot[p] = true;
        std::vector<std::vector<Rational>> basis;
        for (size_t free_col = 0; free_col < cols_; ++free_col) {
            if (is_pivot[free_col])
                continue;
            std::vector<Rational> v(cols_, Rational(0));
            v[free_col] = 1;
            for (size_t k = 0; k < pivots.size(); ++k)
                v[pivots[k]] = -r.at(k, free_col);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    size_t rows_, cols_;
    std::vector<Rational> data_;
};

inline size_t rank(const ExactMatrix& m) { return m.rank(); }
inline std::vector<std::vector<Rational>> kernel(const ExactMatrix& m) { return m.kernel(); }

// Row space comparison via canonical echelon forms; used for exact
// subspace-equality checks (not just dimension counts).
inline bool same_row_space(const ExactMatrix& a, const ExactMatrix& b)
{
    if (a.cols() != b.cols())
        return false;
    std::vector<size_t> pa, pb;
    const ExactMatrix ra = a.rref(&pa);
    const ExactMatrix rb = b.rref(&pb);
    if (pa.size() != pb.size() || pa != pb)
        return false;
    for (size_t i = 0; i < pa.size(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (ra.at(i, j) != rb.at(i, j))
                return false;
    return true;
}

} // namespace afb
