#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace s4embed {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols = 0);
    static IntMatrix diagonal(const IntVector& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector column(std::size_t c) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVector operator*(const IntVector& v) const;
    IntMatrix operator-() const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const;
    bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_diagonal() const;

    // Fraction-free Bareiss elimination.
    Integer determinant() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    IntMatrix remove_row_col(std::size_t r, std::size_t c) const;
    IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
    IntMatrix select_cols(const std::vector<std::size_t>& idx) const;
    IntMatrix hconcat(const IntMatrix& rhs) const;

    std::vector<std::vector<std::int64_t>> to_int64() const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

bool fits_int64(const Integer& x);
std::int64_t to_int64(const Integer& x);

}  // namespace s4embed
