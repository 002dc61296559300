#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace pnhom {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix of arbitrary-precision integers, row major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row i += f * row j
    void axpy_row(std::size_t i, std::size_t j, const BigInt& f);
    /// col i += f * col j
    void axpy_col(std::size_t i, std::size_t j, const BigInt& f);
    void negate_row(std::size_t i);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> a_;
};

/// Sparse integer matrix stored by columns. Entries are machine integers;
/// boundary coefficients are small signed sums of faces, so int64 is exact.
class SparseMat {
public:
    using Entry = std::pair<std::uint32_t, std::int64_t>; // (row, value)

    SparseMat() = default;
    SparseMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// Installs a column; entries must be sorted by row with no zero values.
    void set_column(std::size_t j, std::vector<Entry> entries);
    const std::vector<Entry>& column(std::size_t j) const { return columns_[j]; }

    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }

    /// Exact test of (*this) * rhs == 0.
    bool product_is_zero(const SparseMat& rhs) const;

    IntMatrix to_dense() const;

    friend bool operator==(const SparseMat&, const SparseMat&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

/// Sorts by row and merges duplicate rows, dropping zero sums. Used when
/// assembling boundary columns whose faces may coincide.
std::vector<SparseMat::Entry> merge_entries(std::vector<SparseMat::Entry> entries);

} // namespace pnhom
