#include "pnhom/matrix.hpp"

#include "pnhom/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

namespace pnhom {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw Error("ragged rows in matrix literal");
        std::size_t j = 0;
        for (long long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const BigInt& v) { return v == 0; });
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::axpy_row(std::size_t i, std::size_t j, const BigInt& f) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += f * (*this)(j, k);
}

void IntMatrix::axpy_col(std::size_t i, std::size_t j, const BigInt& f) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += f * (*this)(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigInt& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const BigInt& bkj = b(k, j);
                if (bkj != 0) c(i, j) += aik * bkj;
            }
        }
    return c;
}

void SparseMat::set_column(std::size_t j, std::vector<Entry> entries) {
    columns_.at(j) = std::move(entries);
}

std::size_t SparseMat::nonzeros() const {
    std::size_t n = 0;
    for (const auto& col : columns_) n += col.size();
    return n;
}

bool SparseMat::product_is_zero(const SparseMat& rhs) const {
    if (cols_ != rhs.rows()) throw Error("matrix product shape mismatch");
    std::atomic<bool> zero{true};
    const auto k = static_cast<std::int64_t>(rhs.cols());
#pragma omp parallel
    {
        std::vector<std::int64_t> acc(rows_, 0);
        std::vector<std::uint32_t> touched;
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t j = 0; j < k; ++j) {
            if (!zero.load(std::memory_order_relaxed)) continue;
            touched.clear();
            for (const auto& [mid, v] : rhs.column(static_cast<std::size_t>(j)))
                for (const auto& [row, w] : columns_[mid]) {
                    if (acc[row] == 0) touched.push_back(row);
                    acc[row] += v * w;
                }
            for (std::uint32_t row : touched) {
                if (acc[row] != 0) zero.store(false, std::memory_order_relaxed);
                acc[row] = 0;
            }
        }
    }
    return zero.load();
}

IntMatrix SparseMat::to_dense() const {
    IntMatrix m(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto& [row, v] : columns_[j]) m(row, j) = v;
    return m;
}

std::vector<SparseMat::Entry> merge_entries(std::vector<SparseMat::Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<SparseMat::Entry> out;
    out.reserve(entries.size());
    for (const auto& [row, v] : entries) {
        if (!out.empty() && out.back().first == row)
            out.back().second += v;
        else
            out.emplace_back(row, v);
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

} // namespace pnhom
