#include "pnhom/snf.hpp"

#include <cstdlib>
#include <optional>
#include <utility>

namespace pnhom {

namespace {

// Location of a nonzero entry of minimal absolute value in m[t.., t..].
std::optional<std::pair<std::size_t, std::size_t>> min_abs_pivot(const IntMatrix& m,
                                                                 std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            const BigInt& v = m(i, j);
            if (v == 0) continue;
            BigInt a = abs(v);
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = std::move(a);
                if (best_abs == 1) return best;
            }
        }
    return best;
}

bool cross_clean(const IntMatrix& m, std::size_t t) {
    for (std::size_t i = t + 1; i < m.rows(); ++i)
        if (m(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < m.cols(); ++j)
        if (m(t, j) != 0) return false;
    return true;
}

} // namespace

std::vector<BigInt> SNFResult::nontrivial() const {
    std::vector<BigInt> out;
    for (const BigInt& d : diagonal)
        if (d > 1) out.push_back(d);
    return out;
}

SNFResult smith_normal_form(const IntMatrix& input, bool with_transforms) {
    const std::size_t rows = input.rows();
    const std::size_t cols = input.cols();
    const std::size_t bound = std::min(rows, cols);

    IntMatrix d = input;
    IntMatrix u, v;
    if (with_transforms) {
        u = IntMatrix::identity(rows);
        v = IntMatrix::identity(cols);
    }

    std::size_t t = 0;
    for (; t < bound; ++t) {
        auto pivot = min_abs_pivot(d, t);
        if (!pivot) break; // trailing block is zero

        for (;;) {
            if (!pivot) break; // unreachable: re-pivoting always finds an entry
            d.swap_rows(t, pivot->first);
            d.swap_cols(t, pivot->second);
            if (with_transforms) {
                u.swap_rows(t, pivot->first);
                v.swap_cols(t, pivot->second);
            }

            // Kill the rest of column t and row t. Remainders smaller than
            // the pivot may appear; then the minimal entry moved, so pick it
            // again and repeat.
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                BigInt q = d(i, t) / d(t, t);
                if (q != 0) {
                    d.axpy_row(i, t, -q);
                    if (with_transforms) u.axpy_row(i, t, -q);
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                BigInt q = d(t, j) / d(t, t);
                if (q != 0) {
                    d.axpy_col(j, t, -q);
                    if (with_transforms) v.axpy_col(j, t, -q);
                }
            }
            if (!cross_clean(d, t)) {
                pivot = min_abs_pivot(d, t);
                continue;
            }

            // Divisibility: the pivot must divide the whole trailing block.
            // Pulling an offending row up re-opens the cross with entries
            // whose remainders are strictly smaller, so this terminates.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.axpy_row(t, i, 1);
                        if (with_transforms) u.axpy_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
            pivot = min_abs_pivot(d, t);
        }

        if (d(t, t) < 0) {
            d.negate_row(t);
            if (with_transforms) u.negate_row(t);
        }
    }

    SNFResult result;
    result.rank = t;
    result.diagonal.resize(bound);
    for (std::size_t i = 0; i < t; ++i) result.diagonal[i] = d(i, i);
    if (with_transforms) {
        result.u = std::move(u);
        result.v = std::move(v);
    }
    return result;
}

} // namespace pnhom
