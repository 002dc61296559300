#pragma once

#include "pnhom/matrix.hpp"

#include <optional>
#include <vector>

namespace pnhom {

/// Smith normal form of an integer matrix: diagonal entries with each
/// dividing the next, nonzero entries first. When transforms are requested,
/// u and v are unimodular and u * m * v equals the diagonal matrix.
struct SNFResult {
    std::vector<BigInt> diagonal; // length min(rows, cols)
    std::size_t rank = 0;         // number of nonzero diagonal entries
    std::optional<IntMatrix> u;
    std::optional<IntMatrix> v;

    /// Diagonal entries >= 2: the torsion coefficients of the cokernel,
    /// already in divisibility order.
    std::vector<BigInt> nontrivial() const;
};

SNFResult smith_normal_form(const IntMatrix& m, bool with_transforms = false);

} // namespace pnhom
