#pragma once

#include "pnhom/cubical.hpp"
#include "pnhom/homology.hpp"
#include "pnhom/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pnhom {

/// Grade-level verdicts for the short exact sequence
///   0 -> C(A n B) -> C(A) (+) C(B) -> C(A u B) -> 0
/// with the diagonal map c -> (c, c) and the difference map
/// (c1, c2) -> c1 - c2.
struct MVGrade {
    std::size_t grade = 0;
    std::size_t inter_size = 0;
    std::size_t left_size = 0;
    std::size_t right_size = 0;
    std::size_t union_size = 0;
    bool diagonal_injective = false;
    bool difference_surjective = false;
    bool composite_zero = false;
    bool middle_exact = false;

    bool pass() const {
        return diagonal_injective && difference_surjective && composite_zero && middle_exact;
    }
};

struct MVReport {
    std::vector<MVGrade> grades;
    // The inclusion maps commute with the two-sided differential and with
    // both one-sided differentials.
    bool chain_maps_commute = false;

    // Induced map on degree-0 homology over component classes: rows are the
    // components of A followed by the components of B, columns those of the
    // intersection; entry 1 when the intersection component lands there.
    IntMatrix h0_diagonal_matrix;
    std::size_t h0_rank = 0;
    std::size_t components_inter = 0;
    std::size_t components_left = 0;
    std::size_t components_right = 0;

    long long euler_left = 0;
    long long euler_right = 0;
    long long euler_union = 0;
    long long euler_inter = 0;

    bool exact() const;
    std::string summary() const;
};

/// Verifies chain-level exactness of the union/intersection sequence for two
/// subcomplexes of a common ambient complex.
MVReport mv_check(const SemicubicalSet& a, const SemicubicalSet& b);

} // namespace pnhom
