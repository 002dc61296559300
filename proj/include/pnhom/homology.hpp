#pragma once

#include "pnhom/cubical.hpp"
#include "pnhom/matrix.hpp"
#include "pnhom/snf.hpp"

#include <string>
#include <vector>

namespace pnhom {

/// Chain complex of free abelian groups: per-degree ranks and boundary maps
/// d_n : C_n -> C_{n-1} for 1 <= n <= top grade.
struct ChainComplex {
    std::vector<std::size_t> ranks;     // ranks[n] = dim C_n
    std::vector<SparseMat> boundaries;  // boundaries[n-1] = d_n

    std::size_t top_grade() const { return ranks.empty() ? 0 : ranks.size() - 1; }
    const SparseMat& differential(std::size_t n) const { return boundaries.at(n - 1); }

    /// Empty iff shapes are consistent and every d_{n-1} * d_n is zero.
    std::vector<std::string> check() const;
};

/// One homology group in canonical form: free rank plus torsion coefficients
/// (each >= 2, each dividing the next).
struct HomologyGroup {
    std::size_t degree = 0;
    std::size_t betti = 0;
    std::vector<BigInt> torsion;

    bool trivial() const { return betti == 0 && torsion.empty(); }

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Boundary maps d_n(c) = sum_i (-1)^i (upper face - lower face) over the
/// stored face tables. Coinciding faces merge into a single coefficient.
ChainComplex boundary_matrices(const SemicubicalSet& x);

/// One-sided boundary maps d_n(c) = sum_i (-1)^i (eps face): eps = 0 keeps
/// the lower faces (initial complex), eps = 1 the upper ones (final).
ChainComplex directed_boundary_matrices(const SemicubicalSet& x, int eps);

/// Homology groups of the complex in degrees 0..top grade. Groups above the
/// top grade are zero. Throws ComplexError when the complex is malformed.
std::vector<HomologyGroup> homology(const ChainComplex& c);

/// Homology of the one-sided complex of the cube complex of the space.
/// eps = 0 counts deadlocks in degree 0, eps = 1 counts senders.
std::vector<HomologyGroup> directed_homology(const StateSpace& space, int eps);

/// groups[k] when stored, the zero group of that degree otherwise.
HomologyGroup group_at(const std::vector<HomologyGroup>& groups, std::size_t k);

/// "0", "Z", "Z^2 (+) Z/2 (+) Z/6" style rendering; (+) is a UTF-8 o-plus.
std::string to_string(const HomologyGroup& g);

/// Multi-line rendering "H_0 = Z" ... with trailing zero groups collapsed
/// into one "H_k = 0 (k >= d)" line. prefix/superscript decorate the symbol,
/// e.g. render_groups(gs, "H", "^0").
std::string render_groups(const std::vector<HomologyGroup>& groups,
                          const std::string& symbol = "H",
                          const std::string& superscript = "");

} // namespace pnhom
