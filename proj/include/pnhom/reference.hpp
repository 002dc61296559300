#pragma once

#include "pnhom/cubical.hpp"
#include "pnhom/homology.hpp"
#include "pnhom/state_space.hpp"

#include <vector>

// Serial reference implementations of the parallel kernels. These are kept
// deliberately plain (single loop nest, no scheduling, no shared scratch) so
// the OpenMP versions can be tested byte-for-byte against them and benchmarked.
namespace pnhom::reference {

SemicubicalSet build_complex(const StateSpace& space, std::size_t max_dim = kNoDimensionCap);

std::vector<Violation> validate(const SemicubicalSet& x);

ChainComplex boundary_matrices(const SemicubicalSet& x);
ChainComplex directed_boundary_matrices(const SemicubicalSet& x, int eps);

std::vector<Marking> deadlocks(const StateSpace& space);
std::vector<Marking> senders(const StateSpace& space);

} // namespace pnhom::reference
