#pragma once

#include <cstddef>
#include <vector>

#include "centorb/jordan.hpp"
#include "centorb/lattice.hpp"
#include "centorb/matrix.hpp"

namespace centorb {

struct OrbitReport {
    OrbitLabel label;
    std::size_t orbit_dimension = 0;
    /// Equal to orbit_dimension: an orbit is open and dense in its closure.
    std::size_t closure_dimension = 0;
    /// Per eigenvalue, the closed column heights H_k.
    std::vector<std::vector<std::size_t>> heights;
};

/// sum_lambda sum_k delta_k M_k.
std::size_t orbit_dimension(const OrbitLattice& lattice, const OrbitLabel& label);

/// Classifies a vector given in chain coordinates of `type`. Each chain
/// contributes the height of its projection (size minus the first nonzero
/// position); heights are maximized per column and then closed upward to the
/// right (same height in longer blocks) and to the left (height reduced by the
/// size gap in shorter blocks).
OrbitReport classify_chain_coords(const JordanType& type, const Matrix& coords);

/// Classifies a vector in the original coordinates of basis.source.
OrbitReport classify_vector(const JordanBasis& basis, const Matrix& v);

/// Canonical 0/1 vector in chain coordinates whose orbit has the given label:
/// for each column with height H > 0, the chain vector p^(i_k - H) v of the
/// first block of that size.
Matrix representative(const JordanType& type, const OrbitLabel& label);

/// Coordinate subspace of the orbit closure, as chain-coordinate basis
/// vectors: every chain vector at position t >= i_k - H_k, all blocks j.
std::vector<Matrix> closure_basis(const JordanType& type, const OrbitLabel& label);

struct SolutionComparison {
    bool equivalent = false;
    OrbitReport first;
    OrbitReport second;
};

/// Two initial conditions of x' = Tx give equivalent solutions iff their
/// orbit labels agree.
SolutionComparison same_solution_class(const JordanBasis& basis, const Matrix& v1, const Matrix& v2);

}  // namespace centorb
