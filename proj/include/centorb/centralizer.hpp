#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "centorb/jordan.hpp"
#include "centorb/matrix.hpp"

namespace centorb {

/// One basis element of the centralizer algebra: the module map sending the
/// generator of `source` to p^shift times the generator of `target`, where
/// p = T - lambda, extended by linearity in T.
struct CentralizerOperator {
    ChainSlot source;
    ChainSlot target;
    std::size_t shift = 0;
    Matrix matrix;  ///< in whichever coordinates the producing call documents
};

/// Basis of the centralizer algebra in chain coordinates. Depends only on the
/// Jordan type; entries are 0/1. Ordered by (source chain, target chain, shift).
std::vector<CentralizerOperator> centralizer_operators(const JordanType& type);

struct CentralizerBasis {
    const JordanBasis* basis = nullptr;
    /// Matrices are in the original coordinates of basis->source.
    std::vector<CentralizerOperator> operators;

    std::size_t size() const { return operators.size(); }
};

/// Centralizer basis realized in the original coordinates (P E P^-1).
/// The returned value refers to `basis`, which must outlive it.
CentralizerBasis centralizer_basis(const JordanBasis& basis);

/// Sum over eigenvalues and ordered size pairs of min(i, i') m_i m_i'.
std::size_t centralizer_dimension(const JordanType& type);

/// Random invertible element of C(T): integer coefficients in [-9, 9] with
/// the per-chain identity coefficients nonzero. Deterministic in the seed;
/// throws std::runtime_error after 64 singular draws.
Matrix sample_invertible(const CentralizerBasis& cb, std::uint64_t seed);

/// Same draw in chain coordinates, for types without a concrete matrix.
Matrix sample_invertible(const std::vector<CentralizerOperator>& operators, std::size_t dimension,
                         std::uint64_t seed);

}  // namespace centorb
