#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "centorb/jordan.hpp"
#include "centorb/lattice.hpp"
#include "centorb/rational.hpp"

namespace centorb::oracle {

inline constexpr std::size_t kDefaultSubspaceCap = 100'000;

/// Dense matrix over F_p, entries in [0, p).
class PrimeFieldMatrix {
public:
    PrimeFieldMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

    std::uint32_t modulus() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    /// Stores v reduced mod p.
    void set(std::size_t r, std::size_t c, std::uint64_t v) { entries_[r * cols_ + c] = static_cast<std::uint32_t>(v % p_); }
    const std::vector<std::uint32_t>& entries() const { return entries_; }

    /// Reduced row echelon form with zero rows removed.
    PrimeFieldMatrix row_reduced() const;
    std::size_t rank() const { return row_reduced().rows(); }

    friend PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);
    friend bool operator==(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;
    friend auto operator<=>(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;

private:
    std::uint32_t p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> entries_;
};

/// A subspace of F_p^n stored as its reduced row echelon basis (one row per
/// basis vector). Two subspaces are equal iff their bases are.
using Subspace = PrimeFieldMatrix;

bool is_prime(std::uint64_t n);

/// Total number of subspaces of F_p^n (sum of Gaussian binomials).
Integer subspace_count(std::uint32_t p, std::size_t n);

/// Visits every subspace of F_p^n exactly once, dimension ascending, by
/// running over pivot-column sets and the free entries of each echelon form.
/// Throws CapExceeded when the total exceeds `cap`.
void for_each_subspace(std::uint32_t p, std::size_t n, const std::function<void(const Subspace&)>& visit,
                       std::size_t cap = kDefaultSubspaceCap);

std::vector<Subspace> all_subspaces(std::uint32_t p, std::size_t n, std::size_t cap = kDefaultSubspaceCap);

/// Residue of a rational modulo p; throws InputError if the denominator is
/// divisible by p.
std::uint32_t reduce_mod(const Rational& q, std::uint32_t p);

/// Jordan matrix of the type over F_p (lower subdiagonal). Throws InputError
/// for symbolic eigenvalues, non-representable ones, or two eigenvalues that
/// coincide mod p.
PrimeFieldMatrix jordan_matrix_mod(const JordanType& type, std::uint32_t p);

/// Basis of {U : UT = TU} over F_p, found by solving the linear system in the
/// n^2 entries of U. Independent of the chain-shift construction.
std::vector<PrimeFieldMatrix> commutant_basis(const PrimeFieldMatrix& t);

/// Every subspace of F_p^n invariant under the whole commutant of the Jordan
/// matrix, sorted by (dimension, basis).
std::vector<Subspace> invariant_subspaces_bruteforce(const JordanType& type, std::uint32_t p,
                                                     std::size_t cap = kDefaultSubspaceCap);

struct Verdict {
    bool pass = false;
    std::uint32_t prime = 0;
    std::size_t dimension = 0;
    std::size_t subspaces_scanned = 0;
    std::size_t invariant_count = 0;
    std::size_t predicted_count = 0;
    std::size_t commutant_dimension = 0;
    std::size_t centralizer_dimension = 0;
    /// dims[d] = number of invariant subspaces of dimension d found by brute force.
    std::vector<std::size_t> invariant_dimensions;
    std::optional<std::string> first_mismatch;
};

/// Checks the predicted lattice against brute force: counts agree, every
/// predicted coordinate subspace is an invariant subspace (and distinct labels
/// give distinct subspaces), its dimension is the predicted orbit dimension,
/// and the commutant dimension matches the centralizer dimension formula.
Verdict compare_with_prediction(const JordanType& type, std::uint32_t p, std::size_t cap = kDefaultSubspaceCap);

/// Same, against an explicit label list (used to test the harness itself).
Verdict compare_with_prediction(const JordanType& type, std::uint32_t p, const std::vector<OrbitLabel>& predicted,
                                std::size_t cap = kDefaultSubspaceCap);

}  // namespace centorb::oracle
