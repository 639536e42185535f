#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "centorb/matrix.hpp"
#include "centorb/rational.hpp"

namespace centorb {

/// Eigenvalue label: an exact rational, or an opaque symbol for operators
/// given directly by their Jordan type. Rationals sort numerically and
/// precede all symbols; symbols sort lexicographically.
class Eigenvalue {
public:
    Eigenvalue(Rational value) : value_(std::move(value)) {}
    static Eigenvalue symbol(std::string name) { return Eigenvalue(std::move(name)); }
    /// Rational if the text parses as one, otherwise a symbol.
    static Eigenvalue parse(const std::string& text);

    bool is_rational() const { return std::holds_alternative<Rational>(value_); }
    const Rational& rational() const;
    std::string str() const;

    friend bool operator==(const Eigenvalue& a, const Eigenvalue& b);
    friend std::strong_ordering operator<=>(const Eigenvalue& a, const Eigenvalue& b);

private:
    explicit Eigenvalue(std::string name) : value_(std::move(name)) {}
    std::variant<Rational, std::string> value_;
};

struct BlockCount {
    std::size_t size = 0;
    std::size_t multiplicity = 0;
    friend bool operator==(const BlockCount&, const BlockCount&) = default;
};

/// Complete similarity invariant: for each eigenvalue, the distinct Jordan
/// block sizes (strictly increasing) with their multiplicities.
class JordanType {
public:
    JordanType() = default;

    /// Adds `multiplicity` blocks of `size` for `eigenvalue`, merging with
    /// blocks already present.
    JordanType& add(const Eigenvalue& eigenvalue, std::size_t size, std::size_t multiplicity = 1);

    const std::map<Eigenvalue, std::vector<BlockCount>>& blocks() const { return blocks_; }
    std::vector<Eigenvalue> eigenvalues() const;
    const std::vector<BlockCount>& blocks_of(const Eigenvalue& eigenvalue) const;
    std::size_t dimension() const;
    std::size_t eigenvalue_count() const { return blocks_.size(); }
    bool all_rational() const;

    /// Canonical Jordan matrix (lower subdiagonal ones), blocks ordered by
    /// eigenvalue, then size, then index. Requires rational eigenvalues.
    Matrix jordan_matrix() const;

    std::string str() const;

    friend bool operator==(const JordanType&, const JordanType&) = default;

private:
    std::map<Eigenvalue, std::vector<BlockCount>> blocks_;
};

/// Position of one Jordan chain in the canonical chain order.
struct ChainSlot {
    std::size_t eigen_index = 0;  ///< index into JordanType::eigenvalues()
    std::size_t column = 0;       ///< index of the block size among that eigenvalue's sizes
    std::size_t size = 0;
    std::size_t index = 0;        ///< 0-based block index among blocks of this size
    std::size_t offset = 0;       ///< coordinate of the chain generator
};

/// All chains of a type in canonical order; offsets are consecutive.
std::vector<ChainSlot> chain_layout(const JordanType& type);

struct Chain {
    ChainSlot slot;
    Rational eigenvalue;
    /// vectors[t] = (T - eigenvalue)^t * vectors[0]
    std::vector<Matrix> vectors;
};

/// Explicit Jordan chains of a rational matrix and the change of basis P
/// (columns = chain vectors in canonical order) with P^-1 T P = J.
struct JordanBasis {
    Matrix source;
    JordanType type;
    std::vector<Chain> chains;
    Matrix change;
    Matrix change_inverse;

    std::size_t dimension() const { return source.rows(); }
};

/// Coefficients c_0..c_n of det(x I - t), low degree first.
std::vector<Rational> characteristic_polynomial(const Matrix& t);

/// Distinct eigenvalues with algebraic multiplicities, ascending. Throws
/// NonSplittingCharPoly unless every root is rational.
std::vector<std::pair<Rational, std::size_t>> rational_eigenvalues(const Matrix& t);

JordanType jordan_type(const Matrix& t);

JordanBasis jordan_basis(const Matrix& t);

/// P^-1 v.
Matrix coords_in_jordan_basis(const JordanBasis& basis, const Matrix& v);

}  // namespace centorb
