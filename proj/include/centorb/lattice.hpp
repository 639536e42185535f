#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centorb/jordan.hpp"
#include "centorb/rational.hpp"

namespace centorb {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Per-eigenvalue combinatorial data: distinct block sizes i_1 < i_2 < ...,
/// their increments (i_1, i_2 - i_1, ...), multiplicities and tail sums
/// M_k = m_k + m_{k+1} + ...
struct IncrementSequence {
    Eigenvalue eigenvalue;
    std::vector<std::size_t> deltas;
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> multiplicities;
    std::vector<std::size_t> tail_sums;

    std::size_t length() const { return deltas.size(); }
    /// Dimension of the generalized eigenspace.
    std::size_t dimension() const { return tail_sums.empty() ? 0 : weighted(deltas); }
    /// sum_k x_k M_k
    std::size_t weighted(const std::vector<std::size_t>& x) const;
};

/// One increment sequence per eigenvalue, in canonical eigenvalue order.
std::vector<IncrementSequence> increments_from_type(const JordanType& type);

/// Orbit label: for each eigenvalue, a sequence delta with 0 <= delta_k <= Delta_k.
/// The partial sums H_k of delta are the per-block heights in column k.
struct OrbitLabel {
    std::vector<std::vector<std::size_t>> parts;

    friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
    friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

std::vector<std::size_t> partial_sums(const std::vector<std::size_t>& delta);
/// Inverse of partial_sums; H must be nondecreasing.
std::vector<std::size_t> differences(const std::vector<std::size_t>& heights);

struct Cover {
    OrbitLabel lower;
    OrbitLabel upper;
    friend bool operator==(const Cover&, const Cover&) = default;
    friend auto operator<=>(const Cover&, const Cover&) = default;
};

/// The orbit lattice of a Jordan type: the product over eigenvalues of
/// prod_k [Delta_k], ordered by comparing partial sums. Meet and join are
/// pointwise min and max of partial sums. Both stay valid labels: if H and G
/// are nondecreasing with increments bounded by Delta, then so are min(H, G)
/// and max(H, G), since max(H_k, G_k) - max(H_{k-1}, G_{k-1}) lies between 0
/// and max(H_k - H_{k-1}, G_k - G_{k-1}) (and symmetrically for min).
class OrbitLattice {
public:
    explicit OrbitLattice(const JordanType& type);

    const std::vector<IncrementSequence>& increments() const { return increments_; }

    bool valid(const OrbitLabel& label) const;
    /// Throws InvalidLabel naming the first violated constraint.
    void check(const OrbitLabel& label) const;

    OrbitLabel bottom() const;
    OrbitLabel top() const;

    bool leq(const OrbitLabel& a, const OrbitLabel& b) const;
    OrbitLabel meet(const OrbitLabel& a, const OrbitLabel& b) const;
    OrbitLabel join(const OrbitLabel& a, const OrbitLabel& b) const;
    /// Order-reversing involution: heights H_k -> i_k - H_k, i.e. delta -> Delta - delta.
    OrbitLabel dual(const OrbitLabel& a) const;

    /// prod_lambda prod_k (1 + Delta_k), exact.
    Integer size() const;

    /// All labels in lexicographic order; throws CapExceeded above `cap`.
    std::vector<OrbitLabel> enumerate(std::size_t cap = kDefaultEnumerationCap) const;

    /// Position of a label in enumeration order (mixed radix).
    std::size_t index_of(const OrbitLabel& label) const;

    /// Cover relations, sorted by (lower, upper) in enumeration order. A label
    /// is covered by exactly the labels obtained by raising one height H_k by
    /// one, which moves a unit from delta_{k+1} to delta_k.
    std::vector<Cover> hasse_covers(std::size_t cap = kDefaultEnumerationCap) const;

    /// Sum of all heights; the rank function of the lattice.
    std::size_t rank_of(const OrbitLabel& label) const;

    /// Per-eigenvalue digit strings joined by '|'. An eigenvalue with some
    /// Delta_k >= 10 writes its entries separated by '.'.
    std::string format(const OrbitLabel& label) const;
    OrbitLabel parse(std::string_view text) const;

private:
    void check_compatible(const OrbitLabel& a, const OrbitLabel& b) const;
    template <typename Pick>
    OrbitLabel combine(const OrbitLabel& a, const OrbitLabel& b, Pick pick) const;

    std::vector<IncrementSequence> increments_;
};

}  // namespace centorb
