#pragma once

// Test-only helpers: a corpus of Jordan types, random generators, and
// oracles that recompute results by definition rather than by the library's
// shortcuts.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "centorb/centralizer.hpp"
#include "centorb/jordan.hpp"
#include "centorb/lattice.hpp"
#include "centorb/matrix.hpp"

namespace centorb::testing {

inline JordanType nilpotent(std::initializer_list<std::pair<std::size_t, std::size_t>> blocks) {
    JordanType t;
    for (auto [size, mult] : blocks) t.add(Eigenvalue(Rational(0)), size, mult);
    return t;
}

/// Types used across property and acceptance tests.
inline std::vector<JordanType> corpus() {
    std::vector<JordanType> out;
    out.push_back(nilpotent({{1, 1}}));
    out.push_back(nilpotent({{3, 1}}));
    out.push_back(nilpotent({{2, 2}}));
    out.push_back(nilpotent({{1, 1}, {2, 1}}));
    out.push_back(nilpotent({{2, 1}, {3, 1}}));
    out.push_back(nilpotent({{1, 1}, {3, 1}, {5, 1}}));
    out.push_back(nilpotent({{1, 2}, {3, 1}}));
    out.push_back(nilpotent({{1, 1}, {2, 2}, {4, 1}}));
    {
        JordanType t;
        t.add(Eigenvalue(Rational(1)), 1, 1).add(Eigenvalue(Rational(2)), 1, 1);
        out.push_back(t);
    }
    {
        JordanType t;
        t.add(Eigenvalue(Rational(-1, 2)), 2, 1).add(Eigenvalue(Rational(-1, 2)), 1, 1);
        t.add(Eigenvalue(Rational(3)), 2, 2);
        out.push_back(t);
    }
    {
        JordanType t;
        t.add(Eigenvalue(Rational(0)), 1, 1).add(Eigenvalue(Rational(0)), 2, 1);
        t.add(Eigenvalue(Rational(5)), 3, 1).add(Eigenvalue(Rational(7)), 1, 2);
        out.push_back(t);
    }
    return out;
}

inline Rational random_rational(std::mt19937_64& rng, int range = 9, int den = 4) {
    std::uniform_int_distribution<int> num_d(-range, range);
    std::uniform_int_distribution<int> den_d(1, den);
    Rational q(num_d(rng), den_d(rng));
    q.canonicalize();
    return q;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range = 3, int den = 1) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng, range, den);
    return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n, int range = 2) {
    while (true) {
        Matrix q = random_matrix(rng, n, n, range, 1);
        if (rank(q) == n) return q;
    }
}

/// Matrix similar to the type's Jordan matrix through a random change of basis.
inline Matrix disguised(const JordanType& type, std::mt19937_64& rng) {
    const Matrix q = random_invertible(rng, type.dimension());
    return inverse(q) * type.jordan_matrix() * q;
}

/// Dimension of c(T) v, computed as the span of every centralizer basis
/// operator applied to v. The identity lies in the span of the operators, so
/// v itself is included.
inline std::size_t closure_span_dimension(const std::vector<CentralizerOperator>& ops, const Matrix& v) {
    std::vector<Matrix> images;
    for (const auto& op : ops) images.push_back(op.matrix * v);
    return span_dimension(images, v.rows());
}

/// Whether span(a) == span(b) for two lists of column vectors.
inline bool same_span(const std::vector<Matrix>& a, const std::vector<Matrix>& b, std::size_t n) {
    const std::size_t ra = span_dimension(a, n);
    const std::size_t rb = span_dimension(b, n);
    std::vector<Matrix> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return ra == rb && span_dimension(both, n) == ra;
}

/// Covers by definition: a < b with no c strictly between.
inline std::vector<Cover> covers_by_definition(const OrbitLattice& lattice) {
    const auto labels = lattice.enumerate();
    std::vector<Cover> out;
    for (const auto& a : labels)
        for (const auto& b : labels) {
            if (a == b || !lattice.leq(a, b)) continue;
            const bool between = std::any_of(labels.begin(), labels.end(), [&](const OrbitLabel& c) {
                return c != a && c != b && lattice.leq(a, c) && lattice.leq(c, b);
            });
            if (!between) out.push_back(Cover{a, b});
        }
    std::sort(out.begin(), out.end(), [&](const Cover& x, const Cover& y) {
        return std::pair(lattice.index_of(x.lower), lattice.index_of(x.upper)) <
               std::pair(lattice.index_of(y.lower), lattice.index_of(y.upper));
    });
    return out;
}

/// Least upper bound by exhaustive search over all labels.
inline OrbitLabel join_by_search(const OrbitLattice& lattice, const OrbitLabel& a, const OrbitLabel& b) {
    const auto labels = lattice.enumerate();
    std::vector<OrbitLabel> upper;
    for (const auto& c : labels)
        if (lattice.leq(a, c) && lattice.leq(b, c)) upper.push_back(c);
    for (const auto& c : upper)
        if (std::all_of(upper.begin(), upper.end(), [&](const OrbitLabel& d) { return lattice.leq(c, d); })) return c;
    throw std::logic_error("no least upper bound");
}

inline OrbitLabel meet_by_search(const OrbitLattice& lattice, const OrbitLabel& a, const OrbitLabel& b) {
    const auto labels = lattice.enumerate();
    std::vector<OrbitLabel> lower;
    for (const auto& c : labels)
        if (lattice.leq(c, a) && lattice.leq(c, b)) lower.push_back(c);
    for (const auto& c : lower)
        if (std::all_of(lower.begin(), lower.end(), [&](const OrbitLabel& d) { return lattice.leq(d, c); })) return c;
    throw std::logic_error("no greatest lower bound");
}

inline OrbitLabel label1(std::vector<std::size_t> digits) { return OrbitLabel{{std::move(digits)}}; }

}  // namespace centorb::testing
