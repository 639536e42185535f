#include "centorb/classify.hpp"

#include <algorithm>

#include "centorb/error.hpp"

namespace centorb {

std::size_t orbit_dimension(const OrbitLattice& lattice, const OrbitLabel& label) {
    lattice.check(label);
    std::size_t dim = 0;
    for (std::size_t e = 0; e < label.parts.size(); ++e) dim += lattice.increments()[e].weighted(label.parts[e]);
    return dim;
}

OrbitReport classify_chain_coords(const JordanType& type, const Matrix& coords) {
    if (coords.rows() != type.dimension() || coords.cols() != 1)
        throw DimensionError("vector of shape " + coords.shape() + " for operator of dimension " +
                             std::to_string(type.dimension()));
    const OrbitLattice lattice(type);
    const auto& incs = lattice.increments();

    std::vector<std::vector<std::size_t>> raw(incs.size());
    for (std::size_t e = 0; e < incs.size(); ++e) raw[e].assign(incs[e].length(), 0);
    for (const auto& slot : chain_layout(type)) {
        std::size_t height = 0;
        for (std::size_t t = 0; t < slot.size; ++t)
            if (sgn(coords[slot.offset + t]) != 0) {
                height = slot.size - t;
                break;
            }
        auto& h = raw[slot.eigen_index][slot.column];
        h = std::max(h, height);
    }

    OrbitReport report;
    for (std::size_t e = 0; e < incs.size(); ++e) {
        auto h = raw[e];
        const auto& deltas = incs[e].deltas;
        for (std::size_t k = 1; k < h.size(); ++k) h[k] = std::max(h[k], h[k - 1]);
        for (std::size_t k = h.size(); k-- > 1;)
            if (h[k] >= deltas[k]) h[k - 1] = std::max(h[k - 1], h[k] - deltas[k]);
        report.label.parts.push_back(differences(h));
        report.heights.push_back(std::move(h));
    }
    report.orbit_dimension = orbit_dimension(lattice, report.label);
    report.closure_dimension = report.orbit_dimension;
    return report;
}

OrbitReport classify_vector(const JordanBasis& basis, const Matrix& v) {
    return classify_chain_coords(basis.type, coords_in_jordan_basis(basis, v));
}

Matrix representative(const JordanType& type, const OrbitLabel& label) {
    const OrbitLattice lattice(type);
    lattice.check(label);
    Matrix v(type.dimension(), 1);
    std::vector<std::vector<std::size_t>> heights;
    for (const auto& part : label.parts) heights.push_back(partial_sums(part));
    for (const auto& slot : chain_layout(type)) {
        if (slot.index != 0) continue;
        const std::size_t h = heights[slot.eigen_index][slot.column];
        if (h > 0) v[slot.offset + slot.size - h] = 1;
    }
    return v;
}

std::vector<Matrix> closure_basis(const JordanType& type, const OrbitLabel& label) {
    const OrbitLattice lattice(type);
    lattice.check(label);
    std::vector<std::vector<std::size_t>> heights;
    for (const auto& part : label.parts) heights.push_back(partial_sums(part));
    std::vector<Matrix> basis;
    const std::size_t n = type.dimension();
    for (const auto& slot : chain_layout(type)) {
        const std::size_t h = heights[slot.eigen_index][slot.column];
        for (std::size_t t = slot.size - h; t < slot.size; ++t) {
            Matrix e(n, 1);
            e[slot.offset + t] = 1;
            basis.push_back(std::move(e));
        }
    }
    return basis;
}

SolutionComparison same_solution_class(const JordanBasis& basis, const Matrix& v1, const Matrix& v2) {
    SolutionComparison c{false, classify_vector(basis, v1), classify_vector(basis, v2)};
    c.equivalent = c.first.label == c.second.label;
    return c;
}

}  // namespace centorb
