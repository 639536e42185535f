#include "centorb/centralizer.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace centorb {

std::vector<CentralizerOperator> centralizer_operators(const JordanType& type) {
    const auto layout = chain_layout(type);
    const std::size_t n = type.dimension();
    std::vector<CentralizerOperator> ops;
    for (const auto& src : layout)
        for (const auto& dst : layout) {
            if (src.eigen_index != dst.eigen_index) continue;  // Hom between eigenspaces is zero
            const std::size_t i = src.size;
            const std::size_t i2 = dst.size;
            const std::size_t first = i2 > i ? i2 - i : 0;
            for (std::size_t shift = first; shift < i2; ++shift) {
                Matrix e(n, n);
                for (std::size_t a = 0; a < i && a + shift < i2; ++a) e(dst.offset + a + shift, src.offset + a) = 1;
                ops.push_back(CentralizerOperator{src, dst, shift, std::move(e)});
            }
        }
    return ops;
}

CentralizerBasis centralizer_basis(const JordanBasis& basis) {
    CentralizerBasis cb;
    cb.basis = &basis;
    cb.operators = centralizer_operators(basis.type);
    for (auto& op : cb.operators) op.matrix = basis.change * op.matrix * basis.change_inverse;
    return cb;
}

std::size_t centralizer_dimension(const JordanType& type) {
    std::size_t total = 0;
    for (const auto& [_, list] : type.blocks())
        for (const auto& a : list)
            for (const auto& b : list) total += std::min(a.size, b.size) * a.multiplicity * b.multiplicity;
    return total;
}

Matrix sample_invertible(const std::vector<CentralizerOperator>& operators, std::size_t dimension,
                         std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> nonzero(1, 18);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix u(dimension, dimension);
        for (const auto& op : operators) {
            const bool identity_part = op.shift == 0 && op.source.offset == op.target.offset;
            int c = identity_part ? nonzero(rng) : coeff(rng);
            if (identity_part && c > 9) c = 9 - c;  // map 10..18 onto -1..-9
            if (c != 0) u = u + Rational(c) * op.matrix;
        }
        if (rank(u) == dimension) return u;
    }
    throw std::runtime_error("no invertible centralizer element found in 64 draws");
}

Matrix sample_invertible(const CentralizerBasis& cb, std::uint64_t seed) {
    return sample_invertible(cb.operators, cb.basis->dimension(), seed);
}

}  // namespace centorb
