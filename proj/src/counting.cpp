#include "centorb/counting.hpp"

#include <algorithm>
#include <sstream>

namespace centorb {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::geometric(std::size_t terms, std::size_t step) {
    if (terms == 0) return {};
    std::vector<Integer> c(step * (terms - 1) + 1, Integer(0));
    for (std::size_t i = 0; i < terms; ++i) c[i * step] += 1;
    return IntPolynomial(std::move(c));
}

Integer IntPolynomial::coefficient(std::size_t degree) const {
    return degree < coeffs_.size() ? coeffs_[degree] : Integer(0);
}

Integer IntPolynomial::eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool IntPolynomial::palindromic() const { return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin()); }

std::string IntPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || coeffs_[i] != 1) os << coeffs_[i].get_str();
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial gen_function_eigenvalue(const IncrementSequence& inc) {
    IntPolynomial f = IntPolynomial::one();
    for (std::size_t k = 0; k < inc.length(); ++k) f = f * IntPolynomial::geometric(inc.deltas[k] + 1, inc.tail_sums[k]);
    return f;
}

IntPolynomial gen_function(const JordanType& type) {
    IntPolynomial f = IntPolynomial::one();
    for (const auto& inc : increments_from_type(type)) f = f * gen_function_eigenvalue(inc);
    return f;
}

Integer orbit_count(const JordanType& type) { return OrbitLattice(type).size(); }

}  // namespace centorb
