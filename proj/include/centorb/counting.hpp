#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "centorb/jordan.hpp"
#include "centorb/lattice.hpp"
#include "centorb/rational.hpp"

namespace centorb {

/// Polynomial with nonnegative arbitrary-precision integer coefficients,
/// coefficient i of x^i. No trailing zeros; the zero polynomial is empty.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coefficients);

    static IntPolynomial one() { return IntPolynomial({Integer(1)}); }
    /// 1 + x^step + x^(2 step) + ... + x^(terms-1)*step
    static IntPolynomial geometric(std::size_t terms, std::size_t step);

    const std::vector<Integer>& coefficients() const { return coeffs_; }
    Integer coefficient(std::size_t degree) const;
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Integer eval(const Integer& x) const;
    bool palindromic() const;

    std::string str() const;

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// prod_k (1 + x^M_k + x^(2 M_k) + ... + x^(Delta_k M_k))
IntPolynomial gen_function_eigenvalue(const IncrementSequence& inc);

/// Product over eigenvalues; coefficient n counts orbits of dimension n.
IntPolynomial gen_function(const JordanType& type);

/// prod_lambda prod_k (1 + Delta_k)
Integer orbit_count(const JordanType& type);

}  // namespace centorb
