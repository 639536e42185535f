#include "centorb/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "centorb/classify.hpp"
#include "centorb/centralizer.hpp"
#include "centorb/error.hpp"

namespace centorb::oracle {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

struct Reduced {
    std::vector<std::uint32_t> a;  // rows x cols, row-major, fully reduced
    std::vector<std::size_t> pivots;
};

Reduced rref_mod(std::vector<std::uint32_t> a, std::size_t rows, std::size_t cols, std::uint64_t p) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    auto at = [&](std::size_t r, std::size_t c) -> std::uint32_t& { return a[r * cols + c]; };
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t piv = row;
        while (piv < rows && at(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(row, j));
        const std::uint64_t inv = inv_mod(at(row, c), p);
        for (std::size_t j = c; j < cols; ++j) at(row, j) = static_cast<std::uint32_t>(at(row, j) * inv % p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || at(r, c) == 0) continue;
            const std::uint64_t f = at(r, c);
            for (std::size_t j = c; j < cols; ++j)
                at(r, j) = static_cast<std::uint32_t>((at(r, j) + p * p - f * at(row, j)) % p);
        }
        pivots.push_back(c);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

/// Whether vector u (length n) lies in the row space of echelon basis w.
bool in_span(const Subspace& w, std::vector<std::uint64_t> u) {
    const std::uint64_t p = w.modulus();
    for (std::size_t r = 0; r < w.rows(); ++r) {
        std::size_t piv = 0;
        while (w(r, piv) == 0) ++piv;
        const std::uint64_t coef = u[piv];
        if (coef == 0) continue;
        for (std::size_t j = 0; j < w.cols(); ++j) u[j] = (u[j] + p * p - coef * w(r, j)) % p;
    }
    return std::all_of(u.begin(), u.end(), [](std::uint64_t x) { return x == 0; });
}

bool invariant_under(const Subspace& w, const std::vector<PrimeFieldMatrix>& ops) {
    const std::uint64_t p = w.modulus();
    const std::size_t n = w.cols();
    for (const auto& u : ops)
        for (std::size_t r = 0; r < w.rows(); ++r) {
            std::vector<std::uint64_t> image(n, 0);
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t acc = 0;
                for (std::size_t j = 0; j < n; ++j) acc = (acc + std::uint64_t(u(i, j)) * w(r, j)) % p;
                image[i] = acc;
            }
            if (!in_span(w, std::move(image))) return false;
        }
    return true;
}

std::string describe(const Subspace& s) {
    std::ostringstream os;
    os << "span{";
    for (std::size_t r = 0; r < s.rows(); ++r) {
        os << (r ? ", " : "") << '(';
        for (std::size_t c = 0; c < s.cols(); ++c) os << (c ? "," : "") << s(r, c);
        os << ')';
    }
    os << '}';
    return os.str();
}

}  // namespace

PrimeFieldMatrix::PrimeFieldMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

PrimeFieldMatrix PrimeFieldMatrix::row_reduced() const {
    auto red = rref_mod(entries_, rows_, cols_, p_);
    PrimeFieldMatrix out(p_, red.pivots.size(), cols_);
    std::copy_n(red.a.begin(), red.pivots.size() * cols_, out.entries_.begin());
    return out;
}

PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
    if (a.cols_ != b.rows_ || a.p_ != b.p_) throw DimensionError("incompatible matrices over F_p");
    PrimeFieldMatrix c(a.p_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < a.cols_; ++k) acc = (acc + std::uint64_t(a(i, k)) * b(k, j)) % a.p_;
            c.set(i, j, acc);
        }
    return c;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Integer subspace_count(std::uint32_t p, std::size_t n) {
    // Gaussian binomials via [n, k] = [n-1, k-1] + p^k [n-1, k].
    std::vector<Integer> row{Integer(1)};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<Integer> next(m + 1);
        Integer pk = 1;
        for (std::size_t k = 0; k <= m; ++k) {
            const Integer left = k >= 1 ? row[k - 1] : Integer(0);
            const Integer right = k < m ? row[k] : Integer(0);
            next[k] = left + pk * right;
            pk *= p;
        }
        row = std::move(next);
    }
    Integer total = 0;
    for (const auto& x : row) total += x;
    return total;
}

void for_each_subspace(std::uint32_t p, std::size_t n, const std::function<void(const Subspace&)>& visit,
                       std::size_t cap) {
    if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
    const Integer total = subspace_count(p, n);
    if (total > Integer(static_cast<unsigned long>(cap)))
        throw CapExceeded("subspace enumeration over F_" + std::to_string(p) + "^" + std::to_string(n),
                          total.fits_ulong_p() ? total.get_ui() : SIZE_MAX, cap);

    for (std::size_t k = 0; k <= n; ++k) {
        // Pivot sets as k-combinations of columns, lexicographic.
        std::vector<std::size_t> piv(k);
        for (std::size_t i = 0; i < k; ++i) piv[i] = i;
        while (true) {
            std::vector<bool> is_pivot(n, false);
            for (auto c : piv) is_pivot[c] = true;
            std::vector<std::pair<std::size_t, std::size_t>> free;
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = piv[r] + 1; c < n; ++c)
                    if (!is_pivot[c]) free.emplace_back(r, c);

            Subspace s(p, k, n);
            for (std::size_t r = 0; r < k; ++r) s.set(r, piv[r], 1);
            std::vector<std::uint32_t> digits(free.size(), 0);
            while (true) {
                for (std::size_t f = 0; f < free.size(); ++f) s.set(free[f].first, free[f].second, digits[f]);
                visit(s);
                std::size_t f = free.size();
                while (f > 0 && digits[f - 1] == p - 1) digits[--f] = 0;
                if (f == 0) break;
                ++digits[f - 1];
            }

            // next combination
            std::size_t i = k;
            while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++piv[i - 1];
            for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
}

std::vector<Subspace> all_subspaces(std::uint32_t p, std::size_t n, std::size_t cap) {
    std::vector<Subspace> out;
    for_each_subspace(p, n, [&](const Subspace& s) { out.push_back(s); }, cap);
    return out;
}

std::uint32_t reduce_mod(const Rational& q, std::uint32_t p) {
    const Integer den = q.get_den();
    if (den % p == 0)
        throw InputError("eigenvalue " + to_string(q) + " is not representable mod " + std::to_string(p));
    Integer num = q.get_num() % p;
    if (num < 0) num += p;
    const std::uint64_t d = Integer(den % p).get_ui();
    return static_cast<std::uint32_t>(num.get_ui() * inv_mod(d, p) % p);
}

PrimeFieldMatrix jordan_matrix_mod(const JordanType& type, std::uint32_t p) {
    if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
    const std::size_t n = type.dimension();
    PrimeFieldMatrix t(p, n, n);
    std::map<std::uint32_t, std::string> seen;
    std::vector<std::uint32_t> residues;
    for (const auto& ev : type.eigenvalues()) {
        if (!ev.is_rational())
            throw InputError("symbolic eigenvalue " + ev.str() + " has no residue mod " + std::to_string(p));
        const auto r = reduce_mod(ev.rational(), p);
        if (auto it = seen.find(r); it != seen.end())
            throw InputError("eigenvalues " + it->second + " and " + ev.str() + " coincide mod " + std::to_string(p));
        seen.emplace(r, ev.str());
        residues.push_back(r);
    }
    for (const auto& slot : chain_layout(type))
        for (std::size_t a = 0; a < slot.size; ++a) {
            t.set(slot.offset + a, slot.offset + a, residues[slot.eigen_index]);
            if (a + 1 < slot.size) t.set(slot.offset + a + 1, slot.offset + a, 1);
        }
    return t;
}

std::vector<PrimeFieldMatrix> commutant_basis(const PrimeFieldMatrix& t) {
    const std::size_t n = t.rows();
    const std::uint64_t p = t.modulus();
    const std::size_t vars = n * n;
    // Row (a, b) of the system encodes (U T - T U)_{ab} = 0; unknown u_{ij} sits at i*n + j.
    std::vector<std::uint32_t> sys(vars * vars, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t row = a * n + b;
            for (std::size_t c = 0; c < n; ++c) {
                auto& x = sys[row * vars + a * n + c];
                x = static_cast<std::uint32_t>((x + t(c, b)) % p);
                auto& y = sys[row * vars + c * n + b];
                y = static_cast<std::uint32_t>((y + p - t(a, c)) % p);
            }
        }
    const auto red = rref_mod(std::move(sys), vars, vars, p);
    std::vector<bool> is_pivot(vars, false);
    for (auto c : red.pivots) is_pivot[c] = true;
    std::vector<PrimeFieldMatrix> basis;
    for (std::size_t f = 0; f < vars; ++f) {
        if (is_pivot[f]) continue;
        PrimeFieldMatrix u(t.modulus(), n, n);
        u.set(f / n, f % n, 1);
        for (std::size_t r = 0; r < red.pivots.size(); ++r) {
            const std::size_t v = red.pivots[r];
            u.set(v / n, v % n, (p - red.a[r * vars + f]) % p);
        }
        basis.push_back(std::move(u));
    }
    return basis;
}

std::vector<Subspace> invariant_subspaces_bruteforce(const JordanType& type, std::uint32_t p, std::size_t cap) {
    const auto ops = commutant_basis(jordan_matrix_mod(type, p));
    std::vector<Subspace> out;
    for_each_subspace(p, type.dimension(), [&](const Subspace& s) {
        if (invariant_under(s, ops)) out.push_back(s);
    }, cap);
    std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
        if (a.rows() != b.rows()) return a.rows() < b.rows();
        return a.entries() < b.entries();
    });
    return out;
}

Verdict compare_with_prediction(const JordanType& type, std::uint32_t p, std::size_t cap) {
    return compare_with_prediction(type, p, OrbitLattice(type).enumerate(), cap);
}

Verdict compare_with_prediction(const JordanType& type, std::uint32_t p, const std::vector<OrbitLabel>& predicted,
                                std::size_t cap) {
    Verdict v;
    v.prime = p;
    v.dimension = type.dimension();
    const auto t = jordan_matrix_mod(type, p);
    const auto ops = commutant_basis(t);
    v.commutant_dimension = ops.size();
    v.centralizer_dimension = centralizer_dimension(type);
    v.subspaces_scanned = subspace_count(p, v.dimension).get_ui();

    const auto brute = invariant_subspaces_bruteforce(type, p, cap);
    v.invariant_count = brute.size();
    v.predicted_count = predicted.size();
    v.invariant_dimensions.assign(v.dimension + 1, 0);
    for (const auto& s : brute) ++v.invariant_dimensions[s.rows()];

    auto fail = [&](std::string why) {
        if (!v.first_mismatch) v.first_mismatch = std::move(why);
    };

    if (v.commutant_dimension != v.centralizer_dimension)
        fail("commutant over F_" + std::to_string(p) + " has dimension " + std::to_string(v.commutant_dimension) +
             ", centralizer formula gives " + std::to_string(v.centralizer_dimension));
    if (brute.size() != predicted.size())
        fail("brute force found " + std::to_string(brute.size()) + " invariant subspaces, prediction has " +
             std::to_string(predicted.size()));

    const OrbitLattice lattice(type);
    const std::set<Subspace> brute_set(brute.begin(), brute.end());
    std::map<Subspace, std::string> matched;
    for (const auto& label : predicted) {
        const std::string name = lattice.format(label);
        Subspace s(p, 0, v.dimension);
        {
            const auto vectors = closure_basis(type, label);
            Subspace raw(p, vectors.size(), v.dimension);
            for (std::size_t r = 0; r < vectors.size(); ++r)
                for (std::size_t c = 0; c < v.dimension; ++c) raw.set(r, c, reduce_mod(vectors[r][c], p));
            s = raw.row_reduced();
        }
        if (!brute_set.count(s)) {
            fail("predicted subspace for label " + name + " = " + describe(s) + " is not invariant");
            continue;
        }
        if (auto [it, inserted] = matched.emplace(s, name); !inserted)
            fail("labels " + it->second + " and " + name + " predict the same subspace " + describe(s));
        const std::size_t dim = orbit_dimension(lattice, label);
        if (s.rows() != dim)
            fail("label " + name + " predicts dimension " + std::to_string(dim) + " but its subspace has dimension " +
                 std::to_string(s.rows()));
    }
    for (const auto& s : brute)
        if (!matched.count(s)) {
            fail("invariant subspace " + describe(s) + " has no predicted label");
            break;
        }

    v.pass = !v.first_mismatch.has_value();
    return v;
}

}  // namespace centorb::oracle
