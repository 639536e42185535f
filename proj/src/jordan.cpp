#include "centorb/jordan.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "centorb/error.hpp"

namespace centorb {

// ---------------------------------------------------------------------------
// Eigenvalue / JordanType

Eigenvalue Eigenvalue::parse(const std::string& text) {
    try {
        return Eigenvalue(parse_rational(text));
    } catch (const InputError&) {
        if (text.empty()) throw InputError("empty eigenvalue label");
        return Eigenvalue(text);
    }
}

const Rational& Eigenvalue::rational() const {
    if (!is_rational()) throw InputError("eigenvalue " + str() + " is symbolic, not a rational number");
    return std::get<Rational>(value_);
}

std::string Eigenvalue::str() const {
    if (is_rational()) return to_string(std::get<Rational>(value_));
    return std::get<std::string>(value_);
}

bool operator==(const Eigenvalue& a, const Eigenvalue& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Eigenvalue& a, const Eigenvalue& b) {
    if (a.is_rational() != b.is_rational())
        return a.is_rational() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_rational()) {
        const int c = cmp(std::get<Rational>(a.value_), std::get<Rational>(b.value_));
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    return std::get<std::string>(a.value_) <=> std::get<std::string>(b.value_);
}

JordanType& JordanType::add(const Eigenvalue& eigenvalue, std::size_t size, std::size_t multiplicity) {
    if (size == 0) throw InputError("Jordan block size must be >= 1");
    if (multiplicity == 0) throw InputError("Jordan block multiplicity must be >= 1");
    auto& list = blocks_[eigenvalue];
    auto it = std::lower_bound(list.begin(), list.end(), size,
                               [](const BlockCount& b, std::size_t s) { return b.size < s; });
    if (it != list.end() && it->size == size)
        it->multiplicity += multiplicity;
    else
        list.insert(it, BlockCount{size, multiplicity});
    return *this;
}

std::vector<Eigenvalue> JordanType::eigenvalues() const {
    std::vector<Eigenvalue> out;
    for (const auto& [ev, _] : blocks_) out.push_back(ev);
    return out;
}

const std::vector<BlockCount>& JordanType::blocks_of(const Eigenvalue& eigenvalue) const {
    auto it = blocks_.find(eigenvalue);
    if (it == blocks_.end()) throw InvalidLabel("eigenvalue " + eigenvalue.str() + " not in Jordan type");
    return it->second;
}

std::size_t JordanType::dimension() const {
    std::size_t n = 0;
    for (const auto& [_, list] : blocks_)
        for (const auto& b : list) n += b.size * b.multiplicity;
    return n;
}

bool JordanType::all_rational() const {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const auto& kv) { return kv.first.is_rational(); });
}

Matrix JordanType::jordan_matrix() const {
    std::vector<Matrix> blocks;
    for (const auto& [ev, list] : blocks_)
        for (const auto& b : list)
            for (std::size_t j = 0; j < b.multiplicity; ++j) blocks.push_back(jordan_block(ev.rational(), b.size));
    return direct_sum(blocks);
}

std::string JordanType::str() const {
    std::ostringstream os;
    os << '{';
    bool first_ev = true;
    for (const auto& [ev, list] : blocks_) {
        os << (first_ev ? "" : ", ") << ev.str() << ": [";
        first_ev = false;
        for (std::size_t k = 0; k < list.size(); ++k)
            os << (k ? ", " : "") << '[' << list[k].size << ", " << list[k].multiplicity << ']';
        os << ']';
    }
    os << '}';
    return os.str();
}

std::vector<ChainSlot> chain_layout(const JordanType& type) {
    std::vector<ChainSlot> slots;
    std::size_t offset = 0;
    std::size_t e = 0;
    for (const auto& [_, list] : type.blocks()) {
        for (std::size_t col = 0; col < list.size(); ++col)
            for (std::size_t j = 0; j < list[col].multiplicity; ++j) {
                slots.push_back(ChainSlot{e, col, list[col].size, j, offset});
                offset += list[col].size;
            }
        ++e;
    }
    return slots;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial and its rational roots

namespace {

/// Dense polynomial over Q, low degree first, no trailing zeros.
struct QPoly {
    std::vector<Rational> c;

    void trim() {
        while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(c.size()) - 1; }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    QPoly derivative() const {
        QPoly d;
        for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(Rational(static_cast<long>(i)) * c[i]);
        d.trim();
        return d;
    }
};

/// Quotient and remainder of a by b (b nonzero).
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    QPoly q;
    if (a.degree() < b.degree()) return {q, a};
    q.c.assign(a.c.size() - b.c.size() + 1, Rational(0));
    const Rational lead = b.c.back();
    while (!a.zero() && a.degree() >= b.degree()) {
        const std::size_t shift = a.c.size() - b.c.size();
        const Rational f = a.c.back() / lead;
        q.c[shift] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i) a.c[shift + i] -= f * b.c[i];
        a.c.pop_back();
        a.trim();
    }
    q.trim();
    return {q, a};
}

QPoly monic(QPoly p) {
    if (p.zero()) return p;
    const Rational lead = p.c.back();
    for (auto& x : p.c) x /= lead;
    return p;
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

int sign_changes(const std::vector<QPoly>& sturm, const Rational& x) {
    int changes = 0;
    int last = 0;
    for (const auto& p : sturm) {
        const int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

/// Integer roots of a monic square-free polynomial with integer coefficients.
/// Returns nullopt if some root is not an integer (irrational or complex).
std::optional<std::vector<Integer>> integer_roots(const QPoly& h) {
    std::vector<QPoly> sturm{h, h.derivative()};
    while (!sturm.back().zero() && sturm.back().degree() > 0) {
        auto r = divmod(sturm[sturm.size() - 2], sturm.back()).second;
        for (auto& x : r.c) x = -x;
        if (r.zero()) break;
        sturm.push_back(std::move(r));
    }

    Integer bound = 1;
    for (std::size_t i = 0; i + 1 < h.c.size(); ++i) {
        Integer a = abs(h.c[i].get_num());
        if (a > bound) bound = a;
    }
    bound += 1;

    auto count = [&](const Integer& lo, const Integer& hi) {  // roots in (lo, hi]
        return sign_changes(sturm, Rational(lo)) - sign_changes(sturm, Rational(hi));
    };

    const Integer lo0 = -bound;
    const Integer hi0 = bound;
    if (count(lo0, hi0) != h.degree()) return std::nullopt;  // complex roots

    std::vector<Integer> roots;
    std::vector<std::pair<Integer, Integer>> stack{{lo0, hi0}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        const int n = count(lo, hi);
        if (n == 0) continue;
        if (hi - lo == 1) {
            if (sgn(h.eval(Rational(hi))) != 0) return std::nullopt;
            roots.push_back(hi);
            continue;
        }
        Integer mid = lo + (hi - lo) / 2;
        stack.emplace_back(mid, hi);
        stack.emplace_back(lo, mid);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Integer lcm_of_denominators(const std::vector<Rational>& c) {
    Integer l = 1;
    for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

}  // namespace

std::vector<Rational> characteristic_polynomial(const Matrix& t) {
    if (!t.square()) throw DimensionError("characteristic polynomial of non-square matrix " + t.shape());
    // Faddeev-LeVerrier: exact over Q.
    const std::size_t n = t.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix m = Matrix::zero(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = t * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        const Matrix tm = t * m;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += tm(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return c;
}

std::vector<std::pair<Rational, std::size_t>> rational_eigenvalues(const Matrix& t) {
    const auto chi = characteristic_polynomial(t);
    const std::size_t n = t.rows();
    QPoly p{chi};
    p.trim();
    const QPoly square_free = divmod(p, gcd(p, p.derivative())).first;
    const QPoly g = monic(square_free);

    // Substituting x = y / d makes g monic with integer coefficients, so
    // its rational roots are integers.
    const Integer d = lcm_of_denominators(g.c);
    QPoly h;
    h.c.resize(g.c.size());
    const std::size_t deg = g.c.size() - 1;
    Integer dpow = 1;
    for (std::size_t k = 0; k <= deg; ++k) {
        h.c[deg - k] = g.c[deg - k] * Rational(dpow);
        dpow *= d;
    }

    auto fail = [&] {
        return NonSplittingCharPoly(
            "characteristic polynomial does not split over the rationals; supply the operator as a "
            "Jordan type (eigenvalue labels with block sizes) instead of a matrix");
    };
    auto roots = integer_roots(h);
    if (!roots) throw fail();

    std::vector<std::pair<Rational, std::size_t>> out;
    std::size_t total = 0;
    for (const auto& r : *roots) {
        Rational lambda(r, d);
        lambda.canonicalize();
        const QPoly linear{{-lambda, Rational(1)}};
        std::size_t mult = 0;
        QPoly rest = p;
        while (true) {
            auto [q, rem] = divmod(rest, linear);
            if (!rem.zero()) break;
            rest = std::move(q);
            ++mult;
        }
        out.emplace_back(lambda, mult);
        total += mult;
    }
    if (total != n) throw fail();
    return out;
}

// ---------------------------------------------------------------------------
// Jordan type and chains

namespace {

struct EigenData {
    Rational lambda;
    Matrix nilpotent;               // T - lambda I
    std::vector<std::size_t> ranks; // ranks[k] = rank N^k, until stable
    std::vector<Matrix> powers;     // powers[k] = N^k
};

EigenData analyse_eigenvalue(const Matrix& t, const Rational& lambda, std::size_t algebraic) {
    const std::size_t n = t.rows();
    EigenData d{lambda, t - lambda * Matrix::identity(n), {n}, {Matrix::identity(n)}};
    while (true) {
        d.powers.push_back(d.powers.back() * d.nilpotent);
        d.ranks.push_back(rank(d.powers.back()));
        if (d.ranks.back() == d.ranks[d.ranks.size() - 2]) break;
    }
    if (n - d.ranks.back() != algebraic)
        throw std::logic_error("generalized eigenspace dimension disagrees with algebraic multiplicity");
    return d;
}

/// Block counts from the rank sequence: m_i = r_{i-1} - 2 r_i + r_{i+1}.
std::vector<BlockCount> blocks_from_ranks(const std::vector<std::size_t>& r) {
    std::vector<BlockCount> out;
    for (std::size_t i = 1; i < r.size(); ++i) {
        const std::size_t next = i + 1 < r.size() ? r[i + 1] : r.back();
        const long m = static_cast<long>(r[i - 1]) - 2 * static_cast<long>(r[i]) + static_cast<long>(next);
        if (m < 0) throw std::logic_error("negative block count in rank recurrence");
        if (m > 0) out.push_back(BlockCount{i, static_cast<std::size_t>(m)});
    }
    return out;
}

}  // namespace

JordanType jordan_type(const Matrix& t) {
    JordanType type;
    for (const auto& [lambda, mult] : rational_eigenvalues(t)) {
        const EigenData d = analyse_eigenvalue(t, lambda, mult);
        for (const auto& b : blocks_from_ranks(d.ranks)) type.add(Eigenvalue(lambda), b.size, b.multiplicity);
    }
    return type;
}

JordanBasis jordan_basis(const Matrix& t) {
    const std::size_t n = t.rows();
    JordanBasis basis;
    basis.source = t;

    for (const auto& [lambda, mult] : rational_eigenvalues(t)) {
        const EigenData d = analyse_eigenvalue(t, lambda, mult);
        const auto counts = blocks_from_ranks(d.ranks);
        for (const auto& b : counts) basis.type.add(Eigenvalue(lambda), b.size, b.multiplicity);

        const std::size_t top = d.ranks.size() - 2;  // largest block size
        std::vector<std::vector<Matrix>> kernels;    // kernels[k] = basis of ker N^k
        for (std::size_t k = 0; k <= top; ++k) kernels.push_back(kernel_basis(d.powers[k]));

        // generators[s] = chain tops of size s, in selection order.
        std::vector<std::vector<Matrix>> generators(top + 1);
        for (std::size_t s = top; s >= 1; --s) {
            std::vector<Matrix> spanning = kernels[s - 1];
            for (std::size_t big = s + 1; big <= top; ++big)
                for (const auto& g : generators[big]) spanning.push_back(d.powers[big - s] * g);
            std::size_t current = span_dimension(spanning, n);
            for (const auto& candidate : kernels[s]) {
                spanning.push_back(candidate);
                const std::size_t r = span_dimension(spanning, n);
                if (r > current) {
                    generators[s].push_back(candidate);
                    current = r;
                } else {
                    spanning.pop_back();
                }
            }
        }

        for (const auto& b : counts)
            if (generators[b.size].size() != b.multiplicity)
                throw std::logic_error("chain construction found the wrong number of generators");

        for (std::size_t s = 1; s <= top; ++s)
            for (const auto& g : generators[s]) {
                Chain chain;
                chain.eigenvalue = lambda;
                chain.vectors.push_back(g);
                for (std::size_t k = 1; k < s; ++k) chain.vectors.push_back(d.nilpotent * chain.vectors.back());
                basis.chains.push_back(std::move(chain));
            }
    }

    const auto layout = chain_layout(basis.type);
    if (layout.size() != basis.chains.size()) throw std::logic_error("chain layout mismatch");
    std::vector<Matrix> columns;
    for (std::size_t c = 0; c < layout.size(); ++c) {
        basis.chains[c].slot = layout[c];
        for (const auto& v : basis.chains[c].vectors) columns.push_back(v);
    }
    basis.change = Matrix::from_columns(columns, n);
    basis.change_inverse = inverse(basis.change);
    if (basis.change_inverse * t * basis.change != basis.type.jordan_matrix())
        throw std::logic_error("Jordan basis does not reproduce the Jordan form");
    return basis;
}

Matrix coords_in_jordan_basis(const JordanBasis& basis, const Matrix& v) {
    if (v.rows() != basis.dimension() || v.cols() != 1)
        throw DimensionError("vector of shape " + v.shape() + " for operator of dimension " +
                             std::to_string(basis.dimension()));
    return basis.change_inverse * v;
}

}  // namespace centorb
