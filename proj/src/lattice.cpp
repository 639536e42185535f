#include "centorb/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "centorb/error.hpp"

namespace centorb {

std::size_t IncrementSequence::weighted(const std::vector<std::size_t>& x) const {
    std::size_t total = 0;
    for (std::size_t k = 0; k < x.size() && k < tail_sums.size(); ++k) total += x[k] * tail_sums[k];
    return total;
}

std::vector<IncrementSequence> increments_from_type(const JordanType& type) {
    std::vector<IncrementSequence> out;
    for (const auto& [ev, list] : type.blocks()) {
        IncrementSequence seq{ev, {}, {}, {}, {}};
        std::size_t previous = 0;
        for (const auto& b : list) {
            seq.deltas.push_back(b.size - previous);
            seq.sizes.push_back(b.size);
            seq.multiplicities.push_back(b.multiplicity);
            previous = b.size;
        }
        seq.tail_sums.resize(list.size());
        std::size_t tail = 0;
        for (std::size_t k = list.size(); k-- > 0;) {
            tail += list[k].multiplicity;
            seq.tail_sums[k] = tail;
        }
        out.push_back(std::move(seq));
    }
    return out;
}

std::vector<std::size_t> partial_sums(const std::vector<std::size_t>& delta) {
    std::vector<std::size_t> h(delta.size());
    std::size_t acc = 0;
    for (std::size_t k = 0; k < delta.size(); ++k) h[k] = acc += delta[k];
    return h;
}

std::vector<std::size_t> differences(const std::vector<std::size_t>& heights) {
    std::vector<std::size_t> d(heights.size());
    for (std::size_t k = 0; k < heights.size(); ++k) {
        const std::size_t prev = k ? heights[k - 1] : 0;
        if (heights[k] < prev) throw std::logic_error("heights must be nondecreasing");
        d[k] = heights[k] - prev;
    }
    return d;
}

OrbitLattice::OrbitLattice(const JordanType& type) : increments_(increments_from_type(type)) {}

bool OrbitLattice::valid(const OrbitLabel& label) const {
    if (label.parts.size() != increments_.size()) return false;
    for (std::size_t e = 0; e < increments_.size(); ++e) {
        const auto& part = label.parts[e];
        const auto& deltas = increments_[e].deltas;
        if (part.size() != deltas.size()) return false;
        for (std::size_t k = 0; k < part.size(); ++k)
            if (part[k] > deltas[k]) return false;
    }
    return true;
}

void OrbitLattice::check(const OrbitLabel& label) const {
    if (label.parts.size() != increments_.size())
        throw InvalidLabel("label has " + std::to_string(label.parts.size()) + " eigenvalue parts, expected " +
                           std::to_string(increments_.size()));
    for (std::size_t e = 0; e < increments_.size(); ++e) {
        const auto& part = label.parts[e];
        const auto& seq = increments_[e];
        if (part.size() != seq.deltas.size())
            throw InvalidLabel("label part for eigenvalue " + seq.eigenvalue.str() + " has length " +
                               std::to_string(part.size()) + ", expected " + std::to_string(seq.deltas.size()));
        for (std::size_t k = 0; k < part.size(); ++k)
            if (part[k] > seq.deltas[k])
                throw InvalidLabel("label entry " + std::to_string(k + 1) + " for eigenvalue " + seq.eigenvalue.str() +
                                   " is " + std::to_string(part[k]) + ", exceeds increment " +
                                   std::to_string(seq.deltas[k]));
    }
}

void OrbitLattice::check_compatible(const OrbitLabel& a, const OrbitLabel& b) const {
    check(a);
    check(b);
}

OrbitLabel OrbitLattice::bottom() const {
    OrbitLabel l;
    for (const auto& seq : increments_) l.parts.emplace_back(seq.length(), 0);
    return l;
}

OrbitLabel OrbitLattice::top() const {
    OrbitLabel l;
    for (const auto& seq : increments_) l.parts.push_back(seq.deltas);
    return l;
}

bool OrbitLattice::leq(const OrbitLabel& a, const OrbitLabel& b) const {
    check_compatible(a, b);
    for (std::size_t e = 0; e < a.parts.size(); ++e) {
        std::size_t ha = 0;
        std::size_t hb = 0;
        for (std::size_t k = 0; k < a.parts[e].size(); ++k) {
            ha += a.parts[e][k];
            hb += b.parts[e][k];
            if (ha > hb) return false;
        }
    }
    return true;
}

template <typename Pick>
OrbitLabel OrbitLattice::combine(const OrbitLabel& a, const OrbitLabel& b, Pick pick) const {
    check_compatible(a, b);
    OrbitLabel out;
    for (std::size_t e = 0; e < a.parts.size(); ++e) {
        const auto ha = partial_sums(a.parts[e]);
        const auto hb = partial_sums(b.parts[e]);
        std::vector<std::size_t> h(ha.size());
        for (std::size_t k = 0; k < h.size(); ++k) h[k] = pick(ha[k], hb[k]);
        out.parts.push_back(differences(h));
    }
    if (!valid(out)) throw std::logic_error("lattice operation left the label set");
    return out;
}

OrbitLabel OrbitLattice::meet(const OrbitLabel& a, const OrbitLabel& b) const {
    return combine(a, b, [](std::size_t x, std::size_t y) { return std::min(x, y); });
}

OrbitLabel OrbitLattice::join(const OrbitLabel& a, const OrbitLabel& b) const {
    return combine(a, b, [](std::size_t x, std::size_t y) { return std::max(x, y); });
}

OrbitLabel OrbitLattice::dual(const OrbitLabel& a) const {
    check(a);
    OrbitLabel out;
    for (std::size_t e = 0; e < a.parts.size(); ++e) {
        const auto& seq = increments_[e];
        const auto h = partial_sums(a.parts[e]);
        std::vector<std::size_t> reflected(h.size());
        for (std::size_t k = 0; k < h.size(); ++k) reflected[k] = seq.sizes[k] - h[k];
        out.parts.push_back(differences(reflected));
    }
    return out;
}

Integer OrbitLattice::size() const {
    Integer n = 1;
    for (const auto& seq : increments_)
        for (auto d : seq.deltas) n *= static_cast<unsigned long>(d + 1);
    return n;
}

std::vector<OrbitLabel> OrbitLattice::enumerate(std::size_t cap) const {
    const Integer count = size();
    if (count > Integer(static_cast<unsigned long>(cap)))
        throw CapExceeded("orbit lattice enumeration", count.fits_ulong_p() ? count.get_ui() : SIZE_MAX, cap);
    std::vector<OrbitLabel> out;
    out.reserve(count.get_ui());
    OrbitLabel cur = bottom();
    while (true) {
        out.push_back(cur);
        // Odometer: last entry of the last eigenvalue moves fastest.
        bool carried = true;
        for (std::size_t e = cur.parts.size(); carried && e-- > 0;) {
            auto& part = cur.parts[e];
            for (std::size_t k = part.size(); carried && k-- > 0;) {
                if (part[k] < increments_[e].deltas[k]) {
                    ++part[k];
                    carried = false;
                } else {
                    part[k] = 0;
                }
            }
        }
        if (carried) break;
    }
    return out;
}

std::size_t OrbitLattice::index_of(const OrbitLabel& label) const {
    check(label);
    std::size_t idx = 0;
    for (std::size_t e = 0; e < label.parts.size(); ++e)
        for (std::size_t k = 0; k < label.parts[e].size(); ++k)
            idx = idx * (increments_[e].deltas[k] + 1) + label.parts[e][k];
    return idx;
}

std::vector<Cover> OrbitLattice::hasse_covers(std::size_t cap) const {
    const auto labels = enumerate(cap);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t e = 0; e < labels[i].parts.size(); ++e) {
            const auto& deltas = increments_[e].deltas;
            for (std::size_t k = 0; k < deltas.size(); ++k) {
                OrbitLabel up = labels[i];
                auto& part = up.parts[e];
                if (part[k] == deltas[k]) continue;
                if (k + 1 < part.size()) {
                    if (part[k + 1] == 0) continue;
                    --part[k + 1];
                }
                ++part[k];
                edges.emplace_back(i, index_of(up));
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    std::vector<Cover> covers;
    covers.reserve(edges.size());
    for (const auto& [lo, hi] : edges) covers.push_back(Cover{labels[lo], labels[hi]});
    return covers;
}

std::size_t OrbitLattice::rank_of(const OrbitLabel& label) const {
    check(label);
    std::size_t r = 0;
    for (const auto& part : label.parts)
        for (auto h : partial_sums(part)) r += h;
    return r;
}

std::string OrbitLattice::format(const OrbitLabel& label) const {
    check(label);
    std::string out;
    for (std::size_t e = 0; e < label.parts.size(); ++e) {
        if (e) out += '|';
        const bool wide = std::any_of(increments_[e].deltas.begin(), increments_[e].deltas.end(),
                                      [](std::size_t d) { return d >= 10; });
        for (std::size_t k = 0; k < label.parts[e].size(); ++k) {
            if (wide && k) out += '.';
            out += std::to_string(label.parts[e][k]);
        }
    }
    return out;
}

OrbitLabel OrbitLattice::parse(std::string_view text) const {
    OrbitLabel label;
    std::size_t e = 0;
    while (true) {
        const auto bar = text.find('|');
        const std::string_view piece = text.substr(0, bar);
        if (e >= increments_.size())
            throw InvalidLabel("label \"" + std::string(text) + "\" has too many eigenvalue parts");
        const bool wide = std::any_of(increments_[e].deltas.begin(), increments_[e].deltas.end(),
                                      [](std::size_t d) { return d >= 10; });
        std::vector<std::size_t> part;
        if (wide) {
            std::size_t start = 0;
            while (start <= piece.size()) {
                const auto dot = piece.find('.', start);
                const auto tok = piece.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
                if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
                    throw InvalidLabel("bad label entry \"" + std::string(tok) + "\"");
                part.push_back(std::stoul(std::string(tok)));
                if (dot == std::string_view::npos) break;
                start = dot + 1;
            }
        } else {
            for (char c : piece) {
                if (c < '0' || c > '9') throw InvalidLabel(std::string("bad label character '") + c + "'");
                part.push_back(static_cast<std::size_t>(c - '0'));
            }
        }
        label.parts.push_back(std::move(part));
        ++e;
        if (bar == std::string_view::npos) break;
        text.remove_prefix(bar + 1);
    }
    check(label);
    return label;
}

}  // namespace centorb
