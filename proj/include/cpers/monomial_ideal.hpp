#ifndef CPERS_MONOMIAL_IDEAL_HPP
#define CPERS_MONOMIAL_IDEAL_HPP

#include "monomial.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace cpers {

class MonomialIdeal;

MonomialIdeal minimalize(std::size_t arity, std::vector<Monomial> gens);

/// A monomial ideal held by its minimal generating set, sorted
/// lexicographically. Two ideals are equal iff their generator lists are.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    /// The zero ideal.
    explicit MonomialIdeal(std::size_t arity) : arity_(arity) {}

    static MonomialIdeal zero(std::size_t arity) { return MonomialIdeal(arity); }

    static MonomialIdeal unit(std::size_t arity) {
        return MonomialIdeal(arity, {Monomial::one(arity)}, Trusted{});
    }

    /// (x_0, ..., x_{n-1}).
    static MonomialIdeal maximal(std::size_t arity) {
        std::vector<Monomial> gens;
        for (std::size_t k = arity; k-- > 0;)
            gens.push_back(Monomial::variable(arity, k));
        return MonomialIdeal(arity, std::move(gens), Trusted{});
    }

    /// Ideal generated by `gens`; the input need not be minimal.
    static MonomialIdeal generated_by(std::size_t arity, std::vector<Monomial> gens) {
        return minimalize(arity, std::move(gens));
    }

    std::size_t arity() const noexcept { return arity_; }
    std::span<const Monomial> generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

    /// Some generator divides m.
    bool contains(const Monomial &m) const {
        if (m.arity() != arity_)
            throw ArityMismatch(arity_, m.arity());
        const std::uint64_t sig = SignatureScheme(arity_)(m);
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if ((sigs_[i] & ~sig) == 0 && divides(gens_[i], m))
                return true;
        return false;
    }

    /// Membership for a raw exponent vector, skipping the Monomial wrapper.
    bool contains(std::span<const Exponent> e) const {
        if (e.size() != arity_)
            throw ArityMismatch(arity_, e.size());
        const std::uint64_t sig = SignatureScheme(arity_)(e);
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if ((sigs_[i] & ~sig) != 0)
                continue;
            const auto g = gens_[i].exponents();
            std::size_t k = 0;
            while (k < arity_ && g[k] <= e[k])
                ++k;
            if (k == arity_)
                return true;
        }
        return false;
    }

    /// k ⊆ *this.
    bool contains(const MonomialIdeal &k) const {
        check_arity(k);
        return std::all_of(k.gens_.begin(), k.gens_.end(),
                           [this](const Monomial &g) { return contains(g); });
    }

    /// k ⊊ *this.
    bool strictly_contains(const MonomialIdeal &k) const { return contains(k) && !k.contains(*this); }

    void check_arity(const MonomialIdeal &other) const {
        if (other.arity_ != arity_)
            throw ArityMismatch(arity_, other.arity_);
    }

    friend bool operator==(const MonomialIdeal &a, const MonomialIdeal &b) {
        return a.arity_ == b.arity_ && a.gens_ == b.gens_;
    }

private:
    struct Trusted {};

    /// `gens` must already be minimal and lexicographically sorted.
    MonomialIdeal(std::size_t arity, std::vector<Monomial> gens, Trusted)
        : arity_(arity), gens_(std::move(gens)) {
        const SignatureScheme scheme(arity_);
        sigs_.reserve(gens_.size());
        for (const auto &g : gens_)
            sigs_.push_back(scheme(g));
    }

    friend MonomialIdeal minimalize(std::size_t arity, std::vector<Monomial> gens);

    std::size_t arity_ = 0;
    std::vector<Monomial> gens_;
    std::vector<std::uint64_t> sigs_;
};

/// Trie over exponent vectors (one level per variable) answering "does some
/// stored monomial divide e?" without a linear scan.
class DivisorIndex {
public:
    explicit DivisorIndex(std::size_t arity) : arity_(arity), nodes_(1) {}

    explicit DivisorIndex(const MonomialIdeal &ideal) : DivisorIndex(ideal.arity()) {
        for (const auto &g : ideal.generators())
            insert(g.exponents());
    }

    std::size_t arity() const noexcept { return arity_; }
    bool empty() const noexcept { return count_ == 0; }

    void insert(std::span<const Exponent> e) {
        if (e.size() != arity_)
            throw ArityMismatch(arity_, e.size());
        std::uint32_t node = 0;
        for (std::size_t k = 0; k < arity_; ++k) {
            auto &kids = nodes_[node].kids;
            auto it = std::lower_bound(kids.begin(), kids.end(), e[k],
                                       [](const Child &c, Exponent v) { return c.exponent < v; });
            if (it != kids.end() && it->exponent == e[k]) {
                node = it->node;
                continue;
            }
            const auto fresh = static_cast<std::uint32_t>(nodes_.size());
            kids.insert(it, Child{e[k], fresh});
            nodes_.emplace_back();
            node = fresh;
        }
        ++count_;
    }

    bool has_divisor_of(std::span<const Exponent> e) const {
        if (e.size() != arity_)
            throw ArityMismatch(arity_, e.size());
        if (count_ == 0)
            return false;
        return search(0, 0, e);
    }

    bool has_divisor_of(const Monomial &m) const { return has_divisor_of(m.exponents()); }

private:
    struct Child {
        Exponent exponent;
        std::uint32_t node;
    };
    struct Node {
        std::vector<Child> kids;
    };

    bool search(std::uint32_t node, std::size_t level, std::span<const Exponent> e) const {
        if (level == arity_)
            return true;
        for (const auto &c : nodes_[node].kids) {
            if (c.exponent > e[level])
                break;
            if (search(c.node, level + 1, e))
                return true;
        }
        return false;
    }

    std::size_t arity_;
    std::vector<Node> nodes_;
    std::size_t count_ = 0;
};

/// Keep the divisibility-minimal elements of `gens`, deduplicated and sorted.
inline MonomialIdeal minimalize(std::size_t arity, std::vector<Monomial> gens) {
    for (const auto &g : gens)
        if (g.arity() != arity)
            throw ArityMismatch(arity, g.arity());

    struct Entry {
        std::uint64_t degree;
        std::size_t index;
    };
    std::vector<Entry> order;
    order.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        order.push_back({gens[i].degree(), i});
    std::sort(order.begin(), order.end(), [&](const Entry &a, const Entry &b) {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        return gens[a.index] < gens[b.index];
    });

    // A divisor of m has degree <= deg(m), so scanning in degree order and
    // testing against everything kept so far is enough.
    std::vector<std::size_t> kept;
    DivisorIndex index(arity);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const auto &e = order[pos];
        if (pos > 0 && gens[order[pos - 1].index] == gens[e.index])
            continue;
        if (!index.has_divisor_of(gens[e.index])) {
            kept.push_back(e.index);
            index.insert(gens[e.index].exponents());
        }
    }

    std::vector<Monomial> out;
    out.reserve(kept.size());
    for (auto i : kept)
        out.push_back(std::move(gens[i]));
    std::sort(out.begin(), out.end());
    return MonomialIdeal(arity, std::move(out), MonomialIdeal::Trusted{});
}

inline MonomialIdeal product(const MonomialIdeal &a, const MonomialIdeal &b) {
    a.check_arity(b);
    std::vector<Monomial> gens;
    gens.reserve(a.size() * b.size());
    for (const auto &g : a.generators())
        for (const auto &h : b.generators())
            gens.push_back(g * h);
    return minimalize(a.arity(), std::move(gens));
}

/// I^s with minimalization after every multiplication; I^0 is the unit ideal.
inline MonomialIdeal power(const MonomialIdeal &ideal, unsigned s) {
    MonomialIdeal result = MonomialIdeal::unit(ideal.arity());
    for (unsigned i = 0; i < s; ++i)
        result = product(result, ideal);
    return result;
}

/// Intersection via pairwise lcms of generators.
inline MonomialIdeal intersect(const MonomialIdeal &a, const MonomialIdeal &b) {
    a.check_arity(b);
    std::vector<Monomial> gens;
    gens.reserve(a.size() * b.size());
    for (const auto &g : a.generators())
        for (const auto &h : b.generators())
            gens.push_back(lcm(g, h));
    return minimalize(a.arity(), std::move(gens));
}

/// Intersection of several ideals, folded in ascending generator-count
/// order. The empty intersection is the unit ideal.
inline MonomialIdeal intersect_all(std::size_t arity, std::vector<MonomialIdeal> ideals) {
    for (const auto &i : ideals)
        if (i.arity() != arity)
            throw ArityMismatch(arity, i.arity());
    std::stable_sort(ideals.begin(), ideals.end(),
                     [](const MonomialIdeal &a, const MonomialIdeal &b) { return a.size() < b.size(); });
    MonomialIdeal acc = MonomialIdeal::unit(arity);
    for (const auto &i : ideals)
        acc = intersect(acc, i);
    return acc;
}

/// I : m = { f : f*m in I }.
inline MonomialIdeal colon(const MonomialIdeal &ideal, const Monomial &m) {
    if (m.arity() != ideal.arity())
        throw ArityMismatch(ideal.arity(), m.arity());
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto &g : ideal.generators())
        gens.push_back(colon(g, m));
    return minimalize(ideal.arity(), std::move(gens));
}

/// I : K, the intersection of I : g over the generators g of K.
inline MonomialIdeal colon(const MonomialIdeal &ideal, const MonomialIdeal &by) {
    ideal.check_arity(by);
    if (by.is_zero())
        throw InvalidArgument("colon by the zero ideal");
    std::vector<MonomialIdeal> parts;
    parts.reserve(by.size());
    for (const auto &g : by.generators())
        parts.push_back(colon(ideal, g));
    return intersect_all(ideal.arity(), std::move(parts));
}

} // namespace cpers

#endif
