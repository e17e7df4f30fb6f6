#ifndef CPERS_MONOMIAL_HPP
#define CPERS_MONOMIAL_HPP

#include "error.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace cpers {

using Exponent = std::uint32_t;

/// A monomial x0^e0 * ... * x{n-1}^e{n-1} stored as a dense exponent vector.
/// The monomial 1 is the all-zero vector. Ordering is lexicographic on the
/// exponent vector.
class Monomial {
public:
    Monomial() = default;

    /// The monomial 1 in a ring with `arity` variables.
    explicit Monomial(std::size_t arity) : exps_(arity, 0) {}

    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

    static Monomial one(std::size_t arity) { return Monomial(arity); }

    static Monomial variable(std::size_t arity, std::size_t k, Exponent power = 1) {
        if (k >= arity)
            throw InvalidArgument("variable index " + std::to_string(k) + " out of range for arity " +
                                  std::to_string(arity));
        Monomial m(arity);
        m.exps_[k] = power;
        return m;
    }

    /// Squarefree product of the variables in `vars`.
    static Monomial indicator(std::size_t arity, std::span<const std::size_t> vars) {
        Monomial m(arity);
        for (auto k : vars) {
            if (k >= arity)
                throw InvalidArgument("variable index " + std::to_string(k) + " out of range");
            m.exps_[k] = 1;
        }
        return m;
    }

    std::size_t arity() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t k) const { return exps_[k]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    std::uint64_t degree() const noexcept {
        std::uint64_t d = 0;
        for (auto e : exps_)
            d += e;
        return d;
    }

    bool is_one() const noexcept {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
    }

    bool is_squarefree() const noexcept {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t k = 0; k < exps_.size(); ++k)
            if (exps_[k] != 0)
                s.push_back(k);
        return s;
    }

    /// Copy with exponent k replaced.
    Monomial with(std::size_t k, Exponent e) const {
        Monomial m = *this;
        m.exps_.at(k) = e;
        return m;
    }

    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b) {
        return a.exps_ <=> b.exps_;
    }

    friend Monomial operator*(const Monomial &a, const Monomial &b) {
        check_arity(a, b);
        Monomial r = a;
        for (std::size_t k = 0; k < r.exps_.size(); ++k)
            r.exps_[k] += b.exps_[k];
        return r;
    }

    Monomial pow(Exponent s) const {
        Monomial r = *this;
        for (auto &e : r.exps_)
            e *= s;
        return r;
    }

    static void check_arity(const Monomial &a, const Monomial &b) {
        if (a.arity() != b.arity())
            throw ArityMismatch(a.arity(), b.arity());
    }

private:
    friend bool divides(const Monomial &a, const Monomial &b);
    friend Monomial lcm(const Monomial &a, const Monomial &b);
    friend Monomial gcd(const Monomial &a, const Monomial &b);
    friend Monomial colon(const Monomial &a, const Monomial &b);

    std::vector<Exponent> exps_;
};

/// True iff a divides b (componentwise <=).
inline bool divides(const Monomial &a, const Monomial &b) {
    Monomial::check_arity(a, b);
    for (std::size_t k = 0; k < a.exps_.size(); ++k)
        if (a.exps_[k] > b.exps_[k])
            return false;
    return true;
}

inline Monomial lcm(const Monomial &a, const Monomial &b) {
    Monomial::check_arity(a, b);
    Monomial r = a;
    for (std::size_t k = 0; k < r.exps_.size(); ++k)
        r.exps_[k] = std::max(r.exps_[k], b.exps_[k]);
    return r;
}

inline Monomial gcd(const Monomial &a, const Monomial &b) {
    Monomial::check_arity(a, b);
    Monomial r = a;
    for (std::size_t k = 0; k < r.exps_.size(); ++k)
        r.exps_[k] = std::min(r.exps_[k], b.exps_[k]);
    return r;
}

/// a / gcd(a, b): the generator of (a) : b.
inline Monomial colon(const Monomial &a, const Monomial &b) {
    Monomial::check_arity(a, b);
    Monomial r = a;
    for (std::size_t k = 0; k < r.exps_.size(); ++k)
        r.exps_[k] = r.exps_[k] > b.exps_[k] ? r.exps_[k] - b.exps_[k] : 0;
    return r;
}

/// 64-bit divisibility filter. Bit (k, l) records "exponent of x_k >= l" for
/// the first few levels l, so divides(a, b) implies
/// (signature(a) & ~signature(b)) == 0. When every exponent is below the
/// level count the filter is exact, but callers always confirm with divides().
class SignatureScheme {
public:
    explicit SignatureScheme(std::size_t arity)
        : arity_(arity), levels_(arity == 0 ? 0 : std::max<std::size_t>(1, 64 / arity)) {}

    std::uint64_t operator()(const Monomial &m) const noexcept { return (*this)(m.exponents()); }

    std::uint64_t operator()(std::span<const Exponent> e) const noexcept {
        std::uint64_t sig = 0;
        if (arity_ <= 64) {
            for (std::size_t k = 0; k < e.size(); ++k) {
                const std::size_t top = std::min<std::size_t>(e[k], levels_);
                for (std::size_t l = 0; l < top; ++l)
                    sig |= std::uint64_t{1} << (k * levels_ + l);
            }
        } else {
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k] != 0)
                    sig |= std::uint64_t{1} << (k % 64);
        }
        return sig;
    }

private:
    std::size_t arity_;
    std::size_t levels_;
};

} // namespace cpers

#endif
