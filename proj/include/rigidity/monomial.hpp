#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>

#include "rigidity/errors.hpp"

namespace rigidity {

using Exponent = std::uint16_t;

/// Exponent vector of a monomial; one entry per variable of the context.
class Monomial {
public:
    using Storage = boost::container::small_vector<Exponent, 20>;

    Monomial() = default;
    explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
    Monomial(std::initializer_list<unsigned> exps) {
        exps_.reserve(exps.size());
        for (unsigned e : exps) exps_.push_back(checked(e));
    }
    explicit Monomial(std::span<const unsigned> exps) {
        exps_.reserve(exps.size());
        for (unsigned e : exps) exps_.push_back(checked(e));
    }

    static Monomial variable(std::size_t arity, std::size_t index, unsigned power = 1) {
        Monomial m(arity);
        m.exps_.at(index) = checked(power);
        return m;
    }

    std::size_t arity() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    void set(std::size_t i, unsigned e) { exps_.at(i) = checked(e); }
    std::span<const Exponent> exponents() const noexcept { return {exps_.data(), exps_.size()}; }

    bool is_one() const noexcept {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
    }

    unsigned total_degree() const noexcept {
        unsigned d = 0;
        for (Exponent e : exps_) d += e;
        return d;
    }

    /// True iff `*this` divides `other`.
    bool divides(const Monomial& other) const {
        same_arity(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    bool coprime(const Monomial& other) const {
        same_arity(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0 && other.exps_[i] != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        same_arity(other);
        Monomial out(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            out.exps_[i] = checked(unsigned(exps_[i]) + other.exps_[i]);
        return out;
    }

    /// Exact quotient; requires `other` to divide `*this`.
    Monomial operator/(const Monomial& other) const {
        if (!other.divides(*this)) throw InvalidArgument("monomial quotient is not exact");
        Monomial out(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = Exponent(exps_[i] - other.exps_[i]);
        return out;
    }

    Monomial pow(unsigned n) const {
        Monomial out(*this);
        for (auto& e : out.exps_) e = checked(unsigned(e) * n);
        return out;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        a.same_arity(b);
        Monomial out(a);
        for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        return out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

    std::size_t hash() const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Exponent e : exps_) {
            h ^= e;
            h *= 1099511628211ull;
        }
        return h;
    }

    void same_arity(const Monomial& other) const {
        if (other.arity() != arity()) throw ArityMismatch("exponent vectors of different arity");
    }

private:
    static Exponent checked(unsigned e) {
        if (e > std::numeric_limits<Exponent>::max()) throw ResourceLimitExceeded("exponent overflow");
        return Exponent(e);
    }

    Storage exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace rigidity
